#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "drz/drazin.hpp"
#include "drz/idempotents.hpp"
#include "drz/oracle.hpp"
#include "drz/ring.hpp"
#include "drz/theorems.hpp"

using json = nlohmann::json;

namespace {

// Exit codes: 0 success, 1 property violation / defect, 2 bad input,
// 3 non-member or undecidable verdict (compute only).
constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kBadInput = 2;
constexpr int kNoVerdict = 3;

// Accepts inline JSON, a file path, or "-" for standard input.
json read_json_arg(const std::string& arg) {
    std::string text;
    if (arg.empty() || arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else if (arg.front() == '{' || arg.front() == '[') {
        text = arg;
    } else {
        std::ifstream in(arg);
        if (!in) throw drz::input_error("cannot open file: " + arg);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw drz::input_error("malformed JSON input");
    return j;
}

int cmd_compute(const std::string& input) {
    drz::Element a = drz::Element::from_json(read_json_arg(input));
    drz::MembershipDecision d = drz::drazin_membership(a);
    if (!d.is_member()) {
        std::cout << json{{"verdict", drz::verdict_name(d.verdict)}, {"method", d.method}}
                  << "\n";
        std::cerr << "element is " << drz::verdict_name(d.verdict) << " (method "
                  << d.method << ")\n";
        return kNoVerdict;
    }
    std::cout << json{{"inverse", d.witness->inverse.to_json()},
                      {"index", d.witness->index.convert_to<std::int64_t>()},
                      {"method", d.method}}
              << "\n";
    return kOk;
}

drz::IdempotentFamily family_for(const drz::RingDescriptor& r, std::int64_t bound) {
    using Kind = drz::RingDescriptor::Kind;
    if (r.is_finite()) return drz::IdempotentFamily::exhaustive(r);
    if (r.kind() == Kind::Matrix && r.dim() == 2 &&
        r.base().kind() == Kind::Integers) {
        if (bound < 1)
            throw drz::input_error("matrix-over-integers ring requires --bound B >= 1");
        return drz::IdempotentFamily::parametrized_2x2_integer(bound);
    }
    throw drz::input_error("no idempotent family for ring " + r.str() +
                           " (need a finite ring or 2x2 integer matrices with --bound)");
}

int cmd_verify(const std::string& ring_arg, const std::string& theorem, std::int64_t bound,
               int jobs) {
    drz::RingDescriptor r = drz::RingDescriptor::from_json(read_json_arg(ring_arg));

    if (theorem == "remark37") {
        if (r.kind() != drz::RingDescriptor::Kind::Integers)
            throw drz::input_error("remark37 runs in the integers ring");
        drz::EquivalenceReport report = drz::remark37_regression();
        std::cout << report.to_json() << "\n";
        std::cout << json{{"theorem", "remark37"},
                          {"pairs_checked", 1},
                          {"agreements", report.agree ? 1 : 0},
                          {"undecided", 0},
                          {"violations", json::array()}}
                  << "\n";
        return report.agree ? kOk : kViolation;
    }

    std::vector<std::string> labels;
    if (theorem == "all")
        labels = drz::all_theorem_labels();
    else if (drz::is_theorem_label(theorem))
        labels = {theorem};
    else
        throw drz::input_error("unknown theorem label: " + theorem);

    drz::IdempotentFamily family = family_for(r, bound);
    std::int64_t violations = 0;
    for (const std::string& label : labels) {
        drz::SweepSummary summary = drz::sweep(label, family, family, jobs);
        for (const drz::EquivalenceReport& report : summary.reports)
            std::cout << report.to_json() << "\n";
        std::cout << summary.to_json() << "\n";
        violations += static_cast<std::int64_t>(summary.violations.size());
    }
    return violations == 0 ? kOk : kViolation;
}

int cmd_oracle(const std::string& ring_arg) {
    drz::RingDescriptor r = drz::RingDescriptor::from_json(read_json_arg(ring_arg));
    drz::oracle::CrossValidationSummary summary = drz::oracle::cross_validate(r);
    std::cout << json{{"elements_checked", summary.elements_checked},
                      {"mismatches", summary.mismatches}}
              << "\n";
    return summary.mismatches == 0 ? kOk : kViolation;
}

int cmd_idempotents(const std::string& ring_arg, std::int64_t bound) {
    drz::RingDescriptor r = drz::RingDescriptor::from_json(read_json_arg(ring_arg));
    drz::IdempotentFamily family = family_for(r, bound);
    json out = json::array();
    for (const drz::Element& e : family.elements()) out.push_back(e.value_json());
    std::cout << out << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Drazin inverse computation and idempotent theorem verification"};
    app.require_subcommand(1);

    std::string input = "-";
    auto* compute = app.add_subcommand("compute", "Drazin inverse of an element (JSON)");
    compute->add_option("element", input, "element JSON: inline, file path, or - for stdin");

    std::string ring_arg = "-";
    std::string theorem = "all";
    std::int64_t bound = 0;
    int jobs = 1;
    auto* verify = app.add_subcommand("verify", "sweep theorem checks over idempotent pairs");
    verify->add_option("ring", ring_arg, "ring JSON: inline, file path, or - for stdin");
    verify->add_option("--theorem", theorem,
                       "prop31|cor32|thm33|thm34|thm35|thm36|lemma26|remark37|all");
    verify->add_option("--bound", bound, "bound B for the 2x2 integer idempotent family");
    verify->add_option("--jobs", jobs, "worker threads (output independent of this)")
        ->check(CLI::PositiveNumber);

    std::string oracle_ring = "-";
    auto* oracle = app.add_subcommand("oracle", "cross-validate the engine against brute force");
    oracle->add_option("ring", oracle_ring, "finite ring JSON");

    std::string idem_ring = "-";
    std::int64_t idem_bound = 0;
    auto* idem = app.add_subcommand("idempotents", "list the idempotents of a ring");
    idem->add_option("ring", idem_ring, "ring JSON");
    idem->add_option("--bound", idem_bound, "bound B for the 2x2 integer idempotent family");

    try {
        app.parse(argc, argv);
        if (compute->parsed()) return cmd_compute(input);
        if (verify->parsed()) return cmd_verify(ring_arg, theorem, bound, jobs);
        if (oracle->parsed()) return cmd_oracle(oracle_ring);
        if (idem->parsed()) return cmd_idempotents(idem_ring, idem_bound);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    } catch (const drz::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kBadInput;
    } catch (const drz::unsupported_error& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return compute->parsed() ? kNoVerdict : kBadInput;
    } catch (const drz::resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kViolation;
    }
    return kBadInput;
}
