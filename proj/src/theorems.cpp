#include "drz/theorems.hpp"

#include <nlohmann/json.hpp>
#include <thread>

namespace drz {

using json = nlohmann::json;

namespace {

enum class Contract { AllEqual, Conjunction };

Condition decide(std::string name, Element e) {
    MembershipDecision d = drazin_membership(e);
    return {std::move(name), std::move(e), std::move(d)};
}

EquivalenceReport make_report(std::string theorem, std::vector<Element> inputs,
                              std::vector<Condition> conditions, Contract contract) {
    EquivalenceReport report;
    report.theorem = std::move(theorem);
    report.inputs = std::move(inputs);
    report.conditions = std::move(conditions);
    for (const Condition& c : report.conditions)
        if (!c.decision.decisive()) report.decisive = false;
    if (contract == Contract::AllEqual) {
        bool seen = false;
        Verdict ref = Verdict::Undecidable;
        report.agree = true;
        for (const Condition& c : report.conditions) {
            if (!c.decision.decisive()) continue;
            if (!seen) {
                ref = c.decision.verdict;
                seen = true;
            } else if (c.decision.verdict != ref) {
                report.agree = false;
            }
        }
    } else {
        // conditions[0] holds iff conditions[1] and conditions[2] both hold
        if (report.decisive) {
            bool lhs = report.conditions[0].decision.is_member();
            bool rhs = report.conditions[1].decision.is_member() &&
                       report.conditions[2].decision.is_member();
            report.agree = (lhs == rhs);
        }
    }
    return report;
}

void require_idempotent_pair(const Element& p, const Element& q, const char* who) {
    if (p.ring() != q.ring())
        throw input_error(std::string(who) + ": p and q from different rings");
    if (!is_idempotent(p)) throw input_error(std::string(who) + ": p is not idempotent");
    if (!is_idempotent(q)) throw input_error(std::string(who) + ": q is not idempotent");
}

}  // namespace

EquivalenceReport prop31(const Element& p, const Element& q) {
    require_idempotent_pair(p, q, "prop31");
    Element u = one(p.ring());
    Element pq = mul(p, q), qp = mul(q, p);
    std::vector<Condition> conds;
    conds.push_back(decide("1-pq", sub(u, pq)));
    conds.push_back(decide("p-pq", sub(p, pq)));
    conds.push_back(decide("p-qp", sub(p, qp)));
    conds.push_back(decide("1-pqp", sub(u, mul(pq, p))));
    conds.push_back(decide("p-pqp", sub(p, mul(pq, p))));
    conds.push_back(decide("1-qp", sub(u, qp)));
    conds.push_back(decide("q-qp", sub(q, qp)));
    conds.push_back(decide("q-pq", sub(q, pq)));
    conds.push_back(decide("1-qpq", sub(u, mul(qp, q))));
    conds.push_back(decide("q-qpq", sub(q, mul(qp, q))));
    return make_report("prop31", {p, q}, std::move(conds), Contract::AllEqual);
}

EquivalenceReport cor32(const Element& p, const Element& q) {
    require_idempotent_pair(p, q, "cor32");
    Element u = one(p.ring());
    Element pq = mul(p, q), qp = mul(q, p);
    Element cp = sub(u, p), cq = sub(u, q);
    std::vector<Condition> conds;
    conds.push_back(decide("p+q-pq", sub(add(p, q), pq)));
    conds.push_back(decide("q-pq", sub(q, pq)));
    conds.push_back(decide("q-qp", sub(q, qp)));
    conds.push_back(decide("p+(1-p)(q-qp)", add(p, mul(cp, sub(q, qp)))));
    conds.push_back(decide("(1-p)q(1-p)", mul(mul(cp, q), cp)));
    conds.push_back(decide("p+q-qp", sub(add(p, q), qp)));
    conds.push_back(decide("p-qp", sub(p, qp)));
    conds.push_back(decide("p-pq", sub(p, pq)));
    conds.push_back(decide("q+(1-q)(p-pq)", add(q, mul(cq, sub(p, pq)))));
    conds.push_back(decide("(1-q)p(1-q)", mul(mul(cq, p), cq)));
    return make_report("cor32", {p, q}, std::move(conds), Contract::AllEqual);
}

EquivalenceReport thm33(const Element& p, const Element& q) {
    require_idempotent_pair(p, q, "thm33");
    Element u = one(p.ring());
    Element pq = mul(p, q);
    Element d = sub(p, q);
    Element d2 = mul(d, d);
    // Proof identities, unconditional in any ring.
    Element pqp = mul(pq, p);
    if (!eq(sub(u, pqp), add(mul(d2, p), sub(u, p))))
        throw defect_error("identity 1-pqp = (p-q)^2 p + 1-p fails");
    if (!eq(mul(p, d2), mul(d2, p)) || !eq(mul(p, d2), sub(p, pqp)))
        throw defect_error("identity p(p-q)^2 = (p-q)^2 p = p-pqp fails");
    std::vector<Condition> conds;
    conds.push_back(decide("p-q", d));
    conds.push_back(decide("1-pq", sub(u, pq)));
    conds.push_back(decide("p+q-pq", sub(add(p, q), pq)));
    return make_report("thm33", {p, q}, std::move(conds), Contract::AllEqual);
}

EquivalenceReport thm34(const Element& p, const Element& q) {
    require_idempotent_pair(p, q, "thm34");
    Element u = one(p.ring());
    std::vector<Condition> conds;
    conds.push_back(decide("pq", mul(p, q)));
    conds.push_back(decide("1-p-q", sub(sub(u, p), q)));
    conds.push_back(decide("(1-p)(1-q)", mul(sub(u, p), sub(u, q))));
    return make_report("thm34", {p, q}, std::move(conds), Contract::AllEqual);
}

EquivalenceReport thm35(const Element& p, const Element& q) {
    require_idempotent_pair(p, q, "thm35");
    Element pq = mul(p, q), qp = mul(q, p);
    std::vector<Condition> conds;
    conds.push_back(decide("pq-qp", sub(pq, qp)));
    conds.push_back(decide("pq", pq));
    conds.push_back(decide("p-q", sub(p, q)));
    return make_report("thm35", {p, q}, std::move(conds), Contract::Conjunction);
}

EquivalenceReport thm36(const Element& p, const Element& q) {
    require_idempotent_pair(p, q, "thm36");
    Element pq = mul(p, q), qp = mul(q, p);
    Element s = add(p, q);
    Element s1 = sub(s, one(p.ring()));
    Element anti = add(pq, qp);
    if (!eq(anti, mul(s, s1)) || !eq(anti, mul(s1, s)))
        throw defect_error("identity pq+qp = (p+q)(p+q-1) = (p+q-1)(p+q) fails");
    std::vector<Condition> conds;
    conds.push_back(decide("pq+qp", anti));
    conds.push_back(decide("pq", pq));
    conds.push_back(decide("p+q", s));
    return make_report("thm36", {p, q}, std::move(conds), Contract::Conjunction);
}

EquivalenceReport remark37_regression() {
    const RingDescriptor z = RingDescriptor::integers();
    Element p = one(z), q = one(z);
    std::vector<Condition> conds;
    conds.push_back(decide("p-q", sub(p, q)));
    conds.push_back(decide("p+q", add(p, q)));
    EquivalenceReport report;
    report.theorem = "remark37";
    report.inputs = {p, q};
    report.conditions = std::move(conds);
    report.decisive = true;
    // The point of the remark is the split: difference in, sum out.
    report.agree = report.conditions[0].decision.is_member() &&
                   !report.conditions[1].decision.is_member();
    return report;
}

EquivalenceReport corner_equivalence(const Element& a, const Element& p) {
    if (a.ring() != p.ring()) throw input_error("corner_equivalence: ring mismatch");
    auto [b, c] = corner_split(a, p);
    Element bc = mul(b, c);
    std::vector<Condition> conds;
    conds.push_back(decide("b+c", add(b, c)));
    conds.push_back(decide("bc", bc));
    conds.push_back(decide("b-c", sub(b, c)));
    EquivalenceReport report =
        make_report("lemma26", {a, p}, std::move(conds), Contract::AllEqual);
    const MembershipDecision& sum = report.conditions[0].decision;
    const MembershipDecision& prod = report.conditions[1].decision;
    if (sum.is_member()) {
        // x = ((b+c)^2)^D = (bc+cb)^D; the proof's construction (bc)^D = pxp
        // must reproduce the unique Drazin inverse of bc.
        Element x = mul(sum.witness->inverse, sum.witness->inverse);
        Element pxp = mul(mul(p, x), p);
        Int k = minimal_drazin_index(bc, pxp, a.ring().is_finite()
                                                  ? a.ring().cardinality()
                                                  : Int(16));
        if (!drazin_axioms_hold(bc, pxp, k == 0 ? Int(1) : k))
            throw defect_error("pxp construction fails the Drazin axioms for bc");
        if (prod.is_member() && !eq(pxp, prod.witness->inverse))
            throw defect_error("pxp differs from the computed (bc)^D");
    }
    return report;
}

// ---------------------------------------------------------------------------
// Sweeps

namespace {

EquivalenceReport run_theorem(const std::string& label, const Element& p, const Element& q) {
    if (label == "prop31") return prop31(p, q);
    if (label == "cor32") return cor32(p, q);
    if (label == "thm33") return thm33(p, q);
    if (label == "thm34") return thm34(p, q);
    if (label == "thm35") return thm35(p, q);
    if (label == "thm36") return thm36(p, q);
    if (label == "lemma26") return corner_equivalence(q, p);
    throw input_error("unknown theorem label: " + label);
}

}  // namespace

const std::vector<std::string>& all_theorem_labels() {
    static const std::vector<std::string> labels = {"prop31", "cor32", "thm33", "thm34",
                                                    "thm35",  "thm36", "lemma26"};
    return labels;
}

bool is_theorem_label(const std::string& label) {
    for (const std::string& l : all_theorem_labels())
        if (l == label) return true;
    return false;
}

SweepSummary sweep(const std::string& theorem, const IdempotentFamily& family_p,
                   const IdempotentFamily& family_q, int parallelism) {
    if (!is_theorem_label(theorem)) throw input_error("unknown theorem label: " + theorem);
    if (family_p.ring() != family_q.ring())
        throw input_error("sweep: families over different rings");
    if (parallelism < 1) throw input_error("sweep: parallelism must be >= 1");
    const std::vector<Element> ps = family_p.elements();
    const std::vector<Element> qs = family_q.elements();
    const std::size_t total = ps.size() * qs.size();

    std::vector<std::optional<EquivalenceReport>> slots(total);
    const int workers = static_cast<int>(std::min<std::size_t>(parallelism, total ? total : 1));
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < total; i += workers) {
                    const Element& p = ps[i / qs.size()];
                    const Element& q = qs[i % qs.size()];
                    slots[i] = run_theorem(theorem, p, q);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (std::thread& t : threads) t.join();
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);

    SweepSummary summary;
    summary.theorem = theorem;
    for (std::optional<EquivalenceReport>& slot : slots) {
        EquivalenceReport& r = *slot;
        ++summary.pairs_checked;
        if (!r.decisive)
            ++summary.undecided;
        else if (r.agree)
            ++summary.agreements;
        else
            summary.violations.push_back(r);
        summary.reports.push_back(std::move(r));
    }
    return summary;
}

// ---------------------------------------------------------------------------
// JSON

json EquivalenceReport::to_json() const {
    json in = json::array();
    for (const Element& e : inputs) in.push_back(e.value_json());
    json conds = json::array();
    for (const Condition& c : conditions) {
        json jc = {{"name", c.name},
                   {"element", c.element.value_json()},
                   {"verdict", verdict_name(c.decision.verdict)},
                   {"method", c.decision.method}};
        if (c.decision.is_member()) {
            jc["inverse"] = c.decision.witness->inverse.value_json();
            jc["index"] = c.decision.witness->index.convert_to<std::int64_t>();
        }
        conds.push_back(std::move(jc));
    }
    return {{"theorem", theorem},
            {"ring", inputs.empty() ? json() : inputs[0].ring().to_json()},
            {"inputs", std::move(in)},
            {"conditions", std::move(conds)},
            {"decisive", decisive},
            {"agree", agree}};
}

json SweepSummary::to_json() const {
    json viol = json::array();
    for (const EquivalenceReport& r : violations) viol.push_back(r.to_json());
    return {{"theorem", theorem},
            {"pairs_checked", pairs_checked},
            {"agreements", agreements},
            {"undecided", undecided},
            {"violations", std::move(viol)}};
}

}  // namespace drz
