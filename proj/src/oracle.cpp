#include "drz/oracle.hpp"

namespace drz {
namespace oracle {

DrazinResult brute_force_drazin(const Element& a, std::int64_t cap) {
    const RingDescriptor& r = a.ring();
    if (!r.is_finite()) throw unsupported_error("oracle requires a finite ring");
    if (r.cardinality() > cap)
        throw resource_error("ring cardinality exceeds oracle cap " + std::to_string(cap));
    const std::int64_t card = r.cardinality().convert_to<std::int64_t>();

    // powers[k] = a^k for k = 0..card+1
    std::vector<Element> powers;
    powers.push_back(one(r));
    for (std::int64_t k = 1; k <= card + 1; ++k) powers.push_back(mul(powers.back(), a));

    std::optional<DrazinResult> found;
    for (const Element& b : enumerate_elements(r, cap)) {
        if (!eq(mul(a, b), mul(b, a))) continue;
        if (!eq(mul(mul(b, a), b), b)) continue;
        std::optional<Int> least_k;
        for (std::int64_t k = 0; k <= card; ++k) {
            if (eq(powers[k], mul(powers[k + 1], b))) {
                least_k = k;
                break;
            }
        }
        if (!least_k) continue;
        if (found) throw defect_error("two distinct Drazin inverses found for " + a.str());
        found = DrazinResult{b, *least_k};
    }
    if (!found)
        throw defect_error("no Drazin inverse found in a finite ring for " + a.str());
    return *found;
}

CrossValidationSummary cross_validate(const RingDescriptor& r, std::int64_t cap) {
    CrossValidationSummary summary;
    const bool matrix_over_prime_field =
        r.kind() == RingDescriptor::Kind::Matrix &&
        r.base().kind() == RingDescriptor::Kind::PrimeField;
    for (const Element& a : enumerate_elements(r, cap)) {
        DrazinResult truth = brute_force_drazin(a, cap);
        DrazinResult engine = drazin_finite(a);
        bool ok = eq(engine.inverse, truth.inverse) && engine.index == truth.index;
        if (matrix_over_prime_field) {
            DrazinResult direct = drazin_matrix_field(a);
            ok = ok && eq(direct.inverse, truth.inverse) && direct.index == truth.index;
        }
        ++summary.elements_checked;
        if (!ok) ++summary.mismatches;
    }
    return summary;
}

}  // namespace oracle
}  // namespace drz
