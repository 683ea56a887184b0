#pragma once

#include "drz/drazin.hpp"
#include "drz/ring.hpp"

namespace drz {
namespace oracle {

inline constexpr std::int64_t kOracleCardinalityCap = 4096;

/// Ground truth by exhaustive search: scans every ring element b and every
/// exponent k up to the cardinality for the three Drazin equations, and
/// asserts that exactly one b satisfies them.  Independent of the engine.
DrazinResult brute_force_drazin(const Element& a,
                                std::int64_t cap = kOracleCardinalityCap);

struct CrossValidationSummary {
    std::int64_t elements_checked = 0;
    std::int64_t mismatches = 0;
};

/// Compares drazin_finite (and drazin_matrix_field where applicable)
/// against the brute-force result for every element of a finite ring.
CrossValidationSummary cross_validate(const RingDescriptor& r,
                                      std::int64_t cap = kOracleCardinalityCap);

}  // namespace oracle
}  // namespace drz
