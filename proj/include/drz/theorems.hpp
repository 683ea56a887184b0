#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "drz/drazin.hpp"
#include "drz/idempotents.hpp"
#include "drz/ring.hpp"

namespace drz {

struct Condition {
    std::string name;
    Element element;
    MembershipDecision decision;
};

/// Result of one equivalence check on a pair of idempotents (or an (a, p)
/// pair for the corner lemma).  The condition elements are materialized so
/// a report alone is enough to audit the verdicts.
struct EquivalenceReport {
    std::string theorem;
    std::vector<Element> inputs;  // (p, q), or (a, p) for lemma26
    std::vector<Condition> conditions;
    bool decisive = true;  // every condition reached a verdict
    bool agree = false;    // the theorem's contract holds (only meaningful when decisive)

    nlohmann::json to_json() const;
};

/// Proposition: the ten elements 1-pq, p-pq, p-qp, 1-pqp, p-pqp, 1-qp,
/// q-qp, q-pq, 1-qpq, q-qpq are Drazin invertible together or not at all.
EquivalenceReport prop31(const Element& p, const Element& q);

/// The same ten conditions under the substitution p -> 1-p, q -> 1-q.
EquivalenceReport cor32(const Element& p, const Element& q);

/// p-q, 1-pq, p+q-pq are equivalent; also asserts the ring identity
/// 1-pqp = (p-q)^2 p + 1-p and p(p-q)^2 = (p-q)^2 p = p-pqp.
EquivalenceReport thm33(const Element& p, const Element& q);

/// pq, 1-p-q, (1-p)(1-q) are equivalent.
EquivalenceReport thm34(const Element& p, const Element& q);

/// Commutator: pq-qp is Drazin invertible iff both pq and p-q are.
EquivalenceReport thm35(const Element& p, const Element& q);

/// Anti-commutator: pq+qp is Drazin invertible iff both pq and p+q are;
/// also asserts pq+qp = (p+q)(p+q-1) = (p+q-1)(p+q).
EquivalenceReport thm36(const Element& p, const Element& q);

/// The integer counterexample p = q = 1: p-q = 0 is Drazin invertible
/// while p+q = 2 is not, so sum and difference can diverge in a ring.
EquivalenceReport remark37_regression();

/// Corner lemma: with b = pa(1-p) and c = (1-p)ap, the elements b+c, bc
/// and b-c are Drazin invertible together.  When b+c is a member, also
/// builds (bc)^D = p x p from x = ((b+c)^D)^2 and asserts its axioms.
EquivalenceReport corner_equivalence(const Element& a, const Element& p);

struct SweepSummary {
    std::string theorem;
    std::int64_t pairs_checked = 0;
    std::int64_t agreements = 0;
    std::int64_t undecided = 0;
    std::vector<EquivalenceReport> violations;
    std::vector<EquivalenceReport> reports;  // all, in deterministic pair order

    nlohmann::json to_json() const;
};

/// Runs the named check over the Cartesian product of the two families.
/// Pair order is deterministic (families are pre-sorted); parallelism only
/// affects scheduling, never the merged output.
SweepSummary sweep(const std::string& theorem, const IdempotentFamily& family_p,
                   const IdempotentFamily& family_q, int parallelism = 1);

bool is_theorem_label(const std::string& label);
const std::vector<std::string>& all_theorem_labels();

}  // namespace drz
