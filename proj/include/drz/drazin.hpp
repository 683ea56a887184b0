#pragma once

#include <optional>
#include <string>
#include <utility>

#include "drz/ring.hpp"

namespace drz {

/// A Drazin inverse together with its index: the least k >= 0 such that
/// a^k = a^{k+1} * inverse (with a^0 = 1).  Index 0 means a is a unit.
struct DrazinResult {
    Element inverse;
    Int index;
};

enum class Verdict { Member, NonMember, Undecidable };

std::string verdict_name(Verdict v);

/// Outcome of a Drazin membership decision.  The witness is present
/// exactly when the verdict is Member; method labels the strategy used.
struct MembershipDecision {
    Verdict verdict;
    std::optional<DrazinResult> witness;
    std::string method;

    bool is_member() const { return verdict == Verdict::Member; }
    bool decisive() const { return verdict != Verdict::Undecidable; }
};

/// True iff b satisfies all three Drazin equations for a at exponent k:
/// ab = ba, bab = b, a^k = a^{k+1} b.
bool drazin_axioms_hold(const Element& a, const Element& b, const Int& k);

/// Least k in [0, cap] with a^k = a^{k+1} * inv.  Throws defect_error if
/// no such k exists; inv must already satisfy the commuting equations.
Int minimal_drazin_index(const Element& a, const Element& inv, const Int& cap);

/// Drazin inverse in a finite ring via cycle detection on the power
/// sequence of a.  Throws unsupported_error on infinite rings.
DrazinResult drazin_finite(const Element& a);

/// Exact Drazin inverse of a square matrix over a prime field or the
/// rationals: rank stabilization for the index, then a^l * G * a^l with
/// G a {1}-inverse of a^{2l+1}.
DrazinResult drazin_matrix_field(const Element& a);

/// Full membership decision, dispatching on the ring: finite rings,
/// integers, matrices over fields, matrices over the integers (via the
/// rational inverse and an integrality check), and products componentwise.
MembershipDecision drazin_membership(const Element& a);

/// For Drazin invertible a commuting with b, returns (a^D b, b a^D);
/// the two components are asserted equal.
std::pair<Element, Element> commute_with_drazin(const Element& a, const Element& b);

/// (a + b)^D = a^D + b^D when ab = ba = 0.
DrazinResult drazin_sum_orthogonal(const Element& a, const Element& b);

/// (ab)^D = a^D b^D when ab = ba.
DrazinResult drazin_product_commuting(const Element& a, const Element& b);

/// Cline's formula: (ba)^D = b ((ab)^D)^2 a, no commutativity needed.
DrazinResult cline(const Element& a, const Element& b, const DrazinResult& ab_result);

/// Jacobson-style transfer: decides 1 - ab and 1 - ba; decisive verdicts
/// are asserted to agree.
std::pair<MembershipDecision, MembershipDecision> jacobson_transfer(const Element& a,
                                                                    const Element& b);

/// (ap + b(1-p))^D = a^D p + b^D (1-p) for idempotent p commuting with a and b.
DrazinResult pierce_combine(const Element& a, const Element& b, const Element& p);

/// Pierce corners: (b, c) = (p a (1-p), (1-p) a p) for idempotent p.
std::pair<Element, Element> corner_split(const Element& a, const Element& p);

/// For Drazin invertible a, (a^m)^D = (a^D)^m.
DrazinResult drazin_power(const DrazinResult& a_result, const Element& a, const Int& m);

/// Decides a - a^2 and a; membership of a - a^2 (or a + a^2) forces
/// membership of a, and the implication is asserted when checkable.
std::pair<MembershipDecision, MembershipDecision> quadratic_lift(const Element& a);

// Exact linear algebra over field scalars (prime field or rationals),
// used by drazin_matrix_field and exposed for tests.
Element field_inv(const Element& x);
int matrix_rank(const Element& m);
/// Any G with m G m = m, from the recorded row operations of a reduction
/// to reduced row echelon form.
Element one_inverse(const Element& m);

}  // namespace drz
