#include "drz/drazin.hpp"

#include <map>

namespace drz {

namespace {

using Kind = RingDescriptor::Kind;

bool is_field_scalar_ring(const RingDescriptor& r) {
    return r.kind() == Kind::PrimeField || r.kind() == Kind::Rationals;
}

// Upper bound for the Drazin index search in a given ring.
Int index_cap(const RingDescriptor& r) {
    if (r.is_finite()) return r.cardinality();
    switch (r.kind()) {
        case Kind::Matrix: return Int(r.dim()) + 1;
        case Kind::Product: {
            Int l = index_cap(r.left());
            Int rr = index_cap(r.right());
            return l > rr ? l : rr;
        }
        default: return 2;
    }
}

}  // namespace

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Member: return "member";
        case Verdict::NonMember: return "non_member";
        case Verdict::Undecidable: return "undecidable";
    }
    return "?";
}

bool drazin_axioms_hold(const Element& a, const Element& b, const Int& k) {
    if (!eq(mul(a, b), mul(b, a))) return false;
    if (!eq(mul(mul(b, a), b), b)) return false;
    Element ak = pow_elem(a, k);
    return eq(ak, mul(mul(ak, a), b));
}

Int minimal_drazin_index(const Element& a, const Element& inv, const Int& cap) {
    if (!eq(mul(a, inv), mul(inv, a)) || !eq(mul(mul(inv, a), inv), inv))
        throw defect_error("candidate inverse violates the commuting equations");
    Element ak = one(a.ring());
    for (Int k = 0; k <= cap; ++k) {
        Element ak1 = mul(ak, a);
        if (eq(ak, mul(ak1, inv))) return k;
        ak = std::move(ak1);
    }
    throw defect_error("no Drazin index up to cap " + cap.str() + " for " + a.str());
}

// ---------------------------------------------------------------------------
// Finite rings: the powers of a are eventually periodic and the cycle is a
// group; a^D is the power a^s with s >= tail and s + 1 divisible by the period.

DrazinResult drazin_finite(const Element& a) {
    if (!a.ring().is_finite()) throw unsupported_error("drazin_finite requires a finite ring");
    std::map<std::string, Int> first_seen;
    std::vector<Element> powers;  // powers[t] = a^{t+1}
    Element cur = a;
    Int tail = 0, period = 0;
    for (Int exp = 1;; ++exp) {
        auto [it, inserted] = first_seen.try_emplace(cur.str(), exp);
        if (!inserted) {
            tail = it->second;
            period = exp - tail;
            break;
        }
        powers.push_back(cur);
        cur = mul(cur, a);
    }
    Int s = tail > 1 ? tail : 1;
    while ((s + 1) % period != 0) ++s;
    // powers holds a^1 .. a^{tail+period-1}; reduce s into the cycle.
    Int idx = s;
    while (idx > tail + period - 1) idx -= period;
    Element inverse = powers[static_cast<std::size_t>(idx - 1)];
    Int index = minimal_drazin_index(a, inverse, s + 1);
    if (!drazin_axioms_hold(a, inverse, index == 0 ? Int(1) : index))
        throw defect_error("finite-ring Drazin result fails the axioms");
    return {inverse, index};
}

// ---------------------------------------------------------------------------
// Exact field linear algebra

Element field_inv(const Element& x) {
    const RingDescriptor& r = x.ring();
    if (is_zero(x)) throw input_error("field_inv of zero");
    switch (r.kind()) {
        case Kind::PrimeField: return pow_elem(x, r.modulus() - 2);
        case Kind::Rationals: return Element::fraction(Rat(1) / x.fraction_value());
        default: throw unsupported_error("field_inv outside a field");
    }
}

namespace {

using Grid = std::vector<std::vector<Element>>;

Grid to_grid(const Element& m) {
    const int d = m.ring().dim();
    Grid g(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g[i].push_back(m.entry(i, j));
    return g;
}

Element from_grid(const RingDescriptor& r, const Grid& g) {
    std::vector<Element> entries;
    for (const auto& row : g)
        for (const Element& e : row) entries.push_back(e);
    return Element::matrix(r, std::move(entries));
}

// Reduce the first `cols` columns of g to reduced row echelon form with
// exact row operations applied across the full width.  Returns pivot columns.
std::vector<int> rref_in_place(Grid& g, int cols) {
    const int rows = static_cast<int>(g.size());
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int i = row; i < rows; ++i)
            if (!is_zero(g[i][col])) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(g[row], g[pivot]);
        Element scale = field_inv(g[row][col]);
        for (Element& e : g[row]) e = mul(scale, e);
        for (int i = 0; i < rows; ++i) {
            if (i == row || is_zero(g[i][col])) continue;
            Element factor = g[i][col];
            for (std::size_t j = 0; j < g[i].size(); ++j)
                g[i][j] = sub(g[i][j], mul(factor, g[row][j]));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int matrix_rank(const Element& m) {
    if (m.ring().kind() != Kind::Matrix || !is_field_scalar_ring(m.ring().base()))
        throw unsupported_error("matrix_rank requires a matrix over a field");
    Grid g = to_grid(m);
    return static_cast<int>(rref_in_place(g, m.ring().dim()).size());
}

Element one_inverse(const Element& m) {
    const RingDescriptor& r = m.ring();
    if (r.kind() != Kind::Matrix || !is_field_scalar_ring(r.base()))
        throw unsupported_error("one_inverse requires a matrix over a field");
    const int d = r.dim();
    const RingDescriptor base = r.base();
    // Augment with the identity: after reduction the right block E satisfies
    // E m = R with R in reduced row echelon form and pivot columns j_1..j_r.
    Grid g = to_grid(m);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            g[i].push_back(i == j ? one(base) : zero(base));
    std::vector<int> pivots = rref_in_place(g, d);
    // G = B E with B[j_t][t] = 1 picks out the pivot rows; m G m = m.
    Grid e(d, std::vector<Element>(d, zero(base)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) e[i][j] = g[i][d + j];
    Grid out(d, std::vector<Element>(d, zero(base)));
    for (std::size_t t = 0; t < pivots.size(); ++t)
        for (int j = 0; j < d; ++j) out[pivots[t]][j] = e[t][j];
    Element result = from_grid(r, out);
    if (!eq(mul(mul(m, result), m), m))
        throw defect_error("one_inverse failed m G m = m");
    return result;
}

DrazinResult drazin_matrix_field(const Element& a) {
    const RingDescriptor& r = a.ring();
    if (r.kind() != Kind::Matrix || !is_field_scalar_ring(r.base()))
        throw unsupported_error("drazin_matrix_field requires a matrix over a field");
    const int d = r.dim();
    // Index = least l with rank(a^l) = rank(a^{l+1}); ranks stabilize by dim.
    Int level = 0;
    Element ak = one(r);
    int prev_rank = d;
    for (;; ++level) {
        Element ak1 = mul(ak, a);
        int next_rank = matrix_rank(ak1);
        if (next_rank == prev_rank) break;
        prev_rank = next_rank;
        ak = std::move(ak1);
        if (level > d) throw defect_error("rank sequence failed to stabilize");
    }
    Element al = pow_elem(a, level);
    Element g = one_inverse(pow_elem(a, 2 * level + 1));
    Element inverse = mul(mul(al, g), al);
    Int index = minimal_drazin_index(a, inverse, level + 1);
    if (!drazin_axioms_hold(a, inverse, index == 0 ? Int(1) : index))
        throw defect_error("matrix-field Drazin result fails the axioms");
    return {inverse, index};
}

// ---------------------------------------------------------------------------
// Membership

namespace {

MembershipDecision member(DrazinResult witness, std::string method) {
    return {Verdict::Member, std::move(witness), std::move(method)};
}

MembershipDecision non_member(std::string method) {
    return {Verdict::NonMember, std::nullopt, std::move(method)};
}

// Lift an integer matrix into the rationals entrywise.
Element to_rational_matrix(const Element& m) {
    const RingDescriptor rq = RingDescriptor::matrix(m.ring().dim(), RingDescriptor::rationals());
    std::vector<Element> entries;
    for (const Element& e : m.entries()) entries.push_back(Element::fraction(Rat(e.scalar_value())));
    return Element::matrix(rq, std::move(entries));
}

std::optional<Element> to_integer_matrix(const Element& m) {
    const RingDescriptor rz = RingDescriptor::matrix(m.ring().dim(), RingDescriptor::integers());
    std::vector<Element> entries;
    for (const Element& e : m.entries()) {
        const Rat& v = e.fraction_value();
        if (denominator(v) != 1) return std::nullopt;
        entries.push_back(Element::scalar(RingDescriptor::integers(), numerator(v)));
    }
    return Element::matrix(rz, std::move(entries));
}

}  // namespace

MembershipDecision drazin_membership(const Element& a) {
    const RingDescriptor& r = a.ring();
    if (r.is_finite()) return member(drazin_finite(a), "finite-cycle");
    switch (r.kind()) {
        case Kind::Integers: {
            // Z^D = {-1, 0, 1}: units and the one nilpotent-free zero.
            const Int& v = a.scalar_value();
            if (v == 0) return member({a, 1}, "integer-units");
            if (v == 1 || v == -1) return member({a, 0}, "integer-units");
            return non_member("integer-units");
        }
        case Kind::Rationals: {
            if (is_zero(a)) return member({a, 1}, "field");
            return member({field_inv(a), 0}, "field");
        }
        case Kind::Matrix: {
            const RingDescriptor base = r.base();
            if (is_field_scalar_ring(base))
                return member(drazin_matrix_field(a), "matrix-field");
            if (base.kind() == Kind::Integers) {
                // The Drazin inverse is unique, so the rational inverse of the
                // same entries is the only candidate; a is Drazin invertible
                // in M_n(Z) iff that inverse is integral.
                DrazinResult rational = drazin_matrix_field(to_rational_matrix(a));
                if (auto integral = to_integer_matrix(rational.inverse))
                    return member({*integral, rational.index}, "integrality");
                return non_member("integrality");
            }
            return {Verdict::Undecidable, std::nullopt, "none"};
        }
        case Kind::Product: {
            MembershipDecision l = drazin_membership(a.first());
            MembershipDecision rr = drazin_membership(a.second());
            if (l.verdict == Verdict::NonMember || rr.verdict == Verdict::NonMember)
                return non_member("componentwise");
            if (l.is_member() && rr.is_member()) {
                Int index = std::max(l.witness->index, rr.witness->index);
                Element inv = Element::pair(r, l.witness->inverse, rr.witness->inverse);
                return member({inv, index}, "componentwise");
            }
            return {Verdict::Undecidable, std::nullopt, "componentwise"};
        }
        default: return {Verdict::Undecidable, std::nullopt, "none"};
    }
}

// ---------------------------------------------------------------------------
// Constructive formulas

namespace {

DrazinResult require_member(const Element& a, const char* who) {
    MembershipDecision d = drazin_membership(a);
    if (!d.is_member())
        throw precondition_error(std::string(who) + ": element is not Drazin invertible: " +
                                 a.str());
    return *d.witness;
}

DrazinResult finish(const Element& target, Element inverse) {
    Int index = minimal_drazin_index(target, inverse, index_cap(target.ring()));
    if (!drazin_axioms_hold(target, inverse, index == 0 ? Int(1) : index))
        throw defect_error("constructed inverse fails the Drazin axioms");
    return {std::move(inverse), index};
}

}  // namespace

std::pair<Element, Element> commute_with_drazin(const Element& a, const Element& b) {
    if (!eq(mul(a, b), mul(b, a)))
        throw precondition_error("commute_with_drazin: ab != ba");
    DrazinResult ad = require_member(a, "commute_with_drazin");
    Element lhs = mul(ad.inverse, b);
    Element rhs = mul(b, ad.inverse);
    if (!eq(lhs, rhs)) throw defect_error("a^D b != b a^D despite ab = ba");
    return {lhs, rhs};
}

DrazinResult drazin_sum_orthogonal(const Element& a, const Element& b) {
    if (!is_zero(mul(a, b)) || !is_zero(mul(b, a)))
        throw precondition_error("drazin_sum_orthogonal: ab = ba = 0 fails");
    DrazinResult ad = require_member(a, "drazin_sum_orthogonal");
    DrazinResult bd = require_member(b, "drazin_sum_orthogonal");
    return finish(add(a, b), add(ad.inverse, bd.inverse));
}

DrazinResult drazin_product_commuting(const Element& a, const Element& b) {
    if (!eq(mul(a, b), mul(b, a)))
        throw precondition_error("drazin_product_commuting: ab != ba");
    DrazinResult ad = require_member(a, "drazin_product_commuting");
    DrazinResult bd = require_member(b, "drazin_product_commuting");
    Element forward = mul(ad.inverse, bd.inverse);
    if (!eq(forward, mul(bd.inverse, ad.inverse)))
        throw defect_error("a^D b^D != b^D a^D for commuting a, b");
    return finish(mul(a, b), forward);
}

DrazinResult cline(const Element& a, const Element& b, const DrazinResult& ab_result) {
    Element ab = mul(a, b);
    Int k = ab_result.index == 0 ? Int(1) : ab_result.index;
    if (!drazin_axioms_hold(ab, ab_result.inverse, k))
        throw input_error("cline: ab_result is not a Drazin inverse of ab");
    Element inverse = mul(mul(b, mul(ab_result.inverse, ab_result.inverse)), a);
    return finish(mul(b, a), inverse);
}

std::pair<MembershipDecision, MembershipDecision> jacobson_transfer(const Element& a,
                                                                    const Element& b) {
    Element unit = one(a.ring());
    MembershipDecision left = drazin_membership(sub(unit, mul(a, b)));
    MembershipDecision right = drazin_membership(sub(unit, mul(b, a)));
    if (left.decisive() && right.decisive() && left.verdict != right.verdict)
        throw defect_error("Jacobson transfer verdicts disagree for a=" + a.str() +
                           " b=" + b.str());
    return {std::move(left), std::move(right)};
}

DrazinResult pierce_combine(const Element& a, const Element& b, const Element& p) {
    if (!is_idempotent(p)) throw precondition_error("pierce_combine: p is not idempotent");
    if (!eq(mul(a, p), mul(p, a))) throw precondition_error("pierce_combine: ap != pa");
    if (!eq(mul(b, p), mul(p, b))) throw precondition_error("pierce_combine: bp != pb");
    DrazinResult ad = require_member(a, "pierce_combine");
    DrazinResult bd = require_member(b, "pierce_combine");
    Element comp = sub(one(p.ring()), p);
    Element target = add(mul(a, p), mul(b, comp));
    Element inverse = add(mul(ad.inverse, p), mul(bd.inverse, comp));
    return finish(target, inverse);
}

std::pair<Element, Element> corner_split(const Element& a, const Element& p) {
    if (!is_idempotent(p)) throw input_error("corner_split: p is not idempotent");
    Element comp = sub(one(p.ring()), p);
    Element b = mul(mul(p, a), comp);
    Element c = mul(mul(comp, a), p);
    return {std::move(b), std::move(c)};
}

DrazinResult drazin_power(const DrazinResult& a_result, const Element& a, const Int& m) {
    if (m < 1) throw input_error("drazin_power requires m >= 1");
    return finish(pow_elem(a, m), pow_elem(a_result.inverse, m));
}

std::pair<MembershipDecision, MembershipDecision> quadratic_lift(const Element& a) {
    Element a2 = mul(a, a);
    MembershipDecision minus = drazin_membership(sub(a, a2));
    MembershipDecision self = drazin_membership(a);
    MembershipDecision plus = drazin_membership(add(a, a2));
    if (minus.is_member() && self.decisive() && !self.is_member())
        throw defect_error("a - a^2 Drazin invertible but a is not: " + a.str());
    if (plus.is_member() && self.decisive() && !self.is_member())
        throw defect_error("a + a^2 Drazin invertible but a is not: " + a.str());
    return {std::move(minus), std::move(self)};
}

}  // namespace drz
