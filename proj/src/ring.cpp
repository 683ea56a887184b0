#include "drz/ring.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace drz {

using json = nlohmann::json;

namespace {

bool is_prime(const Int& p) {
    if (p < 2) return false;
    for (Int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

RingDescriptor RingDescriptor::modular(const Int& n) {
    if (n < 2) throw input_error("modular ring requires n >= 2");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Modular;
    node->n = n;
    return RingDescriptor(std::move(node));
}

RingDescriptor RingDescriptor::integers() {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Integers;
    return RingDescriptor(std::move(node));
}

RingDescriptor RingDescriptor::rationals() {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Rationals;
    return RingDescriptor(std::move(node));
}

RingDescriptor RingDescriptor::prime_field(const Int& p) {
    if (!is_prime(p)) throw input_error("prime_field requires a prime modulus");
    auto node = std::make_shared<Node>();
    node->kind = Kind::PrimeField;
    node->n = p;
    return RingDescriptor(std::move(node));
}

RingDescriptor RingDescriptor::matrix(int dim, RingDescriptor base) {
    if (dim < 1) throw input_error("matrix ring requires dim >= 1");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Matrix;
    node->dim = dim;
    node->base = base.node_;
    return RingDescriptor(std::move(node));
}

RingDescriptor RingDescriptor::product(RingDescriptor left, RingDescriptor right) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Product;
    node->left = left.node_;
    node->right = right.node_;
    return RingDescriptor(std::move(node));
}

const Int& RingDescriptor::modulus() const {
    if (kind() != Kind::Modular && kind() != Kind::PrimeField)
        throw input_error("modulus() on non-modular ring");
    return node_->n;
}

int RingDescriptor::dim() const {
    if (kind() != Kind::Matrix) throw input_error("dim() on non-matrix ring");
    return node_->dim;
}

RingDescriptor RingDescriptor::base() const {
    if (kind() != Kind::Matrix) throw input_error("base() on non-matrix ring");
    return RingDescriptor(node_->base);
}

RingDescriptor RingDescriptor::left() const {
    if (kind() != Kind::Product) throw input_error("left() on non-product ring");
    return RingDescriptor(node_->left);
}

RingDescriptor RingDescriptor::right() const {
    if (kind() != Kind::Product) throw input_error("right() on non-product ring");
    return RingDescriptor(node_->right);
}

bool RingDescriptor::is_finite() const {
    switch (kind()) {
        case Kind::Modular:
        case Kind::PrimeField: return true;
        case Kind::Integers:
        case Kind::Rationals: return false;
        case Kind::Matrix: return RingDescriptor(node_->base).is_finite();
        case Kind::Product:
            return RingDescriptor(node_->left).is_finite() &&
                   RingDescriptor(node_->right).is_finite();
    }
    return false;
}

Int RingDescriptor::cardinality() const {
    switch (kind()) {
        case Kind::Modular:
        case Kind::PrimeField: return node_->n;
        case Kind::Matrix: {
            Int b = RingDescriptor(node_->base).cardinality();
            Int result = 1;
            for (int i = 0; i < node_->dim * node_->dim; ++i) result *= b;
            return result;
        }
        case Kind::Product:
            return RingDescriptor(node_->left).cardinality() *
                   RingDescriptor(node_->right).cardinality();
        default: throw unsupported_error("cardinality of an infinite ring");
    }
}

bool RingDescriptor::operator==(const RingDescriptor& other) const {
    if (node_ == other.node_) return true;
    if (kind() != other.kind()) return false;
    switch (kind()) {
        case Kind::Modular:
        case Kind::PrimeField: return node_->n == other.node_->n;
        case Kind::Integers:
        case Kind::Rationals: return true;
        case Kind::Matrix:
            return node_->dim == other.node_->dim &&
                   RingDescriptor(node_->base) == RingDescriptor(other.node_->base);
        case Kind::Product:
            return RingDescriptor(node_->left) == RingDescriptor(other.node_->left) &&
                   RingDescriptor(node_->right) == RingDescriptor(other.node_->right);
    }
    return false;
}

namespace {

json int_to_json(const Int& v) {
    // Values that fit in 64 bits serialize as JSON numbers, the rest as strings.
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return json(static_cast<std::int64_t>(v));
    return json(v.str());
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw input_error("expected an integer value");
}

}  // namespace

json RingDescriptor::to_json() const {
    switch (kind()) {
        case Kind::Modular: return {{"kind", "modular"}, {"n", int_to_json(node_->n)}};
        case Kind::Integers: return {{"kind", "integers"}};
        case Kind::Rationals: return {{"kind", "rationals"}};
        case Kind::PrimeField: return {{"kind", "prime_field"}, {"p", int_to_json(node_->n)}};
        case Kind::Matrix:
            return {{"kind", "matrix"},
                    {"dim", node_->dim},
                    {"base", RingDescriptor(node_->base).to_json()}};
        case Kind::Product:
            return {{"kind", "product"},
                    {"left", RingDescriptor(node_->left).to_json()},
                    {"right", RingDescriptor(node_->right).to_json()}};
    }
    throw defect_error("unreachable ring kind");
}

RingDescriptor RingDescriptor::from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw input_error("ring descriptor must be an object with a \"kind\" field");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "modular") return modular(int_from_json(j.at("n")));
    if (kind == "integers") return integers();
    if (kind == "rationals") return rationals();
    if (kind == "prime_field") return prime_field(int_from_json(j.at("p")));
    if (kind == "matrix")
        return matrix(j.at("dim").get<int>(), from_json(j.at("base")));
    if (kind == "product")
        return product(from_json(j.at("left")), from_json(j.at("right")));
    throw input_error("unknown ring kind: " + kind);
}

std::string RingDescriptor::str() const { return to_json().dump(); }

// ---------------------------------------------------------------------------
// Element

namespace {

Int canonical_residue(const Int& v, const Int& n) {
    Int r = v % n;
    if (r < 0) r += n;
    return r;
}

void require_same_ring(const Element& x, const Element& y) {
    if (x.ring() != y.ring())
        throw input_error("ring mismatch: " + x.ring().str() + " vs " + y.ring().str());
}

}  // namespace

Element Element::scalar(const RingDescriptor& r, const Int& value) {
    switch (r.kind()) {
        case RingDescriptor::Kind::Modular:
        case RingDescriptor::Kind::PrimeField:
            return Element(r, canonical_residue(value, r.modulus()));
        case RingDescriptor::Kind::Integers: return Element(r, value);
        default: throw input_error("scalar payload for non-scalar ring");
    }
}

Element Element::fraction(const Rat& value) {
    // cpp_rational keeps fractions in lowest terms with positive denominator.
    return Element(RingDescriptor::rationals(), value);
}

Element Element::matrix(const RingDescriptor& r, std::vector<Element> entries) {
    if (r.kind() != RingDescriptor::Kind::Matrix)
        throw input_error("matrix payload for non-matrix ring");
    const int d = r.dim();
    if (static_cast<int>(entries.size()) != d * d)
        throw input_error("matrix dimension mismatch");
    for (const Element& e : entries)
        if (e.ring() != r.base()) throw input_error("matrix entry from wrong base ring");
    return Element(r, std::move(entries));
}

Element Element::pair(const RingDescriptor& r, Element left, Element right) {
    if (r.kind() != RingDescriptor::Kind::Product)
        throw input_error("pair payload for non-product ring");
    if (left.ring() != r.left() || right.ring() != r.right())
        throw input_error("pair component from wrong ring");
    std::vector<Element> sub;
    sub.push_back(std::move(left));
    sub.push_back(std::move(right));
    return Element(r, std::move(sub));
}

const Int& Element::scalar_value() const {
    switch (ring_.kind()) {
        case RingDescriptor::Kind::Modular:
        case RingDescriptor::Kind::PrimeField:
        case RingDescriptor::Kind::Integers: return int_;
        default: throw input_error("scalar_value() on non-scalar element");
    }
}

const Rat& Element::fraction_value() const {
    if (ring_.kind() != RingDescriptor::Kind::Rationals)
        throw input_error("fraction_value() on non-rational element");
    return rat_;
}

const Element& Element::entry(int row, int col) const {
    const int d = ring_.dim();
    return sub_.at(static_cast<std::size_t>(row) * d + col);
}

const std::vector<Element>& Element::entries() const {
    if (ring_.kind() != RingDescriptor::Kind::Matrix)
        throw input_error("entries() on non-matrix element");
    return sub_;
}

const Element& Element::first() const {
    if (ring_.kind() != RingDescriptor::Kind::Product)
        throw input_error("first() on non-product element");
    return sub_[0];
}

const Element& Element::second() const {
    if (ring_.kind() != RingDescriptor::Kind::Product)
        throw input_error("second() on non-product element");
    return sub_[1];
}

Element zero(const RingDescriptor& r) { return from_integer(r, 0); }
Element one(const RingDescriptor& r) { return from_integer(r, 1); }

Element from_integer(const RingDescriptor& r, const Int& n) {
    switch (r.kind()) {
        case RingDescriptor::Kind::Modular:
        case RingDescriptor::Kind::PrimeField:
        case RingDescriptor::Kind::Integers: return Element::scalar(r, n);
        case RingDescriptor::Kind::Rationals: return Element::fraction(Rat(n));
        case RingDescriptor::Kind::Matrix: {
            const int d = r.dim();
            std::vector<Element> entries;
            entries.reserve(static_cast<std::size_t>(d) * d);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    entries.push_back(i == j ? from_integer(r.base(), n)
                                             : from_integer(r.base(), 0));
            return Element::matrix(r, std::move(entries));
        }
        case RingDescriptor::Kind::Product:
            return Element::pair(r, from_integer(r.left(), n), from_integer(r.right(), n));
    }
    throw defect_error("unreachable ring kind");
}

Element add(const Element& x, const Element& y) {
    require_same_ring(x, y);
    const RingDescriptor& r = x.ring();
    switch (r.kind()) {
        case RingDescriptor::Kind::Modular:
        case RingDescriptor::Kind::PrimeField:
        case RingDescriptor::Kind::Integers:
            return Element::scalar(r, x.scalar_value() + y.scalar_value());
        case RingDescriptor::Kind::Rationals:
            return Element::fraction(x.fraction_value() + y.fraction_value());
        case RingDescriptor::Kind::Matrix: {
            std::vector<Element> entries;
            entries.reserve(x.entries().size());
            for (std::size_t i = 0; i < x.entries().size(); ++i)
                entries.push_back(add(x.entries()[i], y.entries()[i]));
            return Element::matrix(r, std::move(entries));
        }
        case RingDescriptor::Kind::Product:
            return Element::pair(r, add(x.first(), y.first()), add(x.second(), y.second()));
    }
    throw defect_error("unreachable ring kind");
}

Element sub(const Element& x, const Element& y) { return add(x, neg(y)); }

Element mul(const Element& x, const Element& y) {
    require_same_ring(x, y);
    const RingDescriptor& r = x.ring();
    switch (r.kind()) {
        case RingDescriptor::Kind::Modular:
        case RingDescriptor::Kind::PrimeField:
        case RingDescriptor::Kind::Integers:
            return Element::scalar(r, x.scalar_value() * y.scalar_value());
        case RingDescriptor::Kind::Rationals:
            return Element::fraction(x.fraction_value() * y.fraction_value());
        case RingDescriptor::Kind::Matrix: {
            const int d = r.dim();
            std::vector<Element> entries;
            entries.reserve(static_cast<std::size_t>(d) * d);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    Element acc = mul(x.entry(i, 0), y.entry(0, j));
                    for (int k = 1; k < d; ++k)
                        acc = add(acc, mul(x.entry(i, k), y.entry(k, j)));
                    entries.push_back(std::move(acc));
                }
            return Element::matrix(r, std::move(entries));
        }
        case RingDescriptor::Kind::Product:
            return Element::pair(r, mul(x.first(), y.first()), mul(x.second(), y.second()));
    }
    throw defect_error("unreachable ring kind");
}

Element neg(const Element& x) {
    const RingDescriptor& r = x.ring();
    switch (r.kind()) {
        case RingDescriptor::Kind::Modular:
        case RingDescriptor::Kind::PrimeField:
        case RingDescriptor::Kind::Integers:
            return Element::scalar(r, -x.scalar_value());
        case RingDescriptor::Kind::Rationals:
            return Element::fraction(-x.fraction_value());
        case RingDescriptor::Kind::Matrix: {
            std::vector<Element> entries;
            entries.reserve(x.entries().size());
            for (const Element& e : x.entries()) entries.push_back(neg(e));
            return Element::matrix(r, std::move(entries));
        }
        case RingDescriptor::Kind::Product:
            return Element::pair(r, neg(x.first()), neg(x.second()));
    }
    throw defect_error("unreachable ring kind");
}

bool eq(const Element& x, const Element& y) {
    if (x.ring() != y.ring()) return false;
    switch (x.ring().kind()) {
        case RingDescriptor::Kind::Modular:
        case RingDescriptor::Kind::PrimeField:
        case RingDescriptor::Kind::Integers: return x.scalar_value() == y.scalar_value();
        case RingDescriptor::Kind::Rationals: return x.fraction_value() == y.fraction_value();
        case RingDescriptor::Kind::Matrix: {
            for (std::size_t i = 0; i < x.entries().size(); ++i)
                if (!eq(x.entries()[i], y.entries()[i])) return false;
            return true;
        }
        case RingDescriptor::Kind::Product:
            return eq(x.first(), y.first()) && eq(x.second(), y.second());
    }
    return false;
}

Element pow_elem(const Element& x, const Int& k) {
    if (k < 0) throw input_error("pow_elem requires k >= 0");
    Element result = one(x.ring());
    Element base = x;
    Int e = k;
    while (e > 0) {
        if ((e & 1) != 0) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

bool is_idempotent(const Element& e) { return eq(mul(e, e), e); }
bool is_zero(const Element& e) { return eq(e, zero(e.ring())); }
bool is_one(const Element& e) { return eq(e, one(e.ring())); }

// ---------------------------------------------------------------------------
// JSON

json Element::value_json() const {
    switch (ring_.kind()) {
        case RingDescriptor::Kind::Modular:
        case RingDescriptor::Kind::PrimeField:
        case RingDescriptor::Kind::Integers: return int_to_json(int_);
        case RingDescriptor::Kind::Rationals:
            return json(numerator(rat_).str() + "/" + denominator(rat_).str());
        case RingDescriptor::Kind::Matrix: {
            const int d = ring_.dim();
            json rows = json::array();
            for (int i = 0; i < d; ++i) {
                json row = json::array();
                for (int j = 0; j < d; ++j) row.push_back(entry(i, j).value_json());
                rows.push_back(std::move(row));
            }
            return rows;
        }
        case RingDescriptor::Kind::Product:
            return json::array({sub_[0].value_json(), sub_[1].value_json()});
    }
    throw defect_error("unreachable ring kind");
}

json Element::to_json() const { return {{"ring", ring_.to_json()}, {"value", value_json()}}; }

Element Element::value_from_json(const RingDescriptor& r, const json& v) {
    switch (r.kind()) {
        case RingDescriptor::Kind::Modular:
        case RingDescriptor::Kind::PrimeField:
        case RingDescriptor::Kind::Integers: return scalar(r, int_from_json(v));
        case RingDescriptor::Kind::Rationals: {
            if (v.is_number_integer()) return fraction(Rat(v.get<std::int64_t>()));
            if (v.is_string()) {
                const std::string s = v.get<std::string>();
                const auto slash = s.find('/');
                if (slash == std::string::npos) return fraction(Rat(Int(s)));
                Int num(s.substr(0, slash));
                Int den(s.substr(slash + 1));
                if (den == 0) throw input_error("fraction with zero denominator");
                if (den < 0) {
                    num = -num;
                    den = -den;
                }
                return fraction(Rat(num, den));
            }
            throw input_error("expected integer or \"num/den\" for rational value");
        }
        case RingDescriptor::Kind::Matrix: {
            const int d = r.dim();
            if (!v.is_array() || static_cast<int>(v.size()) != d)
                throw input_error("matrix value must be an array of " + std::to_string(d) +
                                  " rows");
            std::vector<Element> entries;
            entries.reserve(static_cast<std::size_t>(d) * d);
            for (const json& row : v) {
                if (!row.is_array() || static_cast<int>(row.size()) != d)
                    throw input_error("matrix row has wrong length");
                for (const json& cell : row)
                    entries.push_back(value_from_json(r.base(), cell));
            }
            return matrix(r, std::move(entries));
        }
        case RingDescriptor::Kind::Product: {
            if (!v.is_array() || v.size() != 2)
                throw input_error("product value must be a [left, right] pair");
            return pair(r, value_from_json(r.left(), v[0]), value_from_json(r.right(), v[1]));
        }
    }
    throw defect_error("unreachable ring kind");
}

Element Element::from_json(const json& j) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("value"))
        throw input_error("element must be an object with \"ring\" and \"value\"");
    RingDescriptor r = RingDescriptor::from_json(j.at("ring"));
    return value_from_json(r, j.at("value"));
}

std::string Element::str() const { return value_json().dump(); }

// ---------------------------------------------------------------------------
// Enumeration

std::vector<Element> enumerate_elements(const RingDescriptor& r, std::int64_t cap) {
    if (!r.is_finite()) throw unsupported_error("cannot enumerate an infinite ring");
    const Int card = r.cardinality();
    if (card > cap)
        throw resource_error("ring cardinality " + card.str() + " exceeds cap " +
                             std::to_string(cap));
    switch (r.kind()) {
        case RingDescriptor::Kind::Modular:
        case RingDescriptor::Kind::PrimeField: {
            std::vector<Element> out;
            for (Int v = 0; v < r.modulus(); ++v) out.push_back(Element::scalar(r, v));
            return out;
        }
        case RingDescriptor::Kind::Matrix: {
            const std::vector<Element> base = enumerate_elements(r.base(), cap);
            const int slots = r.dim() * r.dim();
            std::vector<Element> out;
            out.reserve(static_cast<std::size_t>(card));
            std::vector<std::size_t> odometer(slots, 0);
            while (true) {
                std::vector<Element> entries;
                entries.reserve(slots);
                for (int i = 0; i < slots; ++i) entries.push_back(base[odometer[i]]);
                out.push_back(Element::matrix(r, std::move(entries)));
                int pos = slots - 1;
                while (pos >= 0 && ++odometer[pos] == base.size()) odometer[pos--] = 0;
                if (pos < 0) break;
            }
            return out;
        }
        case RingDescriptor::Kind::Product: {
            std::vector<Element> out;
            for (const Element& l : enumerate_elements(r.left(), cap))
                for (const Element& rr : enumerate_elements(r.right(), cap))
                    out.push_back(Element::pair(r, l, rr));
            return out;
        }
        default: throw defect_error("finite ring with unhandled kind");
    }
}

}  // namespace drz
