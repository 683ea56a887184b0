#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "drz/errors.hpp"

namespace drz {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Description of a concrete ring with unity.  A small immutable tree:
/// matrix and product kinds carry sub-descriptors.  Cheap to copy.
class RingDescriptor {
public:
    enum class Kind { Modular, Integers, Rationals, PrimeField, Matrix, Product };

    static RingDescriptor modular(const Int& n);
    static RingDescriptor integers();
    static RingDescriptor rationals();
    static RingDescriptor prime_field(const Int& p);
    static RingDescriptor matrix(int dim, RingDescriptor base);
    static RingDescriptor product(RingDescriptor left, RingDescriptor right);

    Kind kind() const { return node_->kind; }
    /// Modulus n for modular, p for prime_field.
    const Int& modulus() const;
    int dim() const;
    RingDescriptor base() const;
    RingDescriptor left() const;
    RingDescriptor right() const;

    bool is_finite() const;
    /// Number of elements of a finite ring.  Throws unsupported_error if infinite.
    Int cardinality() const;

    bool operator==(const RingDescriptor& other) const;
    bool operator!=(const RingDescriptor& other) const { return !(*this == other); }

    nlohmann::json to_json() const;
    static RingDescriptor from_json(const nlohmann::json& j);
    std::string str() const;

private:
    struct Node {
        Kind kind;
        Int n;                                    // modular / prime_field
        int dim = 0;                              // matrix
        std::shared_ptr<const Node> base;         // matrix
        std::shared_ptr<const Node> left, right;  // product
    };
    explicit RingDescriptor(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// An immutable element of a concrete ring.  The payload interpretation is
/// driven by the ring kind: an arbitrary-precision integer for modular,
/// prime-field and integer rings (residues canonical in [0, n)), an exact
/// fraction for the rationals, a row-major entry vector for matrix rings,
/// and a [left, right] pair for product rings.  All arithmetic is exact.
class Element {
public:
    static Element scalar(const RingDescriptor& r, const Int& value);
    static Element fraction(const Rat& value);
    static Element matrix(const RingDescriptor& r, std::vector<Element> entries);
    static Element pair(const RingDescriptor& r, Element left, Element right);

    const RingDescriptor& ring() const { return ring_; }

    const Int& scalar_value() const;
    const Rat& fraction_value() const;
    const Element& entry(int row, int col) const;
    const std::vector<Element>& entries() const;
    const Element& first() const;
    const Element& second() const;

    nlohmann::json value_json() const;
    nlohmann::json to_json() const;  // {"ring": ..., "value": ...}
    static Element from_json(const nlohmann::json& j);
    static Element value_from_json(const RingDescriptor& r, const nlohmann::json& v);
    std::string str() const;

private:
    Element(RingDescriptor r, Int v) : ring_(std::move(r)), int_(std::move(v)) {}
    Element(RingDescriptor r, Rat v) : ring_(std::move(r)), rat_(std::move(v)) {}
    Element(RingDescriptor r, std::vector<Element> sub)
        : ring_(std::move(r)), sub_(std::move(sub)) {}

    RingDescriptor ring_;
    Int int_;
    Rat rat_;
    std::vector<Element> sub_;
};

Element zero(const RingDescriptor& r);
Element one(const RingDescriptor& r);
/// Canonical image of an integer, i.e. n times the unity of the ring.
Element from_integer(const RingDescriptor& r, const Int& n);

Element add(const Element& x, const Element& y);
Element sub(const Element& x, const Element& y);
Element mul(const Element& x, const Element& y);
Element neg(const Element& x);
bool eq(const Element& x, const Element& y);
Element pow_elem(const Element& x, const Int& k);

inline Element operator+(const Element& x, const Element& y) { return add(x, y); }
inline Element operator-(const Element& x, const Element& y) { return sub(x, y); }
inline Element operator*(const Element& x, const Element& y) { return mul(x, y); }
inline Element operator-(const Element& x) { return neg(x); }
inline bool operator==(const Element& x, const Element& y) { return eq(x, y); }
inline bool operator!=(const Element& x, const Element& y) { return !eq(x, y); }

bool is_idempotent(const Element& e);
bool is_zero(const Element& e);
bool is_one(const Element& e);

inline constexpr std::int64_t kDefaultEnumerationCap = 65536;

/// Every element of a finite ring, in a fixed deterministic order.
std::vector<Element> enumerate_elements(const RingDescriptor& r,
                                        std::int64_t cap = kDefaultEnumerationCap);

}  // namespace drz
