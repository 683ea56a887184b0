#pragma once

#include <random>

#include "drz/ring.hpp"

namespace drz::testing {

using Rng = std::mt19937_64;

/// Uniform-ish random element of a ring with a finite sampling scheme:
/// finite scalars uniform, matrices and products entrywise, integers and
/// rationals from a small symmetric range.
inline Element random_element(const RingDescriptor& r, Rng& rng) {
    using Kind = RingDescriptor::Kind;
    switch (r.kind()) {
        case Kind::Modular:
        case Kind::PrimeField: {
            std::uniform_int_distribution<std::int64_t> d(
                0, r.modulus().convert_to<std::int64_t>() - 1);
            return Element::scalar(r, d(rng));
        }
        case Kind::Integers: {
            std::uniform_int_distribution<std::int64_t> d(-9, 9);
            return Element::scalar(r, d(rng));
        }
        case Kind::Rationals: {
            std::uniform_int_distribution<std::int64_t> num(-9, 9);
            std::uniform_int_distribution<std::int64_t> den(1, 9);
            return Element::fraction(Rat(num(rng), den(rng)));
        }
        case Kind::Matrix: {
            std::vector<Element> entries;
            for (int i = 0; i < r.dim() * r.dim(); ++i)
                entries.push_back(random_element(r.base(), rng));
            return Element::matrix(r, std::move(entries));
        }
        case Kind::Product:
            return Element::pair(r, random_element(r.left(), rng),
                                 random_element(r.right(), rng));
    }
    throw defect_error("unreachable ring kind");
}

inline RingDescriptor z_mod(std::int64_t n) { return RingDescriptor::modular(n); }
inline RingDescriptor m2_fp(std::int64_t p) {
    return RingDescriptor::matrix(2, RingDescriptor::prime_field(p));
}
inline RingDescriptor m2_z() {
    return RingDescriptor::matrix(2, RingDescriptor::integers());
}
inline RingDescriptor m2_q() {
    return RingDescriptor::matrix(2, RingDescriptor::rationals());
}

/// 2x2 matrix from integer literals, entries embedded in the base ring.
inline Element m2(const RingDescriptor& r, std::int64_t a, std::int64_t b, std::int64_t c,
                  std::int64_t d) {
    return Element::matrix(r, {from_integer(r.base(), a), from_integer(r.base(), b),
                               from_integer(r.base(), c), from_integer(r.base(), d)});
}

/// 2x2 rational matrix from four fractions given as num/den pairs.
inline Element m2q(std::int64_t n00, std::int64_t d00, std::int64_t n01, std::int64_t d01,
                   std::int64_t n10, std::int64_t d10, std::int64_t n11, std::int64_t d11) {
    return Element::matrix(m2_q(), {Element::fraction(Rat(n00, d00)),
                                    Element::fraction(Rat(n01, d01)),
                                    Element::fraction(Rat(n10, d10)),
                                    Element::fraction(Rat(n11, d11))});
}

}  // namespace drz::testing
