#pragma once

#include <vector>

#include "drz/ring.hpp"

namespace drz {

/// A source of idempotents (elements with e^2 = e) in a fixed ring.
///
/// Three modes: exhaustive enumeration over a finite ring, the bounded
/// family of 2x2 integer idempotents, or an explicit caller-supplied list.
/// The 2x2 integer family consists of the matrices [[a, b], [c, 1-a]] with
/// b*c = a - a^2 and |a|, |b|, |c| <= B, together with the zero and
/// identity matrices; within the bound this covers every 2x2 integer
/// idempotent, since a nontrivial idempotent matrix has trace 1 and
/// determinant 0.
class IdempotentFamily {
public:
    static IdempotentFamily exhaustive(const RingDescriptor& r,
                                       std::int64_t cap = kDefaultEnumerationCap);
    static IdempotentFamily parametrized_2x2_integer(std::int64_t bound);
    static IdempotentFamily explicit_list(const RingDescriptor& r,
                                          std::vector<Element> elements);

    const RingDescriptor& ring() const { return ring_; }
    /// All idempotents of the family, in a deterministic order
    /// (lexicographic by serialized value).
    std::vector<Element> elements() const;

private:
    enum class Mode { Exhaustive, Parametrized2x2Integer, ExplicitList };
    IdempotentFamily(Mode mode, RingDescriptor r) : mode_(mode), ring_(std::move(r)) {}

    Mode mode_;
    RingDescriptor ring_;
    std::int64_t cap_ = kDefaultEnumerationCap;
    std::int64_t bound_ = 0;
    std::vector<Element> list_;
};

/// Sorts by serialized value string; ties cannot occur for canonical payloads.
void sort_elements(std::vector<Element>& elements);

}  // namespace drz
