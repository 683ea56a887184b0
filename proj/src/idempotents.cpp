#include "drz/idempotents.hpp"

#include <algorithm>

namespace drz {

void sort_elements(std::vector<Element>& elements) {
    std::sort(elements.begin(), elements.end(),
              [](const Element& x, const Element& y) { return x.str() < y.str(); });
}

IdempotentFamily IdempotentFamily::exhaustive(const RingDescriptor& r, std::int64_t cap) {
    if (!r.is_finite())
        throw unsupported_error("exhaustive idempotent family requires a finite ring");
    IdempotentFamily f(Mode::Exhaustive, r);
    f.cap_ = cap;
    return f;
}

IdempotentFamily IdempotentFamily::parametrized_2x2_integer(std::int64_t bound) {
    if (bound < 1) throw input_error("parametrized family requires bound >= 1");
    IdempotentFamily f(Mode::Parametrized2x2Integer,
                       RingDescriptor::matrix(2, RingDescriptor::integers()));
    f.bound_ = bound;
    return f;
}

IdempotentFamily IdempotentFamily::explicit_list(const RingDescriptor& r,
                                                 std::vector<Element> elements) {
    for (const Element& e : elements) {
        if (e.ring() != r) throw input_error("explicit idempotent from wrong ring");
        if (!is_idempotent(e))
            throw input_error("explicit list contains a non-idempotent: " + e.str());
    }
    IdempotentFamily f(Mode::ExplicitList, r);
    f.list_ = std::move(elements);
    return f;
}

std::vector<Element> IdempotentFamily::elements() const {
    std::vector<Element> out;
    switch (mode_) {
        case Mode::Exhaustive:
            for (const Element& e : enumerate_elements(ring_, cap_))
                if (is_idempotent(e)) out.push_back(e);
            break;
        case Mode::Parametrized2x2Integer: {
            const RingDescriptor z = RingDescriptor::integers();
            auto mat = [&](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
                return Element::matrix(ring_, {Element::scalar(z, a), Element::scalar(z, b),
                                               Element::scalar(z, c), Element::scalar(z, d)});
            };
            for (std::int64_t a = -bound_; a <= bound_; ++a)
                for (std::int64_t b = -bound_; b <= bound_; ++b)
                    for (std::int64_t c = -bound_; c <= bound_; ++c)
                        if (b * c == a - a * a) out.push_back(mat(a, b, c, 1 - a));
            out.push_back(zero(ring_));
            out.push_back(one(ring_));
            break;
        }
        case Mode::ExplicitList: out = list_; break;
    }
    sort_elements(out);
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Element& x, const Element& y) { return eq(x, y); }),
              out.end());
    for (const Element& e : out)
        if (!is_idempotent(e)) throw defect_error("family yielded a non-idempotent");
    return out;
}

}  // namespace drz
