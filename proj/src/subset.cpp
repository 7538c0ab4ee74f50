#include "amalg/subset.hpp"

#include <algorithm>

namespace amalg {

bool same_ring(const RingPtr& a, const RingPtr& b)
{
    return a == b || (a && b && *a == *b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b, std::string_view what)
{
    if (!same_ring(a, b))
        throw AlgebraError(ErrorKind::ambient_mismatch, std::string(what) + ": rings differ");
}

std::vector<bool> members_of(std::size_t order, const std::vector<Elem>& elems)
{
    std::vector<bool> m(order, false);
    for (Elem e : elems)
        m.at(e) = true;
    return m;
}

Subset::Subset(RingPtr ring, std::vector<bool> members) : ring_(std::move(ring)), members_(std::move(members))
{
    if (members_.size() != ring_->order())
        throw AlgebraError(ErrorKind::malformed_map, "membership vector length differs from ring order");
    size_ = static_cast<std::size_t>(std::count(members_.begin(), members_.end(), true));
}

std::vector<Elem> Subset::elements() const
{
    std::vector<Elem> out;
    out.reserve(size_);
    for (Elem x = 0; x < members_.size(); ++x)
        if (members_[x])
            out.push_back(x);
    return out;
}

std::vector<std::string> Subset::labels() const
{
    return labels_of(*ring_, elements());
}

Ideal::Ideal(RingPtr ring, std::vector<bool> members) : Subset(std::move(ring), std::move(members))
{
    const FiniteRng& r = *this->ring();
    if (!contains(r.zero()))
        throw AlgebraError(ErrorKind::invalid_structure, "ideal must contain zero");
    const auto elems = elements();
    for (Elem x : elems) {
        for (Elem y : elems)
            if (!contains(r.add(x, y)))
                throw AlgebraError(ErrorKind::invalid_structure,
                                   "not closed under addition: " + r.label(x) + " + " + r.label(y));
        for (Elem s = 0; s < r.order(); ++s)
            if (!contains(r.mul(s, x)))
                throw AlgebraError(ErrorKind::invalid_structure,
                                   "does not absorb: " + r.label(s) + " * " + r.label(x));
    }
}

Ideal Ideal::zero(RingPtr ring)
{
    std::vector<bool> m(ring->order(), false);
    m[ring->zero()] = true;
    return Ideal(std::move(ring), std::move(m));
}

Ideal Ideal::whole(RingPtr ring)
{
    std::vector<bool> m(ring->order(), true);
    return Ideal(std::move(ring), std::move(m));
}

Subrng::Subrng(RingPtr ring, std::vector<bool> members) : Subset(std::move(ring), std::move(members))
{
    const FiniteRng& r = *this->ring();
    if (!contains(r.zero()))
        throw AlgebraError(ErrorKind::invalid_structure, "subring must contain zero");
    const auto elems = elements();
    for (Elem x : elems) {
        if (!contains(r.neg(x)))
            throw AlgebraError(ErrorKind::invalid_structure, "not closed under negation: " + r.label(x));
        for (Elem y : elems)
            if (!contains(r.add(x, y)) || !contains(r.mul(x, y)))
                throw AlgebraError(ErrorKind::invalid_structure,
                                   "not closed under the operations: " + r.label(x) + ", " + r.label(y));
    }
    has_one_ = r.has_one() && contains(*r.one());
}

Subrng Subrng::whole(RingPtr ring)
{
    std::vector<bool> m(ring->order(), true);
    return Subrng(std::move(ring), std::move(m));
}

} // namespace amalg
