#pragma once

#include "amalg/ring.hpp"

#include <vector>

namespace amalg {

/// True when both pointers denote the same ring, structurally.
bool same_ring(const RingPtr& a, const RingPtr& b);

/// Throws ambient_mismatch unless same_ring(a, b).
void require_same_ring(const RingPtr& a, const RingPtr& b, std::string_view what);

/// Membership vector over an ambient ring; the shared part of Ideal and Subrng.
class Subset {
public:
    Subset(RingPtr ring, std::vector<bool> members);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<bool>& members() const noexcept { return members_; }
    bool contains(Elem x) const { return members_.at(x); }
    std::size_t size() const noexcept { return size_; }
    std::vector<Elem> elements() const;
    std::vector<std::string> labels() const;

    bool is_zero() const { return size_ == 1; }
    bool is_whole() const { return size_ == ring_->order(); }

    bool operator==(const Subset& other) const
    {
        return same_ring(ring_, other.ring_) && members_ == other.members_;
    }

private:
    RingPtr ring_;
    std::vector<bool> members_;
    std::size_t size_;
};

/// An ideal of a finite rng. The constructor checks the ideal axioms.
class Ideal : public Subset {
public:
    Ideal(RingPtr ring, std::vector<bool> members);

    static Ideal zero(RingPtr ring);
    static Ideal whole(RingPtr ring);
};

/// A subrng of a finite rng, closed under +, - and *. has_one() reports whether
/// it contains the ambient identity.
class Subrng : public Subset {
public:
    Subrng(RingPtr ring, std::vector<bool> members);

    bool has_one() const noexcept { return has_one_; }

    static Subrng whole(RingPtr ring);

private:
    bool has_one_;
};

/// Set-level helpers on membership vectors.
std::vector<bool> members_of(std::size_t order, const std::vector<Elem>& elems);

} // namespace amalg
