#pragma once

#include "amalg/subset.hpp"

#include <optional>
#include <span>
#include <vector>

namespace amalg {

/// A ring homomorphism stored as a total index map. Construction validates it;
/// a RingHom that exists is a homomorphism.
class RingHom {
public:
    /// Throws malformed_map for a wrong-length map or out-of-range entries and
    /// invalid_structure when a preservation law fails. Non-unital maps are
    /// allowed only when `unital` is false.
    RingHom(RingPtr domain, RingPtr codomain, std::vector<Elem> map, bool unital = true);

    Elem operator()(Elem x) const { return map_[x]; }

    const RingPtr& domain() const noexcept { return domain_; }
    const RingPtr& codomain() const noexcept { return codomain_; }
    std::span<const Elem> map() const noexcept { return map_; }
    const std::vector<Elem>& images() const noexcept { return map_; }
    bool unital() const noexcept { return unital_; }

    bool injective() const;
    bool surjective() const;

    /// Same domain, codomain and index map.
    bool operator==(const RingHom& other) const;

private:
    RingPtr domain_;
    RingPtr codomain_;
    std::vector<Elem> map_;
    bool unital_;
};

/// Checks 0, +, * preservation and, when `unital`, 1 -> 1. Throws malformed_map
/// when the map has the wrong length or out-of-range entries.
ValidationReport validate_hom(const FiniteRng& domain, const FiniteRng& codomain, std::span<const Elem> map,
                              bool unital);

Ideal kernel(const RingHom& f);
Subrng image(const RingHom& f);
/// g after f; throws ambient_mismatch unless codomain(f) = domain(g).
RingHom compose(const RingHom& g, const RingHom& f);
RingHom identity_hom(const RingPtr& ring);

/// Preimage of an ideal of the codomain.
Ideal preimage(const RingHom& f, const Ideal& ideal);

/// True iff the (already validated) hom is a bijection.
bool verify_iso(const RingHom& f);

/// Inverse of a bijective hom; throws invalid_parameter otherwise.
RingHom inverse_iso(const RingHom& f);

/// Gamma(f) = {(a, f(a))} as a subring of product(A, B), together with that
/// product ring.
struct Graph {
    RingPtr product;
    Subrng subring;
};
Graph graph(const RingHom& f);

/// The diagonal hom A -> B^n, a -> (f(a), ..., f(a)), into direct_product of n copies of B.
RingHom diagonal_power(const RingHom& f, int n);

} // namespace amalg
