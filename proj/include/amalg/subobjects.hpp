#pragma once

#include "amalg/morphism.hpp"

#include <optional>
#include <vector>

namespace amalg {

// ---- ideals -------------------------------------------------------------

/// Least ideal containing `gens`, by closure to a fixpoint.
Ideal ideal_from_generators(const RingPtr& ring, const std::vector<Elem>& gens);

Ideal nilradical(const RingPtr& ring);

Ideal ideal_sum(const Ideal& i, const Ideal& j);
/// The ideal generated by all pairwise products.
Ideal ideal_product(const Ideal& i, const Ideal& j);
Ideal ideal_intersection(const Ideal& i, const Ideal& j);

bool is_idempotent_ideal(const Ideal& j);

/// R/I is a domain (resp. field, reduced). Needs a unital ambient ring.
bool is_prime(const Ideal& i);
bool is_maximal(const Ideal& i);
bool is_radical(const Ideal& i);

/// An ideal together with the generators it was produced from.
struct GeneratedIdeal {
    Ideal ideal;
    std::vector<Elem> generators;
};

/// Every ideal of the ring, sorted by membership vector (zero ideal first is
/// not guaranteed). Each comes with a small generating set.
std::vector<GeneratedIdeal> all_ideals(const RingPtr& ring, std::size_t limit = 1u << 12);

/// A small generating set of an ideal: greedy, adding the least element that
/// enlarges the generated ideal most.
std::vector<Elem> ideal_generators(const Ideal& ideal);

// ---- quotients ----------------------------------------------------------

struct Quotient {
    RingPtr ring;
    RingHom projection;
    std::vector<Elem> representatives;  // least element of each coset
};

/// Cosets ordered by their least element, labelled "[rep]".
Quotient quotient_ring(const Ideal& ideal);

/// The hom R/I -> S induced by h: R -> S; throws invalid_parameter when h is
/// not constant on cosets.
RingHom factor_through(const Quotient& q, const RingHom& h);

// ---- subrings -----------------------------------------------------------

/// Least subrng containing `seed` (and the identity when include_one).
Subrng subring_generated(const RingPtr& ring, const std::vector<Elem>& seed, bool include_one);

/// A subrng realised as a ring of its own, elements in ambient index order,
/// together with the inclusion. The identity is the ambient one when present,
/// otherwise an internal identity if the subrng has one.
struct EmbeddedRing {
    RingPtr ring;
    RingHom inclusion;

    /// Index of an ambient element inside `ring`; throws if absent.
    Elem index_of(Elem ambient) const;
};

EmbeddedRing as_ring(const Subrng& sub);
EmbeddedRing as_ring(const Ideal& ideal);

/// An ideal of the ambient ring contained in `sub`, viewed as an ideal of sub.ring.
Ideal restrict_ideal(const Ideal& ideal, const EmbeddedRing& sub);

/// f(A) + J inside B.
Subrng image_plus_ideal(const RingHom& f, const Ideal& j);

// ---- multiplicative sets and localization -------------------------------

/// s in A with s + I regular and nonzero in A/I. When A/I is the zero ring the
/// whole of A is returned.
std::vector<bool> regular_elements_mod(const Ideal& ideal);

/// Multiplicative closure of `gens` together with 1.
std::vector<bool> multiplicative_closure(const RingPtr& ring, const std::vector<Elem>& gens);

/// {a : t*a = 0 for some t in S}
std::vector<bool> saturation_kernel(const FiniteRng& ring, const std::vector<bool>& mult_set);

struct Localization {
    RingPtr ring;
    RingHom lambda;
    std::vector<bool> mult_set;
    std::vector<std::pair<Elem, Elem>> representatives;  // least (a, s) per class
    std::vector<Elem> class_of;                          // a * |R| + s -> class, for s in S

    /// The class of a/s; throws invalid_parameter when s is not in S.
    Elem fraction(Elem a, Elem s) const;
};

/// S^{-1}R by fraction-class enumeration; classes ordered by least (a, s)
/// representative and labelled "a/s".
Localization localization(const RingPtr& ring, const std::vector<bool>& mult_set);

// ---- modules ------------------------------------------------------------

/// A finite module over `scalars`, stored as an addition table and an action table.
struct FiniteModule {
    RingPtr scalars;
    std::size_t order = 0;
    std::vector<Elem> add;     // order x order
    Elem zero = 0;
    std::vector<Elem> action;  // scalars->order() x order
    std::vector<std::string> labels;

    Elem plus(Elem x, Elem y) const { return add[x * order + y]; }
    Elem act(Elem a, Elem x) const { return action[a * order + x]; }
};

ValidationReport validate_module(const FiniteModule& m);

/// J as an A-module through f: a . j = f(a) j. Elements follow B's index order.
FiniteModule module_via_hom(const RingHom& f, const Ideal& j);

/// The additive group of a rng as a Z/n-module; n must kill every element.
FiniteModule integer_module(const RingPtr& rng, std::int64_t n);

FiniteModule zero_module(const RingPtr& scalars);

/// The submodule generated by `gens`, as a membership vector.
std::vector<bool> submodule_span(const FiniteModule& m, const std::vector<Elem>& gens);

struct ModuleGenerators {
    std::vector<Elem> generators;
    bool exhaustive = true;  // false when the subset budget ran out and a greedy set was used
    std::size_t subsets_tried = 0;
};

/// Minimum-size generating set by subset search in size order, ties broken
/// lexicographically. Budget of 2^16 subset evaluations, then greedy.
ModuleGenerators module_min_generators(const FiniteModule& m, std::size_t budget = 1u << 16);

} // namespace amalg
