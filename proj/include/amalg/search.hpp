#pragma once

#include "amalg/morphism.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace amalg {

inline constexpr std::size_t default_search_budget = 1'000'000;

/// A small set that generates the ring together with 1 (greedy: each step adds
/// the element whose closure is largest, least index on ties).
std::vector<Elem> ring_generators(const FiniteRng& ring);

struct SearchOutcome {
    std::optional<RingHom> hom;
    /// True when the whole candidate space was explored (so an empty result is a proof).
    bool exhausted = false;
    std::size_t candidates = 0;
    std::string reason;
};

/// Bijective unital hom R -> S by backtracking over generator images, pruned by
/// per-element invariants. Throws size_guard_exceeded when the budget runs out.
SearchOutcome find_iso(const RingPtr& r, const RingPtr& s, std::size_t budget = default_search_budget);

/// A unital hom iota: A -> D with p(iota(a)) = a, for p: D -> A. Exhaustive
/// within the budget. Throws not_surjective when p is not onto.
SearchOutcome find_section(const RingHom& p, std::size_t budget = default_search_budget);

struct HomEnumeration {
    std::vector<RingHom> homs;
    bool complete = true;
    std::size_t candidates = 0;
};

/// All unital homs A -> B, in lexicographic order of generator images, up to `cap`.
HomEnumeration enumerate_homs(const RingPtr& a, const RingPtr& b, std::size_t cap = 64,
                              std::size_t budget = default_search_budget);

/// Per-element invariant used to prune isomorphism search.
struct ElementSignature {
    std::uint64_t additive_order;
    std::uint64_t nilpotency;
    bool idempotent;
    bool unit;
    std::size_t annihilator;

    auto operator<=>(const ElementSignature&) const = default;
};
std::vector<ElementSignature> element_signatures(const FiniteRng& ring);

} // namespace amalg
