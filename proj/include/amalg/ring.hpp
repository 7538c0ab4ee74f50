#pragma once

#include "amalg/error.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace amalg {

/// Index of an element inside its owning ring, in [0, order).
using Elem = std::uint32_t;

enum class Provenance {
    zmod,
    product,
    quotient,
    subring,
    amalgam,
    table,
    trunc_poly,
    localization,
    dotted_sum,
    idealization,
};

std::string_view to_string(Provenance p);

/// Unvalidated operation tables, as read from a script or assembled by hand.
struct RawRing {
    std::size_t order = 0;
    std::vector<Elem> add;  // row-major order x order
    std::vector<Elem> mul;
    Elem zero = 0;
    std::optional<Elem> one;
    std::vector<std::string> labels;  // empty means "0".."order-1"
};

struct Violation {
    std::string axiom;
    std::vector<std::string> witness;
};

/// Outcome of an axiom scan. At most one witness is kept per axiom.
struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool violates(std::string_view axiom) const;
    std::string summary() const;
};

/// A finite commutative ring, possibly without identity, stored as full
/// Cayley tables. Immutable once built; share it through RingPtr.
class FiniteRng {
public:
    /// Builds from tables that are already known to satisfy the rng axioms.
    /// Only the shape is checked here (square tables, entries in range,
    /// distinct labels, additive inverses exist); use make_ring for untrusted input.
    FiniteRng(std::size_t order, std::vector<Elem> add, std::vector<Elem> mul, Elem zero,
              std::optional<Elem> one, std::vector<std::string> labels, Provenance provenance);

    std::size_t order() const noexcept { return order_; }

    Elem add(Elem x, Elem y) const { return add_[x * order_ + y]; }
    Elem mul(Elem x, Elem y) const { return mul_[x * order_ + y]; }
    Elem neg(Elem x) const { return neg_[x]; }
    Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }

    /// n·x for an integer n (negative n allowed).
    Elem multiple(Elem x, std::int64_t n) const;
    /// x^k for k >= 1.
    Elem power(Elem x, std::uint64_t k) const;

    Elem zero() const noexcept { return zero_; }
    std::optional<Elem> one() const noexcept { return one_; }
    bool has_one() const noexcept { return one_.has_value(); }
    /// The identity; throws missing_identity for an rng.
    Elem unit() const;

    const std::string& label(Elem x) const { return labels_.at(x); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::optional<Elem> find_label(const std::string& text) const;

    Provenance provenance() const noexcept { return provenance_; }

    std::span<const Elem> add_table() const noexcept { return add_; }
    std::span<const Elem> mul_table() const noexcept { return mul_; }

    RawRing raw() const;

    /// Structural equality: identical tables, zero, one and labels.
    bool operator==(const FiniteRng& other) const;
    /// Same tables, zero and one; labels may differ.
    bool same_tables(const FiniteRng& other) const;

private:
    std::size_t order_;
    std::vector<Elem> add_;
    std::vector<Elem> mul_;
    std::vector<Elem> neg_;
    Elem zero_;
    std::optional<Elem> one_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, Elem> by_label_;
    Provenance provenance_;
};

using RingPtr = std::shared_ptr<const FiniteRng>;

/// Full axiom scan by enumeration: O(N^3). Throws malformed_table when the
/// tables are not N x N or hold out-of-range entries.
ValidationReport validate_rng(const RawRing& candidate);
ValidationReport validate_rng(const FiniteRng& ring);

/// Validates and builds; throws invalid_structure with the violation summary.
/// When `one` is absent the identity is detected from the tables.
RingPtr make_ring(RawRing candidate, Provenance provenance = Provenance::table);

RingPtr zmod(std::int64_t n);

/// Componentwise product, index order lexicographic in factor indices.
RingPtr direct_product(const std::vector<RingPtr>& factors);

/// B[X_1..X_vars] modulo all monomials of total degree > degree_bound.
RingPtr trunc_poly(const RingPtr& base, int vars, int degree_bound);

/// Number of monomials of total degree <= degree_bound in `vars` variables.
std::size_t monomial_count(int vars, int degree_bound);

/// Exponent vectors of the monomials kept by trunc_poly, in coefficient order
/// (constant term first).
std::vector<std::vector<int>> truncated_monomials(int vars, int degree_bound);

/// The field with p^k elements, as Z/p[a] modulo the least irreducible monic
/// polynomial of degree k in lexicographic coefficient order.
RingPtr galois_field(std::int64_t p, int k);

/// Additive exponent of the ring.
std::uint64_t characteristic(const FiniteRng& ring);
std::uint64_t additive_order(const FiniteRng& ring, Elem x);

bool is_unit(const FiniteRng& ring, Elem x);
std::optional<Elem> inverse(const FiniteRng& ring, Elem x);
bool is_zero_divisor(const FiniteRng& ring, Elem x);
bool is_idempotent(const FiniteRng& ring, Elem x);
/// Least m >= 1 with x^m = 0, or 0 if x is not nilpotent.
std::uint64_t nilpotency_index(const FiniteRng& ring, Elem x);
bool is_nilpotent(const FiniteRng& ring, Elem x);

bool is_zero_ring(const FiniteRng& ring);
bool is_domain(const FiniteRng& ring);
bool is_field(const FiniteRng& ring);
bool is_reduced(const FiniteRng& ring);
/// Unital ring with exactly one maximal ideal: the non-units are closed under addition.
bool is_local(const FiniteRng& ring);

/// Element labels for a set of indices, in index order.
std::vector<std::string> labels_of(const FiniteRng& ring, const std::vector<Elem>& elems);

/// A short description such as "Z/6 (order 6)".
std::string describe(const FiniteRng& ring);

} // namespace amalg
