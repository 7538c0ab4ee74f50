#pragma once

#include "amalg/report.hpp"
#include "amalg/search.hpp"
#include "amalg/subobjects.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace amalg {

/// A subring of left x right given by its sorted list of coordinate pairs.
/// Elements are numbered in lexicographic (left, right) order and labelled "(a,b)".
struct PairRing {
    RingPtr ring;
    RingPtr left;
    RingPtr right;
    std::vector<std::pair<Elem, Elem>> coords;

    std::optional<Elem> find(Elem a, Elem b) const;
    /// Throws invalid_parameter when (a, b) is not an element.
    Elem index_of(Elem a, Elem b) const;

    std::vector<Elem> dense_;  // left*right lookup, empty when too large
};

/// Builds the tables of the pair ring by componentwise arithmetic. Throws
/// invalid_structure when the pairs are not closed under the operations.
PairRing build_pair_ring(RingPtr left, RingPtr right, std::vector<std::pair<Elem, Elem>> coords,
                         Provenance provenance);

// ---- dotted sums --------------------------------------------------------

/// A (+) R with (a,x)(a',x') = (aa', a.x' + a'.x + xx'), elements (a, x) in
/// lexicographic order.
struct DottedSum {
    RingPtr ring;
    RingPtr a;
    RingPtr r;
    RingHom iota_a;  // a -> (a, 0)
    RingHom iota_r;  // x -> (0, x), not unital
    RingHom p_a;     // (a, x) -> a
    Ideal r_ideal;   // iota_r(R)
};

/// `module` supplies the A-action on R; its addition must be R's and the action
/// must satisfy a.(xy) = (a.x)y. Throws incompatible_structures otherwise.
DottedSum dotted_sum(const FiniteModule& module, const RingPtr& r, Provenance provenance = Provenance::dotted_sum);

/// p_A o iota_A = id, iota_R injective and Ker(p_A) = iota_R(R).
VerificationReport split_sequence_check(const DottedSum& d);

struct Dorroh {
    DottedSum sum;
    std::uint64_t n;
    VerificationReport report;
};

/// Dh_n(R) = Z/n (+) R with n the characteristic of R. The report carries the
/// iso Z/n -> Dh_n(R)/R and the set identity Dh_n(R) = (Z/n)(1,0) + R.
Dorroh dorroh(const RingPtr& r);

// ---- amalgamation -------------------------------------------------------

struct Amalgam {
    PairRing pairs;
    RingHom f;
    Ideal j;
    RingHom iota;  // a -> (a, f(a))
    RingHom p_a;
    RingHom p_b;
    EmbeddedRing b_diamond;  // f(A) + J
    Quotient diamond_mod_j;  // (f(A) + J) / J
    RingHom gamma;           // (a, f(a) + j) -> f(a) + J

    const RingPtr& ring() const noexcept { return pairs.ring; }
    const RingPtr& a() const noexcept { return f.domain(); }
    const RingPtr& b() const noexcept { return f.codomain(); }
};

/// A join^f J = {(a, f(a) + j)}. f must be unital and J an ideal of its codomain.
Amalgam amalgam(const RingHom& f, const Ideal& j);

/// A join^id I.
Amalgam duplication(const RingPtr& a, const Ideal& i);

/// J x ... x J inside B^n (the ring of `power`).
Ideal ideal_power_product(const Ideal& j, const RingPtr& power, int n);

/// The amalgam of f^(n): A -> B^n along J^n.
Amalgam n_amalgam(const RingHom& f, const Ideal& j, int n);

/// A (+) J -> A join^f J, (a, j) -> (a, f(a) + j), validated as an injective
/// hom onto the amalgam.
VerificationReport f_join_iso_check(const Amalgam& am);

/// The graph {(a, f(a))} is a unital subring of the amalgam mapped
/// isomorphically onto A by p_A.
VerificationReport graph_inclusion_check(const Amalgam& am);

/// The explicit map A join^{n,f} J -> (A join^{n-1,f} J) join (0 x ... x 0 x J),
/// (a, (b1..bn)) -> (a'', a'' + j''), validated as a bijective hom.
VerificationReport iter_iso_check(const RingHom& f, const Ideal& j, int n);

// ---- pullbacks ----------------------------------------------------------

struct PullbackData {
    RingHom alpha;
    RingHom beta;
    PairRing pairs;
    RingHom p_a;
    RingHom p_b;

    const RingPtr& ring() const noexcept { return pairs.ring; }
};

/// {(a, b) : alpha(a) = beta(b)}; throws ambient_mismatch without a common codomain.
PullbackData pullback(const RingHom& alpha, const RingHom& beta);

VerificationReport pull_identity_check(const Amalgam& am);
VerificationReport alt_pullback_checks(const Amalgam& am);
VerificationReport factor_check(const RingHom& alpha, const RingHom& beta, const RingHom& f);
VerificationReport fibret_check(const RingHom& alpha, const RingHom& beta);
/// The amalgam re-entered as the pullback of f-breve and pi; also checks J' = J.
VerificationReport fibret_check(const Amalgam& am);
VerificationReport prid_check(const PullbackData& d);
VerificationReport kernel_identity_check(const PullbackData& d);

// ---- structure of the amalgam -------------------------------------------

/// I join^f J as an ideal of the amalgam.
Ideal amalgam_ideal(const Amalgam& am, const Ideal& i);

/// The four canonical isomorphisms. Without `i` the ideal f^{-1}(J) is used.
VerificationReport canonical_isos(const Amalgam& am, const std::optional<Ideal>& i = std::nullopt);

struct BDiamond {
    Subrng subring;
    VerificationReport report;
};
/// f(A) + J, with the check that A join^{f_diamond} J = A join^f J.
BDiamond b_diamond(const RingHom& f, const Ideal& j);

VerificationReport domain_criterion_check(const Amalgam& am);
VerificationReport reduced_criterion_check(const Amalgam& am);
VerificationReport same_amalgam(const RingHom& f, const RingHom& g, const Ideal& j);

/// Human-readable instance description, e.g. "Z4 join^f (2) in Z2".
std::string describe(const Amalgam& am);
std::string describe(const RingHom& f);
std::string describe(const Subset& s);

} // namespace amalg
