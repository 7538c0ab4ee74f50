#pragma once

#include "amalg/amalgamation.hpp"

#include <vector>

namespace amalg {

/// The rng on the additive group of `m` with zero multiplication.
RingPtr square_zero_rng(const FiniteModule& m);

/// A x| M with (a,x)(a',x') = (aa', ax' + a'x). `iota_r` of the result is
/// the embedding of M; `r_ideal` is M^x|.
DottedSum nagata_idealization(const FiniteModule& m);

/// M^x| is an ideal squaring to zero and contained in the nilradical.
VerificationReport idealization_check(const DottedSum& n);

/// B := A x| M, iota: A -> B, J := M^x|; checks (a, iota(a) + j) -> iota(a) + j
/// is an isomorphism A join^iota J -> B.
VerificationReport nagata_as_amalgam_check(const FiniteModule& m);

struct DPlusM {
    Subrng ring;  // D + J
    Ideal j;      // intersection of the given maximal ideals
    VerificationReport report;
};

/// D + J for J the intersection of `ms`. Throws hypothesis_violated when some
/// M is not maximal, meets D nontrivially, or D lacks the identity of T.
DPlusM d_plus_m(const Subrng& d, const std::vector<Ideal>& ms);

struct Cpi {
    Localization loc;
    Ideal j;       // P A_P or S_I^{-1} I
    Subrng c;      // C(A, P) or C(A, I) inside the localization
    RingPtr ring;  // C as a ring of its own
    VerificationReport report;
};

/// C(A,P) = psi^{-1}(A/P) in A_P with k(P) = A_P / P A_P. Throws not_prime.
Cpi cpi_prime(const Ideal& p);

/// C(A,I) = phi_I^{-1}(A/I) in S_I^{-1} A. For prime I the result is compared
/// with cpi_prime through an explicit isomorphism.
Cpi cpi_ideal(const Ideal& i);

struct TruncAmalgam {
    Subrng ring;  // inside trunc_poly(B, vars, degree)
    RingPtr poly;
    VerificationReport report;
};

/// {h : h(0) in A, higher coefficients in J} inside trunc_poly(B, vars, degree),
/// checked against A join^{sigma'} J'.
TruncAmalgam trunc_poly_amalgam(const Subrng& a, const Ideal& j, int vars, int degree);

/// Finite-ring Noetherianity facts for an amalgam, with a minimal generating
/// set of J as an A-module.
VerificationReport noetherian_report(const Amalgam& am);

struct XjxVerdict {
    bool j_idempotent = false;
    bool xjx_noetherian = false;
    bool xbx_noetherian = true;
    bool finite_extension_rhs = false;  // J = B and A in B finite
    VerificationReport report;
};

/// Evaluates the finite side of the criterion for A + XJ[X] and returns the
/// theorem-backed verdicts. The infinite rings are never built.
XjxVerdict noetherian_verdict_xjx(const Subrng& a, const Ideal& j);

/// Looks for an instance with A reduced, Nilp(B) meet J = 0 and f(A) + J not
/// reduced. Reports the first one found or "not found".
VerificationReport reduced_diamond_search(const std::vector<Amalgam>& instances);

} // namespace amalg
