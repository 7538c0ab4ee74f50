#include "amalg/amalgamation.hpp"

#include <algorithm>

namespace amalg {

namespace {

constexpr Elem absent = static_cast<Elem>(-1);
constexpr std::size_t dense_limit = std::size_t{1} << 22;

std::string pair_label(const FiniteRng& a, const FiniteRng& b, Elem x, Elem y)
{
    return "(" + a.label(x) + "," + b.label(y) + ")";
}

std::string size_note(const char* what, std::size_t n)
{
    return std::string(what) + " has order " + std::to_string(n);
}

std::vector<Elem> digits(std::size_t idx, std::size_t base, int n)
{
    std::vector<Elem> d(static_cast<std::size_t>(n));
    for (int t = n - 1; t >= 0; --t) {
        d[static_cast<std::size_t>(t)] = static_cast<Elem>(idx % base);
        idx /= base;
    }
    return d;
}

std::size_t encode(const std::vector<Elem>& d, std::size_t base)
{
    std::size_t idx = 0;
    for (Elem x : d)
        idx = idx * base + x;
    return idx;
}

RingHom projection_hom(const PairRing& p, bool left)
{
    std::vector<Elem> map(p.coords.size());
    for (std::size_t i = 0; i < map.size(); ++i)
        map[i] = left ? p.coords[i].first : p.coords[i].second;
    const RingPtr& target = left ? p.left : p.right;
    return RingHom(p.ring, target, std::move(map), p.ring->has_one() && target->has_one());
}

std::vector<bool> pair_members(const PairRing& p, const std::vector<Elem>& left, const std::vector<Elem>& right)
{
    std::vector<bool> m(p.ring->order(), false);
    for (Elem a : left)
        for (Elem b : right)
            if (auto x = p.find(a, b))
                m[*x] = true;
    return m;
}

// Runs `body`, turning an AlgebraError into a failed expectation on `rep`.
template <class F>
bool guarded(VerificationReport& rep, const std::string& what, F&& body)
{
    try {
        body();
        return true;
    } catch (const AlgebraError& e) {
        if (e.kind() == ErrorKind::size_guard_exceeded)
            throw;
        rep.expect(false, what + ": " + e.what());
        return false;
    }
}

struct PullbackFacts {
    std::optional<RingHom> section;
    std::optional<RingHom> reconstructed_f;
};

PullbackFacts fibret_core(VerificationReport& rep, const PullbackData& pb)
{
    PullbackFacts facts;
    const auto& alpha = pb.alpha;
    const auto& beta = pb.beta;
    const Ideal k = kernel(beta);
    rep.witness_elements("Ker(beta)", *beta.domain(), k.elements());

    const SearchOutcome out = find_section(pb.p_a);
    if (out.hom) {
        facts.section = out.hom;
        rep.note("section of p_A found after " + std::to_string(out.candidates) + " candidate extensions");
        rep.witness_map("iota", *out.hom);
        const RingHom f = compose(pb.p_b, *out.hom);
        rep.witness_map("f = p_B o iota", f);
        facts.reconstructed_f = f;
        const Amalgam am = amalgam(f, k);
        rep.expect(am.pairs.coords == pb.pairs.coords,
                   "A join^f Ker(beta) differs from the pullback for the reconstructed f");
        rep.expect(compose(beta, f) == alpha, "alpha != beta o f for the reconstructed f");
        return facts;
    }

    rep.note("no section of p_A: search exhausted after " + std::to_string(out.candidates) +
             " candidate extensions");
    const HomEnumeration homs = enumerate_homs(alpha.domain(), beta.domain(), 1u << 12);
    std::size_t presenting = 0;
    for (const auto& f : homs.homs) {
        const Amalgam am = amalgam(f, k);
        if (am.pairs.coords == pb.pairs.coords) {
            ++presenting;
            rep.witness_map("presenting f", f);
        }
    }
    rep.note("independent check: " + std::to_string(homs.homs.size()) + " unital homs A -> B" +
             (homs.complete ? "" : " (enumeration capped)") + ", " + std::to_string(presenting) +
             " present D as A join^f Ker(beta)");
    rep.expect(presenting == 0, "D is an amalgamation of A although p_A has no section");
    if (!homs.complete)
        rep.note("hom enumeration was capped; the negative certificate rests on the section search");
    return facts;
}

} // namespace

// ---- PairRing -----------------------------------------------------------

std::optional<Elem> PairRing::find(Elem a, Elem b) const
{
    if (a >= left->order() || b >= right->order())
        return std::nullopt;
    if (!dense_.empty()) {
        const Elem v = dense_[static_cast<std::size_t>(a) * right->order() + b];
        if (v == absent)
            return std::nullopt;
        return v;
    }
    const std::pair<Elem, Elem> key{a, b};
    auto it = std::lower_bound(coords.begin(), coords.end(), key);
    if (it == coords.end() || *it != key)
        return std::nullopt;
    return static_cast<Elem>(it - coords.begin());
}

Elem PairRing::index_of(Elem a, Elem b) const
{
    if (auto x = find(a, b))
        return *x;
    throw AlgebraError(ErrorKind::invalid_parameter, "pair " + pair_label(*left, *right, a, b) + " is not an element");
}

PairRing build_pair_ring(RingPtr left, RingPtr right, std::vector<std::pair<Elem, Elem>> coords,
                         Provenance provenance)
{
    std::sort(coords.begin(), coords.end());
    coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
    check_size(coords.size(), "pair ring");
    PairRing p{nullptr, std::move(left), std::move(right), std::move(coords), {}};
    const FiniteRng& l = *p.left;
    const FiniteRng& r = *p.right;
    const std::size_t n = p.coords.size();
    if (l.order() * r.order() <= dense_limit) {
        p.dense_.assign(l.order() * r.order(), absent);
        for (std::size_t i = 0; i < n; ++i)
            p.dense_[static_cast<std::size_t>(p.coords[i].first) * r.order() + p.coords[i].second] =
                static_cast<Elem>(i);
    }
    auto at = [&](Elem a, Elem b) {
        auto x = p.find(a, b);
        if (!x)
            throw AlgebraError(ErrorKind::invalid_structure,
                               "pairs not closed: " + pair_label(l, r, a, b) + " is missing");
        return *x;
    };
    std::vector<Elem> add(n * n), mul(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto [a1, b1] = p.coords[i];
        for (std::size_t k = i; k < n; ++k) {
            const auto [a2, b2] = p.coords[k];
            const Elem s = at(l.add(a1, a2), r.add(b1, b2));
            const Elem m = at(l.mul(a1, a2), r.mul(b1, b2));
            add[i * n + k] = add[k * n + i] = s;
            mul[i * n + k] = mul[k * n + i] = m;
        }
    }
    const Elem zero = at(l.zero(), r.zero());
    std::optional<Elem> one;
    if (l.has_one() && r.has_one())
        one = p.find(*l.one(), *r.one());
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i)
        labels[i] = pair_label(l, r, p.coords[i].first, p.coords[i].second);
    p.ring = std::make_shared<FiniteRng>(n, std::move(add), std::move(mul), zero, one, std::move(labels), provenance);
    return p;
}

// ---- dotted sums --------------------------------------------------------

DottedSum dotted_sum(const FiniteModule& module, const RingPtr& r, Provenance provenance)
{
    const RingPtr& a = module.scalars;
    const FiniteRng& A = *a;
    const FiniteRng& R = *r;
    A.unit();
    if (module.order != R.order() || module.zero != R.zero() ||
        !std::equal(module.add.begin(), module.add.end(), R.add_table().begin(), R.add_table().end()))
        throw AlgebraError(ErrorKind::incompatible_structures, "module addition differs from the rng addition");
    const auto mod_report = validate_module(module);
    if (!mod_report.ok())
        throw AlgebraError(ErrorKind::incompatible_structures, "not a module: " + mod_report.summary());
    for (Elem s = 0; s < A.order(); ++s)
        for (Elem x = 0; x < R.order(); ++x)
            for (Elem y = 0; y < R.order(); ++y)
                if (module.act(s, R.mul(x, y)) != R.mul(module.act(s, x), y))
                    throw AlgebraError(ErrorKind::incompatible_structures,
                                       "a.(xy) != (a.x)y for a=" + A.label(s) + ", x=" + R.label(x) +
                                           ", y=" + R.label(y));

    const std::size_t na = A.order();
    const std::size_t nr = R.order();
    const std::size_t n = na * nr;
    check_size(n, "dotted sum");
    std::vector<Elem> add(n * n), mul(n * n);
    for (std::size_t u = 0; u < n; ++u) {
        const auto a1 = static_cast<Elem>(u / nr);
        const auto x1 = static_cast<Elem>(u % nr);
        for (std::size_t v = 0; v < n; ++v) {
            const auto a2 = static_cast<Elem>(v / nr);
            const auto x2 = static_cast<Elem>(v % nr);
            add[u * n + v] = static_cast<Elem>(A.add(a1, a2) * nr + R.add(x1, x2));
            const Elem x = R.add(R.add(module.act(a1, x2), module.act(a2, x1)), R.mul(x1, x2));
            mul[u * n + v] = static_cast<Elem>(A.mul(a1, a2) * nr + x);
        }
    }
    std::vector<std::string> labels(n);
    for (std::size_t u = 0; u < n; ++u)
        labels[u] = pair_label(A, R, static_cast<Elem>(u / nr), static_cast<Elem>(u % nr));
    auto ring = std::make_shared<FiniteRng>(n, std::move(add), std::move(mul),
                                            static_cast<Elem>(A.zero() * nr + R.zero()),
                                            static_cast<Elem>(A.unit() * nr + R.zero()), std::move(labels), provenance);

    std::vector<Elem> ia(na), ir(nr), pa(n);
    for (Elem s = 0; s < na; ++s)
        ia[s] = static_cast<Elem>(s * nr + R.zero());
    for (Elem x = 0; x < nr; ++x)
        ir[x] = static_cast<Elem>(A.zero() * nr + x);
    for (std::size_t u = 0; u < n; ++u)
        pa[u] = static_cast<Elem>(u / nr);
    RingHom iota_a(a, ring, ia, true);
    RingHom iota_r(r, ring, ir, false);
    RingHom p_a(ring, a, std::move(pa), true);
    Ideal r_ideal(ring, members_of(n, ir));
    return DottedSum{ring, a, r, std::move(iota_a), std::move(iota_r), std::move(p_a), std::move(r_ideal)};
}

VerificationReport split_sequence_check(const DottedSum& d)
{
    VerificationReport rep;
    rep.check = "split_sequence";
    rep.instance = size_note("A (+) R", d.ring->order());
    rep.expect(compose(d.p_a, d.iota_a) == identity_hom(d.a), "p_A o iota_A != id_A");
    rep.expect(d.iota_r.injective(), "iota_R is not injective");
    rep.expect(kernel(d.p_a) == d.r_ideal, "Ker(p_A) != iota_R(R)");
    rep.expect(d.ring->has_one() && *d.ring->one() == d.iota_a(d.a->unit()), "identity is not (1,0)");
    rep.note("0 -> R -> A (+) R -> A -> 0 is exact and split by iota_A");
    return rep;
}

Dorroh dorroh(const RingPtr& r)
{
    const std::uint64_t n = characteristic(*r);
    const FiniteModule m = integer_module(r, static_cast<std::int64_t>(n));
    DottedSum sum = dotted_sum(m, r);
    VerificationReport rep;
    rep.check = "dorroh";
    rep.instance = "Dh_" + std::to_string(n) + "(R), |R| = " + std::to_string(r->order());
    rep.absorb(split_sequence_check(sum), "split");

    const Quotient q = quotient_ring(sum.r_ideal);
    std::vector<Elem> map(sum.a->order());
    for (Elem k = 0; k < map.size(); ++k)
        map[k] = q.projection(sum.iota_a(k));
    guarded(rep, "Z/n -> Dh_n(R)/R", [&] {
        RingHom w(sum.a, q.ring, std::move(map), true);
        rep.witness_iso("Z/n -> Dh_n(R)/R", w);
    });

    const FiniteRng& D = *sum.ring;
    const Elem one = D.unit();
    const std::size_t nr = r->order();
    bool covers = true;
    for (Elem k = 0; k < sum.a->order() && covers; ++k)
        for (Elem x = 0; x < nr && covers; ++x)
            covers = D.add(D.multiple(one, k), sum.iota_r(x)) == static_cast<Elem>(k * nr + x);
    rep.expect(covers, "Dh_n(R) != (Z/n)(1,0) + R");
    rep.note("Dh_n(R) = (Z/n)(1,0) + R, order " + std::to_string(D.order()));
    return Dorroh{std::move(sum), n, std::move(rep)};
}

// ---- amalgamation -------------------------------------------------------

Amalgam amalgam(const RingHom& f, const Ideal& j)
{
    if (!f.unital())
        throw AlgebraError(ErrorKind::invalid_parameter, "amalgamation needs a unital hom");
    require_same_ring(j.ring(), f.codomain(), "amalgam");
    const FiniteRng& A = *f.domain();
    const FiniteRng& B = *f.codomain();
    check_size(A.order() * j.size(), "amalgam");
    std::vector<std::pair<Elem, Elem>> coords;
    coords.reserve(A.order() * j.size());
    for (Elem a = 0; a < A.order(); ++a)
        for (Elem b = 0; b < B.order(); ++b)
            if (j.contains(B.sub(b, f(a))))
                coords.emplace_back(a, b);
    PairRing pairs = build_pair_ring(f.domain(), f.codomain(), std::move(coords), Provenance::amalgam);

    std::vector<Elem> iota(A.order());
    for (Elem a = 0; a < A.order(); ++a)
        iota[a] = pairs.index_of(a, f(a));
    RingHom iota_hom(f.domain(), pairs.ring, std::move(iota), true);
    RingHom p_a = projection_hom(pairs, true);
    RingHom p_b = projection_hom(pairs, false);

    EmbeddedRing bd = as_ring(image_plus_ideal(f, j));
    Quotient q = quotient_ring(restrict_ideal(j, bd));
    std::vector<Elem> g(pairs.coords.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        g[i] = q.projection(bd.index_of(pairs.coords[i].second));
    RingHom gamma(pairs.ring, q.ring, std::move(g), true);
    return Amalgam{std::move(pairs),    f, j, std::move(iota_hom), std::move(p_a), std::move(p_b), std::move(bd),
                   std::move(q), std::move(gamma)};
}

Amalgam duplication(const RingPtr& a, const Ideal& i)
{
    return amalgam(identity_hom(a), i);
}

Ideal ideal_power_product(const Ideal& j, const RingPtr& power, int n)
{
    const std::size_t nb = j.ring()->order();
    std::vector<bool> m(power->order(), false);
    for (std::size_t idx = 0; idx < m.size(); ++idx) {
        const auto d = digits(idx, nb, n);
        m[idx] = std::all_of(d.begin(), d.end(), [&](Elem x) { return j.contains(x); });
    }
    return Ideal(power, std::move(m));
}

Amalgam n_amalgam(const RingHom& f, const Ideal& j, int n)
{
    if (n < 1)
        throw AlgebraError(ErrorKind::invalid_parameter, "n-amalgamation needs n >= 1");
    std::size_t order = f.domain()->order();
    for (int t = 0; t < n; ++t) {
        order *= j.size();
        check_size(order, "n-amalgamation");
    }
    const RingHom fn = diagonal_power(f, n);
    return amalgam(fn, ideal_power_product(j, fn.codomain(), n));
}

VerificationReport f_join_iso_check(const Amalgam& am)
{
    VerificationReport rep;
    rep.check = "f_join_iso";
    rep.instance = describe(am);
    const FiniteModule m = module_via_hom(am.f, am.j);
    const EmbeddedRing jr = as_ring(am.j);
    guarded(rep, "A (+) J", [&] {
        const DottedSum d = dotted_sum(m, jr.ring);
        const std::size_t nj = jr.ring->order();
        std::vector<Elem> map(d.ring->order());
        for (std::size_t u = 0; u < map.size(); ++u) {
            const auto a = static_cast<Elem>(u / nj);
            const Elem b = jr.inclusion(static_cast<Elem>(u % nj));
            map[u] = am.pairs.index_of(a, am.b()->add(am.f(a), b));
        }
        RingHom fj(d.ring, am.ring(), std::move(map), true);
        rep.expect(fj.injective(), "f^join is not injective");
        rep.expect(fj.surjective(), "f^join does not reach the whole amalgam");
        rep.witness_iso("f^join: A (+) J -> A join^f J", fj);
    });
    rep.expect(am.ring()->order() == am.a()->order() * am.j.size(), "|A join^f J| != |A|*|J|");
    rep.note("|A join^f J| = " + std::to_string(am.ring()->order()) + " = |A|*|J| = " +
             std::to_string(am.a()->order()) + "*" + std::to_string(am.j.size()));
    return rep;
}

VerificationReport graph_inclusion_check(const Amalgam& am)
{
    VerificationReport rep;
    rep.check = "graph_inclusion";
    rep.instance = describe(am);
    const Subrng g = image(am.iota);
    rep.witness_elements("graph of f", *am.ring(), g.elements());
    rep.expect(g.has_one(), "the graph does not contain the identity");
    rep.expect(g.size() == am.a()->order(), "the graph has the wrong size");
    for (Elem a = 0; a < am.a()->order(); ++a)
        if (!rep.expect(am.ring()->label(am.iota(a)) == pair_label(*am.a(), *am.b(), a, am.f(a)),
                        "iota(" + am.a()->label(a) + ") is not (a, f(a))"))
            break;
    rep.expect(compose(am.p_a, am.iota) == identity_hom(am.a()), "p_A o iota != id");
    const EmbeddedRing gr = as_ring(g);
    std::vector<Elem> back(gr.ring->order());
    for (Elem x = 0; x < gr.ring->order(); ++x)
        back[x] = am.p_a(gr.inclusion(x));
    guarded(rep, "graph -> A", [&] { rep.witness_iso("p_A: graph of f -> A", RingHom(gr.ring, am.a(), back, true)); });
    return rep;
}

VerificationReport iter_iso_check(const RingHom& f, const Ideal& j, int n)
{
    VerificationReport rep;
    rep.check = "iter_iso";
    rep.instance = describe(f) + ", |J| = " + std::to_string(j.size()) + ", n = " + std::to_string(n);
    if (n < 2) {
        rep.hypothesis_not_met("n must be at least 2");
        return rep;
    }
    const Amalgam big = n_amalgam(f, j, n);
    const Amalgam inner = n_amalgam(f, j, n - 1);
    std::size_t expected = f.domain()->order();
    for (int t = 0; t < n; ++t)
        expected *= j.size();
    rep.expect(big.ring()->order() == expected, "|A join^{n,f} J| != |A|*|J|^n");
    rep.note("|A join^{n,f} J| = " + std::to_string(big.ring()->order()));

    const FiniteRng& B = *f.codomain();
    const std::size_t nb = B.order();
    const Elem za = f.domain()->zero();
    std::vector<Elem> last(static_cast<std::size_t>(n - 1), B.zero());
    std::vector<Elem> jm;
    for (Elem x : j.elements()) {
        last.back() = x;
        jm.push_back(inner.pairs.index_of(za, static_cast<Elem>(encode(last, nb))));
    }
    const Ideal jideal(inner.ring(), members_of(inner.ring()->order(), jm));
    const Amalgam target = duplication(inner.ring(), jideal);
    rep.note("target order " + std::to_string(target.ring()->order()));

    std::vector<Elem> map(big.ring()->order());
    for (std::size_t x = 0; x < map.size(); ++x) {
        const auto [a, bidx] = big.pairs.coords[x];
        auto d = digits(bidx, nb, n);
        std::vector<Elem> first(d.begin(), d.end() - 1);
        std::vector<Elem> second(d.begin(), d.end() - 1);
        second.back() = d.back();
        const Elem a2 = inner.pairs.index_of(a, static_cast<Elem>(encode(first, nb)));
        const Elem s2 = inner.pairs.index_of(a, static_cast<Elem>(encode(second, nb)));
        map[x] = target.pairs.index_of(a2, s2);
    }
    guarded(rep, "iteration map", [&] {
        RingHom w(big.ring(), target.ring(), std::move(map), true);
        rep.witness_iso("(a,(b1..bn)) -> (a'', a''+j'')", w);
    });
    return rep;
}

// ---- pullbacks ----------------------------------------------------------

PullbackData pullback(const RingHom& alpha, const RingHom& beta)
{
    require_same_ring(alpha.codomain(), beta.codomain(), "pullback");
    const FiniteRng& A = *alpha.domain();
    const FiniteRng& B = *beta.domain();
    std::vector<std::vector<Elem>> fiber(alpha.codomain()->order());
    for (Elem b = 0; b < B.order(); ++b)
        fiber[beta(b)].push_back(b);
    std::vector<std::pair<Elem, Elem>> coords;
    for (Elem a = 0; a < A.order(); ++a)
        for (Elem b : fiber[alpha(a)])
            coords.emplace_back(a, b);
    PairRing pairs = build_pair_ring(alpha.domain(), beta.domain(), std::move(coords), Provenance::subring);
    RingHom p_a = projection_hom(pairs, true);
    RingHom p_b = projection_hom(pairs, false);
    return PullbackData{alpha, beta, std::move(pairs), std::move(p_a), std::move(p_b)};
}

VerificationReport pull_identity_check(const Amalgam& am)
{
    VerificationReport rep;
    rep.check = "pull_identity";
    rep.instance = describe(am);
    const Quotient q = quotient_ring(am.j);
    const RingHom fb = compose(q.projection, am.f);
    const PullbackData pb = pullback(fb, q.projection);
    rep.note("|f-breve x_{B/J} pi| = " + std::to_string(pb.ring()->order()) +
             ", |A join^f J| = " + std::to_string(am.ring()->order()));
    rep.expect(pb.pairs.coords == am.pairs.coords, "element sets of A join^f J and f-breve x_{B/J} pi differ");
    return rep;
}

VerificationReport alt_pullback_checks(const Amalgam& am)
{
    VerificationReport rep;
    rep.check = "alt_pullback";
    rep.instance = describe(am);
    const RingPtr& a = am.a();
    const RingPtr& b = am.b();
    const std::size_t nb = b->order();
    const Quotient qj = quotient_ring(am.j);
    const std::size_t nq = qj.ring->order();
    const RingPtr ab = direct_product({a, b});
    std::vector<Elem> vmap(ab->order());

    guarded(rep, "u x_C v", [&] {
        const RingPtr c = direct_product({a, qj.ring});
        std::vector<Elem> umap(a->order());
        for (Elem x = 0; x < a->order(); ++x)
            umap[x] = static_cast<Elem>(x * nq + qj.projection(am.f(x)));
        for (std::size_t y = 0; y < ab->order(); ++y)
            vmap[y] = static_cast<Elem>((y / nb) * nq + qj.projection(static_cast<Elem>(y % nb)));
        const PullbackData pb = pullback(RingHom(a, c, umap, true), RingHom(ab, c, vmap, true));
        std::vector<Elem> w(pb.ring()->order());
        for (std::size_t i = 0; i < w.size(); ++i) {
            const Elem y = pb.pairs.coords[i].second;
            w[i] = am.pairs.index_of(static_cast<Elem>(y / nb), static_cast<Elem>(y % nb));
        }
        rep.witness_iso("u x_C v -> A join^f J", RingHom(pb.ring(), am.ring(), std::move(w), true));
    });

    guarded(rep, "u-breve x v-breve", [&] {
        const Quotient qi = quotient_ring(preimage(am.f, am.j));
        const RingPtr c = direct_product({qi.ring, qj.ring});
        std::vector<Elem> umap(qi.ring->order());
        for (Elem x = 0; x < umap.size(); ++x)
            umap[x] = static_cast<Elem>(x * nq + qj.projection(am.f(qi.representatives[x])));
        for (std::size_t y = 0; y < ab->order(); ++y)
            vmap[y] = static_cast<Elem>(qi.projection(static_cast<Elem>(y / nb)) * nq +
                                        qj.projection(static_cast<Elem>(y % nb)));
        const PullbackData pb = pullback(RingHom(qi.ring, c, umap, true), RingHom(ab, c, vmap, true));
        std::vector<Elem> w(pb.ring()->order());
        for (std::size_t i = 0; i < w.size(); ++i) {
            const Elem y = pb.pairs.coords[i].second;
            w[i] = am.pairs.index_of(static_cast<Elem>(y / nb), static_cast<Elem>(y % nb));
        }
        rep.witness_iso("u-breve x v-breve -> A join^f J", RingHom(pb.ring(), am.ring(), std::move(w), true));
    });
    return rep;
}

VerificationReport factor_check(const RingHom& alpha, const RingHom& beta, const RingHom& f)
{
    VerificationReport rep;
    rep.check = "factor";
    rep.instance = describe(alpha) + ", " + describe(beta) + ", " + describe(f);
    require_same_ring(f.domain(), alpha.domain(), "factor_check");
    require_same_ring(f.codomain(), beta.domain(), "factor_check");
    const PullbackData pb = pullback(alpha, beta);
    const Ideal k = kernel(beta);

    std::optional<Elem> differs;
    for (Elem a = 0; a < alpha.domain()->order() && !differs; ++a)
        if (alpha(a) != beta(f(a)))
            differs = a;
    const bool factors = !differs;

    // {b : (0,b) in D} = Ker(beta) is the only candidate for J.
    std::vector<Elem> zero_fiber;
    for (const auto& [a, b] : pb.pairs.coords)
        if (a == alpha.domain()->zero())
            zero_fiber.push_back(b);
    rep.expect(zero_fiber == k.elements(), "{b : (0,b) in D} != Ker(beta)");

    const Amalgam am = amalgam(f, k);
    const bool presented = am.pairs.coords == pb.pairs.coords;
    rep.note(std::string("alpha = beta o f: ") + (factors ? "yes" : "no"));
    rep.note(std::string("pullback = A join^f Ker(beta): ") + (presented ? "yes" : "no"));
    if (differs)
        rep.note("alpha(" + alpha.domain()->label(*differs) + ") = " + alpha.codomain()->label(alpha(*differs)) +
                 " but beta(f(" + alpha.domain()->label(*differs) + ")) = " +
                 alpha.codomain()->label(beta(f(*differs))));
    rep.witness_elements("J = Ker(beta)", *beta.domain(), k.elements());
    rep.expect(factors == presented, "alpha = beta o f and the amalgam presentation disagree");
    return rep;
}

VerificationReport fibret_check(const RingHom& alpha, const RingHom& beta)
{
    VerificationReport rep;
    rep.check = "fibret";
    rep.instance = describe(alpha) + ", " + describe(beta);
    const PullbackData pb = pullback(alpha, beta);
    rep.note("|D| = " + std::to_string(pb.ring()->order()));
    if (!pb.p_a.surjective()) {
        rep.hypothesis_not_met("p_A: D -> A is not surjective");
        return rep;
    }
    fibret_core(rep, pb);
    return rep;
}

VerificationReport fibret_check(const Amalgam& am)
{
    VerificationReport rep;
    rep.check = "fibret";
    rep.instance = describe(am) + " as f-breve x_{B/J} pi";
    const Quotient q = quotient_ring(am.j);
    const PullbackData pb = pullback(compose(q.projection, am.f), q.projection);
    rep.expect(pb.pairs.coords == am.pairs.coords, "pullback differs from the amalgam");
    const PullbackFacts facts = fibret_core(rep, pb);
    rep.expect(facts.section.has_value(), "no section of p_A for an amalgamation");
    rep.expect(kernel(q.projection) == am.j, "reconstructed J' = Ker(pi) differs from J");
    return rep;
}

VerificationReport prid_check(const PullbackData& d)
{
    VerificationReport rep;
    rep.check = "prid";
    rep.instance = describe(d.alpha) + ", " + describe(d.beta);
    const RingPtr& a = d.alpha.domain();
    const RingPtr& b = d.beta.domain();
    const bool d_red = is_reduced(*d.ring());
    const bool a_red = is_reduced(*a);
    const bool b_red = is_reduced(*b);
    const bool na = ideal_intersection(nilradical(a), kernel(d.alpha)).is_zero();
    const bool nb = ideal_intersection(nilradical(b), kernel(d.beta)).is_zero();
    rep.note(std::string("D reduced: ") + (d_red ? "yes" : "no"));
    rep.note(std::string("Nilp(A) meet Ker(alpha) = 0: ") + (na ? "yes" : "no"));
    rep.note(std::string("Nilp(B) meet Ker(beta) = 0: ") + (nb ? "yes" : "no"));
    rep.note(std::string("A reduced: ") + (a_red ? "yes" : "no") + ", B reduced: " + (b_red ? "yes" : "no"));
    rep.expect(!d_red || (na && nb), "D reduced but a nilradical meets a kernel");
    rep.expect(!((a_red && nb) || (b_red && na)) || d_red, "sufficient condition holds but D is not reduced");
    if (!d_red)
        rep.witness_elements("Nilp(D)", *d.ring(), nilradical(d.ring()).elements());
    return rep;
}

VerificationReport kernel_identity_check(const PullbackData& d)
{
    VerificationReport rep;
    rep.check = "kernel_identity";
    rep.instance = describe(d.alpha) + ", " + describe(d.beta);
    const Ideal kb = kernel(d.beta);
    const std::vector<bool> expected = pair_members(d.pairs, {d.alpha.domain()->zero()}, kb.elements());
    rep.expect(kernel(d.p_a).members() == expected, "Ker(p_A) != {0} x Ker(beta)");
    rep.witness_elements("Ker(p_A)", *d.ring(), kernel(d.p_a).elements());
    return rep;
}

// ---- structure of the amalgam -------------------------------------------

Ideal amalgam_ideal(const Amalgam& am, const Ideal& i)
{
    require_same_ring(i.ring(), am.a(), "amalgam_ideal");
    const FiniteRng& B = *am.b();
    std::vector<bool> m(am.ring()->order(), false);
    for (Elem x : i.elements())
        for (Elem j : am.j.elements())
            m[am.pairs.index_of(x, B.add(am.f(x), j))] = true;
    return Ideal(am.ring(), std::move(m));
}

VerificationReport canonical_isos(const Amalgam& am, const std::optional<Ideal>& i_opt)
{
    VerificationReport rep;
    rep.check = "canonical_isos";
    rep.instance = describe(am);
    const Ideal i = i_opt ? *i_opt : preimage(am.f, am.j);
    const RingPtr& ring = am.ring();
    const Ideal finv = preimage(am.f, am.j);

    rep.expect(am.iota.injective(), "iota is not injective");
    rep.expect(compose(am.p_a, am.iota) == identity_hom(am.a()), "p_A o iota != id_A");

    guarded(rep, "I join^f J", [&] {
        const Ideal ij = amalgam_ideal(am, i);
        const Quotient q = quotient_ring(ij);
        const RingHom h = compose(q.projection, am.iota);
        rep.expect(h.surjective(), "A -> amalgam/(I join J) is not surjective");
        rep.expect(kernel(h) == i, "kernel of A -> amalgam/(I join J) is not I");
        rep.witness_iso("A/I -> amalgam/(I join^f J)", factor_through(quotient_ring(i), h));
        rep.note("|amalgam/(I join^f J)| = " + std::to_string(q.ring->order()));
    });

    guarded(rep, "p_A", [&] {
        rep.expect(am.p_a.surjective(), "p_A is not surjective");
        const Ideal k = kernel(am.p_a);
        rep.expect(k.members() == pair_members(am.pairs, {am.a()->zero()}, am.j.elements()), "Ker(p_A) != {0} x J");
        rep.witness_iso("amalgam/({0} x J) -> A", factor_through(quotient_ring(k), am.p_a));
    });

    guarded(rep, "p_B", [&] {
        const Subrng bd = image_plus_ideal(am.f, am.j);
        rep.expect(image(am.p_b) == bd, "p_B(amalgam) != f(A) + J");
        const Ideal k = kernel(am.p_b);
        rep.expect(k.members() == pair_members(am.pairs, finv.elements(), {am.b()->zero()}),
                   "Ker(p_B) != f^-1(J) x {0}");
        std::vector<Elem> map(ring->order());
        for (Elem x = 0; x < map.size(); ++x)
            map[x] = am.b_diamond.index_of(am.p_b(x));
        const RingHom onto(ring, am.b_diamond.ring, std::move(map), true);
        rep.witness_iso("amalgam/(f^-1(J) x {0}) -> f(A) + J", factor_through(quotient_ring(k), onto));
    });

    guarded(rep, "gamma", [&] {
        rep.expect(am.gamma.surjective(), "gamma is not surjective");
        const Ideal k = kernel(am.gamma);
        rep.expect(k.members() == pair_members(am.pairs, finv.elements(), am.j.elements()), "Ker(gamma) != f^-1(J) x J");
        const Quotient q = quotient_ring(k);
        rep.witness_iso("amalgam/(f^-1(J) x J) -> (f(A) + J)/J", factor_through(q, am.gamma));
        if (am.f.surjective()) {
            const Quotient bj = quotient_ring(am.j);
            rep.witness_iso("amalgam/(f^-1(J) x J) -> B/J", factor_through(q, compose(bj.projection, am.p_b)));
            rep.note("f is surjective: the quotient is B/J");
        }
    });
    return rep;
}

BDiamond b_diamond(const RingHom& f, const Ideal& j)
{
    VerificationReport rep;
    rep.check = "b_diamond";
    rep.instance = describe(f) + ", |J| = " + std::to_string(j.size());
    Subrng sub = image_plus_ideal(f, j);
    const EmbeddedRing bd = as_ring(sub);
    std::vector<Elem> map(f.domain()->order());
    for (Elem a = 0; a < map.size(); ++a)
        map[a] = bd.index_of(f(a));
    const RingHom fd(f.domain(), bd.ring, std::move(map), true);
    const Amalgam small = amalgam(fd, restrict_ideal(j, bd));
    const Amalgam full = amalgam(f, j);
    std::vector<std::pair<Elem, Elem>> lifted;
    for (const auto& [a, b] : small.pairs.coords)
        lifted.emplace_back(a, bd.inclusion(b));
    rep.expect(lifted == full.pairs.coords, "A join^{f_diamond} J != A join^f J");
    rep.witness_elements("f(A) + J", *f.codomain(), sub.elements());
    rep.note("|f(A) + J| = " + std::to_string(sub.size()));
    return BDiamond{std::move(sub), std::move(rep)};
}

VerificationReport domain_criterion_check(const Amalgam& am)
{
    VerificationReport rep;
    rep.check = "domain_criterion";
    rep.instance = describe(am);
    const bool lhs = is_domain(*am.ring());
    const bool bd_domain = is_domain(*am.b_diamond.ring);
    const bool finv_zero = preimage(am.f, am.j).is_zero();
    const bool rhs = bd_domain && finv_zero;
    rep.note(std::string("amalgam is a domain: ") + (lhs ? "yes" : "no"));
    rep.note(std::string("f(A) + J is a domain: ") + (bd_domain ? "yes" : "no") + ", f^-1(J) = 0: " +
             (finv_zero ? "yes" : "no"));
    if (am.j.is_zero()) {
        rep.hypothesis_not_met("J = (0); the amalgam is isomorphic to A");
        return rep;
    }
    rep.expect(lhs == rhs, "domain equivalence violated");
    rep.expect(!(is_domain(*am.b()) && finv_zero) || lhs, "B domain and f^-1(J) = 0 but the amalgam is not a domain");
    if (!lhs && !rhs)
        rep.note("finite degeneracy: a finite domain is a field, and {0} x J is a nonzero proper ideal, "
                 "so both sides are false whenever J != 0");
    return rep;
}

VerificationReport reduced_criterion_check(const Amalgam& am)
{
    VerificationReport rep;
    rep.check = "reduced_criterion";
    rep.instance = describe(am);
    const bool lhs = is_reduced(*am.ring());
    const bool a_red = is_reduced(*am.a());
    const Ideal meet = ideal_intersection(nilradical(am.b()), am.j);
    const bool rhs = a_red && meet.is_zero();
    rep.note(std::string("amalgam reduced: ") + (lhs ? "yes" : "no"));
    rep.note(std::string("A reduced: ") + (a_red ? "yes" : "no") + ", Nilp(B) meet J = 0: " +
             (meet.is_zero() ? "yes" : "no"));
    rep.note(std::string("f(A) + J reduced: ") + (is_reduced(*am.b_diamond.ring) ? "yes" : "no"));
    if (!meet.is_zero())
        rep.witness_elements("Nilp(B) meet J", *am.b(), meet.elements());
    rep.expect(lhs == rhs, "reducedness equivalence violated");
    if (is_radical(am.j) && lhs)
        rep.expect(is_reduced(*am.b()), "J radical and amalgam reduced, yet B is not reduced");
    return rep;
}

VerificationReport same_amalgam(const RingHom& f, const RingHom& g, const Ideal& j)
{
    VerificationReport rep;
    rep.check = "same_amalgam";
    rep.instance = describe(f) + ", " + describe(g) + ", |J| = " + std::to_string(j.size());
    require_same_ring(f.domain(), g.domain(), "same_amalgam");
    require_same_ring(f.codomain(), g.codomain(), "same_amalgam");
    const FiniteRng& B = *f.codomain();
    std::optional<Elem> bad;
    for (Elem a = 0; a < f.domain()->order() && !bad; ++a)
        if (!j.contains(B.sub(f(a), g(a))))
            bad = a;
    const bool pointwise = !bad;
    const bool equal = amalgam(f, j).pairs.coords == amalgam(g, j).pairs.coords;
    rep.note(std::string("f = g: ") + (f == g ? "yes" : "no"));
    rep.note(std::string("f(a) - g(a) in J for all a: ") + (pointwise ? "yes" : "no"));
    rep.note(std::string("A join^f J = A join^g J: ") + (equal ? "yes" : "no"));
    if (bad)
        rep.note("f(a) - g(a) not in J at a = " + f.domain()->label(*bad));
    rep.expect(pointwise == equal, "pointwise criterion and set equality disagree");
    return rep;
}

std::string describe(const RingHom& f)
{
    return "hom of order " + std::to_string(f.domain()->order()) + " -> " + std::to_string(f.codomain()->order());
}

std::string describe(const Subset& s)
{
    return "subset of size " + std::to_string(s.size()) + " in a ring of order " + std::to_string(s.ring()->order());
}

std::string describe(const Amalgam& am)
{
    return "A join^f J with |A| = " + std::to_string(am.a()->order()) + ", |B| = " + std::to_string(am.b()->order()) +
           ", |J| = " + std::to_string(am.j.size());
}

} // namespace amalg
