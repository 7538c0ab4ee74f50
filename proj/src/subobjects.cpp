#include "amalg/subobjects.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace amalg {

namespace {

// Closes `m` under addition and absorption after inserting `seed`.
void close_ideal(const FiniteRng& r, std::vector<bool>& m, std::vector<Elem>& list, const std::vector<Elem>& seed)
{
    std::vector<Elem> work(seed.begin(), seed.end());
    while (!work.empty()) {
        const Elem x = work.back();
        work.pop_back();
        if (m[x])
            continue;
        m[x] = true;
        list.push_back(x);
        for (Elem s = 0; s < r.order(); ++s) {
            const Elem p = r.mul(s, x);
            if (!m[p])
                work.push_back(p);
        }
        for (std::size_t k = 0; k < list.size(); ++k) {
            const Elem sum = r.add(x, list[k]);
            if (!m[sum])
                work.push_back(sum);
        }
    }
}

std::vector<bool> sum_members(const FiniteRng& r, const std::vector<bool>& a, const std::vector<bool>& b)
{
    std::vector<bool> m(r.order(), false);
    for (Elem x = 0; x < r.order(); ++x)
        if (a[x])
            for (Elem y = 0; y < r.order(); ++y)
                if (b[y])
                    m[r.add(x, y)] = true;
    return m;
}

} // namespace

Ideal ideal_from_generators(const RingPtr& ring, const std::vector<Elem>& gens)
{
    const FiniteRng& r = *ring;
    std::vector<bool> m(r.order(), false);
    std::vector<Elem> list;
    std::vector<Elem> seed{r.zero()};
    for (Elem g : gens) {
        if (g >= r.order())
            throw AlgebraError(ErrorKind::invalid_parameter, "generator index out of range");
        seed.push_back(g);
    }
    close_ideal(r, m, list, seed);
    return Ideal(ring, std::move(m));
}

Ideal nilradical(const RingPtr& ring)
{
    std::vector<bool> m(ring->order(), false);
    for (Elem x = 0; x < m.size(); ++x)
        m[x] = is_nilpotent(*ring, x);
    return Ideal(ring, std::move(m));
}

Ideal ideal_sum(const Ideal& i, const Ideal& j)
{
    require_same_ring(i.ring(), j.ring(), "ideal_sum");
    return Ideal(i.ring(), sum_members(*i.ring(), i.members(), j.members()));
}

Ideal ideal_product(const Ideal& i, const Ideal& j)
{
    require_same_ring(i.ring(), j.ring(), "ideal_product");
    const FiniteRng& r = *i.ring();
    std::vector<Elem> products;
    std::vector<bool> seen(r.order(), false);
    for (Elem x : i.elements())
        for (Elem y : j.elements()) {
            const Elem p = r.mul(x, y);
            if (!seen[p]) {
                seen[p] = true;
                products.push_back(p);
            }
        }
    return ideal_from_generators(i.ring(), products);
}

Ideal ideal_intersection(const Ideal& i, const Ideal& j)
{
    require_same_ring(i.ring(), j.ring(), "ideal_intersection");
    std::vector<bool> m(i.ring()->order());
    for (Elem x = 0; x < m.size(); ++x)
        m[x] = i.contains(x) && j.contains(x);
    return Ideal(i.ring(), std::move(m));
}

bool is_idempotent_ideal(const Ideal& j)
{
    return ideal_product(j, j) == j;
}

bool is_prime(const Ideal& i)
{
    i.ring()->unit();
    auto q = quotient_ring(i);
    return is_domain(*q.ring);
}

bool is_maximal(const Ideal& i)
{
    i.ring()->unit();
    auto q = quotient_ring(i);
    return is_field(*q.ring);
}

bool is_radical(const Ideal& i)
{
    auto q = quotient_ring(i);
    return nilradical(q.ring).is_zero();
}

std::vector<Elem> ideal_generators(const Ideal& ideal)
{
    const RingPtr& ring = ideal.ring();
    const FiniteRng& r = *ring;
    std::vector<Elem> gens;
    std::vector<bool> current(r.order(), false);
    current[r.zero()] = true;
    std::size_t current_size = 1;
    const auto elems = ideal.elements();
    std::map<Elem, std::vector<bool>> principal;
    for (Elem x : elems)
        principal.emplace(x, ideal_from_generators(ring, {x}).members());
    while (current_size < ideal.size()) {
        Elem best = 0;
        std::size_t best_size = 0;
        std::vector<bool> best_members;
        for (Elem x : elems) {
            if (current[x])
                continue;
            auto m = sum_members(r, current, principal.at(x));
            const auto sz = static_cast<std::size_t>(std::count(m.begin(), m.end(), true));
            if (sz > best_size) {
                best = x;
                best_size = sz;
                best_members = std::move(m);
            }
        }
        gens.push_back(best);
        current = std::move(best_members);
        current_size = best_size;
    }
    return gens;
}

std::vector<GeneratedIdeal> all_ideals(const RingPtr& ring, std::size_t limit)
{
    const FiniteRng& r = *ring;
    std::map<std::vector<bool>, bool> found;
    std::vector<std::vector<bool>> order;
    auto insert = [&](std::vector<bool> m) {
        if (found.emplace(m, true).second) {
            order.push_back(std::move(m));
            if (order.size() > limit)
                throw AlgebraError(ErrorKind::size_guard_exceeded, "ring has more than " + std::to_string(limit) +
                                                                       " ideals");
        }
    };
    insert(Ideal::zero(ring).members());
    for (Elem x = 0; x < r.order(); ++x)
        insert(ideal_from_generators(ring, {x}).members());
    const std::size_t principal_count = order.size();
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = 1; j < principal_count; ++j)
            insert(sum_members(r, order[i], order[j]));

    std::vector<GeneratedIdeal> result;
    for (const auto& [m, unused] : found) {
        Ideal ideal(ring, m);
        auto gens = ideal_generators(ideal);
        result.push_back(GeneratedIdeal{std::move(ideal), std::move(gens)});
    }
    // smaller ideals first, then by membership
    std::stable_sort(result.begin(), result.end(), [](const GeneratedIdeal& a, const GeneratedIdeal& b) {
        if (a.ideal.size() != b.ideal.size())
            return a.ideal.size() < b.ideal.size();
        return a.ideal.elements() < b.ideal.elements();
    });
    return result;
}

Quotient quotient_ring(const Ideal& ideal)
{
    const RingPtr& ring = ideal.ring();
    const FiniteRng& r = *ring;
    const auto members = ideal.elements();
    constexpr Elem unassigned = static_cast<Elem>(-1);
    std::vector<Elem> class_of(r.order(), unassigned);
    std::vector<Elem> reps;
    for (Elem x = 0; x < r.order(); ++x) {
        if (class_of[x] != unassigned)
            continue;
        const auto c = static_cast<Elem>(reps.size());
        reps.push_back(x);
        for (Elem i : members)
            class_of[r.add(x, i)] = c;
    }
    const std::size_t n = reps.size();
    std::vector<Elem> add(n * n), mul(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            add[a * n + b] = class_of[r.add(reps[a], reps[b])];
            mul[a * n + b] = class_of[r.mul(reps[a], reps[b])];
        }
    std::vector<std::string> labels(n);
    for (std::size_t c = 0; c < n; ++c)
        labels[c] = "[" + r.label(reps[c]) + "]";
    std::optional<Elem> one;
    if (r.has_one())
        one = class_of[*r.one()];
    auto qring = std::make_shared<FiniteRng>(n, std::move(add), std::move(mul), class_of[r.zero()], one,
                                             std::move(labels), Provenance::quotient);
    RingHom proj(ring, qring, class_of, r.has_one());
    return Quotient{std::move(qring), std::move(proj), std::move(reps)};
}

RingHom factor_through(const Quotient& q, const RingHom& h)
{
    require_same_ring(q.projection.domain(), h.domain(), "factor_through");
    const auto& dom = *h.domain();
    std::vector<Elem> map(q.ring->order());
    for (Elem c = 0; c < map.size(); ++c)
        map[c] = h(q.representatives[c]);
    for (Elem x = 0; x < dom.order(); ++x)
        if (h(x) != map[q.projection(x)])
            throw AlgebraError(ErrorKind::invalid_parameter,
                               "hom is not constant on the coset of " + dom.label(x));
    return RingHom(q.ring, h.codomain(), std::move(map), h.unital() && q.ring->has_one());
}

Subrng subring_generated(const RingPtr& ring, const std::vector<Elem>& seed, bool include_one)
{
    const FiniteRng& r = *ring;
    std::vector<bool> m(r.order(), false);
    std::vector<Elem> list;
    std::vector<Elem> work{r.zero()};
    for (Elem s : seed) {
        if (s >= r.order())
            throw AlgebraError(ErrorKind::invalid_parameter, "seed index out of range");
        work.push_back(s);
    }
    if (include_one)
        work.push_back(r.unit());
    while (!work.empty()) {
        const Elem x = work.back();
        work.pop_back();
        if (m[x])
            continue;
        m[x] = true;
        list.push_back(x);
        for (std::size_t k = 0; k < list.size(); ++k) {
            const Elem y = list[k];
            const Elem s = r.add(x, y);
            const Elem p = r.mul(x, y);
            if (!m[s])
                work.push_back(s);
            if (!m[p])
                work.push_back(p);
        }
    }
    return Subrng(ring, std::move(m));
}

Elem EmbeddedRing::index_of(Elem ambient) const
{
    const auto& imgs = inclusion.images();
    auto it = std::lower_bound(imgs.begin(), imgs.end(), ambient);
    if (it == imgs.end() || *it != ambient)
        throw AlgebraError(ErrorKind::invalid_parameter, "element is not in the subring");
    return static_cast<Elem>(it - imgs.begin());
}

EmbeddedRing as_ring(const Subrng& sub)
{
    const FiniteRng& r = *sub.ring();
    const auto elems = sub.elements();
    const std::size_t n = elems.size();
    std::vector<Elem> local(r.order(), 0);
    for (std::size_t i = 0; i < n; ++i)
        local[elems[i]] = static_cast<Elem>(i);
    std::vector<Elem> add(n * n), mul(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            add[a * n + b] = local[r.add(elems[a], elems[b])];
            mul[a * n + b] = local[r.mul(elems[a], elems[b])];
        }
    std::optional<Elem> one;
    if (sub.has_one()) {
        one = local[*r.one()];
    } else {
        for (std::size_t e = 0; e < n && !one; ++e) {
            bool ok = true;
            for (std::size_t x = 0; x < n && ok; ++x)
                ok = mul[e * n + x] == x;
            if (ok)
                one = static_cast<Elem>(e);
        }
    }
    auto ring = std::make_shared<FiniteRng>(n, std::move(add), std::move(mul), local[r.zero()], one,
                                            labels_of(r, elems), Provenance::subring);
    RingHom inclusion(ring, sub.ring(), elems, sub.has_one());
    return EmbeddedRing{std::move(ring), std::move(inclusion)};
}

EmbeddedRing as_ring(const Ideal& ideal)
{
    return as_ring(Subrng(ideal.ring(), ideal.members()));
}

Ideal restrict_ideal(const Ideal& ideal, const EmbeddedRing& sub)
{
    require_same_ring(ideal.ring(), sub.inclusion.codomain(), "restrict_ideal");
    std::vector<bool> m(sub.ring->order(), false);
    for (Elem x : ideal.elements())
        m[sub.index_of(x)] = true;
    return Ideal(sub.ring, std::move(m));
}

Subrng image_plus_ideal(const RingHom& f, const Ideal& j)
{
    require_same_ring(f.codomain(), j.ring(), "image_plus_ideal");
    const FiniteRng& b = *f.codomain();
    std::vector<bool> m(b.order(), false);
    const auto js = j.elements();
    for (Elem a = 0; a < f.domain()->order(); ++a)
        for (Elem x : js)
            m[b.add(f(a), x)] = true;
    return Subrng(f.codomain(), std::move(m));
}

std::vector<bool> regular_elements_mod(const Ideal& ideal)
{
    const FiniteRng& a = *ideal.ring();
    auto q = quotient_ring(ideal);
    if (is_zero_ring(*q.ring))
        return std::vector<bool>(a.order(), true);
    std::vector<bool> regular_class(q.ring->order());
    for (Elem c = 0; c < regular_class.size(); ++c)
        regular_class[c] = c != q.ring->zero() && !is_zero_divisor(*q.ring, c);
    std::vector<bool> s(a.order());
    for (Elem x = 0; x < a.order(); ++x)
        s[x] = regular_class[q.projection(x)];
    return s;
}

std::vector<bool> multiplicative_closure(const RingPtr& ring, const std::vector<Elem>& gens)
{
    const FiniteRng& r = *ring;
    std::vector<bool> m(r.order(), false);
    std::vector<Elem> list;
    std::vector<Elem> work{r.unit()};
    work.insert(work.end(), gens.begin(), gens.end());
    while (!work.empty()) {
        const Elem x = work.back();
        work.pop_back();
        if (m[x])
            continue;
        m[x] = true;
        list.push_back(x);
        for (std::size_t k = 0; k < list.size(); ++k) {
            const Elem p = r.mul(x, list[k]);
            if (!m[p])
                work.push_back(p);
        }
    }
    return m;
}

std::vector<bool> saturation_kernel(const FiniteRng& r, const std::vector<bool>& s)
{
    std::vector<bool> k(r.order(), false);
    for (Elem x = 0; x < r.order(); ++x)
        for (Elem t = 0; t < r.order() && !k[x]; ++t)
            if (s[t] && r.mul(t, x) == r.zero())
                k[x] = true;
    return k;
}

Localization localization(const RingPtr& ring, const std::vector<bool>& s)
{
    const FiniteRng& r = *ring;
    if (s.size() != r.order())
        throw AlgebraError(ErrorKind::malformed_map, "multiplicative set has the wrong length");
    std::vector<Elem> ss;
    for (Elem x = 0; x < r.order(); ++x)
        if (s[x])
            ss.push_back(x);
    if (ss.empty())
        throw AlgebraError(ErrorKind::empty_set, "multiplicative set is empty");
    if (!s[r.unit()])
        throw AlgebraError(ErrorKind::not_multiplicatively_closed, "multiplicative set must contain 1");
    for (Elem x : ss)
        for (Elem y : ss)
            if (!s[r.mul(x, y)])
                throw AlgebraError(ErrorKind::not_multiplicatively_closed,
                                   r.label(x) + " * " + r.label(y) + " leaves the set");

    // (a,s) ~ (a',s') iff a s' - a' s is killed by some t in S
    const auto killed = saturation_kernel(r, s);
    constexpr Elem unassigned = static_cast<Elem>(-1);
    const std::size_t n = r.order();
    std::vector<Elem> class_of(n * n, unassigned);
    std::vector<std::pair<Elem, Elem>> reps;
    for (Elem a = 0; a < n; ++a)
        for (Elem t : ss) {
            Elem found = unassigned;
            for (Elem c = 0; c < reps.size() && found == unassigned; ++c) {
                const auto [a2, t2] = reps[c];
                if (killed[r.sub(r.mul(a, t2), r.mul(a2, t))])
                    found = c;
            }
            if (found == unassigned) {
                found = static_cast<Elem>(reps.size());
                reps.emplace_back(a, t);
            }
            class_of[a * n + t] = found;
        }
    const std::size_t m = reps.size();
    check_size(m, "localization");
    std::vector<Elem> add(m * m), mul(m * m);
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) {
            const auto [a1, s1] = reps[x];
            const auto [a2, s2] = reps[y];
            const Elem den = r.mul(s1, s2);
            add[x * m + y] = class_of[r.add(r.mul(a1, s2), r.mul(a2, s1)) * n + den];
            mul[x * m + y] = class_of[r.mul(a1, a2) * n + den];
        }
    std::vector<std::string> labels(m);
    for (std::size_t c = 0; c < m; ++c)
        labels[c] = r.label(reps[c].first) + "/" + r.label(reps[c].second);
    const Elem one_idx = r.unit();
    auto lring = std::make_shared<FiniteRng>(m, std::move(add), std::move(mul), class_of[r.zero() * n + one_idx],
                                             class_of[one_idx * n + one_idx], std::move(labels),
                                             Provenance::localization);
    std::vector<Elem> lam(n);
    for (Elem a = 0; a < n; ++a)
        lam[a] = class_of[a * n + one_idx];
    RingHom lambda(ring, lring, std::move(lam), true);
    return Localization{std::move(lring), std::move(lambda), s, std::move(reps), std::move(class_of)};
}

Elem Localization::fraction(Elem a, Elem s) const
{
    const std::size_t n = lambda.domain()->order();
    if (a >= n || s >= n || !mult_set[s])
        throw AlgebraError(ErrorKind::invalid_parameter, "denominator is not in the multiplicative set");
    return class_of[a * n + s];
}

ValidationReport validate_module(const FiniteModule& m)
{
    const FiniteRng& a = *m.scalars;
    const std::size_t n = m.order;
    if (n == 0 || m.add.size() != n * n || m.action.size() != a.order() * n || m.zero >= n)
        throw AlgebraError(ErrorKind::malformed_table, "module tables have the wrong shape");
    ValidationReport report;
    auto lbl = [&](Elem x) { return m.labels.empty() ? std::to_string(x) : m.labels[x]; };
    auto fail = [&](const char* law, std::vector<std::string> w) {
        if (!report.violates(law))
            report.violations.push_back({law, std::move(w)});
    };
    for (Elem x = 0; x < n; ++x) {
        if (m.plus(m.zero, x) != x)
            fail("additive_identity", {lbl(x)});
        bool has_neg = false;
        for (Elem y = 0; y < n; ++y) {
            if (m.plus(x, y) == m.zero)
                has_neg = true;
            if (m.plus(x, y) != m.plus(y, x))
                fail("additive_commutativity", {lbl(x), lbl(y)});
            for (Elem z = 0; z < n; ++z)
                if (m.plus(m.plus(x, y), z) != m.plus(x, m.plus(y, z)))
                    fail("additive_associativity", {lbl(x), lbl(y), lbl(z)});
        }
        if (!has_neg)
            fail("additive_inverse", {lbl(x)});
        if (a.has_one() && m.act(*a.one(), x) != x)
            fail("unital_action", {lbl(x)});
    }
    for (Elem s = 0; s < a.order(); ++s)
        for (Elem x = 0; x < n; ++x) {
            for (Elem y = 0; y < n; ++y)
                if (m.act(s, m.plus(x, y)) != m.plus(m.act(s, x), m.act(s, y)))
                    fail("distributes_over_module_addition", {a.label(s), lbl(x), lbl(y)});
            for (Elem t = 0; t < a.order(); ++t) {
                if (m.act(a.add(s, t), x) != m.plus(m.act(s, x), m.act(t, x)))
                    fail("distributes_over_scalar_addition", {a.label(s), a.label(t), lbl(x)});
                if (m.act(a.mul(s, t), x) != m.act(s, m.act(t, x)))
                    fail("compatible_with_scalar_product", {a.label(s), a.label(t), lbl(x)});
            }
        }
    return report;
}

FiniteModule module_via_hom(const RingHom& f, const Ideal& j)
{
    require_same_ring(f.codomain(), j.ring(), "module_via_hom");
    const FiniteRng& b = *f.codomain();
    const auto elems = j.elements();
    const std::size_t n = elems.size();
    std::vector<Elem> local(b.order(), 0);
    for (std::size_t i = 0; i < n; ++i)
        local[elems[i]] = static_cast<Elem>(i);
    FiniteModule m;
    m.scalars = f.domain();
    m.order = n;
    m.zero = local[b.zero()];
    m.add.resize(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            m.add[x * n + y] = local[b.add(elems[x], elems[y])];
    const std::size_t na = f.domain()->order();
    m.action.resize(na * n);
    for (Elem a = 0; a < na; ++a)
        for (std::size_t x = 0; x < n; ++x)
            m.action[a * n + x] = local[b.mul(f(a), elems[x])];
    m.labels = labels_of(b, elems);
    return m;
}

FiniteModule integer_module(const RingPtr& rng, std::int64_t n)
{
    const FiniteRng& r = *rng;
    if (n < 1 || static_cast<std::uint64_t>(n) % characteristic(r) != 0)
        throw AlgebraError(ErrorKind::invalid_parameter,
                           "Z/" + std::to_string(n) + " does not act: characteristic is " +
                               std::to_string(characteristic(r)));
    FiniteModule m;
    m.scalars = zmod(n);
    m.order = r.order();
    m.zero = r.zero();
    m.add.assign(r.add_table().begin(), r.add_table().end());
    m.action.resize(static_cast<std::size_t>(n) * r.order());
    for (Elem k = 0; k < static_cast<Elem>(n); ++k)
        for (Elem x = 0; x < r.order(); ++x)
            m.action[k * r.order() + x] = r.multiple(x, k);
    m.labels = r.labels();
    return m;
}

FiniteModule zero_module(const RingPtr& scalars)
{
    FiniteModule m;
    m.scalars = scalars;
    m.order = 1;
    m.zero = 0;
    m.add = {0};
    m.action.assign(scalars->order(), 0);
    m.labels = {"0"};
    return m;
}

std::vector<bool> submodule_span(const FiniteModule& m, const std::vector<Elem>& gens)
{
    std::vector<bool> in(m.order, false);
    std::vector<Elem> list;
    std::vector<Elem> work{m.zero};
    for (Elem g : gens)
        for (Elem a = 0; a < m.scalars->order(); ++a)
            work.push_back(m.act(a, g));
    // generators themselves, for scalar rings without identity
    work.insert(work.end(), gens.begin(), gens.end());
    while (!work.empty()) {
        const Elem x = work.back();
        work.pop_back();
        if (in[x])
            continue;
        in[x] = true;
        list.push_back(x);
        for (std::size_t k = 0; k < list.size(); ++k) {
            const Elem s = m.plus(x, list[k]);
            if (!in[s])
                work.push_back(s);
        }
        for (Elem a = 0; a < m.scalars->order(); ++a) {
            const Elem p = m.act(a, x);
            if (!in[p])
                work.push_back(p);
        }
    }
    return in;
}

ModuleGenerators module_min_generators(const FiniteModule& m, std::size_t budget)
{
    ModuleGenerators result;
    std::vector<Elem> candidates;
    for (Elem x = 0; x < m.order; ++x)
        if (x != m.zero)
            candidates.push_back(x);
    auto spans_all = [&](const std::vector<Elem>& gens) {
        ++result.subsets_tried;
        auto span = submodule_span(m, gens);
        return std::all_of(span.begin(), span.end(), [](bool b) { return b; });
    };
    if (m.order == 1) {
        result.subsets_tried = 1;
        return result;
    }

    for (std::size_t k = 1; k <= candidates.size(); ++k) {
        // k-subsets of candidates in lexicographic order
        std::vector<std::size_t> pick(k);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            if (result.subsets_tried >= budget)
                goto greedy;
            {
                std::vector<Elem> gens;
                for (auto p : pick)
                    gens.push_back(candidates[p]);
                if (spans_all(gens)) {
                    result.generators = std::move(gens);
                    return result;
                }
            }
            std::size_t i = k;
            while (i > 0 && pick[i - 1] == candidates.size() - k + i - 1)
                --i;
            if (i == 0)
                break;
            ++pick[i - 1];
            for (std::size_t t = i; t < k; ++t)
                pick[t] = pick[t - 1] + 1;
        }
    }

greedy:
    result.exhaustive = false;
    result.generators.clear();
    {
        auto span = submodule_span(m, {});
        for (Elem x : candidates)
            if (!span[x]) {
                result.generators.push_back(x);
                span = submodule_span(m, result.generators);
            }
    }
    return result;
}

} // namespace amalg
