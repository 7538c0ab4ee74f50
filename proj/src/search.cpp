#include "amalg/search.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace amalg {

namespace {

constexpr Elem unknown = static_cast<Elem>(-1);

// A partial map closed under + and *: assigning one value propagates to every
// sum and product of already assigned elements, failing on the first conflict.
class PartialHom {
public:
    PartialHom(const FiniteRng& dom, const FiniteRng& cod) : dom_(&dom), cod_(&cod), img_(dom.order(), unknown) {}

    bool assign(Elem x, Elem y)
    {
        work_.clear();
        work_.emplace_back(x, y);
        while (!work_.empty()) {
            const auto [u, v] = work_.back();
            work_.pop_back();
            if (img_[u] != unknown) {
                if (img_[u] != v)
                    return false;
                continue;
            }
            img_[u] = v;
            known_.push_back(u);
            for (std::size_t k = 0; k < known_.size(); ++k) {
                const Elem w = known_[k];
                work_.emplace_back(dom_->add(u, w), cod_->add(v, img_[w]));
                work_.emplace_back(dom_->mul(u, w), cod_->mul(v, img_[w]));
            }
        }
        return true;
    }

    bool assigned(Elem x) const { return img_[x] != unknown; }
    bool complete() const { return known_.size() == dom_->order(); }
    const std::vector<Elem>& images() const { return img_; }

private:
    const FiniteRng* dom_;
    const FiniteRng* cod_;
    std::vector<Elem> img_;
    std::vector<Elem> known_;
    std::vector<std::pair<Elem, Elem>> work_;
};

std::size_t closure_size(const FiniteRng& r, const std::vector<Elem>& seed)
{
    std::vector<bool> in(r.order(), false);
    std::vector<Elem> list;
    std::vector<Elem> work{r.zero()};
    if (r.has_one())
        work.push_back(*r.one());
    work.insert(work.end(), seed.begin(), seed.end());
    while (!work.empty()) {
        const Elem x = work.back();
        work.pop_back();
        if (in[x])
            continue;
        in[x] = true;
        list.push_back(x);
        for (std::size_t k = 0; k < list.size(); ++k) {
            const Elem s = r.add(x, list[k]);
            const Elem p = r.mul(x, list[k]);
            if (!in[s])
                work.push_back(s);
            if (!in[p])
                work.push_back(p);
        }
    }
    return list.size();
}

using Candidates = std::function<std::vector<Elem>(Elem)>;
using Leaf = std::function<bool(const std::vector<Elem>&)>;  // true stops the search

// Returns true when `leaf` asked to stop. Throws once more than `budget`
// candidate extensions have been tried.
bool backtrack(const FiniteRng& dom, const FiniteRng& cod, const std::vector<Elem>& gens, const Candidates& candidates,
               const Leaf& leaf, std::size_t budget, std::size_t& tried)
{
    PartialHom start(dom, cod);
    if (!start.assign(dom.zero(), cod.zero()))
        return false;
    if (dom.has_one()) {
        if (!cod.has_one() || !start.assign(*dom.one(), *cod.one()))
            return false;
    }

    std::function<bool(std::size_t, const PartialHom&)> rec = [&](std::size_t i, const PartialHom& state) -> bool {
        if (i == gens.size()) {
            if (!state.complete())
                return false;
            return leaf(state.images());
        }
        const Elem g = gens[i];
        if (state.assigned(g))
            return rec(i + 1, state);
        for (Elem c : candidates(g)) {
            if (++tried > budget)
                throw AlgebraError(ErrorKind::size_guard_exceeded,
                                   "search budget of " + std::to_string(budget) + " candidate extensions exhausted");
            PartialHom next = state;
            if (next.assign(g, c) && rec(i + 1, next))
                return true;
        }
        return false;
    };
    return rec(0, start);
}

} // namespace

std::vector<Elem> ring_generators(const FiniteRng& r)
{
    std::vector<Elem> gens;
    std::size_t size = closure_size(r, gens);
    while (size < r.order()) {
        Elem best = 0;
        std::size_t best_size = 0;
        for (Elem x = 0; x < r.order(); ++x) {
            auto trial = gens;
            trial.push_back(x);
            const std::size_t s = closure_size(r, trial);
            if (s > best_size) {
                best = x;
                best_size = s;
            }
        }
        gens.push_back(best);
        size = best_size;
    }
    return gens;
}

std::vector<ElementSignature> element_signatures(const FiniteRng& r)
{
    std::vector<ElementSignature> sig(r.order());
    for (Elem x = 0; x < r.order(); ++x) {
        std::size_t ann = 0;
        for (Elem y = 0; y < r.order(); ++y)
            if (r.mul(x, y) == r.zero())
                ++ann;
        sig[x] = ElementSignature{additive_order(r, x), nilpotency_index(r, x), is_idempotent(r, x), is_unit(r, x),
                                  ann};
    }
    return sig;
}

SearchOutcome find_iso(const RingPtr& r, const RingPtr& s, std::size_t budget)
{
    r->unit();
    s->unit();
    SearchOutcome out;
    if (r->order() != s->order()) {
        out.reason = "orders differ";
        out.exhausted = true;
        return out;
    }
    if (characteristic(*r) != characteristic(*s)) {
        out.reason = "characteristics differ (" + std::to_string(characteristic(*r)) + " vs " +
                     std::to_string(characteristic(*s)) + ")";
        out.exhausted = true;
        return out;
    }
    const auto sig_r = element_signatures(*r);
    const auto sig_s = element_signatures(*s);
    std::map<ElementSignature, std::size_t> hist_r, hist_s;
    for (const auto& g : sig_r)
        ++hist_r[g];
    for (const auto& g : sig_s)
        ++hist_s[g];
    if (hist_r != hist_s) {
        std::size_t idem_r = 0, idem_s = 0, nil_r = 0, nil_s = 0;
        for (const auto& g : sig_r) {
            idem_r += g.idempotent;
            nil_r += g.nilpotency != 0;
        }
        for (const auto& g : sig_s) {
            idem_s += g.idempotent;
            nil_s += g.nilpotency != 0;
        }
        if (idem_r != idem_s)
            out.reason = "idempotent counts differ";
        else if (nil_r != nil_s)
            out.reason = "nilpotent counts differ";
        else
            out.reason = "element invariant histograms differ";
        out.exhausted = true;
        return out;
    }

    const auto gens = ring_generators(*r);
    auto candidates = [&](Elem g) {
        std::vector<Elem> c;
        for (Elem y = 0; y < s->order(); ++y)
            if (sig_s[y] == sig_r[g])
                c.push_back(y);
        return c;
    };
    auto leaf = [&](const std::vector<Elem>& map) {
        std::vector<bool> hit(s->order(), false);
        for (Elem e : map) {
            if (hit[e])
                return false;
            hit[e] = true;
        }
        out.hom.emplace(r, s, map, true);
        return true;
    };
    backtrack(*r, *s, gens, candidates, leaf, budget, out.candidates);
    out.exhausted = true;
    if (!out.hom)
        out.reason = "search space exhausted";
    return out;
}

SearchOutcome find_section(const RingHom& p, std::size_t budget)
{
    if (!p.surjective())
        throw AlgebraError(ErrorKind::not_surjective, "find_section needs a surjective hom");
    const RingPtr& a = p.codomain();
    const RingPtr& d = p.domain();
    a->unit();
    SearchOutcome out;
    std::vector<std::vector<Elem>> fibers(a->order());
    for (Elem x = 0; x < d->order(); ++x)
        fibers[p(x)].push_back(x);
    const auto gens = ring_generators(*a);
    auto candidates = [&](Elem g) { return fibers[g]; };
    auto leaf = [&](const std::vector<Elem>& map) {
        for (Elem x = 0; x < a->order(); ++x)
            if (p(map[x]) != x)
                return false;
        out.hom.emplace(a, d, map, true);
        return true;
    };
    backtrack(*a, *d, gens, candidates, leaf, budget, out.candidates);
    out.exhausted = true;
    if (!out.hom)
        out.reason = "no unital hom A -> D splits the projection";
    return out;
}

HomEnumeration enumerate_homs(const RingPtr& a, const RingPtr& b, std::size_t cap, std::size_t budget)
{
    a->unit();
    b->unit();
    HomEnumeration out;
    const auto gens = ring_generators(*a);
    std::vector<std::uint64_t> order_b(b->order());
    std::vector<bool> nil_b(b->order()), idem_b(b->order());
    for (Elem y = 0; y < b->order(); ++y) {
        order_b[y] = additive_order(*b, y);
        nil_b[y] = is_nilpotent(*b, y);
        idem_b[y] = is_idempotent(*b, y);
    }
    auto candidates = [&](Elem g) {
        const auto og = additive_order(*a, g);
        const bool nil = is_nilpotent(*a, g);
        const bool idem = is_idempotent(*a, g);
        std::vector<Elem> c;
        for (Elem y = 0; y < b->order(); ++y)
            if (og % order_b[y] == 0 && (!nil || nil_b[y]) && (!idem || idem_b[y]))
                c.push_back(y);
        return c;
    };
    auto leaf = [&](const std::vector<Elem>& map) {
        if (out.homs.size() >= cap) {
            out.complete = false;
            return true;
        }
        out.homs.emplace_back(a, b, map, true);
        return false;
    };
    backtrack(*a, *b, gens, candidates, leaf, budget, out.candidates);
    return out;
}

} // namespace amalg
