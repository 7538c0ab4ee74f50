#include "amalg/morphism.hpp"

#include <algorithm>

namespace amalg {

ValidationReport validate_hom(const FiniteRng& dom, const FiniteRng& cod, std::span<const Elem> map, bool unital)
{
    if (map.size() != dom.order())
        throw AlgebraError(ErrorKind::malformed_map, "map has " + std::to_string(map.size()) +
                                                         " entries, domain has order " +
                                                         std::to_string(dom.order()));
    for (Elem e : map)
        if (e >= cod.order())
            throw AlgebraError(ErrorKind::malformed_map, "map entry out of codomain range");

    ValidationReport report;
    auto fail = [&](const char* law, std::vector<std::string> witness) {
        if (!report.violates(law))
            report.violations.push_back({law, std::move(witness)});
    };

    if (map[dom.zero()] != cod.zero())
        fail("preserves_zero", {dom.label(dom.zero())});
    if (unital) {
        if (!dom.has_one() || !cod.has_one())
            fail("preserves_one", {"identity missing"});
        else if (map[*dom.one()] != *cod.one())
            fail("preserves_one", {dom.label(*dom.one())});
    }
    for (Elem x = 0; x < dom.order(); ++x)
        for (Elem y = x; y < dom.order(); ++y) {
            if (map[dom.add(x, y)] != cod.add(map[x], map[y]))
                fail("preserves_addition", {dom.label(x), dom.label(y)});
            if (map[dom.mul(x, y)] != cod.mul(map[x], map[y]))
                fail("preserves_multiplication", {dom.label(x), dom.label(y)});
        }
    return report;
}

RingHom::RingHom(RingPtr domain, RingPtr codomain, std::vector<Elem> map, bool unital)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), map_(std::move(map)), unital_(unital)
{
    auto report = validate_hom(*domain_, *codomain_, map_, unital_);
    if (!report.ok())
        throw AlgebraError(ErrorKind::invalid_structure, "not a ring homomorphism: " + report.summary());
}

bool RingHom::injective() const
{
    std::vector<bool> hit(codomain_->order(), false);
    for (Elem e : map_) {
        if (hit[e])
            return false;
        hit[e] = true;
    }
    return true;
}

bool RingHom::surjective() const
{
    std::vector<bool> hit(codomain_->order(), false);
    for (Elem e : map_)
        hit[e] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool RingHom::operator==(const RingHom& other) const
{
    return same_ring(domain_, other.domain_) && same_ring(codomain_, other.codomain_) && map_ == other.map_;
}

Ideal kernel(const RingHom& f)
{
    std::vector<bool> m(f.domain()->order(), false);
    for (Elem x = 0; x < m.size(); ++x)
        m[x] = f(x) == f.codomain()->zero();
    return Ideal(f.domain(), std::move(m));
}

Subrng image(const RingHom& f)
{
    std::vector<bool> m(f.codomain()->order(), false);
    for (Elem e : f.map())
        m[e] = true;
    return Subrng(f.codomain(), std::move(m));
}

RingHom compose(const RingHom& g, const RingHom& f)
{
    require_same_ring(f.codomain(), g.domain(), "compose");
    std::vector<Elem> map(f.domain()->order());
    for (Elem x = 0; x < map.size(); ++x)
        map[x] = g(f(x));
    return RingHom(f.domain(), g.codomain(), std::move(map), f.unital() && g.unital());
}

RingHom identity_hom(const RingPtr& ring)
{
    std::vector<Elem> map(ring->order());
    for (Elem x = 0; x < map.size(); ++x)
        map[x] = x;
    return RingHom(ring, ring, std::move(map), ring->has_one());
}

Ideal preimage(const RingHom& f, const Ideal& ideal)
{
    require_same_ring(f.codomain(), ideal.ring(), "preimage");
    std::vector<bool> m(f.domain()->order(), false);
    for (Elem x = 0; x < m.size(); ++x)
        m[x] = ideal.contains(f(x));
    return Ideal(f.domain(), std::move(m));
}

bool verify_iso(const RingHom& f)
{
    return f.domain()->order() == f.codomain()->order() && f.injective();
}

RingHom inverse_iso(const RingHom& f)
{
    if (!verify_iso(f))
        throw AlgebraError(ErrorKind::invalid_parameter, "inverse_iso needs a bijective hom");
    std::vector<Elem> inv(f.codomain()->order());
    for (Elem x = 0; x < f.domain()->order(); ++x)
        inv[f(x)] = x;
    return RingHom(f.codomain(), f.domain(), std::move(inv), f.unital());
}

Graph graph(const RingHom& f)
{
    auto product = direct_product({f.domain(), f.codomain()});
    const std::size_t nb = f.codomain()->order();
    std::vector<bool> m(product->order(), false);
    for (Elem a = 0; a < f.domain()->order(); ++a)
        m[a * nb + f(a)] = true;
    return Graph{product, Subrng(product, std::move(m))};
}

RingHom diagonal_power(const RingHom& f, int n)
{
    if (n < 1)
        throw AlgebraError(ErrorKind::invalid_parameter, "diagonal power needs n >= 1");
    auto power = direct_product(std::vector<RingPtr>(static_cast<std::size_t>(n), f.codomain()));
    const std::size_t nb = f.codomain()->order();
    std::vector<Elem> map(f.domain()->order());
    for (Elem a = 0; a < map.size(); ++a) {
        std::size_t idx = 0;
        for (int t = 0; t < n; ++t)
            idx = idx * nb + f(a);
        map[a] = static_cast<Elem>(idx);
    }
    return RingHom(f.domain(), power, std::move(map), f.unital());
}

} // namespace amalg
