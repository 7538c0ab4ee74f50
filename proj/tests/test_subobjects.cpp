#include "helpers.hpp"

#include <map>

using namespace amalg;
using namespace amalg::test;

namespace {

// Number of classes of S^-1 Z/n, straight from the definition of the fraction
// relation: (a,s) ~ (b,t) iff u(at - bs) = 0 for some u in S.
std::size_t fraction_classes(std::int64_t n, const std::vector<std::int64_t>& s)
{
    std::vector<std::pair<std::int64_t, std::int64_t>> reps;
    for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t t : s) {
            bool found = false;
            for (const auto& [b, r] : reps)
                for (std::int64_t u : s)
                    if ((u * (a * r - b * t)) % n == 0)
                        found = true;
            if (!found)
                reps.emplace_back(a, t);
        }
    return reps.size();
}

std::vector<std::int64_t> closure_mod(std::int64_t n, const std::vector<std::int64_t>& gens)
{
    std::set<std::int64_t> s{1 % n};
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::int64_t x : std::vector<std::int64_t>(s.begin(), s.end()))
            for (std::int64_t g : gens)
                grew |= s.insert((x * g) % n).second;
    }
    return {s.begin(), s.end()};
}

} // namespace

TEST(Ideals, GeneratedIdeals)
{
    EXPECT_EQ(label_set(gen(zmod(12), {"2"})), (std::set<std::string>{"0", "2", "4", "6", "8", "10"}));
    EXPECT_TRUE(gen(zmod(6), {}).is_zero());
    const RingPtr p = direct_product({zmod(2), zmod(2)});
    EXPECT_EQ(label_set(gen(p, {"(1,0)"})), (std::set<std::string>{"(0,0)", "(1,0)"}));
}

TEST(Ideals, PrincipalIdealsOfZnMatchGcd)
{
    for (std::int64_t n = 2; n <= 20; ++n) {
        const RingPtr r = zmod(n);
        for (std::int64_t g = 0; g < n; ++g) {
            const Ideal i = ideal_from_generators(r, {static_cast<Elem>(g)});
            for (std::int64_t x = 0; x < n; ++x) {
                const std::int64_t d = std::gcd(g, n);
                EXPECT_EQ(i.contains(static_cast<Elem>(x)), x % d == 0) << n << " " << g << " " << x;
            }
        }
    }
}

TEST(Ideals, AllIdealsAreIdeals)
{
    for (const auto& r : small_rings()) {
        const auto all = all_ideals(r);
        for (const auto& g : all) {
            const Ideal& i = g.ideal;
            for (Elem x : i.elements()) {
                for (Elem y : i.elements())
                    EXPECT_TRUE(i.contains(r->add(x, y)));
                for (Elem y = 0; y < r->order(); ++y)
                    EXPECT_TRUE(i.contains(r->mul(x, y)));
            }
            EXPECT_EQ(ideal_from_generators(r, g.generators), i);
        }
        std::set<std::vector<bool>> distinct;
        for (const auto& g : all)
            distinct.insert(g.ideal.members());
        EXPECT_EQ(distinct.size(), all.size());
    }
}

TEST(Ideals, IdealsOfZnAreTheDivisors)
{
    for (std::int64_t n = 1; n <= 24; ++n) {
        std::size_t divisors = 0;
        for (std::int64_t d = 1; d <= n; ++d)
            divisors += n % d == 0;
        EXPECT_EQ(all_ideals(zmod(n)).size(), divisors) << n;
    }
}

TEST(Quotients, Z12ModFour)
{
    const Ideal i = gen(zmod(12), {"4"});
    EXPECT_EQ(i.size(), 3u);
    const Quotient q = quotient_ring(i);
    EXPECT_EQ(q.ring->order(), 4u);
    EXPECT_TRUE(find_iso(q.ring, zmod(4)).hom);
}

TEST(Quotients, Degenerate)
{
    const RingPtr r = trunc_poly(zmod(2), 1, 2);
    EXPECT_TRUE(quotient_ring(Ideal::zero(r)).ring->same_tables(*r));
    EXPECT_TRUE(is_zero_ring(*quotient_ring(Ideal::whole(r)).ring));
}

TEST(Quotients, FirstIsomorphismCounting)
{
    for (const auto& r : small_rings())
        for (const auto& g : all_ideals(r)) {
            const Quotient q = quotient_ring(g.ideal);
            EXPECT_EQ(q.ring->order() * g.ideal.size(), r->order());
            EXPECT_EQ(kernel(q.projection), g.ideal);
            EXPECT_TRUE(q.projection.surjective());
        }
}

TEST(Quotients, FactorThrough)
{
    const RingPtr z12 = zmod(12);
    const Quotient q = quotient_ring(gen(z12, {"4"}));
    const RingHom red = zmod_reduction(12, 4);
    const RingHom induced = factor_through(q, red);
    EXPECT_TRUE(verify_iso(induced));
    EXPECT_THROW(factor_through(quotient_ring(gen(z12, {"6"})), red), AlgebraError);
}

TEST(Nilradical, Examples)
{
    EXPECT_EQ(label_set(nilradical(zmod(8))), (std::set<std::string>{"0", "2", "4", "6"}));
    EXPECT_TRUE(nilradical(zmod(6)).is_zero());
    const RingPtr p = direct_product({zmod(4), zmod(2)});
    EXPECT_EQ(label_set(nilradical(p)), (std::set<std::string>{"(0,0)", "(2,0)"}));
}

TEST(Nilradical, MatchesIntegerPowers)
{
    for (std::int64_t n = 2; n <= 30; ++n) {
        const Ideal nil = nilradical(zmod(n));
        for (std::int64_t x = 0; x < n; ++x) {
            std::int64_t p = x;
            for (int k = 0; k < 6; ++k)
                p = (p * x) % n;
            EXPECT_EQ(nil.contains(static_cast<Elem>(x)), p == 0) << n << " " << x;
        }
    }
}

TEST(IdealArithmetic, Examples)
{
    const RingPtr z6 = zmod(6);
    EXPECT_EQ(ideal_product(gen(z6, {"3"}), gen(z6, {"3"})), gen(z6, {"3"}));
    const RingPtr z4 = zmod(4);
    EXPECT_TRUE(ideal_product(gen(z4, {"2"}), gen(z4, {"2"})).is_zero());
    const RingPtr z12 = zmod(12);
    EXPECT_TRUE(ideal_intersection(gen(z12, {"4"}), gen(z12, {"6"})).is_zero());
    EXPECT_EQ(ideal_sum(gen(z12, {"4"}), gen(z12, {"6"})), gen(z12, {"2"}));
}

TEST(IdealArithmetic, IdempotentIdeals)
{
    EXPECT_TRUE(is_idempotent_ideal(gen(zmod(6), {"3"})));
    EXPECT_FALSE(is_idempotent_ideal(gen(zmod(4), {"2"})));
    const RingPtr p = direct_product({zmod(2), zmod(2)});
    EXPECT_TRUE(is_idempotent_ideal(gen(p, {"(1,0)"})));
}

TEST(IdealArithmetic, LatticeLawsOnZ24)
{
    const RingPtr r = zmod(24);
    const auto all = all_ideals(r);
    for (const auto& a : all)
        for (const auto& b : all) {
            const Ideal s = ideal_sum(a.ideal, b.ideal);
            const Ideal m = ideal_intersection(a.ideal, b.ideal);
            // |I + J| |I meet J| = |I| |J| for subgroups of a finite abelian group.
            EXPECT_EQ(s.size() * m.size(), a.ideal.size() * b.ideal.size());
            const Ideal p = ideal_product(a.ideal, b.ideal);
            for (Elem x : p.elements())
                EXPECT_TRUE(m.contains(x));
        }
}

TEST(PrimeIdeals, Examples)
{
    const RingPtr z12 = zmod(12);
    EXPECT_TRUE(is_prime(gen(z12, {"2"})));
    EXPECT_TRUE(is_maximal(gen(z12, {"2"})));
    EXPECT_FALSE(is_prime(gen(z12, {"4"})));
    const Ideal zero6 = Ideal::zero(zmod(6));
    EXPECT_TRUE(is_radical(zero6));
    EXPECT_FALSE(is_prime(zero6));
}

TEST(PrimeIdeals, ZnPrimesArePrimeDivisors)
{
    for (std::int64_t n = 2; n <= 24; ++n)
        for (const auto& g : all_ideals(zmod(n))) {
            const std::int64_t d = static_cast<std::int64_t>(n / g.ideal.size());
            EXPECT_EQ(is_prime(g.ideal), is_prime_number(d)) << n << " " << d;
            EXPECT_EQ(is_maximal(g.ideal), is_prime_number(d)) << n << " " << d;
        }
}

TEST(RegularElements, Examples)
{
    const RingPtr z12 = zmod(12);
    const auto s = regular_elements_mod(gen(z12, {"4"}));
    for (Elem x = 0; x < 12; ++x)
        EXPECT_EQ(s[x], x % 2 == 1) << x;
    const auto s6 = regular_elements_mod(Ideal::zero(zmod(6)));
    EXPECT_EQ(s6, members_of(6, {1, 5}));
    const auto all = regular_elements_mod(Ideal::whole(z12));
    EXPECT_TRUE(std::all_of(all.begin(), all.end(), [](bool b) { return b; }));
}

TEST(Localization, Z12AtPowersOfThree)
{
    const RingPtr z12 = zmod(12);
    const auto s = multiplicative_closure(z12, {3});
    EXPECT_EQ(s, members_of(12, {1, 3, 9}));
    const Localization l = localization(z12, s);
    EXPECT_EQ(l.ring->order(), fraction_classes(12, {1, 3, 9}));
    EXPECT_EQ(l.ring->order(), 4u);
    EXPECT_TRUE(find_iso(l.ring, zmod(4)).hom);
}

TEST(Localization, Z12AtOddsIsReductionModFour)
{
    const RingPtr z12 = zmod(12);
    const Localization l = localization(z12, members_of(12, {1, 3, 5, 7, 9, 11}));
    ASSERT_EQ(l.ring->order(), 4u);
    const auto iso = find_iso(l.ring, zmod(4));
    ASSERT_TRUE(iso.hom);
    for (Elem a = 0; a < 12; ++a)
        EXPECT_EQ((*iso.hom)(l.lambda(a)), a % 4);
}

TEST(Localization, AtOneIsTheRing)
{
    for (const auto& r : small_rings()) {
        const Localization l = localization(r, multiplicative_closure(r, {}));
        EXPECT_EQ(l.ring->order(), r->order());
        EXPECT_TRUE(verify_iso(l.lambda));
    }
}

TEST(Localization, ClassCountMatchesDefinition)
{
    for (std::int64_t n : {6, 8, 12, 18, 20})
        for (std::int64_t g = 1; g < n; ++g) {
            const auto s = closure_mod(n, {g});
            std::vector<Elem> gens{static_cast<Elem>(g)};
            const Localization l = localization(zmod(n), multiplicative_closure(zmod(n), gens));
            EXPECT_EQ(l.ring->order(), fraction_classes(n, s)) << n << " " << g;
            for (std::int64_t t : s)
                EXPECT_EQ(l.fraction(static_cast<Elem>(t), static_cast<Elem>(t)), l.ring->unit());
        }
}

TEST(Localization, FractionOutsideSetThrows)
{
    const RingPtr z12 = zmod(12);
    const Localization l = localization(z12, members_of(12, {1, 3, 9}));
    EXPECT_THROW(l.fraction(1, 2), AlgebraError);
}

TEST(Subrings, Generated)
{
    const RingPtr z12 = zmod(12);
    EXPECT_EQ(label_set(subring_generated(z12, {4}, false)), (std::set<std::string>{"0", "4", "8"}));
    const RingPtr p = direct_product({zmod(2), zmod(2)});
    EXPECT_EQ(label_set(subring_generated(p, {el(p, "(1,1)")}, true)), (std::set<std::string>{"(0,0)", "(1,1)"}));
    std::vector<Elem> all(z12->order());
    std::iota(all.begin(), all.end(), 0);
    EXPECT_TRUE(subring_generated(z12, all, false).is_whole());
}

TEST(Subrings, AsRingKeepsTheArithmetic)
{
    const RingPtr z12 = zmod(12);
    const Subrng s = subring_generated(z12, {4}, false);
    const EmbeddedRing e = as_ring(s);
    EXPECT_EQ(e.ring->order(), 3u);
    // {0, 4, 8} has identity 4 (4 * 4 = 16 = 4).
    ASSERT_TRUE(e.ring->has_one());
    EXPECT_EQ(e.inclusion(e.ring->unit()), 4u);
    EXPECT_FALSE(e.inclusion.unital());
    EXPECT_EQ(e.index_of(8), el(e.ring, "8"));
}

TEST(Modules, ViaHom)
{
    const RingHom f = zmod_reduction(4, 2);
    const FiniteModule m = module_via_hom(f, Ideal::whole(zmod(2)));
    EXPECT_EQ(m.order, 2u);
    EXPECT_TRUE(validate_module(m).ok());
    for (Elem a = 0; a < 4; ++a)
        EXPECT_EQ(m.act(a, 1), a % 2);

    const RingPtr z6 = zmod(6);
    const FiniteModule m6 = module_via_hom(identity_hom(z6), gen(z6, {"2"}));
    EXPECT_EQ(m6.order, 3u);
    EXPECT_EQ(m6.labels[m6.act(5, 1)], "4");
}

TEST(Modules, ViaHomIntoProduct)
{
    const RingPtr z8 = zmod(8);
    const RingPtr p = direct_product({z8, zmod(4)});
    std::vector<std::string> images;
    for (int n = 0; n < 8; ++n)
        images.push_back("(" + std::to_string(n) + "," + std::to_string(n % 4) + ")");
    const RingHom f = hom(z8, p, images);
    std::vector<std::string> gens{"(1,0)"};
    const Ideal j = gen(p, gens);
    const FiniteModule m = module_via_hom(f, j);
    EXPECT_TRUE(validate_module(m).ok());
    for (Elem a = 0; a < 8; ++a)
        for (Elem x = 0; x < m.order; ++x)
            EXPECT_EQ(m.labels[m.act(a, x)],
                      "(" + std::to_string((a * std::stoi(m.labels[x].substr(1))) % 8) + ",0)");
}

TEST(Modules, MinimalGenerators)
{
    const RingPtr z2 = zmod(2);
    const auto g1 = module_min_generators(module_via_hom(identity_hom(z2), Ideal::whole(z2)));
    EXPECT_EQ(g1.generators.size(), 1u);
    EXPECT_TRUE(module_min_generators(zero_module(z2)).generators.empty());
    const FiniteModule v = integer_module(direct_product({z2, z2}), 2);
    const auto g2 = module_min_generators(v);
    EXPECT_EQ(g2.generators.size(), 2u);
    EXPECT_TRUE(g2.exhaustive);
    const auto span = submodule_span(v, g2.generators);
    EXPECT_TRUE(std::all_of(span.begin(), span.end(), [](bool b) { return b; }));
}

TEST(Modules, IntegerModuleNeedsAnnihilatingN)
{
    EXPECT_THROW(integer_module(zmod(4), 2), AlgebraError);
    EXPECT_NO_THROW(integer_module(zmod(4), 8));
}
