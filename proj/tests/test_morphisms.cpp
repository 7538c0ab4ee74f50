#include "helpers.hpp"

using namespace amalg;
using namespace amalg::test;

namespace {

RingHom diagonal(const RingPtr& r)
{
    return diagonal_power(identity_hom(r), 2);
}

} // namespace

TEST(RingHom, ReductionIsValid)
{
    EXPECT_NO_THROW(zmod_reduction(4, 2));
    EXPECT_TRUE(validate_hom(*zmod(4), *zmod(2), std::vector<Elem>{0, 1, 0, 1}, true).ok());
}

TEST(RingHom, InclusionZ2IntoZ4IsNotAdditive)
{
    const std::vector<Elem> map{0, 1};
    EXPECT_FALSE(validate_hom(*zmod(2), *zmod(4), map, true).ok());
    try {
        RingHom(zmod(2), zmod(4), map, true);
        FAIL();
    } catch (const AlgebraError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::invalid_structure);
    }
}

TEST(RingHom, MalformedMaps)
{
    try {
        RingHom(zmod(4), zmod(2), {0, 1, 0}, true);
        FAIL();
    } catch (const AlgebraError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::malformed_map);
    }
    EXPECT_THROW(RingHom(zmod(2), zmod(2), {0, 5}, true), AlgebraError);
}

TEST(RingHom, NonUnitalNeedsTheFlag)
{
    const RingPtr z6 = zmod(6);
    // a -> 3a is multiplicative since 3 is idempotent mod 6.
    const std::vector<Elem> map{0, 3, 0, 3, 0, 3};
    EXPECT_THROW(RingHom(z6, z6, map, true), AlgebraError);
    EXPECT_NO_THROW(RingHom(z6, z6, map, false));
}

TEST(RingHom, Z8IntoProduct)
{
    const RingPtr p = direct_product({zmod(8), zmod(4)});
    std::vector<std::string> images;
    for (int n = 0; n < 8; ++n)
        images.push_back("(" + std::to_string(n) + "," + std::to_string(n % 4) + ")");
    const RingHom f = hom(zmod(8), p, images);
    EXPECT_TRUE(f.injective());
    EXPECT_FALSE(f.surjective());
}

TEST(RingHom, KernelImageCompose)
{
    const RingHom f = zmod_reduction(4, 2);
    EXPECT_EQ(label_set(kernel(f)), (std::set<std::string>{"0", "2"}));
    const RingHom d = diagonal(zmod(2));
    EXPECT_EQ(label_set(image(d)), (std::set<std::string>{"(0,0)", "(1,1)"}));
    EXPECT_EQ(compose(identity_hom(zmod(2)), f), f);
    EXPECT_THROW(compose(f, f), AlgebraError);
}

TEST(RingHom, PreimageOfIdeal)
{
    const RingHom f = zmod_reduction(12, 4);
    const Ideal pre = preimage(f, gen(zmod(4), {"2"}));
    EXPECT_EQ(pre, gen(zmod(12), {"2"}));
    EXPECT_EQ(preimage(f, Ideal::zero(zmod(4))), kernel(f));
}

TEST(Graph, Examples)
{
    const Graph g = graph(identity_hom(zmod(2)));
    EXPECT_EQ(label_set(g.subring), (std::set<std::string>{"(0,0)", "(1,1)"}));
    const Graph h = graph(zmod_reduction(4, 2));
    EXPECT_EQ(label_set(h.subring), (std::set<std::string>{"(0,0)", "(1,1)", "(2,0)", "(3,1)"}));
    EXPECT_TRUE(h.subring.has_one());
}

TEST(Iso, VerifyIso)
{
    EXPECT_TRUE(verify_iso(identity_hom(zmod(5))));
    EXPECT_FALSE(verify_iso(zmod_reduction(4, 2)));
    const RingPtr p = direct_product({zmod(2), zmod(3)});
    std::vector<std::string> crt;
    for (int n = 0; n < 6; ++n)
        crt.push_back("(" + std::to_string(n % 2) + "," + std::to_string(n % 3) + ")");
    const RingHom f = hom(zmod(6), p, crt);
    EXPECT_TRUE(verify_iso(f));
    EXPECT_EQ(compose(inverse_iso(f), f), identity_hom(zmod(6)));
    EXPECT_THROW(inverse_iso(zmod_reduction(4, 2)), AlgebraError);
}

TEST(Iso, FindIso)
{
    EXPECT_TRUE(find_iso(zmod(6), direct_product({zmod(2), zmod(3)})).hom);
    const SearchOutcome none = find_iso(zmod(4), direct_product({zmod(2), zmod(2)}));
    EXPECT_FALSE(none.hom);
    EXPECT_TRUE(none.exhausted);
    EXPECT_NE(none.reason.find("characteristic"), std::string::npos);
    const RingPtr r = trunc_poly(zmod(2), 2, 1);
    const SearchOutcome self = find_iso(r, r);
    ASSERT_TRUE(self.hom);
    EXPECT_TRUE(verify_iso(*self.hom));
}

TEST(Iso, SameCharacteristicNonIsomorphic)
{
    // Z2[X]/X^2 and Z2 x Z2: order 4, characteristic 2, but only one is reduced.
    const SearchOutcome out = find_iso(trunc_poly(zmod(2), 1, 1), direct_product({zmod(2), zmod(2)}));
    EXPECT_FALSE(out.hom);
    EXPECT_TRUE(out.exhausted);
}

TEST(Iso, ProductsOfCoprimeCyclicRings)
{
    for (std::int64_t m = 2; m <= 6; ++m)
        for (std::int64_t n = 2; n <= 6; ++n) {
            const bool coprime = std::gcd(m, n) == 1;
            EXPECT_EQ(find_iso(zmod(m * n), direct_product({zmod(m), zmod(n)})).hom.has_value(), coprime)
                << m << " " << n;
        }
}

TEST(Section, NoSectionForZ2OverZ4)
{
    const PullbackData d = pullback(identity_hom(zmod(2)), zmod_reduction(4, 2));
    EXPECT_EQ(d.ring()->order(), 4u);
    const SearchOutcome out = find_section(d.p_a);
    EXPECT_FALSE(out.hom);
    EXPECT_TRUE(out.exhausted);
}

TEST(Section, IdentityAndAmalgamProjection)
{
    const RingPtr r = zmod(6);
    const SearchOutcome id = find_section(identity_hom(r));
    ASSERT_TRUE(id.hom);
    EXPECT_EQ(*id.hom, identity_hom(r));

    const Amalgam am = amalgam(zmod_reduction(4, 2), Ideal::whole(zmod(2)));
    const SearchOutcome s = find_section(am.p_a);
    ASSERT_TRUE(s.hom);
    EXPECT_EQ(compose(am.p_a, *s.hom), identity_hom(am.a()));
}

TEST(Section, Deterministic)
{
    const Amalgam am = duplication(zmod(12), gen(zmod(12), {"4"}));
    const SearchOutcome a = find_section(am.p_a);
    const SearchOutcome b = find_section(am.p_a);
    ASSERT_TRUE(a.hom && b.hom);
    EXPECT_EQ(*a.hom, *b.hom);
    EXPECT_EQ(a.candidates, b.candidates);
}

TEST(Section, NeedsSurjection)
{
    try {
        find_section(hom(zmod(2), direct_product({zmod(2), zmod(2)}), {"(0,0)", "(1,1)"}));
        FAIL();
    } catch (const AlgebraError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::not_surjective);
    }
}

TEST(Enumerate, UnitalHomsBetweenCyclicRings)
{
    // A unital hom Z/m -> Z/n exists iff n divides m, and is then unique.
    for (std::int64_t m = 1; m <= 12; ++m)
        for (std::int64_t n = 1; n <= 12; ++n) {
            const HomEnumeration e = enumerate_homs(zmod(m), zmod(n));
            EXPECT_TRUE(e.complete);
            EXPECT_EQ(e.homs.size(), m % n == 0 ? 1u : 0u) << m << " " << n;
        }
}

TEST(Enumerate, HomsFromBooleanProducts)
{
    // Unital homs F2^k -> F2 are the k coordinate projections.
    const RingPtr z2 = zmod(2);
    EXPECT_EQ(enumerate_homs(direct_product({z2, z2}), z2).homs.size(), 2u);
    EXPECT_EQ(enumerate_homs(direct_product({z2, z2, z2}), z2).homs.size(), 3u);
    // and F2^2 -> F2^2 unital homs: maps of the two idempotent coordinates, 2^2 = 4.
    EXPECT_EQ(enumerate_homs(direct_product({z2, z2}), direct_product({z2, z2})).homs.size(), 4u);
}

TEST(Enumerate, CapIsHonoured)
{
    const RingPtr p = direct_product({zmod(2), zmod(2), zmod(2)});
    const HomEnumeration e = enumerate_homs(p, p, 5);
    EXPECT_EQ(e.homs.size(), 5u);
    EXPECT_FALSE(e.complete);
}

TEST(Enumerate, EveryResultIsAHom)
{
    const auto rings = small_rings();
    for (const auto& a : rings)
        for (const auto& b : rings) {
            if (a->order() * b->order() > 64)
                continue;
            for (const auto& f : enumerate_homs(a, b).homs)
                EXPECT_TRUE(validate_hom(*a, *b, f.map(), true).ok());
        }
}

TEST(Generators, GenerateTheRing)
{
    for (const auto& r : small_rings()) {
        const auto gens = ring_generators(*r);
        EXPECT_TRUE(subring_generated(r, gens, true).is_whole()) << describe(*r);
    }
}

TEST(Diagonal, PowerOfHom)
{
    const RingHom d = diagonal_power(zmod_reduction(4, 2), 3);
    EXPECT_EQ(d.codomain()->order(), 8u);
    EXPECT_EQ(d.codomain()->label(d(3)), "(1,1,1)");
}
