#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace wsa;
using wsa::testing::build;

namespace {

// dim e_v A = m_a n_a + m_b n_b over the two arrows a, b leaving v, with the
// g-orbits computed here from f alone: g(a) = the other arrow leaving t(a)
// than f(a).
std::vector<int> formula_dims(const SurfaceSpec& s) {
    const Quiver& q = s.quiver;
    const auto f = s.f();
    auto bar = [&](int a) {
        for (int b = 0; b < q.num_arrows(); ++b)
            if (b != a && q.arrow(b).source == q.arrow(a).source) return b;
        return -1;
    };
    std::vector<int> dims(q.num_vertices(), 0);
    for (int a = 0; a < q.num_arrows(); ++a) {
        int n = 0;
        int x = a;
        do {
            x = bar(f[x]);
            ++n;
        } while (x != a);
        dims[q.arrow(a).source] += s.weight[a] * n;
    }
    return dims;
}

template <class F>
void check_family_dims(const SurfaceSpec& s) {
    auto b = build<F>(s);
    EXPECT_EQ(b.alg.vertex_dims(), formula_dims(s)) << s.family;
    int total = 0;
    for (int d : formula_dims(s)) total += d;
    EXPECT_EQ(b.alg.dim(), total);
}

TEST(Algebra, DimensionsMatchCycleFormula) {
    for (const auto& s : wsa::testing::all_presets()) check_family_dims<Rational>(s);
    for (const auto& s : {n_spherical(2, 2, 1, Rational(3)), n_spherical(2, 1, 3, Rational(2)), mixed(1, 2, Rational(-1)),
                          triangular_k(Rational(5), 3)})
        check_family_dims<Rational>(s);
    Zp::Context ctx(101);
    for (const auto& s : wsa::testing::all_presets(Rational(3))) check_family_dims<Zp>(s);
}

TEST(Algebra, KnownDimensions) {
    auto t = build<Rational>(triangle(Rational(2)));
    EXPECT_EQ(t.alg.dim(), 20);
    EXPECT_EQ(t.alg.vertex_dims(), (std::vector<int>{6, 8, 6}));
    auto s = build<Rational>(spherical(Rational(2)));
    EXPECT_EQ(s.alg.vertex_dims(), (std::vector<int>{8, 6, 8, 6, 6, 6}));
    auto n = build<Rational>(n_spherical(3, 1, 1, Rational(2)));
    const Quiver& q = n.alg.quiver;
    auto d = n.alg.vertex_dims();
    for (int i = 1; i <= 3; ++i) {
        EXPECT_EQ(d[q.vertex("a" + std::to_string(i))], 12);
        EXPECT_EQ(d[q.vertex("b" + std::to_string(i))], 8);
        EXPECT_EQ(d[q.vertex("d" + std::to_string(i))], 8);
    }
}

TEST(Algebra, AssociativeSymmetricSocle) {
    for (const auto& s : wsa::testing::all_presets()) {
        auto b = build<Rational>(s);
        EXPECT_FALSE(associativity_failure(b.alg).has_value()) << s.family;
        auto c = b.alg.cartan();
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < c.size(); ++j) EXPECT_EQ(c[i][j], c[j][i]) << s.family;
        auto sym = check_symmetric(b.alg);
        EXPECT_TRUE(sym.ok()) << s.family << ": " << sym.failure;
        EXPECT_EQ(sym.gram_rank, b.alg.dim());
        EXPECT_TRUE(socle_relation_failures(b.alg, b.td, b.cls).empty()) << s.family;
    }
}

TEST(Algebra, SocleRelationDetectsWrongParameter) {
    auto b = build<Rational>(triangle(Rational(2)));
    for (int v = 0; v < b.alg.quiver.num_vertices(); ++v) EXPECT_EQ(projective_socle(b.alg, v).size(), 1u);
    // Checking against parameters the algebra was not built with.
    auto other = b.td;
    for (int a : b.cls.g_cycles[0]) other.param[a] = Rational(7);
    EXPECT_FALSE(socle_relation_failures(b.alg, other, b.cls).empty());
}

TEST(Presentations, DisplayedRelationsVanish) {
    struct Case {
        const char* family;
        std::size_t relations;
    };
    for (auto c : {Case{"triangle", 11}, Case{"spherical", 24}}) {
        for (int lam : {2, 3, -1}) {
            auto p = gabriel_presentation(c.family, Rational(lam));
            EXPECT_EQ(p.relations.size(), c.relations);
            auto g = build_from_gabriel_presentation(p, Rational(lam));
            for (const auto& r : displayed_relations(p, g.quiver, Rational(lam)))
                EXPECT_TRUE(g.eval(r).empty()) << c.family << " " << r.label;
            auto n = find_c_normalization(p, Rational(lam));
            ASSERT_TRUE(n.has_value()) << c.family;
            EXPECT_EQ(n->algebra.dim(), g.dim());
            EXPECT_EQ(n->algebra.cartan(), g.cartan());
            EXPECT_TRUE(failing_displayed_relations(p, n->algebra, Rational(lam)).empty());
        }
    }
}

TEST(Presentations, PresetParametersAreANormalization) {
    for (const char* fam : {"triangle", "spherical"}) {
        auto p = gabriel_presentation(fam, Rational(2));
        auto b = build<Rational>(p.surface);
        EXPECT_TRUE(failing_displayed_relations(p, b.alg, Rational(2)).empty()) << fam;
    }
}

TEST(IdempotentSubalgebra, NSphericalCornerDimension) {
    auto b = build<Rational>(n_spherical(3, 1, 1, Rational(2)));
    auto e = idempotent_subalgebra(b.alg, b.gamma);
    // Cartan entries between the a-vertices.
    auto c = b.alg.cartan();
    int expect = 0;
    for (int v : b.gamma)
        for (int w : b.gamma) expect += c[v][w];
    EXPECT_EQ(e.dim(), expect);
    for (int x : e.basis)
        for (int y : e.basis) {
            SparseVec<Rational> bx{{x, Rational(1)}}, by{{y, Rational(1)}};
            EXPECT_TRUE(e.contains(e.multiply(bx, by)));
        }
}

} // namespace
