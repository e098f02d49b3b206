#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"

using namespace wsa;
using wsa::testing::build;

namespace {

TEST(Triangulation, PermutationCycles) {
    auto c = permutation_cycles({1, 2, 0, 4, 3, 5});
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c[0], (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(c[1], (std::vector<int>{3, 4}));
    EXPECT_EQ(c[2], (std::vector<int>{5}));
}

TEST(Triangulation, TriangleClassification) {
    auto b = build<Rational>(triangle(Rational(2)));
    const Quiver& q = b.alg.quiver;
    EXPECT_TRUE(validate(b.td).ok());
    std::multiset<std::size_t> lens;
    for (const auto& c : b.cls.g_cycles) lens.insert(c.size());
    EXPECT_EQ(lens, (std::multiset<std::size_t>{1, 1, 4}));
    EXPECT_EQ(b.cls.f_cycles.size(), 2u);
    EXPECT_TRUE(b.cls[q.arrow_id("epsilon")].is_virtual);
    EXPECT_TRUE(b.cls[q.arrow_id("epsilon'")].is_virtual);
    EXPECT_FALSE(b.cls[q.arrow_id("alpha")].is_virtual);
    EXPECT_EQ(gabriel_quiver(q, b.cls).num_arrows(), 4);
    EXPECT_EQ(b.gamma, (std::vector<int>{q.vertex("2")}));
    EXPECT_TRUE(every_triangle_has_virtual(b.cls));
    EXPECT_TRUE(gabriel_quiver_bipartite(q, b.cls));
    EXPECT_EQ(wsa_relations(b.td, b.cls).size(), 14u);
}

// g = f-bar composed with the arrow permutation: every arrow alpha satisfies
// s(g(alpha)) = t(alpha), and bar(alpha) is the other arrow out of s(alpha).
TEST(Triangulation, ClassificationInvariants) {
    for (const auto& spec : wsa::testing::all_presets()) {
        auto b = build<Rational>(spec);
        const Quiver& q = b.alg.quiver;
        for (int a = 0; a < q.num_arrows(); ++a) {
            const auto& i = b.cls[a];
            EXPECT_EQ(q.arrow(i.g).source, q.arrow(a).target) << spec.family;
            EXPECT_EQ(q.arrow(i.f).source, q.arrow(a).target) << spec.family;
            EXPECT_NE(i.bar, a);
            EXPECT_EQ(q.arrow(i.bar).source, q.arrow(a).source);
            EXPECT_EQ(b.cls[i.bar].bar, a);
            EXPECT_EQ(i.mn, i.m * i.n);
            EXPECT_EQ(i.is_virtual, i.mn == 2);
        }
    }
}

TEST(Triangulation, NSphericalGamma) {
    auto b = build<Rational>(n_spherical(3, 1, 1, Rational(2)));
    const Quiver& q = b.alg.quiver;
    std::vector<int> expect{q.vertex("a1"), q.vertex("a2"), q.vertex("a3")};
    std::sort(expect.begin(), expect.end());
    auto g = b.gamma;
    std::sort(g.begin(), g.end());
    EXPECT_EQ(g, expect);
}

TEST(Triangulation, RejectsNonRegularQuiver) {
    TriangulationData<Rational> td = instantiate<Rational>(triangle(Rational(2)));
    Quiver q;
    for (auto v : {"1", "2"}) q.add_vertex(v);
    q.add_arrow("a", "1", "2");
    q.add_arrow("b", "2", "1");
    td.quiver = q;
    td.f = {1, 0};
    td.weight = {1, 1};
    td.param = {Rational(1), Rational(1)};
    auto v = validate(td);
    ASSERT_FALSE(v.ok());
    bool hit = false;
    for (const auto& x : v.violations) hit |= x.code == ErrorCode::Not2Regular;
    EXPECT_TRUE(hit);
}

TEST(Triangulation, RejectsBadF) {
    TriangulationData<Rational> td = instantiate<Rational>(triangle(Rational(2)));
    std::swap(td.f[0], td.f[1]);
    EXPECT_FALSE(validate(td).ok());
}

TEST(Triangulation, RejectsWeightVaryingOnCycle) {
    auto spec = triangle(Rational(2));
    spec.weight[spec.quiver.arrow_id("alpha")] = 2;
    EXPECT_FALSE(validate(instantiate<Rational>(spec)).ok());
}

TEST(Triangulation, ForbiddenLambda) {
    try {
        triangle(Rational(1));
        FAIL() << "lambda = 1 accepted";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::LambdaForbidden);
    }
    EXPECT_THROW(spherical(Rational(1)), Error);
    EXPECT_THROW(triangle(Rational(0)), Error);
}

} // namespace
