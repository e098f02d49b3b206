#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace wsa;

namespace {

ErrorCode code_of(const std::string& text) {
    try {
        parse_spec(text);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "accepted:\n" << text;
    return ErrorCode::InvalidArgument;
}

const char* kSmall = R"(# two triangles on one edge
[quiver]
vertex 1 2 3
arrow alpha 1 2
arrow beta 2 1
arrow gamma 2 3
arrow delta 3 2
arrow eps 1 1
arrow eps2 3 3

[f]
alpha beta eps
gamma eps2 delta
)";

TEST(SpecFile, RoundTripsAllPresets) {
    for (const auto& name : preset_names()) {
        for (int lam : {2, 3, -1}) {
            PresetOptions o;
            o.lambda = Rational(lam);
            auto s = preset(name, o);
            auto back = parse_spec(export_spec(s));
            EXPECT_TRUE(same_data(s, back)) << name;
            EXPECT_EQ(back.family, s.family);
            auto again = attach_family_chain(back);
            EXPECT_EQ(again.chain.has_value(), s.chain.has_value()) << name;
            if (s.chain) {
                EXPECT_TRUE(*again.chain == *s.chain);
            }
        }
    }
}

TEST(SpecFile, PrimeFieldAndFractions) {
    auto s = triangle(Rational(2, 3));
    s.prime = 101;
    auto back = parse_spec(export_spec(s));
    EXPECT_EQ(back.prime, 101u);
    EXPECT_EQ(back.lambda, Rational(2, 3));
}

TEST(SpecFile, RejectsBadInput) {
    EXPECT_EQ(code_of("[colour]\nred\n"), ErrorCode::ParseError);
    EXPECT_EQ(code_of("[family]\nshape round\n"), ErrorCode::ParseError);
    EXPECT_EQ(code_of("[field]\nprime 100\n"), ErrorCode::ParseError);
    EXPECT_EQ(code_of("vertex 1\n"), ErrorCode::ParseError);
    EXPECT_EQ(code_of("[f]\nalpha\n"), ErrorCode::ParseError);
    EXPECT_EQ(code_of("[quiver]\nvertex 1\n"), ErrorCode::ParseError);
    EXPECT_EQ(code_of(std::string(kSmall) + "[weights]\nfoo 2\n"), ErrorCode::ParseError);
    EXPECT_EQ(code_of(std::string(kSmall) + "[weights]\nalpha 0\n"), ErrorCode::ParseError);
}

TEST(SpecFile, WeightsSpreadAlongCycles) {
    auto small = parse_spec(std::string(kSmall) + "[weights]\nalpha 3\neps 2\neps2 2\n");
    const Quiver& sq = small.quiver;
    EXPECT_TRUE(validate(instantiate<Rational>(small)).ok());
    auto cls = classify(instantiate<Rational>(small));
    const int cyc = cls[sq.arrow_id("alpha")].g_cycle;
    for (int a = 0; a < sq.num_arrows(); ++a) EXPECT_EQ(small.weight[a], cls[a].g_cycle == cyc ? 3 : 2);

    auto s = preset("triangle", {});
    std::string text = export_spec(s);
    auto pos = text.find("[weights]\n");
    ASSERT_NE(pos, std::string::npos);
    auto spec = parse_spec(text);
    const Quiver& q = spec.quiver;
    for (const char* a : {"alpha", "beta", "gamma", "delta"}) EXPECT_EQ(spec.weight[q.arrow_id(a)], 1);
    auto conflicting = text + "";
    conflicting.insert(text.find("\n", pos) + 1, "beta 3\ngamma 2\n");
    EXPECT_EQ(code_of(conflicting), ErrorCode::WeightNotCycleConstant);
}

} // namespace
