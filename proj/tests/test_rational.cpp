#include <gtest/gtest.h>

#include <random>

#include "wsa/field.hpp"

using wsa::Rational;
using wsa::Zp;

TEST(Rational, NormalisesSignAndGcd) {
    Rational a(6, -4);
    EXPECT_EQ(a.to_string(), "-3/2");
    EXPECT_EQ(Rational(0, -7), Rational(0));
    EXPECT_TRUE(Rational(0, 5).is_zero());
}

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(Rational::parse("-12/18").to_string(), "-2/3");
    EXPECT_EQ(Rational::parse(" 7 ").to_string(), "7");
    EXPECT_EQ(Rational::parse("+3/9"), Rational(1, 3));
    EXPECT_THROW(Rational::parse("1/0"), wsa::Error);
    EXPECT_THROW(Rational::parse("abc"), wsa::Error);
    EXPECT_THROW(Rational::parse("1/"), wsa::Error);
}

TEST(Rational, DivisionByZeroThrows) {
    try {
        (void)(Rational(1) / Rational(0));
        FAIL();
    } catch (const wsa::Error& e) {
        EXPECT_EQ(e.code(), wsa::ErrorCode::DivisionByZero);
    }
    EXPECT_THROW(Rational(0).inverse(), wsa::Error);
}

TEST(Rational, OverflowSpillsAndDemotes) {
    Rational big(std::int64_t{1} << 62);
    Rational sq = big * big;
    EXPECT_FALSE(sq.is_small());
    EXPECT_EQ(sq.to_string(), "21267647932558653966460912964485513216");
    Rational back = sq / big;
    EXPECT_TRUE(back.is_small());
    EXPECT_EQ(back, big);
    Rational min = Rational(std::numeric_limits<std::int64_t>::min());
    EXPECT_FALSE(min.is_small());
    EXPECT_EQ((min + Rational(1)).to_string(), "-9223372036854775807");
    EXPECT_TRUE((min + Rational(1)).is_small());
}

TEST(Rational, AgreesWithGmpOnRandomExpressions) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> d(-(std::int64_t{1} << 40), std::int64_t{1} << 40);
    Rational acc(1);
    mpq_class ref(1);
    for (int i = 0; i < 400; ++i) {
        std::int64_t n = d(rng), m = d(rng);
        if (m == 0) m = 1;
        Rational x(n, m);
        mpq_class y(n, m);
        y.canonicalize();
        switch (i % 4) {
        case 0: acc += x; ref += y; break;
        case 1: acc *= x; ref *= y; break;
        case 2: acc -= x; ref -= y; break;
        default:
            if (!x.is_zero()) {
                acc /= x;
                ref /= y;
            }
        }
        ASSERT_EQ(acc.to_mpq(), ref);
        ASSERT_EQ(acc, Rational(ref));
    }
}

TEST(Rational, Ordering) {
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
    Rational huge = Rational(std::int64_t{1} << 62) * Rational(std::int64_t{1} << 62);
    EXPECT_LT(Rational(5), huge);
    EXPECT_GT(-Rational(5), -huge);
}

TEST(Zp, FieldAxioms) {
    Zp::Context ctx(101);
    for (int a = 1; a < 101; ++a) EXPECT_EQ(Zp(a) * Zp(a).inverse(), Zp(1));
    EXPECT_EQ(Zp(-1), Zp(100));
    EXPECT_EQ(Zp::from_rational(Rational(1, 2)) * Zp(2), Zp(1));
    EXPECT_EQ(Zp::parse("-3/4") * Zp(4), Zp(-3));
    EXPECT_THROW(Zp::from_rational(Rational(1, 101)), wsa::Error);
}

TEST(Zp, ContextRejectsComposite) {
    EXPECT_THROW(Zp::Context(100), wsa::Error);
    EXPECT_EQ(Zp::installed_modulus(), 0u);
    {
        Zp::Context outer(7);
        {
            Zp::Context inner(11);
            EXPECT_EQ(Zp::modulus(), 11u);
        }
        EXPECT_EQ(Zp::modulus(), 7u);
    }
    EXPECT_EQ(Zp::installed_modulus(), 0u);
}
