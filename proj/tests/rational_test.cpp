#include <gtest/gtest.h>

#include <limits>
#include <stdexcept>

#include "majcol/rational.hpp"

using majcol::Rational;

TEST(Rational, NormalisesSignAndTerms) {
    Rational r(6, -8);
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 4);
    EXPECT_EQ(Rational(0, -5), Rational(0));
    EXPECT_THROW(Rational(1, 0), std::exception);
}

TEST(Rational, Arithmetic) {
    EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
    EXPECT_EQ(Rational(1, 2) - Rational(2, 3), Rational(-1, 6));
    EXPECT_EQ(Rational(3, 4) * Rational(2, 9), Rational(1, 6));
    EXPECT_EQ(Rational(3, 4) / Rational(3, 8), Rational(2));
    EXPECT_THROW(Rational(1) / Rational(0), std::exception);
}

TEST(Rational, OrderingAndRounding) {
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
    EXPECT_EQ(Rational(7, 2).floor(), 3);
    EXPECT_EQ(Rational(7, 2).ceil(), 4);
    EXPECT_EQ(Rational(-7, 2).floor(), -4);
    EXPECT_EQ(Rational(-7, 2).ceil(), -3);
    EXPECT_EQ(Rational(4).floor(), 4);
}

TEST(Rational, TextRoundTrip) {
    for (auto r : {Rational(3, 8), Rational(-5, 2), Rational(7), Rational(0)}) {
        EXPECT_EQ(Rational::parse(r.to_string()), r);
    }
    EXPECT_EQ(Rational(3, 8).to_string(), "3/8");
    EXPECT_EQ(Rational(4, 2).to_string(), "2");
    EXPECT_THROW(Rational::parse("1/"), std::exception);
    EXPECT_THROW(Rational::parse("x"), std::exception);
}

TEST(Rational, OverflowIsReported) {
    const Rational big(std::numeric_limits<std::int64_t>::max());
    EXPECT_THROW(big + Rational(1), std::overflow_error);
    const Rational tiny(1, std::numeric_limits<std::int64_t>::max());
    EXPECT_THROW(tiny * Rational(1, 3), std::overflow_error);
}
