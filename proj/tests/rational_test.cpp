#include <gtest/gtest.h>

#include <random>

#include "gcurv/rational.hpp"
#include "oracles.hpp"

namespace gcurv {
namespace {

using testing::R;

bool canonical(const Rational& x) {
    if (x.denominator() < 1) return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
    if (x.is_zero()) return x.denominator() == 1;
    return g == 1;
}

TEST(RationalTest, FromReducesAndNormalizesSign) {
    EXPECT_EQ(rational_from(2, 4).to_string(), "1/2");
    EXPECT_EQ(rational_from(3, -6).to_string(), "-1/2");
    EXPECT_EQ(rational_from(0, 7).to_string(), "0/1");
    EXPECT_EQ(rational_from(-5, -10).to_string(), "1/2");
}

TEST(RationalTest, ZeroDenominatorThrows) {
    EXPECT_THROW(rational_from(1, 0), Error);
    EXPECT_THROW(Rational(1) / Rational(0), Error);
}

TEST(RationalTest, ToFloat) {
    EXPECT_EQ(to_float(R("1/2")), 0.5);
    EXPECT_EQ(to_float(R("4/3")), 4.0 / 3.0);
    EXPECT_EQ(to_float(R("-4/3")), -4.0 / 3.0);
    EXPECT_EQ(to_float(R("0")), 0.0);
    EXPECT_EQ(to_float(R("1/10")), 0.1);
}

// IEEE division of two exactly representable integers is correctly rounded,
// so p / q in doubles is the nearest double to the rational p/q.
TEST(RationalTest, ToFloatIsNearestDouble) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> num(-(std::int64_t{1} << 52), std::int64_t{1} << 52);
    std::uniform_int_distribution<std::int64_t> den(1, std::int64_t{1} << 52);
    for (int i = 0; i < 10000; ++i) {
        const auto p = num(rng);
        const auto q = den(rng);
        ASSERT_EQ(to_float(rational_from(p, q)), static_cast<double>(p) / static_cast<double>(q))
            << p << "/" << q;
    }
}

TEST(RationalTest, ToFloatHandlesHugeOperands) {
    const Rational big(mpz_class("123456789012345678901234567890123456789"),
                       mpz_class("987654321098765432109876543210"));
    EXPECT_DOUBLE_EQ(to_float(big), 123456789012345678901234567890123456789.0 /
                                        987654321098765432109876543210.0);
    // Exact tie between two doubles rounds to even: 2^53 + 1 -> 2^53.
    const Rational tie(mpz_class("9007199254740993"), mpz_class(1));
    EXPECT_EQ(to_float(tie), 9007199254740992.0);
    const Rational tie_up(mpz_class("9007199254740995"), mpz_class(1));
    EXPECT_EQ(to_float(tie_up), 9007199254740996.0);
}

class RationalFieldTest : public ::testing::Test {
protected:
    static constexpr int kCases = 10000;

    Rational draw() {
        std::uniform_int_distribution<std::int64_t> num(-1000000, 1000000);
        std::uniform_int_distribution<std::int64_t> den(1, 1000000);
        return rational_from(num(rng_), den(rng_));
    }

    std::mt19937_64 rng_{42};
};

TEST_F(RationalFieldTest, AxiomsHoldExactly) {
    for (int i = 0; i < kCases; ++i) {
        const Rational a = draw(), b = draw(), c = draw();
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ(a - a, Rational(0));
        if (!a.is_zero()) {
            ASSERT_EQ(a * (Rational(1) / a), Rational(1));
        }
        for (const auto& x : {a + b, a - b, a * b, a.abs(), -c}) ASSERT_TRUE(canonical(x));
        if (!b.is_zero()) {
            ASSERT_TRUE(canonical(a / b));
        }
    }
}

TEST_F(RationalFieldTest, OrderMatchesCrossMultiplication) {
    for (int i = 0; i < kCases; ++i) {
        const Rational a = draw(), b = draw();
        const mpz_class lhs = a.numerator() * b.denominator();
        const mpz_class rhs = b.numerator() * a.denominator();
        ASSERT_EQ(a < b, lhs < rhs);
        ASSERT_EQ(a == b, lhs == rhs);
        ASSERT_EQ(a > b, lhs > rhs);
    }
}

TEST(RationalTest, AbsAndSign) {
    EXPECT_EQ(R("-4/3").abs(), R("4/3"));
    EXPECT_EQ(R("-4/3").sign(), -1);
    EXPECT_EQ(R("0").sign(), 0);
    EXPECT_EQ(Rational(3).to_string(), "3/1");
}

}  // namespace
}  // namespace gcurv
