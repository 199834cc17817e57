#include <gtest/gtest.h>

#include <random>

#include "eqidx/lefschetz.hpp"
#include "eqidx/verify.hpp"

using namespace eqidx;

namespace {

LaurentPoly P(const char* s, int rank) { return parse(s, rank); }

}  // namespace

TEST(Laurent, ParseFormatRoundTrip) {
    for (const char* s : {"0", "1", "-1", "t1^-2 + t1^-1*t2^-1 + t2^-2", "1 - 3*t + 3*t^2 - t^3",
                          "7*t2^-3*t^-1 - t1*t2^4", "1 + t1^-1*t2^-1*t"}) {
        EXPECT_EQ(format(P(s, 2)), s);
    }
}

TEST(Laurent, ParseNormalizes) {
    EXPECT_EQ(format(P("t*t1 + t1*t - 2*t1*t", 2)), "0");
    EXPECT_EQ(format(P("t2 + t1", 2)), "t2 + t1");  // lex order puts t1^0 first
    EXPECT_EQ(P("t1^2", 1), P("t1*t1", 1));
    EXPECT_EQ(P("3 - 3", 1), LaurentPoly(1));
}

TEST(Laurent, ParseErrors) {
    EXPECT_THROW(P("t3", 2), ParseError);
    EXPECT_THROW(P("t1^", 2), ParseError);
    EXPECT_THROW(P("1 +", 2), ParseError);
    EXPECT_THROW(P("x", 2), ParseError);
    try {
        P("t1 + t9", 2);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 5u);
    }
}

TEST(Laurent, RankMismatch) {
    EXPECT_THROW(P("t1", 1) + P("t1", 2), RankMismatch);
    EXPECT_THROW(P("t1", 1) * P("t1", 2), RankMismatch);
}

TEST(Laurent, Basics) {
    const auto p = P("2*t1^-1*t^-2 + t2*t^3 - 5", 2);
    EXPECT_EQ(p.min_circle_degree(), -2);
    EXPECT_EQ(p.max_circle_degree(), 3);
    EXPECT_EQ(p.circle_coefficient(-2), P("2*t1^-1", 2));
    EXPECT_EQ(p.circle_coefficient(1), LaurentPoly(2));
    EXPECT_EQ(p.shift_circle(2), P("2*t1^-1 + t2*t^5 - 5*t^2", 2));
    EXPECT_EQ(p.identity_value(), -2);
    EXPECT_EQ(p.embed(3), P("2*t1^-1*t^-2 + t2*t^3 - 5", 3));
    EXPECT_FALSE(p.is_torus_only());
    EXPECT_THROW(LaurentPoly(2).min_circle_degree(), std::exception);
}

TEST(Laurent, BigCoefficients) {
    auto p = P("1 + t1", 1);
    LaurentPoly q = LaurentPoly::constant(1, 1);
    for (int i = 0; i < 100; ++i) q *= p;
    EXPECT_EQ(q.identity_value(), Integer("1267650600228229401496703205376"));
    EXPECT_EQ(q.circle_coefficient(0).terms()[50].coeff, Integer("100891344545564193334812497256"));
}

TEST(Laurent, RingLawsRandom) {
    for (int i = 0; i < 200; ++i) {
        auto rng = case_rng(7, 0, i);
        const int rank = 1 + i % 3;
        const auto a = random_laurent(rank, rng, 5, 3, 9, true);
        const auto b = random_laurent(rank, rng, 5, 3, 9, true);
        const auto c = random_laurent(rank, rng, 5, 3, 9, true);
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a - a, LaurentPoly(rank));
        ASSERT_EQ(a * LaurentPoly::constant(rank, 1), a);
        ASSERT_EQ(-(-a), a);
        ASSERT_EQ((a * b).identity_value(), a.identity_value() * b.identity_value());
    }
}

TEST(Laurent, DivideExact) {
    const auto a = P("1 + t1^-1*t2 - 3*t", 2);
    const auto b = P("t2 - t1^2 + t^-1", 2);
    auto q = divide_exact(a * b, b);
    ASSERT_TRUE(q);
    EXPECT_EQ(*q, a);
    EXPECT_FALSE(divide_exact(a, P("t1 - t2", 2)));
    EXPECT_FALSE(divide_exact(P("2*t1", 2), P("3", 2)));
}

TEST(Laurent, LambdaSumEqualsProduct) {
    for (int n = 0; n <= 3; ++n) {
        for (int k = -3; k <= 3; ++k) {
            const int r = n + 1;
            LaurentPoly sum(r);
            for (int i = 0; i <= r; ++i) {
                const auto term = elementary_symmetric(r, i, k).shift_circle(i);
                if (i % 2 == 0) {
                    sum += term;
                } else {
                    sum -= term;
                }
            }
            EXPECT_EQ(lambda_poly(n, k), sum) << n << " " << k;
        }
    }
}

TEST(Laurent, ElementarySymmetric) {
    EXPECT_EQ(elementary_symmetric(3, 0, 2), P("1", 3));
    EXPECT_EQ(elementary_symmetric(3, 2, 1), P("t1*t2 + t1*t3 + t2*t3", 3));
    EXPECT_EQ(elementary_symmetric(2, 1, -1), P("t1^-1 + t2^-1", 2));
    EXPECT_EQ(elementary_symmetric(2, 3, 1), LaurentPoly(2));
    // s_i(t^-1) = s_{r-i}(t) / (t1...tr)
    for (int r = 1; r <= 4; ++r) {
        for (int i = 0; i <= r; ++i) {
            EXPECT_EQ(elementary_symmetric(r, i, -1) * torus_product(r, 1), elementary_symmetric(r, r - i, 1));
        }
    }
}

TEST(Laurent, EvalIsHomomorphism) {
    for (int i = 0; i < 50; ++i) {
        auto rng = case_rng(11, 0, i);
        const auto a = random_laurent(3, rng, 4, 3, 5, false);
        const auto b = random_laurent(3, rng, 4, 3, 5, false);
        const auto pt = random_torus_point(2, 1000 + i);
        const Complex lhs = eval_at(a * b, pt);
        const Complex rhs = eval_at(a, pt) * eval_at(b, pt);
        EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-9 * (1 + std::abs(rhs)));
    }
}

TEST(Laurent, SubstituteT) {
    const auto p = P("t1^2*t^-1 + 3*t^2 - t2", 2);
    EXPECT_EQ(substitute_t(p, 1), P("t1 + 3*t1^2 - t2", 2));
    EXPECT_EQ(substitute_t(p, 2), P("t1^2*t2^-1 + 3*t2^2 - t2", 2));
    EXPECT_THROW(substitute_t(p, 3), std::out_of_range);
}

TEST(Laurent, TorusPointValidation) {
    EXPECT_THROW(TorusPoint({Complex{1.1, 0}}), std::invalid_argument);
    EXPECT_NO_THROW(TorusPoint({Complex{0, 1}}));
}

TEST(Laurent, JsonRoundTrip) {
    const auto p = P("-12345678901234567890*t1^-1*t^-2 + t2*t^3 - 5", 2);
    EXPECT_EQ(laurent_from_json(to_json(p)), p);
    EXPECT_EQ(laurent_from_json(Json::parse(to_json(p).dump())), p);
}
