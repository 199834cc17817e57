#include <gtest/gtest.h>

#include "eqidx/characters.hpp"
#include "eqidx/lefschetz.hpp"
#include "eqidx/verify.hpp"

using namespace eqidx;

namespace {

LaurentPoly P(const char* s, int rank) { return parse(s, rank); }

}  // namespace

TEST(Lefschetz, HandComputed) {
    EXPECT_EQ(lefschetz_residue(1, {P("t^-1", 2)}), P("t1^-1 + t2^-1", 2));
    EXPECT_EQ(lefschetz_residue(1, {P("t^2", 2)}), P("-t1*t2", 2));
    EXPECT_EQ(lefschetz_residue(1, {P("1", 2)}), P("1", 2));
    EXPECT_EQ(lefschetz_residue(2, {P("t", 3)}), LaurentPoly(3));
}

TEST(Lefschetz, MonomialsMatchEuler) {
    for (int n = 1; n <= 3; ++n) {
        for (int b = -6; b <= 6; ++b) {
            const KClassRep f{LaurentPoly::circle_var(n + 1, b)};
            EXPECT_EQ(lefschetz_residue(n, f), chi(n, -b));
            EXPECT_EQ(euler_characteristic(n, f), chi(n, -b));
        }
    }
}

TEST(Lefschetz, IdealIsKilled) {
    for (int n = 1; n <= 3; ++n) {
        EXPECT_TRUE(lefschetz_residue(n, {lambda_poly(n, -1)}).is_zero());
        EXPECT_TRUE(euler_characteristic(n, {lambda_poly(n, -1)}).is_zero());
    }
}

TEST(Lefschetz, TorusCoefficientsPassThrough) {
    const auto f = P("3*t1^2*t2^-1*t^-2 - t2*t", 2);
    EXPECT_EQ(lefschetz_residue(1, {f}), euler_characteristic(1, {f}));
}

TEST(Lefschetz, NumericAgreement) {
    for (int n = 1; n <= 3; ++n) {
        for (int i = 0; i < 10; ++i) {
            auto rng = case_rng(99, n, i);
            const KClassRep f{random_laurent(n + 1, rng, 4, 3, 5, true)};
            const auto exact = lefschetz_residue(n, f);
            const auto pt = random_torus_point(n, 500 + i);
            const Complex rhs = eval_at(exact, pt);
            EXPECT_LE(std::abs(fixed_point_eval(n, f, pt) - rhs), 1e-9 * (1 + std::abs(rhs)));
        }
    }
}

TEST(Lefschetz, PointsAreSeparatedAndDeterministic) {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto a = random_torus_point(3, s);
        const auto b = random_torus_point(3, s);
        EXPECT_GE(min_separation(a), kMinSeparation);
        EXPECT_EQ(a.coords, b.coords);
    }
}

TEST(Lefschetz, Preconditions) {
    EXPECT_THROW(lefschetz_residue(0, {P("t", 1)}), std::invalid_argument);
    EXPECT_THROW(lefschetz_residue(1, {P("t", 3)}), RankMismatch);
    const TorusPoint close({Complex{1, 0}, std::polar(1.0, 1e-5)});
    EXPECT_THROW(fixed_point_eval(1, {P("t", 2)}, close), std::domain_error);
}
