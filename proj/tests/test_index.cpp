#include <gtest/gtest.h>

#include "eqidx/characters.hpp"
#include "eqidx/index.hpp"

using namespace eqidx;

namespace {

LaurentPoly P(const char* s, int rank) { return parse(s, rank); }

}  // namespace

TEST(Index, LegalJ) {
    EXPECT_TRUE(legal_j(0, 0));
    EXPECT_FALSE(legal_j(0, 1));
    EXPECT_TRUE(legal_j(-3, 2));
    EXPECT_FALSE(legal_j(3, 3));
    EXPECT_FALSE(legal_j(-1, -1));
    EXPECT_THROW(b_poly(1, 2, 2), std::out_of_range);
}

TEST(Index, KnownB) {
    for (int n = 0; n <= 4; ++n) {
        EXPECT_EQ(b_poly(n, -1, 0), LaurentPoly::constant(n + 1, 1));
        LaurentPoly expected = LaurentPoly::constant(n + 1, 1);
        for (int i = 0; i < n; ++i) expected *= P("1 - t", n + 1);
        EXPECT_EQ(b_poly(n, 0, 0), expected);
    }
    EXPECT_EQ(b_poly(1, -2, 0), P("1 + t1^-1*t2^-1*t", 2));
}

TEST(Index, BothBForms) {
    for (int n = 0; n <= 3; ++n) {
        for (int k = -3; k <= 3; ++k) {
            for (int j = 0; legal_j(k, j); ++j) ASSERT_EQ(b_poly(n, k, j), b_poly_alternate(n, k, j));
        }
    }
}

TEST(Index, AEqualsB) {
    for (int n = 0; n <= 3; ++n) {
        for (int k = -4; k <= -1; ++k) {
            for (int j = 0; legal_j(k, j); ++j) ASSERT_EQ(a_poly(n, k, j), b_poly(n, k, j)) << n << k << j;
        }
    }
    EXPECT_THROW(a_poly(1, 0, 0), std::domain_error);
    EXPECT_THROW(a_poly(1, 2, 0), std::domain_error);
}

TEST(Index, DirectSeries) {
    const auto s = index_series_direct(2, 2, {-3, 3});
    EXPECT_EQ(s.coefficient(-2), chi(2, 4));
    EXPECT_EQ(s.coefficient(1), chi(2, -2));
    const auto z = index_series_direct(2, 0, {-4, 4});
    for (int m = -4; m <= 4; ++m) EXPECT_EQ(z.coefficient(m), LaurentPoly::constant(3, 1));
}

TEST(Index, DirectEqualsBTimesJ) {
    for (int n = 0; n <= 3; ++n) {
        for (int k = -3; k <= 3; ++k) {
            const auto r = index_report(n, k, {-10, 10});
            EXPECT_TRUE(r.match) << n << " " << k << " at " << r.first_mismatch.value_or(0);
        }
    }
}

TEST(Index, Halves) {
    for (int n = 0; n <= 3; ++n) {
        for (int k = -3; k <= 3; ++k) {
            for (int j = 0; legal_j(k, j); ++j) {
                for (auto sign : {HalfSign::nonneg, HalfSign::neg}) {
                    ASSERT_TRUE(series_equal(half_series(n, k, j, sign, {-10, 10}),
                                             half_series_formula(n, k, j, sign, {-10, 10})));
                }
            }
        }
    }
    const auto h = half_series(1, -1, 0, HalfSign::neg, {-3, 3});
    EXPECT_TRUE(h.coefficient(0).is_zero());
    EXPECT_EQ(h.coefficient(-2), chi(1, -2));
}

TEST(Index, ReportJsonKeyOrder) {
    const auto j = to_json(index_report(1, 2, {-2, 2}));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"n", "k", "window", "match", "first_mismatch", "direct", "formula"}));
    EXPECT_TRUE(j["match"].get<bool>());
    EXPECT_TRUE(j["first_mismatch"].is_null());
}
