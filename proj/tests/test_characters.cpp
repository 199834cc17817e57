#include <gtest/gtest.h>

#include <thread>

#include "eqidx/characters.hpp"

using namespace eqidx;

namespace {

LaurentPoly P(const char* s, int rank) { return parse(s, rank); }

}  // namespace

TEST(Characters, SmallValues) {
    EXPECT_EQ(chi(1, 2), P("t1^-2 + t1^-1*t2^-1 + t2^-2", 2));
    EXPECT_EQ(chi(1, 0), P("1", 2));
    EXPECT_EQ(chi(1, -1), LaurentPoly(2));
    EXPECT_EQ(chi(1, -2), P("-t1*t2", 2));
    EXPECT_EQ(chi(1, -3), P("-t1^2*t2 - t1*t2^2", 2));
    EXPECT_EQ(chi(2, -3), P("t1*t2*t3", 3));
    EXPECT_EQ(chi(2, 1), P("t1^-1 + t2^-1 + t3^-1", 3));
    EXPECT_EQ(chi(0, 3), P("t1^-3", 1));
    EXPECT_EQ(chi(0, -2), P("t1^2", 1));
}

TEST(Characters, GapVanishes) {
    for (int n = 1; n <= 5; ++n) {
        for (int l = -n; l <= -1; ++l) EXPECT_TRUE(chi(n, l).is_zero()) << n << " " << l;
    }
}

TEST(Characters, Compositions) {
    int count = 0;
    for_each_composition(3, 4, [&](const std::vector<int>& r) {
        EXPECT_EQ(r[0] + r[1] + r[2], 4);
        ++count;
    });
    EXPECT_EQ(count, 15);
    count = 0;
    for_each_composition(1, 0, [&](const std::vector<int>&) { ++count; });
    EXPECT_EQ(count, 1);
    count = 0;
    for_each_composition(2, -1, [&](const std::vector<int>&) { ++count; });
    EXPECT_EQ(count, 0);
}

TEST(Characters, ShiftOracleAgrees) {
    for (int n = 0; n <= 4; ++n) {
        for (int l = -15; l <= 15; ++l) ASSERT_EQ(chi(n, l), chi_via_shift(n, l)) << n << " " << l;
    }
}

TEST(Characters, Cohomology) {
    EXPECT_EQ(cohomology_character(3, 2, 5), LaurentPoly(4));
    EXPECT_EQ(cohomology_character(1, 0, 1), P("t1^-1 + t2^-1", 2));
    EXPECT_EQ(cohomology_character(1, 1, -3), P("t1^2*t2 + t1*t2^2", 2));
    EXPECT_EQ(cohomology_character(2, 0, -1), LaurentPoly(3));
    EXPECT_EQ(dimension(2, 0, 3), 10);
    EXPECT_EQ(dimension(2, 2, -5), 6);
    EXPECT_EQ(dimension(3, 1, 0), 0);
    EXPECT_THROW(cohomology_character(2, 3, 0), std::exception);
    EXPECT_THROW(cohomology_character(0, 0, 0), std::exception);
}

TEST(Characters, MemoIsTransparent) {
    CharacterTable cached(true);
    CharacterTable uncached(false);
    for (int n = 0; n <= 3; ++n) {
        for (int l = -8; l <= 8; ++l) {
            ASSERT_EQ(cached.chi(n, l), uncached.chi(n, l));
            ASSERT_EQ(cached.chi(n, l), cached.chi(n, l));
        }
    }
    EXPECT_EQ(uncached.cached_entries(), 0u);
    EXPECT_EQ(cached.cached_entries(), 4u * 17u);
}

TEST(Characters, ConcurrentTable) {
    CharacterTable table;
    std::vector<std::jthread> pool;
    std::atomic<int> bad{0};
    for (int t = 0; t < 4; ++t) {
        pool.emplace_back([&, t] {
            for (int l = -10; l <= 10; ++l) {
                if (table.chi(1 + t % 3, l) != chi_via_shift(1 + t % 3, l)) ++bad;
            }
        });
    }
    pool.clear();
    EXPECT_EQ(bad.load(), 0);
}

TEST(Characters, NegativeNRejected) {
    EXPECT_THROW(chi(-1, 0), std::exception);
    EXPECT_THROW(chi_via_shift(-1, 0), std::exception);
}
