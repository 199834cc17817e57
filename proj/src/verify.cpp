#include "eqidx/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

#include "eqidx/characters.hpp"
#include "eqidx/index.hpp"
#include "eqidx/lefschetz.hpp"

namespace eqidx {

namespace {

using Check = std::function<std::optional<std::string>()>;

struct Case {
    std::string label;
    Check check;
};

struct Suite {
    std::string id;
    std::string range;
    std::vector<Case> cases;
};

struct Range {
    int lo;
    int hi;
};

std::string str(const Range& r) { return std::to_string(r.lo) + ".." + std::to_string(r.hi); }

class SweepBounds {
public:
    explicit SweepBounds(const VerifyOptions& o) : options_(o) {}

    Range n(int lo, int hi) const {
        if (options_.n_max) hi = std::min(hi, *options_.n_max);
        return {lo, hi};
    }

    Range k(int lo, int hi) const {
        if (options_.k_range) {
            lo = std::max(lo, options_.k_range->lo);
            hi = std::min(hi, options_.k_range->hi);
        }
        return {lo, hi};
    }

    std::uint64_t seed() const { return options_.seed; }

private:
    const VerifyOptions& options_;
};

std::optional<std::string> expect_equal(const LaurentPoly& a, const LaurentPoly& b) {
    if (a == b) return std::nullopt;
    return format(a) + " != " + format(b);
}

std::optional<std::string> expect_series(const WindowedSeries& a, const WindowedSeries& b) {
    const auto cmp = compare(a, b);
    if (cmp.equal()) return std::nullopt;
    return "first mismatch at m=" + std::to_string(*cmp.first_mismatch);
}

LaurentPoly one(int rank) { return LaurentPoly::constant(rank, 1); }

// ---------------------------------------------------------------- characters

Suite chi_oracle(const SweepBounds& b) {
    const Range nr = b.n(1, 4);
    const Range lr{-15, 15};
    Suite s{"chi.oracle", "n=" + str(nr) + " l=" + str(lr), {}};
    for (int n = nr.lo; n <= nr.hi; ++n) {
        for (int l = lr.lo; l <= lr.hi; ++l) {
            s.cases.push_back({"n=" + std::to_string(n) + " l=" + std::to_string(l),
                               [n, l] { return expect_equal(chi(n, l), chi_via_shift(n, l)); }});
        }
    }
    return s;
}

Suite chi_euler(const SweepBounds& b) {
    const Range nr = b.n(1, 3);
    const Range lr{-10, 10};
    Suite s{"chi.euler_decomposition", "n=" + str(nr) + " l=" + str(lr), {}};
    for (int n = nr.lo; n <= nr.hi; ++n) {
        for (int l = lr.lo; l <= lr.hi; ++l) {
            s.cases.push_back({"n=" + std::to_string(n) + " l=" + std::to_string(l), [n, l] {
                                   LaurentPoly sum(n + 1);
                                   for (int q = 0; q <= n; ++q) {
                                       const auto h = cohomology_character(n, q, l);
                                       if (q % 2 == 0) {
                                           sum += h;
                                       } else {
                                           sum -= h;
                                       }
                                   }
                                   return expect_equal(chi(n, l), sum);
                               }});
        }
    }
    return s;
}

Integer binomial(long top, long bottom) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
    return out;
}

Suite chi_dimension(const SweepBounds& b) {
    const Range nr = b.n(1, 5);
    const Range lr{-20, 20};
    Suite s{"chi.dimension", "n=" + str(nr) + " l=" + str(lr), {}};
    for (int n = nr.lo; n <= nr.hi; ++n) {
        for (int l = lr.lo; l <= lr.hi; ++l) {
            s.cases.push_back({"n=" + std::to_string(n) + " l=" + std::to_string(l),
                               [n, l]() -> std::optional<std::string> {
                                   Integer expected = 0;
                                   if (l >= 0) {
                                       expected = binomial(l + n, n);
                                   } else if (l <= -n - 1) {
                                       expected = binomial(-l - 1, n);
                                       if (n % 2 != 0) expected = -expected;
                                   }
                                   const Integer got = chi(n, l).identity_value();
                                   if (got != expected) {
                                       return "chi(1) = " + got.get_str() + ", expected " + expected.get_str();
                                   }
                                   for (int q = 0; q <= n; ++q) {
                                       if (dimension(n, q, l) != cohomology_character(n, q, l).identity_value()) {
                                           return "dimension mismatch at q=" + std::to_string(q);
                                       }
                                   }
                                   return std::nullopt;
                               }});
        }
    }
    return s;
}

LaurentPoly lifted(int n, int l) { return chi(n - 1, l).embed(n + 1); }

Suite chi_shift(const SweepBounds& b, int relation) {
    const Range nr = b.n(1, 4);
    Suite s{"chi.shift." + std::to_string(relation), "", {}};
    auto add = [&](int n, int l, int j, Check c) {
        std::string label = "n=" + std::to_string(n) + " l=" + std::to_string(l);
        if (j > 0) label += " j=" + std::to_string(j);
        s.cases.push_back({std::move(label), std::move(c)});
    };
    if (relation == 1) {
        const Range lr{-12, 12};
        s.range = "n=" + str(nr) + " l=" + str(lr);
        for (int n = nr.lo; n <= nr.hi; ++n) {
            for (int l = lr.lo; l <= lr.hi; ++l) {
                add(n, l, 0, [n, l] {
                    const int r = n + 1;
                    return expect_equal(chi(n, l), lifted(n, l) + chi(n, l - 1) * LaurentPoly::torus_var(r, r, -1));
                });
            }
        }
    } else if (relation == 2) {
        const Range lr{-12, 12};
        const Range jr{1, 5};
        s.range = "n=" + str(nr) + " l=" + str(lr) + " j=" + str(jr);
        for (int n = nr.lo; n <= nr.hi; ++n) {
            for (int l = lr.lo; l <= lr.hi; ++l) {
                for (int j = jr.lo; j <= jr.hi; ++j) {
                    add(n, l, j, [n, l, j] {
                        const int r = n + 1;
                        LaurentPoly rhs = chi(n, l - j) * LaurentPoly::torus_var(r, r, -j);
                        for (int i = 0; i < j; ++i) rhs += lifted(n, l - i) * LaurentPoly::torus_var(r, r, -i);
                        return expect_equal(chi(n, l), rhs);
                    });
                }
            }
        }
    } else if (relation == 3) {
        const Range lr{0, 10};
        s.range = "n=" + str(nr) + " l=" + str(lr);
        for (int n = nr.lo; n <= nr.hi; ++n) {
            for (int l = lr.lo; l <= lr.hi; ++l) {
                add(n, l, 0, [n, l] {
                    const int r = n + 1;
                    LaurentPoly rhs(r);
                    for (int i = 0; i <= l; ++i) rhs += lifted(n, l - i) * LaurentPoly::torus_var(r, r, -i);
                    return expect_equal(chi(n, l), rhs);
                });
            }
        }
    } else {
        const Range lr{-12, -2};
        s.range = "n=" + str(nr) + " l=" + str(lr);
        for (int n = nr.lo; n <= nr.hi; ++n) {
            for (int l = lr.lo; l <= lr.hi; ++l) {
                add(n, l, 0, [n, l] {
                    const int r = n + 1;
                    LaurentPoly rhs(r);
                    for (int i = 1; i <= -l - 1; ++i) rhs -= lifted(n, l + i) * LaurentPoly::torus_var(r, r, i);
                    return expect_equal(chi(n, l), rhs);
                });
            }
        }
    }
    return s;
}

Suite chi_vanishing(const SweepBounds& b) {
    const Range nr = b.n(0, 3);
    const Range kr = b.k(-3, 3);
    const Range jr{-6, 6};
    Suite s{"chi.vanishing", "n=" + str(nr) + " k=" + str(kr) + " j=" + str(jr), {}};
    for (int n = nr.lo; n <= nr.hi; ++n) {
        for (int k = kr.lo; k <= kr.hi; ++k) {
            for (int j = jr.lo; j <= jr.hi; ++j) {
                s.cases.push_back({"n=" + std::to_string(n) + " k=" + std::to_string(k) + " j=" + std::to_string(j),
                                   [n, k, j] {
                                       LaurentPoly sum(n + 1);
                                       for (int i = 0; i <= n + 1; ++i) {
                                           const auto term = chi(n, i * k + j) * elementary_symmetric(n + 1, i, k);
                                           if (i % 2 == 0) {
                                               sum += term;
                                           } else {
                                               sum -= term;
                                           }
                                       }
                                       return expect_equal(sum, LaurentPoly(n + 1));
                                   }});
            }
        }
    }
    return s;
}

// -------------------------------------------------------------------- series

template <class Fn>
void for_nk(const SweepBounds& b, Suite& s, Range nr, Range kr, Fn make) {
    for (int n = nr.lo; n <= nr.hi; ++n) {
        for (int k = kr.lo; k <= kr.hi; ++k) {
            s.cases.push_back({"n=" + std::to_string(n) + " k=" + std::to_string(k), make(n, k)});
        }
    }
    (void)b;
}

Window doubled(const Window& w) { return {2 * w.lo, 2 * w.hi}; }

Suite series_truncation(const SweepBounds& b) {
    const Range nr = b.n(0, 3);
    const Range kr = b.k(-3, 3);
    Suite s{"series.truncation", "n=" + str(nr) + " k=" + str(kr) + " default windows x2", {}};
    for_nk(b, s, nr, kr, [](int n, int k) -> Check {
        return [n, k]() -> std::optional<std::string> {
            const Window w = default_window(n, k);
            const Window big = doubled(w);
            const auto small0 = j0(n, k, w);
            const auto big0 = j0(n, k, big);
            const auto small_inf = j_inf(n, k, w);
            const auto big_inf = j_inf(n, k, big);
            if (auto e = expect_series(small0, big0)) return "j0: " + *e;
            if (auto e = expect_series(small_inf, big_inf)) return "j_inf: " + *e;
            const auto small_delta = small0 - small_inf;
            const auto big_delta = big0 - big_inf;
            if (auto e = expect_series(small_delta, big_delta)) return "j_delta: " + *e;
            const auto bk = b_poly(n, k, 0);
            // The big-window action only matters near the small window; a
            // margin of deg_t(B) on both sides covers every contribution.
            const int span = bk.max_circle_degree() - bk.min_circle_degree() + 1;
            const auto near = big_delta.restrict_to({w.lo - span, w.hi + span});
            if (auto e = expect_series(module_action(bk, small_delta), module_action(bk, near))) {
                return "B*J: " + *e;
            }
            return std::nullopt;
        };
    });
    return s;
}

Suite series_unit_laws(const SweepBounds& b) {
    const Range nr = b.n(0, 3);
    const Range kr = b.k(-3, 3);
    Suite s{"series.unit_laws", "n=" + str(nr) + " k=" + str(kr), {}};
    for_nk(b, s, nr, kr, [](int n, int k) -> Check {
        return [n, k]() -> std::optional<std::string> {
            const Window w = default_window(n, k);
            const auto lam = lambda_poly(n, k);
            const auto unit = series_of(one(n + 1), w);
            if (auto e = expect_series(module_action(lam, j0(n, k, w)), unit)) return "lambda*J0: " + *e;
            if (auto e = expect_series(module_action(lam, j_inf(n, k, w)), unit)) return "lambda*Jinf: " + *e;
            return std::nullopt;
        };
    });
    return s;
}

Suite series_annihilation(const SweepBounds& b) {
    const Range nr = b.n(0, 3);
    const Range kr = b.k(-3, 3);
    Suite s{"series.annihilation", "n=" + str(nr) + " k=" + str(kr), {}};
    for_nk(b, s, nr, kr, [](int n, int k) -> Check {
        return [n, k] {
            const Window w = default_window(n, k);
            return expect_series(module_action(lambda_poly(n, k), j_delta(n, k, w)), WindowedSeries(n + 1, w));
        };
    });
    return s;
}

Suite series_support(const SweepBounds& b) {
    const Range nr = b.n(0, 3);
    const Range kr = b.k(-3, 3);
    Suite s{"series.support", "n=" + str(nr) + " k=" + str(kr), {}};
    for_nk(b, s, nr, kr, [](int n, int k) -> Check {
        return [n, k]() -> std::optional<std::string> {
            const Window w = default_window(n, k);
            const auto zero = j0(n, k, w);
            const auto inf = j_inf(n, k, w);
            for (int m = w.lo; m <= w.hi; ++m) {
                if (m < 0 && !zero.coefficient(m).is_zero()) return "j0 nonzero at m=" + std::to_string(m);
                if (m > -(n + 1) && !inf.coefficient(m).is_zero()) return "j_inf nonzero at m=" + std::to_string(m);
                if (m >= 0 && zero.coefficient(m).is_zero()) return "j0 vanishes at m=" + std::to_string(m);
                if (m <= -(n + 1) && inf.coefficient(m).is_zero()) return "j_inf vanishes at m=" + std::to_string(m);
            }
            return std::nullopt;
        };
    });
    return s;
}

// --------------------------------------------------------------------- index

constexpr Window kIndexWindow{-10, 10};

Suite index_main(const SweepBounds& b, bool n0) {
    const Range nr = n0 ? b.n(0, 0) : b.n(1, 3);
    const Range kr = b.k(-3, 3);
    Suite s{n0 ? "index.b_times_j_n0" : "index.b_times_j",
            "n=" + str(nr) + " k=" + str(kr) + " m=-10..10", {}};
    for_nk(b, s, nr, kr, [](int n, int k) -> Check {
        return [n, k]() -> std::optional<std::string> {
            const auto report = index_report(n, k, kIndexWindow);
            if (report.match) return std::nullopt;
            return "first mismatch at m=" + std::to_string(*report.first_mismatch);
        };
    });
    if (!n0) {
        // J(1 - t) is the delta function at 1: every coefficient is 1.
        s.cases.push_back({"delta n=0 k=0", []() -> std::optional<std::string> {
                               const auto d = j_delta(0, 0, kIndexWindow);
                               for (int m = kIndexWindow.lo; m <= kIndexWindow.hi; ++m) {
                                   if (d.coefficient(m) != one(1)) return "coefficient at m=" + std::to_string(m);
                               }
                               const auto d1 = j_delta(0, 1, kIndexWindow);
                               for (int m = kIndexWindow.lo; m <= kIndexWindow.hi; ++m) {
                                   if (d1.coefficient(m).identity_value() != 1) {
                                       return "J(1 - t1 t) at t1=1, m=" + std::to_string(m);
                                   }
                               }
                               return std::nullopt;
                           }});
    }
    return s;
}

template <class Fn>
void for_nkj(Suite& s, Range nr, Range kr, Fn make) {
    for (int n = nr.lo; n <= nr.hi; ++n) {
        for (int k = kr.lo; k <= kr.hi; ++k) {
            for (int j = 0; legal_j(k, j); ++j) {
                s.cases.push_back({"n=" + std::to_string(n) + " k=" + std::to_string(k) + " j=" + std::to_string(j),
                                   make(n, k, j)});
            }
        }
    }
}

Suite index_a_equals_b(const SweepBounds& b) {
    const Range nr = b.n(0, 3);
    const Range kr = b.k(-4, -1);
    Suite s{"index.a_equals_b", "n=" + str(nr) + " k=" + str(kr) + " all j", {}};
    for_nkj(s, nr, kr, [](int n, int k, int j) -> Check {
        return [n, k, j] { return expect_equal(a_poly(n, k, j), b_poly(n, k, j)); };
    });
    return s;
}

Suite index_b_forms(const SweepBounds& b) {
    const Range nr = b.n(0, 3);
    const Range kr = b.k(-3, 3);
    Suite s{"index.b_forms", "n=" + str(nr) + " k=" + str(kr) + " all j", {}};
    for_nkj(s, nr, kr, [](int n, int k, int j) -> Check {
        return [n, k, j] { return expect_equal(b_poly(n, k, j), b_poly_alternate(n, k, j)); };
    });
    return s;
}

Suite index_b_recurrence(const SweepBounds& b) {
    const Range nr = b.n(1, 3);
    const Range kr = b.k(-4, -2);
    Suite s{"index.b_recurrence", "n=" + str(nr) + " k=" + str(kr) + " all j", {}};
    for_nkj(s, nr, kr, [](int n, int k, int j) -> Check {
        return [n, k, j] {
            const int r = n + 1;
            auto prev = [&](int jj) { return b_poly(n - 1, k, jj).embed(r); };
            if (j == 0) {
                LaurentPoly rhs = prev(0);
                for (int jj = 1; jj <= -k - 1; ++jj) {
                    rhs += prev(jj) * LaurentPoly::torus_var(r, r, k + jj).shift_circle(1);
                }
                return expect_equal(b_poly(n, k, 0), rhs);
            }
            const LaurentPoly factor = one(r) - LaurentPoly::torus_var(r, r, k).shift_circle(1);
            return expect_equal(b_poly(n, k, j),
                                factor * prev(j) + LaurentPoly::torus_var(r, r, -1) * b_poly(n, k, j - 1));
        };
    });
    return s;
}

// sum_{m >= 0} (or m < 0) chi_{n,-km+j} t^m on the window, built directly.
WindowedSeries one_sided_chi(int n, int k, int j, HalfSign sign, Window w) {
    return half_series(n, k, j, sign, w);
}

Suite index_chi_recurrence(const SweepBounds& b) {
    const Range nr = b.n(1, 3);
    const Range kr = b.k(-3, -1);
    Suite s{"index.chi_recurrence", "n=" + str(nr) + " k=" + str(kr) + " |m|<=12", {}};
    constexpr int H = 12;
    for_nk(b, s, nr, kr, [](int n, int k) -> Check {
        return [n, k]() -> std::optional<std::string> {
            const int r = n + 1;
            const auto a = LaurentPoly::torus_var(r, r, k);
            auto lower = [&](int j, HalfSign sign, Window w) {
                // chi_{n-1,.} series lifted to rank n+1.
                const auto src = one_sided_chi(n - 1, k, j, sign, w);
                std::vector<LaurentPoly> c;
                for (const auto& x : src.coeffs()) c.push_back(x.embed(r));
                return WindowedSeries(r, w, std::move(c));
            };
            auto tail = [&](HalfSign sign, Window w) {
                WindowedSeries acc(r, Window{w.lo + 1, w.hi + 1});
                for (int j = 0; j <= -k - 1; ++j) {
                    acc = acc + module_action(LaurentPoly::torus_var(r, r, k + j).shift_circle(1), lower(j, sign, w));
                }
                return acc;
            };
            {
                // m >= 0: lower support edges sit at 0 (and -1 before the shift).
                const auto sum = tail(HalfSign::nonneg, Window{-1, H});
                const auto geo = geometric_expansion(a, Window{0, H + 1}, ExpansionPoint::zero);
                const auto rhs = lower(0, HalfSign::nonneg, Window{0, H}) +
                                 truncated_product(sum, geo, SupportEdge::lower);
                if (auto e = expect_series(one_sided_chi(n, k, 0, HalfSign::nonneg, Window{0, H}), rhs)) {
                    return "m>=0: " + *e;
                }
            }
            {
                // m < 0: upper support edges sit at -1 (0 after the shift).
                const auto sum = tail(HalfSign::neg, Window{-H - 1, -1});
                const auto geo = geometric_expansion(a, Window{-H, -1}, ExpansionPoint::infinity);
                const auto rhs = lower(0, HalfSign::neg, Window{-H, -1}) +
                                 truncated_product(sum, geo, SupportEdge::upper);
                if (auto e = expect_series(one_sided_chi(n, k, 0, HalfSign::neg, Window{-H, -1}), rhs)) {
                    return "m<0: " + *e;
                }
            }
            return std::nullopt;
        };
    });
    return s;
}

Suite index_halves(const SweepBounds& b) {
    const Range nr = b.n(0, 3);
    const Range kr = b.k(-3, 3);
    Suite s{"index.half_series", "n=" + str(nr) + " k=" + str(kr) + " all j m=-10..10", {}};
    for_nkj(s, nr, kr, [](int n, int k, int j) -> Check {
        return [n, k, j]() -> std::optional<std::string> {
            for (auto sign : {HalfSign::nonneg, HalfSign::neg}) {
                if (auto e = expect_series(half_series(n, k, j, sign, kIndexWindow),
                                           half_series_formula(n, k, j, sign, kIndexWindow))) {
                    return (sign == HalfSign::nonneg ? "B*J0: " : "-B*Jinf: ") + *e;
                }
            }
            return std::nullopt;
        };
    });
    return s;
}

// ----------------------------------------------------------------- lefschetz

constexpr int kRandomReps = 50;
constexpr int kPointsPerRep = 20;
constexpr int kIdealPairs = 20;

enum : std::uint64_t { kStreamReps = 1, kStreamIdeal = 2, kStreamPoints = 3 };

// Class representatives of the Lefschetz sweep for one n, with labels.
std::vector<std::pair<std::string, LaurentPoly>> lefschetz_inputs(int n, std::uint64_t seed) {
    const int r = n + 1;
    std::vector<std::pair<std::string, LaurentPoly>> out;
    for (int bb = -6; bb <= 6; ++bb) out.emplace_back("t^" + std::to_string(bb), LaurentPoly::circle_var(r, bb));
    out.emplace_back("lambda", lambda_poly(n, -1));
    for (int i = 0; i < kRandomReps; ++i) {
        auto rng = case_rng(seed, kStreamReps * 16 + n, i);
        out.emplace_back("random#" + std::to_string(i), random_laurent(r, rng, 4, 3, 5, true));
    }
    return out;
}

Suite lefschetz_oracle(const SweepBounds& b) {
    const Range nr = b.n(1, 3);
    Suite s{"lefschetz.oracle", "n=" + str(nr) + " t^-6..t^6, lambda, 50 random", {}};
    for (int n = nr.lo; n <= nr.hi; ++n) {
        for (auto& [label, f] : lefschetz_inputs(n, b.seed())) {
            s.cases.push_back({"n=" + std::to_string(n) + " f=" + label, [n, f = f] {
                                   const KClassRep rep{f};
                                   return expect_equal(lefschetz_residue(n, rep), euler_characteristic(n, rep));
                               }});
        }
    }
    return s;
}

Suite lefschetz_ideal(const SweepBounds& b) {
    const Range nr = b.n(1, 3);
    Suite s{"lefschetz.ideal_invariance", "n=" + str(nr) + " 20 random (f, q)", {}};
    for (int n = nr.lo; n <= nr.hi; ++n) {
        for (int i = 0; i < kIdealPairs; ++i) {
            const std::uint64_t seed = b.seed();
            s.cases.push_back({"n=" + std::to_string(n) + " pair#" + std::to_string(i), [n, i, seed] {
                                   auto rng = case_rng(seed, kStreamIdeal * 16 + n, i);
                                   const auto f = random_laurent(n + 1, rng, 4, 3, 5, true);
                                   const auto q = random_laurent(n + 1, rng, 3, 2, 3, true);
                                   const auto shifted = f + lambda_poly(n, -1) * q;
                                   return expect_equal(lefschetz_residue(n, KClassRep{shifted}),
                                                       lefschetz_residue(n, KClassRep{f}));
                               }});
        }
    }
    return s;
}

Suite lefschetz_numeric(const SweepBounds& b) {
    const Range nr = b.n(1, 3);
    Suite s{"lefschetz.numeric", "n=" + str(nr) + " monomials, lambda, 50 random x 20 points, tol 1e-9(1+|v|)", {}};
    for (int n = nr.lo; n <= nr.hi; ++n) {
        for (auto& [label, f] : lefschetz_inputs(n, b.seed())) {
            const std::uint64_t seed = b.seed();
            s.cases.push_back({"n=" + std::to_string(n) + " f=" + label,
                               [n, f = f, seed, label = label]() -> std::optional<std::string> {
                                   const KClassRep rep{f};
                                   const auto exact = lefschetz_residue(n, rep);
                                   for (int p = 0; p < kPointsPerRep; ++p) {
                                       auto rng = case_rng(seed, kStreamPoints * 16 + n, p);
                                       const auto pt = random_torus_point(n, rng());
                                       const Complex lhs = fixed_point_eval(n, rep, pt);
                                       const Complex rhs = eval_at(exact, pt);
                                       const double err = std::abs(lhs - rhs);
                                       if (!(err <= 1e-9 * (1.0 + std::abs(rhs)))) {
                                           std::ostringstream os;
                                           os << "point #" << p << " abs_err=" << std::setprecision(3) << err;
                                           return os.str();
                                       }
                                   }
                                   return std::nullopt;
                               }});
        }
    }
    return s;
}

Suite lefschetz_polynomiality(const SweepBounds& b) {
    const Range nr = b.n(1, 3);
    Suite s{"lefschetz.polynomiality", "n=" + str(nr) + " monomials, lambda, 50 random", {}};
    for (int n = nr.lo; n <= nr.hi; ++n) {
        for (auto& [label, f] : lefschetz_inputs(n, b.seed())) {
            s.cases.push_back({"n=" + std::to_string(n) + " f=" + label, [n, f = f]() -> std::optional<std::string> {
                                   try {
                                       (void)lefschetz_residue(n, KClassRep{f});
                                   } catch (const std::domain_error& e) {
                                       return std::string(e.what());
                                   }
                                   return std::nullopt;
                               }});
        }
    }
    return s;
}

// ------------------------------------------------------------------- running

using SuiteBuilder = std::function<Suite(const SweepBounds&)>;

const std::vector<std::pair<std::string, SuiteBuilder>>& registry() {
    static const std::vector<std::pair<std::string, SuiteBuilder>> r = {
        {"chi.oracle", chi_oracle},
        {"chi.euler_decomposition", chi_euler},
        {"chi.dimension", chi_dimension},
        {"chi.shift.1", [](const SweepBounds& b) { return chi_shift(b, 1); }},
        {"chi.shift.2", [](const SweepBounds& b) { return chi_shift(b, 2); }},
        {"chi.shift.3", [](const SweepBounds& b) { return chi_shift(b, 3); }},
        {"chi.shift.4", [](const SweepBounds& b) { return chi_shift(b, 4); }},
        {"chi.vanishing", chi_vanishing},
        {"series.truncation", series_truncation},
        {"series.unit_laws", series_unit_laws},
        {"series.annihilation", series_annihilation},
        {"series.support", series_support},
        {"index.b_times_j", [](const SweepBounds& b) { return index_main(b, false); }},
        {"index.b_times_j_n0", [](const SweepBounds& b) { return index_main(b, true); }},
        {"index.a_equals_b", index_a_equals_b},
        {"index.b_forms", index_b_forms},
        {"index.b_recurrence", index_b_recurrence},
        {"index.chi_recurrence", index_chi_recurrence},
        {"index.half_series", index_halves},
        {"lefschetz.oracle", lefschetz_oracle},
        {"lefschetz.ideal_invariance", lefschetz_ideal},
        {"lefschetz.numeric", lefschetz_numeric},
        {"lefschetz.polynomiality", lefschetz_polynomiality},
    };
    return r;
}

std::optional<std::string> run_case(const Case& c) {
    try {
        return c.check();
    } catch (const std::exception& e) {
        return std::string("exception: ") + e.what();
    }
}

}  // namespace

int VerifyReport::total_failures() const {
    int total = 0;
    for (const auto& s : suites) total += s.failures;
    return total;
}

const std::vector<std::string>& suite_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& [id, _] : registry()) out.push_back(id);
        return out;
    }();
    return ids;
}

VerifyReport run_verify(const VerifyOptions& options) {
    for (const auto& id : options.only) {
        if (std::find(suite_ids().begin(), suite_ids().end(), id) == suite_ids().end()) {
            throw std::invalid_argument("unknown suite id: " + id);
        }
    }
    const SweepBounds bounds(options);
    std::vector<Suite> suites;
    for (const auto& [id, build] : registry()) {
        if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), id) == options.only.end()) {
            continue;
        }
        suites.push_back(build(bounds));
    }

    std::vector<std::pair<std::size_t, std::size_t>> work;
    for (std::size_t s = 0; s < suites.size(); ++s) {
        for (std::size_t c = 0; c < suites[s].cases.size(); ++c) work.emplace_back(s, c);
    }
    std::vector<std::optional<std::string>> outcome(work.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < work.size(); i = next++) {
            outcome[i] = run_case(suites[work[i].first].cases[work[i].second]);
        }
    };
    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    }

    VerifyReport report;
    report.seed = options.seed;
    for (const auto& s : suites) report.suites.push_back({s.id, s.range, static_cast<int>(s.cases.size()), 0, {}});
    for (std::size_t i = 0; i < work.size(); ++i) {
        if (!outcome[i]) continue;
        auto& r = report.suites[work[i].first];
        ++r.failures;
        if (!r.first_failure) r.first_failure = suites[work[i].first].cases[work[i].second].label + ": " + *outcome[i];
    }
    return report;
}

std::string format_report(const VerifyReport& report) {
    std::ostringstream os;
    os << "seed " << report.seed << '\n';
    for (const auto& s : report.suites) {
        os << (s.failures == 0 ? "PASS " : "FAIL ") << std::left << std::setw(28) << s.id << ' ' << std::right
           << std::setw(5) << s.cases << " cases " << std::setw(4) << s.failures << " failures  [" << s.range << "]\n";
        if (s.first_failure) os << "     first failure: " << *s.first_failure << '\n';
    }
    os << (report.exit_status() == 0 ? "all suites passed" : "verification FAILED") << '\n';
    return os.str();
}

Json to_json(const VerifyReport& report) {
    Json suites = Json::array();
    for (const auto& s : report.suites) {
        suites.push_back(Json{{"id", s.id},
                              {"range", s.range},
                              {"cases", s.cases},
                              {"failures", s.failures},
                              {"first_failure", s.first_failure ? Json(*s.first_failure) : Json(nullptr)}});
    }
    return Json{{"seed", report.seed}, {"suites", std::move(suites)}, {"exit_status", report.exit_status()}};
}

LaurentPoly random_laurent(int rank, std::mt19937_64& rng, int max_terms, int exp_bound, int coeff_bound,
                           bool with_circle) {
    std::uniform_int_distribution<int> count(1, max_terms);
    std::uniform_int_distribution<int> expo(-exp_bound, exp_bound);
    std::uniform_int_distribution<int> coeff(1, coeff_bound);
    std::bernoulli_distribution negative(0.5);
    std::vector<LaurentPoly::Term> terms;
    const int n_terms = count(rng);
    for (int i = 0; i < n_terms; ++i) {
        Exponent e;
        for (int j = 0; j < rank; ++j) e.torus[j] = expo(rng);
        if (with_circle) e.circle = expo(rng);
        const int c = coeff(rng);
        const bool neg = negative(rng);
        // A repeated exponent is dropped so coefficients stay in range.
        if (std::any_of(terms.begin(), terms.end(), [&](const auto& t) { return t.exp == e; })) continue;
        terms.push_back({e, neg ? -c : c});
    }
    return LaurentPoly::from_terms(rank, std::move(terms));
}

std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(index)};
    return std::mt19937_64(seq);
}

}  // namespace eqidx
