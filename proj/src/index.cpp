#include "eqidx/index.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "eqidx/characters.hpp"

namespace eqidx {

namespace {

void require_legal_j(int k, int j) {
    if (!legal_j(k, j)) {
        throw std::out_of_range("j = " + std::to_string(j) + " outside [0, max(0, |k|-1)] for k = " +
                                std::to_string(k));
    }
}

Integer alternating(int e) { return e % 2 == 0 ? 1 : -1; }

// Window of J needed so that p * J is exact on `target`.
Window source_window(const LaurentPoly& p, const Window& target) {
    if (p.is_zero()) return target;
    return {target.lo - p.max_circle_degree(), target.hi - p.min_circle_degree()};
}

WindowedSeries act_exactly(const LaurentPoly& p, const WindowedSeries& s, const Window& target) {
    return module_action(p, s).restrict_to(target);
}

}  // namespace

bool legal_j(int k, int j) { return j >= 0 && j <= std::max(0, std::abs(k) - 1); }

LaurentPoly b_poly(int n, int k, int j) {
    if (n < 0) throw std::invalid_argument("b_poly: n must be nonnegative");
    require_legal_j(k, j);
    const int rank = n + 1;
    LaurentPoly out(rank);
    for (int l = 0; l <= n; ++l) {
        LaurentPoly inner(rank);
        for (int i = 1; i <= n + 1 - l; ++i) {
#ifdef EQIDX_INJECT_BPOLY_SIGN_FAULT
            const Integer sign = alternating(i + l);
#else
            const Integer sign = alternating(i + l + 1);
#endif
            inner += sign * (chi(n, i * k + j) * elementary_symmetric(rank, i + l, k));
        }
        out += inner.shift_circle(l);
    }
    return out;
}

LaurentPoly b_poly_alternate(int n, int k, int j) {
    if (n < 0) throw std::invalid_argument("b_poly_alternate: n must be nonnegative");
    require_legal_j(k, j);
    const int rank = n + 1;
    LaurentPoly out(rank);
    for (int l = 0; l <= n; ++l) {
        LaurentPoly inner(rank);
        for (int a = 0; a <= l; ++a) {
            inner += alternating(a) * (chi(n, (a - l) * k + j) * elementary_symmetric(rank, a, k));
        }
        out += inner.shift_circle(l);
    }
    return out;
}

LaurentPoly a_poly(int n, int k, int j) {
    if (n < 0) throw std::invalid_argument("a_poly: n must be nonnegative");
    if (k >= 0) throw std::domain_error("a_poly is defined only for k < 0");
    require_legal_j(k, j);
    if (k == -1) return LaurentPoly::constant(n + 1, 1);
    const int width = -k;
    // level[j] = A_{m,k}^j at the current m, rank m+1.
    std::vector<LaurentPoly> level;
    for (int jj = 0; jj < width; ++jj) level.push_back(LaurentPoly::torus_var(1, 1, -jj));
    for (int m = 1; m <= n; ++m) {
        const int rank = m + 1;
        std::vector<LaurentPoly> prev;
        for (const auto& a : level) prev.push_back(a.embed(rank));
        std::vector<LaurentPoly> next;
        // A_m^0 = A_{m-1}^0 + sum_{j=1}^{|k|-1} A_{m-1}^j t_{m+1}^{k+j} t
        LaurentPoly a0 = prev[0];
        for (int jj = 1; jj < width; ++jj) {
            a0 += prev[jj] * LaurentPoly::torus_var(rank, rank, k + jj).shift_circle(1);
        }
        next.push_back(std::move(a0));
        // A_m^j = (1 - t_{m+1}^k t) A_{m-1}^j + t_{m+1}^{-1} A_m^{j-1}
        const LaurentPoly factor =
            LaurentPoly::constant(rank, 1) - LaurentPoly::torus_var(rank, rank, k).shift_circle(1);
        for (int jj = 1; jj < width; ++jj) {
            next.push_back(factor * prev[jj] + LaurentPoly::torus_var(rank, rank, -1) * next[jj - 1]);
        }
        level = std::move(next);
    }
    return level[j];
}

WindowedSeries index_series_direct(int n, int k, Window window) {
    WindowedSeries out(n + 1, window);
    for (int m = window.lo; m <= window.hi; ++m) out.set(m, chi(n, -k * m));
    return out;
}

WindowedSeries index_series_formula(int n, int k, Window window) {
    const LaurentPoly b = b_poly(n, k, 0);
    return act_exactly(b, j_delta(n, k, source_window(b, window)), window);
}

WindowedSeries half_series(int n, int k, int j, HalfSign sign, Window window) {
    require_legal_j(k, j);
    WindowedSeries out(n + 1, window);
    for (int m = window.lo; m <= window.hi; ++m) {
        if ((sign == HalfSign::nonneg) == (m >= 0)) out.set(m, chi(n, -k * m + j));
    }
    return out;
}

WindowedSeries half_series_formula(int n, int k, int j, HalfSign sign, Window window) {
    const LaurentPoly b = b_poly(n, k, j);
    const Window src = source_window(b, window);
    if (sign == HalfSign::nonneg) return act_exactly(b, j0(n, k, src), window);
    return -act_exactly(b, j_inf(n, k, src), window);
}

IndexSeriesReport index_report(int n, int k, Window window) {
    WindowedSeries direct = index_series_direct(n, k, window);
    WindowedSeries formula = index_series_formula(n, k, window);
    const SeriesComparison cmp = compare(direct, formula);
    return IndexSeriesReport{n, k, window, std::move(direct), std::move(formula), cmp.equal(),
                             cmp.first_mismatch};
}

Json to_json(const IndexSeriesReport& r) {
    return Json{{"n", r.n},
                {"k", r.k},
                {"window", Json::array({r.window.lo, r.window.hi})},
                {"match", r.match},
                {"first_mismatch", r.first_mismatch ? Json(*r.first_mismatch) : Json(nullptr)},
                {"direct", to_json(r.direct)},
                {"formula", to_json(r.formula)}};
}

}  // namespace eqidx
