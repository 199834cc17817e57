#pragma once

// The transversal index of the lifted Dolbeault operator p_k^*[D_n] on the
// circle bundle S(O(k)) over CP^n, built two ways: directly from the
// characters chi_{n,-km}, and as B_{n,k}^0 * J(lambda_{n+1}(k)).

#include <optional>

#include "eqidx/series.hpp"

namespace eqidx {

/// Legal j for B_{n,k}^j: 0 <= j <= max(0, |k|-1).
bool legal_j(int k, int j);

/// B_{n,k}^j from its defining double sum
/// sum_{l=0}^{n} sum_{i=1}^{n+1-l} (-1)^{i+l+1} chi_{n,ik+j} s_{i+l}(t^k) t^l.
LaurentPoly b_poly(int n, int k, int j);

/// B_{n,k}^j from the alternate sum
/// sum_{l=0}^{n} sum_{a=0}^{l} (-1)^a chi_{n,(a-l)k+j} s_a(t^k) t^l.
LaurentPoly b_poly_alternate(int n, int k, int j);

/// A_{n,k}^j for k < 0 from its recurrences in n and j only.
LaurentPoly a_poly(int n, int k, int j);

/// sum_m chi_{n,-km} t^m on the window.
WindowedSeries index_series_direct(int n, int k, Window window);

/// B_{n,k}^0 * J(lambda_{n+1}(k)) on the window.
WindowedSeries index_series_formula(int n, int k, Window window);

enum class HalfSign { nonneg, neg };

/// sum_{m >= 0} (or sum_{m < 0}) chi_{n,-km+j} t^m on the window, zero on the
/// other half.
WindowedSeries half_series(int n, int k, int j, HalfSign sign, Window window);

/// B_{n,k}^j J_0 (nonneg) or -B_{n,k}^j J_inf (neg) on the window.
WindowedSeries half_series_formula(int n, int k, int j, HalfSign sign, Window window);

struct IndexSeriesReport {
    int n = 0;
    int k = 0;
    Window window;
    WindowedSeries direct;
    WindowedSeries formula;
    bool match = false;
    std::optional<int> first_mismatch;
};

IndexSeriesReport index_report(int n, int k, Window window);

Json to_json(const IndexSeriesReport& r);

}  // namespace eqidx
