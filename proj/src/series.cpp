#include "eqidx/series.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace eqidx {

std::optional<Window> intersect(const Window& a, const Window& b) {
    Window w{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
    if (w.empty()) return std::nullopt;
    return w;
}

Window default_window(int n, int k) {
    const int w = 2 * (n + 1) * std::max(1, std::abs(k)) + 8;
    return {-w, w};
}

WindowedSeries::WindowedSeries(int rank, Window window)
    : rank_(rank), window_(window) {
    if (window.empty()) throw std::invalid_argument("series window is empty");
    coeffs_.assign(window.length(), LaurentPoly(rank));
}

WindowedSeries::WindowedSeries(int rank, Window window, std::vector<LaurentPoly> coeffs)
    : rank_(rank), window_(window), coeffs_(std::move(coeffs)) {
    if (window.empty()) throw std::invalid_argument("series window is empty");
    if (static_cast<int>(coeffs_.size()) != window.length()) {
        throw std::invalid_argument("coefficient count does not match the window");
    }
    for (const auto& c : coeffs_) {
        if (c.rank() != rank) throw RankMismatch("series coefficient has the wrong rank");
        if (!c.is_torus_only()) {
            throw std::invalid_argument("series coefficients must not involve t");
        }
    }
}

const LaurentPoly& WindowedSeries::coefficient(int m) const {
    if (!window_.contains(m)) {
        throw std::out_of_range("index " + std::to_string(m) + " outside window [" +
                                std::to_string(window_.lo) + ", " + std::to_string(window_.hi) + "]");
    }
    return coeffs_[m - window_.lo];
}

void WindowedSeries::set(int m, LaurentPoly c) {
    if (!window_.contains(m)) throw std::out_of_range("index outside window");
    if (c.rank() != rank_) throw RankMismatch("series coefficient has the wrong rank");
    if (!c.is_torus_only()) throw std::invalid_argument("series coefficients must not involve t");
    coeffs_[m - window_.lo] = std::move(c);
}

WindowedSeries WindowedSeries::restrict_to(const Window& w) const {
    if (w.empty() || w.lo < window_.lo || w.hi > window_.hi) {
        throw std::out_of_range("restriction window is not inside the series window");
    }
    std::vector<LaurentPoly> c(coeffs_.begin() + (w.lo - window_.lo),
                               coeffs_.begin() + (w.hi - window_.lo + 1));
    return WindowedSeries(rank_, w, std::move(c));
}

WindowedSeries WindowedSeries::operator-() const {
    WindowedSeries out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

namespace {

WindowedSeries combine(const WindowedSeries& a, const WindowedSeries& b, int sign) {
    if (a.rank() != b.rank()) throw RankMismatch("series rank mismatch");
    auto w = intersect(a.window(), b.window());
    if (!w) throw std::invalid_argument("series windows do not intersect");
    WindowedSeries out(a.rank(), *w);
    for (int m = w->lo; m <= w->hi; ++m) {
        out.set(m, sign > 0 ? a.coefficient(m) + b.coefficient(m)
                            : a.coefficient(m) - b.coefficient(m));
    }
    return out;
}

}  // namespace

WindowedSeries operator+(const WindowedSeries& a, const WindowedSeries& b) { return combine(a, b, 1); }
WindowedSeries operator-(const WindowedSeries& a, const WindowedSeries& b) { return combine(a, b, -1); }

SeriesComparison compare(const WindowedSeries& a, const WindowedSeries& b) {
    if (a.rank() != b.rank()) throw RankMismatch("series rank mismatch");
    auto w = intersect(a.window(), b.window());
    if (!w) throw std::invalid_argument("cannot compare series with disjoint windows");
    SeriesComparison out{*w, std::nullopt};
    for (int m = w->lo; m <= w->hi; ++m) {
        if (a.coefficient(m) != b.coefficient(m)) {
            out.first_mismatch = m;
            break;
        }
    }
    return out;
}

bool series_equal(const WindowedSeries& a, const WindowedSeries& b) { return compare(a, b).equal(); }

WindowedSeries series_of(const LaurentPoly& p, Window window) {
    WindowedSeries out(p.rank(), window);
    for (const auto& t : p.terms()) {
        if (!window.contains(t.exp.circle)) continue;
        Exponent e = t.exp;
        e.circle = 0;
        out.set(t.exp.circle, out.coefficient(t.exp.circle) + LaurentPoly::monomial(p.rank(), e, t.coeff));
    }
    return out;
}

namespace {

// a^m for a unit monomial and any integer m.
LaurentPoly unit_power(const LaurentPoly::Term& a, int rank, int m) {
    Exponent e;
    for (int i = 0; i < rank; ++i) e.torus[i] = a.exp.torus[i] * m;
    const Integer sign = (a.coeff < 0 && m % 2 != 0) ? -1 : 1;
    return LaurentPoly::monomial(rank, e, sign);
}

}  // namespace

WindowedSeries geometric_expansion(const LaurentPoly& a, Window window, ExpansionPoint at) {
    if (!a.is_monomial() || abs(a.terms().front().coeff) != 1 || !a.is_torus_only()) {
        throw std::invalid_argument("geometric_expansion needs a torus monomial with coefficient +-1");
    }
    const auto& term = a.terms().front();
    WindowedSeries out(a.rank(), window);
    for (int m = window.lo; m <= window.hi; ++m) {
        if (at == ExpansionPoint::zero && m >= 0) {
            out.set(m, unit_power(term, a.rank(), m));
        } else if (at == ExpansionPoint::infinity && m <= -1) {
            out.set(m, -unit_power(term, a.rank(), m));
        }
    }
    return out;
}

WindowedSeries truncated_product(const WindowedSeries& a, const WindowedSeries& b, SupportEdge edge) {
    if (a.rank() != b.rank()) throw RankMismatch("series rank mismatch");
    const Window wa = a.window();
    const Window wb = b.window();
    Window w;
    if (edge == SupportEdge::lower) {
        w = {wa.lo + wb.lo, std::min(wa.hi + wb.lo, wb.hi + wa.lo)};
    } else {
        w = {std::max(wa.lo + wb.hi, wb.lo + wa.hi), wa.hi + wb.hi};
    }
    WindowedSeries out(a.rank(), w);
    for (int m = w.lo; m <= w.hi; ++m) {
        // a_i b_{m-i} with both indices inside their windows.
        const int i_lo = std::max(wa.lo, m - wb.hi);
        const int i_hi = std::min(wa.hi, m - wb.lo);
        LaurentPoly c(a.rank());
        for (int i = i_lo; i <= i_hi; ++i) {
            const auto& x = a.coefficient(i);
            if (x.is_zero()) continue;
            const auto& y = b.coefficient(m - i);
            if (y.is_zero()) continue;
            c += x * y;
        }
        out.set(m, std::move(c));
    }
    return out;
}

namespace {

// Product of the n+1 factor expansions of 1/(1 - t_j^k t), one-sided.
WindowedSeries factor_product(int n, int k, Window window, ExpansionPoint at) {
    const int rank = n + 1;
    WindowedSeries out(rank, window);
    if (at == ExpansionPoint::zero) {
        if (window.hi < 0) return out;
        const Window fw{0, window.hi};
        WindowedSeries acc = geometric_expansion(LaurentPoly::torus_var(rank, 1, k), fw, at);
        for (int j = 2; j <= rank; ++j) {
            acc = truncated_product(acc, geometric_expansion(LaurentPoly::torus_var(rank, j, k), fw, at),
                                    SupportEdge::lower);
        }
        for (int m = std::max(0, window.lo); m <= window.hi; ++m) out.set(m, acc.coefficient(m));
    } else {
        const int top = -rank;  // lowest order term is t^{-(n+1)}
        if (window.lo > top) return out;
        // Each extra factor costs one index at the lower end.
        const Window fw{window.lo + n, -1};
        WindowedSeries acc = geometric_expansion(LaurentPoly::torus_var(rank, 1, k), fw, at);
        for (int j = 2; j <= rank; ++j) {
            acc = truncated_product(acc, geometric_expansion(LaurentPoly::torus_var(rank, j, k), fw, at),
                                    SupportEdge::upper);
        }
        for (int m = window.lo; m <= std::min(window.hi, top); ++m) out.set(m, acc.coefficient(m));
    }
    return out;
}

}  // namespace

WindowedSeries j0(int n, int k, Window window) {
    if (n < 0) throw std::invalid_argument("j0: n must be nonnegative");
    return factor_product(n, k, window, ExpansionPoint::zero);
}

WindowedSeries j_inf(int n, int k, Window window) {
    if (n < 0) throw std::invalid_argument("j_inf: n must be nonnegative");
    return factor_product(n, k, window, ExpansionPoint::infinity);
}

WindowedSeries j_delta(int n, int k, Window window) { return j0(n, k, window) - j_inf(n, k, window); }

WindowedSeries module_action(const LaurentPoly& p, const WindowedSeries& s) {
    if (p.rank() != s.rank()) throw RankMismatch("module_action rank mismatch");
    if (p.is_zero()) return WindowedSeries(s.rank(), s.window());
    const Window w{s.window().lo + p.max_circle_degree(), s.window().hi + p.min_circle_degree()};
    if (w.empty()) throw std::invalid_argument("module_action leaves an empty window");
    std::vector<std::pair<int, LaurentPoly>> parts;
    for (int b = p.min_circle_degree(); b <= p.max_circle_degree(); ++b) {
        LaurentPoly a = p.circle_coefficient(b);
        if (!a.is_zero()) parts.emplace_back(b, std::move(a));
    }
    WindowedSeries out(s.rank(), w);
    for (int m = w.lo; m <= w.hi; ++m) {
        LaurentPoly c(s.rank());
        for (const auto& [b, a] : parts) {
            const auto& x = s.coefficient(m - b);
            if (!x.is_zero()) c += a * x;
        }
        out.set(m, std::move(c));
    }
    return out;
}

const LaurentPoly& coefficient(const WindowedSeries& s, int m) { return s.coefficient(m); }

Json to_json(const WindowedSeries& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
    return Json{{"rank", s.rank()}, {"window", Json::array({s.window().lo, s.window().hi})},
                {"coeffs", std::move(coeffs)}};
}

}  // namespace eqidx
