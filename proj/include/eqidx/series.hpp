#pragma once

// Windowed formal Fourier series sum_m c_m t^m whose coefficients c_m are
// Laurent polynomials in the torus variables.  A series only knows its
// coefficients on an explicit window [lo, hi]; every operation returns the
// largest window on which its result is exact.

#include <optional>
#include <vector>

#include "eqidx/laurent.hpp"

namespace eqidx {

struct Window {
    int lo = 0;
    int hi = 0;

    bool contains(int m) const noexcept { return lo <= m && m <= hi; }
    bool empty() const noexcept { return lo > hi; }
    int length() const noexcept { return empty() ? 0 : hi - lo + 1; }
    bool operator==(const Window&) const = default;
};

std::optional<Window> intersect(const Window& a, const Window& b);

/// Default symmetric window [-w, w] with w = 2(n+1)max(1,|k|) + 8.
Window default_window(int n, int k);

class WindowedSeries {
public:
    /// Zero series.
    WindowedSeries(int rank, Window window);
    /// Takes one torus-only coefficient per index of the window.
    WindowedSeries(int rank, Window window, std::vector<LaurentPoly> coeffs);

    int rank() const noexcept { return rank_; }
    const Window& window() const noexcept { return window_; }
    const std::vector<LaurentPoly>& coeffs() const noexcept { return coeffs_; }

    /// Coefficient of t^m; throws std::out_of_range outside the window.
    const LaurentPoly& coefficient(int m) const;
    void set(int m, LaurentPoly c);

    /// Restriction to a sub-window.
    WindowedSeries restrict_to(const Window& w) const;

    WindowedSeries operator-() const;
    /// Pointwise sums live on the intersection of the windows.
    friend WindowedSeries operator+(const WindowedSeries& a, const WindowedSeries& b);
    friend WindowedSeries operator-(const WindowedSeries& a, const WindowedSeries& b);

private:
    int rank_;
    Window window_;
    std::vector<LaurentPoly> coeffs_;
};

/// Result of comparing two series on the intersection of their windows.
struct SeriesComparison {
    Window window;
    std::optional<int> first_mismatch;

    bool equal() const noexcept { return !first_mismatch; }
};

/// Throws if the windows do not intersect.
SeriesComparison compare(const WindowedSeries& a, const WindowedSeries& b);
bool series_equal(const WindowedSeries& a, const WindowedSeries& b);

/// The series of a Laurent polynomial (in t) itself, on the given window.
WindowedSeries series_of(const LaurentPoly& p, Window window);

enum class ExpansionPoint { zero, infinity };

/// Laurent expansion of 1/(1 - a t) at t = 0 or t = infinity, clipped to
/// the window.  a must be a torus monomial with coefficient +-1.
WindowedSeries geometric_expansion(const LaurentPoly& a, Window window, ExpansionPoint at);

/// Which window edge of the operands is a genuine support edge: all
/// coefficients beyond it vanish.
enum class SupportEdge { lower, upper };

/// Cauchy product of two one-sided series.  With SupportEdge::lower both
/// operands are taken to vanish below their windows; the result is exact on
/// [a.lo + b.lo, min(a.hi + b.lo, b.hi + a.lo)].  SupportEdge::upper is the
/// mirror image.
WindowedSeries truncated_product(const WindowedSeries& a, const WindowedSeries& b,
                                 SupportEdge edge);

/// J_0(lambda_{n+1}(k)): expansion of 1/lambda_{n+1}(k) at t = 0.
WindowedSeries j0(int n, int k, Window window);
/// J_inf(lambda_{n+1}(k)): expansion of 1/lambda_{n+1}(k) at t = infinity.
WindowedSeries j_inf(int n, int k, Window window);
/// J(lambda_{n+1}(k)) = J_0 - J_inf.
WindowedSeries j_delta(int n, int k, Window window);

/// p * s for p = sum_b a_b t^b.  The result window is
/// [s.lo + maxdeg_t(p), s.hi + mindeg_t(p)]; throws if that is empty.
WindowedSeries module_action(const LaurentPoly& p, const WindowedSeries& s);

/// Pairing with the test function t^{-m}: the coefficient of t^m.
const LaurentPoly& coefficient(const WindowedSeries& s, int m);

Json to_json(const WindowedSeries& s);

}  // namespace eqidx
