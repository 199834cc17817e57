#include "eqidx/lefschetz.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "eqidx/characters.hpp"

namespace eqidx {

namespace {

void require_rank(int n, const KClassRep& f) {
    if (n < 1) throw std::invalid_argument("the fixed-point formula needs n >= 1");
    if (f.poly.rank() != n + 1) throw RankMismatch("class representative must have rank n+1");
}

// prod_{a<b, a,b != skip} (t_b - t_a); skip = 0 keeps every variable.
LaurentPoly vandermonde(int rank, int skip) {
    LaurentPoly v = LaurentPoly::constant(rank, 1);
    for (int a = 1; a <= rank; ++a) {
        if (a == skip) continue;
        for (int b = a + 1; b <= rank; ++b) {
            if (b == skip) continue;
            v *= LaurentPoly::torus_var(rank, b) - LaurentPoly::torus_var(rank, a);
        }
    }
    return v;
}

}  // namespace

LaurentPoly lefschetz_residue(int n, const KClassRep& f) {
    require_rank(n, f);
    const int rank = n + 1;
    // 1 - t_j^{-1} t_i = t_j^{-1} (t_j - t_i), and
    // prod_{j != i} (t_j - t_i) = (-1)^{i-1} V / V_i  with V_i the Vandermonde
    // product without t_i.  Everything goes over the common denominator V.
    LaurentPoly numerator(rank);
    for (int i = 1; i <= rank; ++i) {
        LaurentPoly others = LaurentPoly::constant(rank, 1);
        for (int j = 1; j <= rank; ++j) {
            if (j != i) others *= LaurentPoly::torus_var(rank, j);
        }
        LaurentPoly term = substitute_t(f.poly, i) * others * vandermonde(rank, i);
        if ((i - 1) % 2 == 0) {
            numerator += term;
        } else {
            numerator -= term;
        }
    }
    auto quotient = divide_exact(numerator, vandermonde(rank, 0));
    if (!quotient) {
        throw std::domain_error("residue sum is not a Laurent polynomial");
    }
    return *quotient;
}

double min_separation(const TorusPoint& pt) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pt.coords.size(); ++i) {
        for (std::size_t j = i + 1; j < pt.coords.size(); ++j) {
            best = std::min(best, std::abs(pt.coords[i] - pt.coords[j]));
        }
    }
    return best;
}

Complex fixed_point_eval(int n, const KClassRep& f, const TorusPoint& pt) {
    require_rank(n, f);
    if (pt.rank() != n + 1) throw RankMismatch("torus point must have n+1 coordinates");
    if (min_separation(pt) < kMinSeparation) {
        throw std::domain_error("torus coordinates are too close for the fixed-point formula");
    }
    const int rank = n + 1;
    Complex sum{0.0, 0.0};
    for (int i = 1; i <= rank; ++i) {
        const Complex ti = pt.coords[i - 1];
        Complex denom{1.0, 0.0};
        for (int j = 1; j <= rank; ++j) {
            if (j != i) denom *= Complex{1.0, 0.0} - ti / pt.coords[j - 1];
        }
        sum += eval_at(substitute_t(f.poly, i), pt) / denom;
    }
    return sum;
}

LaurentPoly euler_characteristic(int n, const KClassRep& f) {
    if (n < 1) throw std::invalid_argument("euler_characteristic needs n >= 1");
    if (f.poly.rank() != n + 1) throw RankMismatch("class representative must have rank n+1");
    LaurentPoly out(n + 1);
    if (f.poly.is_zero()) return out;
    for (int b = f.poly.min_circle_degree(); b <= f.poly.max_circle_degree(); ++b) {
        LaurentPoly a = f.poly.circle_coefficient(b);
        if (!a.is_zero()) out += a * chi(n, -b);
    }
    return out;
}

TorusPoint random_torus_point(int n, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("random_torus_point: n must be nonnegative");
    std::mt19937_64 rng(seed);
    while (true) {
        std::vector<Complex> coords;
        for (int i = 0; i <= n; ++i) {
            // 53 random bits mapped to [0, 2 pi).
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            coords.push_back(std::polar(1.0, 2.0 * std::numbers::pi * u));
        }
        TorusPoint pt(std::move(coords));
        if (min_separation(pt) >= kMinSeparation) return pt;
    }
}

}  // namespace eqidx
