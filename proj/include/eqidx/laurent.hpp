#pragma once

// Sparse multivariate Laurent polynomials over Z in the torus variables
// t1..t{r} and one distinguished circle variable t.  These are the elements
// of the representation ring R(T^r x S^1).

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace eqidx {

using Integer = mpz_class;
using Complex = std::complex<double>;

inline constexpr int kMaxRank = 16;

/// Exponent vector of a monomial t1^a1 ... tr^ar t^b.
///
/// Slots at or beyond the owning polynomial's rank are always zero, so the
/// defaulted ordering (circle first, then torus lexicographically) is the
/// canonical term order.
struct Exponent {
    int circle = 0;
    std::array<int, kMaxRank> torus{};

    auto operator<=>(const Exponent&) const = default;
};

class RankMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class LaurentPoly {
public:
    struct Term {
        Exponent exp;
        Integer coeff;

        bool operator==(const Term&) const = default;
    };

    /// The zero polynomial of the given rank (number of torus variables).
    explicit LaurentPoly(int rank);

    static LaurentPoly constant(int rank, const Integer& c);
    static LaurentPoly monomial(int rank, const Exponent& e, const Integer& c = 1);
    /// t_i^power, 1-based index.
    static LaurentPoly torus_var(int rank, int i, int power = 1);
    static LaurentPoly circle_var(int rank, int power = 1);
    /// Builds a canonical polynomial from arbitrary (possibly repeated or zero) terms.
    static LaurentPoly from_terms(int rank, std::vector<Term> terms);

    int rank() const noexcept { return rank_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    /// True if no term involves the circle variable.
    bool is_torus_only() const noexcept;

    /// Lowest and highest power of t; both throw on the zero polynomial.
    int min_circle_degree() const;
    int max_circle_degree() const;

    /// The torus-only coefficient a_b in p = sum_b a_b t^b.
    LaurentPoly circle_coefficient(int b) const;
    /// Multiplication by t^b.
    LaurentPoly shift_circle(int b) const;
    /// Rank promotion: appends zero exponent slots for the new torus variables.
    LaurentPoly embed(int new_rank) const;
    /// Value at t1 = ... = tr = t = 1.
    Integer identity_value() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Integer& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }
    friend LaurentPoly operator*(const Integer& c, LaurentPoly a) { return a *= c; }

    bool operator==(const LaurentPoly& o) const = default;

private:
    int rank_;
    std::vector<Term> terms_;  // sorted by exponent, no zero coefficients

    void require_same_rank(const LaurentPoly& o) const;
    LaurentPoly& add_scaled(const LaurentPoly& o, int sign);
};

/// Point of T^r, optionally with a coordinate for the circle variable.
struct TorusPoint {
    std::vector<Complex> coords;
    std::optional<Complex> circle;

    /// Validates that every coordinate is within 1e-12 of the unit circle.
    TorusPoint(std::vector<Complex> coords, std::optional<Complex> circle = std::nullopt);

    int rank() const noexcept { return static_cast<int>(coords.size()); }
};

/// Replaces t by t_i (1-based); the result is torus-only.
LaurentPoly substitute_t(const LaurentPoly& p, int i);

/// Numeric evaluation; requires a circle coordinate if p involves t.
Complex eval_at(const LaurentPoly& p, const TorusPoint& pt);

/// s_i(t1^k, ..., tr^k).  s_0 = 1 and s_i = 0 for i > r.
LaurentPoly elementary_symmetric(int rank, int i, int k);

/// lambda_{n+1}(k) = prod_{j=1}^{n+1} (1 - t_j^k t), of rank n+1.
LaurentPoly lambda_poly(int n, int k);

/// t1^k ... tr^k.
LaurentPoly torus_product(int rank, int k);

/// Exact quotient num / den in the Laurent ring, or nullopt if den does not
/// divide num.  den must be nonzero.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& num, const LaurentPoly& den);

// Text format: "1 - t1^-1*t", "3*t2^2*t^-1 + 7", "0".
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

LaurentPoly parse(std::string_view text, int rank);
std::string format(const LaurentPoly& p);

using Json = nlohmann::ordered_json;

Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

}  // namespace eqidx
