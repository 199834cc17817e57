#pragma once

// Fixed-point form of the index of D_n twisted by a class of K_{T^{n+1}}(CP^n),
// where the class is represented by a Laurent polynomial f in t1..t{n+1}, t
// modulo lambda_{n+1}(-1).

#include <cstdint>

#include "eqidx/laurent.hpp"

namespace eqidx {

/// A representative of a class in R(T^{n+1} x S^1) / (lambda_{n+1}(-1)).
struct KClassRep {
    LaurentPoly poly;
};

/// -sum of residues of f / (lambda_{n+1}(-1) t) at the poles t = t_i, i.e.
/// sum_i f|_{t=t_i} / prod_{j != i} (1 - t_j^{-1} t_i), as an exact Laurent
/// polynomial.  Throws std::domain_error if the sum is not a polynomial.
LaurentPoly lefschetz_residue(int n, const KClassRep& f);

/// The same sum evaluated in floating point at a torus point whose
/// coordinates are pairwise at least 1e-3 apart.
Complex fixed_point_eval(int n, const KClassRep& f, const TorusPoint& pt);

/// sum_b a_b chi_{n,-b} for f = sum_b a_b t^b.
LaurentPoly euler_characteristic(int n, const KClassRep& f);

/// Deterministic unit-modulus point of T^{n+1} with pairwise separation >= 1e-3.
TorusPoint random_torus_point(int n, std::uint64_t seed);

inline constexpr double kMinSeparation = 1e-3;

/// Smallest pairwise distance between coordinates (infinity for rank 1).
double min_separation(const TorusPoint& pt);

}  // namespace eqidx
