#pragma once

// Truncated Maclaurin expansions of the primitive families.

#include <cstddef>
#include <string>
#include <vector>

#include "automorph/map_expr.hpp"

namespace automorph {

struct SeriesExpansion {
  std::vector<double> coeffs;  // c_0 .. c_N
  double radius = 0.0;         // +inf for entire functions
  std::string family;
  std::size_t order = 0;
};

/// Base (unscaled) coefficients t_0..t_N of tan(u), from t' = 1 + t^2:
/// (m+1) t_{m+1} = [m == 0] + sum_{i+j=m} t_i t_j.
std::vector<double> tan_base_coefficients(std::size_t order);
/// Base coefficients of arctan(u), sin(u) and erf(u).
std::vector<double> arctan_base_coefficients(std::size_t order);
std::vector<double> sin_base_coefficients(std::size_t order);
std::vector<double> erf_base_coefficients(std::size_t order);

/// c_j = prefactor * base_j * scale^j, skipping the exact zeros.
std::vector<double> scale_coefficients(const std::vector<double>& base, double scale,
                                       double prefactor);

/// Coefficients of a primitive node up to order N >= 1. Throws ParameterError
/// for composite nodes or N == 0, and std::range_error if scale^N overflows.
SeriesExpansion taylor(const MapExpr& family, std::size_t order);

/// Truncation order at which the first dropped term at 0.8 * radius (capped
/// to [-1, 1]) is below 1e-12.
std::size_t default_order(NodeKind kind);

/// Horner evaluation of the truncated polynomial.
double eval_series(const SeriesExpansion& s, double x);

/// Radius of convergence about 0: 1/b (arctan), pi/(2b) (tan), +inf otherwise.
double radius(const MapExpr& family);

}  // namespace automorph
