#pragma once

// Injective sequences on (-1, 1) whose uniform limits are not injective:
//   FlatBump:        f_n(x) = f(x) + x/n,  f(x) = exp(-1/x^2) for x > 0, else 0
//   PiecewiseCubic:  g_n(x) = -x^3/(3n) - x^2/(2n) on (-1, 0], x^2/2 on [0, 1)
// These are deliberately not MapExprs: none of them is analytic.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace automorph {

enum class SeqKind { FlatBump, PiecewiseCubic };

struct SeqFamily {
  SeqKind kind = SeqKind::FlatBump;
  std::optional<std::uint32_t> n;  // empty denotes the limit function

  /// Throws ParameterError for n == 0.
  static SeqFamily member(SeqKind kind, std::uint32_t n);
  static SeqFamily limit(SeqKind kind);

  bool is_limit() const { return !n.has_value(); }
  std::string describe() const;
};

/// exp(-1/x^2) for x > 0, flushed to exactly 0 where it would underflow.
double flat_bump(double x);

/// Throw DomainError unless x is in the open interval (-1, 1).
double seq_eval(const SeqFamily& s, double x);
double seq_deriv(const SeqFamily& s, double x);

/// max |s(x) - limit(x)| over [lo, hi]: grid of grid_m points, then a
/// golden-section polish around the grid argmax.
double sup_norm_gap(const SeqFamily& s, double lo, double hi, std::size_t grid_m);

/// First consecutive pair on a grid over [-1 + eps, 1 - eps] where the values
/// fail to increase strictly; empty when the whole grid is strictly increasing.
std::optional<std::pair<double, double>> injectivity_witness(const SeqFamily& s,
                                                             std::size_t grid_m,
                                                             double eps = 1e-6);

}  // namespace automorph
