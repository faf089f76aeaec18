#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "automorph/counterexamples.hpp"
#include "automorph/map_expr.hpp"

namespace automorph {

/// Sampled (x, f(x), f'(x)) triples on a uniform grid over [-1+eps, 1-eps].
struct CurveSample {
  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<double> dys;
  std::string description;
  std::size_t grid_n = 0;
  double epsilon = 0.0;
};

/// Uniform grid of n points on [lo, hi] with both endpoints exact.
std::vector<double> uniform_grid(double lo, double hi, std::size_t n);

/// Throw ParameterError for grid_n < 3 or eps outside [0, 0.1].
CurveSample sample_curve(const MapExpr& e, std::size_t grid_n, double eps = 0.0);
CurveSample sample_curve(const SeqFamily& s, std::size_t grid_n, double eps);

/// Header `x,f,f_prime`, one row per sample, shortest round-trip decimals.
void write_csv(std::ostream& out, const CurveSample& curve);

}  // namespace automorph
