#pragma once

// Shape parameters for the arctan and tan families, and the case split that
// turns any real target slope into an automorphism of [-1, 1].

#include <utility>
#include <vector>

#include "automorph/map_expr.hpp"
#include "automorph/root_finding.hpp"

namespace automorph {

struct SolveResult {
  double b_star = 0.0;
  double residual = 0.0;  // |constraint(b_star) - a|
  int iterations = 0;
  std::pair<double, double> bracket{0.0, 0.0};
  std::vector<TracePoint> trace;  // (b, constraint(b)) at every evaluation
};

inline constexpr double kDefaultSolveTol = 1e-14;

/// b / arctan(b), continuous at 0 with value 1.
double arctan_ratio(double b);
double arctan_ratio_slope(double b);
/// b / tan(b), continuous at 0 with value 1.
double tan_ratio(double b);
double tan_ratio_slope(double b);

/// Find b* > 0 with b*/arctan(b*) = a, to |residual| <= tol * max(1, a).
SolveResult solve_b_arctan(double a, double tol = kDefaultSolveTol);

/// Find b* in (0, pi/2) with b*/tan(b*) = a, to |residual| <= tol.
SolveResult solve_b_tan(double a, double tol = kDefaultSolveTol);

/// Automorphism of [-1, 1] with derivative a at the origin:
///   a < 0      -> negate(build(-a))
///   a == 0     -> cubic
///   a == 1     -> identity
///   a > 1      -> arctan family with solved b
///   0 < a < 1  -> tan family with solved b
MapExpr build_automorphism(double a, double tol = kDefaultSolveTol);

}  // namespace automorph
