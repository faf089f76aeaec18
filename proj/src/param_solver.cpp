#include "automorph/param_solver.hpp"

#include <algorithm>
#include <cmath>

#include "automorph/errors.hpp"
#include "automorph/format.hpp"

namespace automorph {

namespace {

// Below this the direct quotients are 0/0-like; use the even expansions.
constexpr double kSmallShape = 1e-4;
constexpr double kTanBracketMargin = 1e-12;

SolveResult to_result(const BracketedRoot& root, std::vector<TracePoint> trace) {
  SolveResult out;
  out.b_star = root.x;
  out.residual = root.residual;
  out.iterations = root.iterations;
  out.bracket = {root.lo, root.hi};
  out.trace = std::move(trace);
  return out;
}

}  // namespace

double arctan_ratio(double b) {
  if (std::abs(b) < kSmallShape) {
    const double b2 = b * b;
    return 1.0 + b2 / 3.0 - 4.0 * b2 * b2 / 45.0;
  }
  return b / std::atan(b);
}

double arctan_ratio_slope(double b) {
  if (std::abs(b) < kSmallShape) {
    return 2.0 * b / 3.0 - 16.0 * b * b * b / 45.0;
  }
  const double t = std::atan(b);
  return (t - b / (1.0 + b * b)) / (t * t);
}

double tan_ratio(double b) {
  if (std::abs(b) < kSmallShape) {
    const double b2 = b * b;
    return 1.0 - b2 / 3.0 - b2 * b2 / 45.0;
  }
  return b / std::tan(b);
}

double tan_ratio_slope(double b) {
  if (std::abs(b) < kSmallShape) {
    return -2.0 * b / 3.0 - 4.0 * b * b * b / 45.0;
  }
  const double s = std::sin(b);
  return 1.0 / std::tan(b) - b / (s * s);
}

SolveResult solve_b_arctan(double a, double tol) {
  if (!std::isfinite(a) || !(a > 1.0)) {
    throw ParameterError("arctan shape solve requires a > 1, got " + format_double(a));
  }
  if (!(tol > 0.0)) throw ParameterError("tolerance must be positive");

  std::vector<TracePoint> trace;
  auto g = [&](double b) {
    const double r = arctan_ratio(b);
    trace.push_back({b, r});
    return std::pair{r - a, arctan_ratio_slope(b)};
  };

  // The ratio rises from 1 at b = 0 without bound; double hi until it
  // reaches a.
  double hi = 1.0;
  while (arctan_ratio(hi) < a) {
    hi *= 2.0;
    if (!std::isfinite(hi)) throw ConvergenceError("failed to bracket arctan shape");
  }
  const double lo = hi == 1.0 ? 0.0 : hi / 2.0;
  // Near a = 1 the ratio is 1 + b^2/3; for large a, b ~ (pi/2) a.
  const double guess = a < 1.5 ? std::sqrt(3.0 * (a - 1.0)) : kHalfPi * a - 1.0;
  const auto root =
      safeguarded_newton(g, lo, hi, guess, tol * std::max(1.0, a),
                         kMaxRootIterations);
  return to_result(root, std::move(trace));
}

SolveResult solve_b_tan(double a, double tol) {
  if (!(a > 0.0 && a < 1.0)) {
    throw ParameterError("tan shape solve requires 0 < a < 1, got " + format_double(a));
  }
  if (!(tol > 0.0)) throw ParameterError("tolerance must be positive");

  std::vector<TracePoint> trace;
  auto g = [&](double b) {
    const double r = tan_ratio(b);
    trace.push_back({b, r});
    return std::pair{r - a, tan_ratio_slope(b)};
  };
  const double guess = a > 0.9 ? std::sqrt(3.0 * (1.0 - a)) : 0.5 * kHalfPi;
  const auto root =
      safeguarded_newton(g, kTanBracketMargin, kHalfPi - kTanBracketMargin,
                         guess, tol, kMaxRootIterations);
  return to_result(root, std::move(trace));
}

MapExpr build_automorphism(double a, double tol) {
  if (!std::isfinite(a)) {
    throw ParameterError("target derivative must be finite, got " + format_double(a));
  }
  if (a < 0.0) return negate(build_automorphism(-a, tol));
  if (a == 0.0) return MapExpr::cubic();
  if (a == 1.0) return MapExpr::identity();
  if (a > 1.0) return MapExpr::arctan_family(a, solve_b_arctan(a, tol).b_star);
  return MapExpr::tan_family(a, solve_b_tan(a, tol).b_star);
}

}  // namespace automorph
