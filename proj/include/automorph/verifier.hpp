#pragma once

// Numerical certification that a MapExpr behaves as an automorphism of
// [-1, 1] with a claimed slope at the origin.
//
// Surjectivity is never sampled directly: strict monotonicity on the grid plus
// endpoint values +-1 give it through the intermediate value theorem. Grid
// monotonicity cannot see between grid points; every family handled here has
// a smooth, sign-definite derivative, which is what makes the grid sufficient.

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "automorph/map_expr.hpp"

namespace automorph {

struct ToleranceProfile {
  double endpoint = 1e-9;     // |f(+-1) -+ 1|
  double origin = 0.0;        // |f(0)|, exact
  double derivative = 1e-10;  // |f'(0) - a| / max(1, |a|)
  double fd_relative = 1e-6;  // |fd - f'| / max(1, |f'|)
  double oddness = 1e-13;     // |f(-x) + f(x)| / (1 + |f(x)|)
  double fd_step = 1e-5;
};

struct Check {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double threshold = 0.0;
};

struct VerificationReport {
  std::string expr;
  std::vector<Check> checks;
  std::size_t grid_n = 0;
  double epsilon_margin = 0.0;
  std::vector<std::string> notes;

  bool pass() const;
  const Check* find(const std::string& name) const;
};

inline constexpr std::size_t kDefaultVerifyGrid = 10001;

/// Richardson-extrapolated central difference (4 D(h/2) - D(h)) / 3 with
/// D(s) = (f(x+s) - f(x-s)) / 2s. Throws DomainError if x +- step leaves
/// [-1, 1].
double fd_derivative(const MapExpr& e, double x, double step);

/// Runs monotonicity, endpoint_plus, endpoint_minus, origin_fixed,
/// derivative_at_zero, fd_consistency and oddness on a uniform grid of
/// grid_n points over [-1, 1]. Throws ParameterError for grid_n < 3.
VerificationReport verify(const MapExpr& e, double a_claimed,
                          std::size_t grid_n = kDefaultVerifyGrid,
                          const ToleranceProfile& tol = {});

nlohmann::ordered_json to_json(const VerificationReport& report);

}  // namespace automorph
