#include "automorph/counterexamples.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "automorph/errors.hpp"
#include "automorph/format.hpp"

namespace automorph {

namespace {

// exp(t) is subnormal or zero below log(DBL_MIN).
const double kUnderflowExponent = std::log(std::numeric_limits<double>::min());

void check_open_domain(double x) {
  if (!(x > -1.0 && x < 1.0)) {
    throw DomainError("argument " + format_double(x) + " outside (-1, 1)");
  }
}

double inverse_index(const SeqFamily& s) {
  return s.is_limit() ? 0.0 : 1.0 / static_cast<double>(*s.n);
}

}  // namespace

SeqFamily SeqFamily::member(SeqKind kind, std::uint32_t n) {
  if (n == 0) throw ParameterError("sequence index must be at least 1");
  return {kind, n};
}

SeqFamily SeqFamily::limit(SeqKind kind) { return {kind, std::nullopt}; }

std::string SeqFamily::describe() const {
  const std::string name = kind == SeqKind::FlatBump ? "bump" : "piecewise";
  return name + "(n=" + (is_limit() ? std::string("inf") : std::to_string(*n)) + ")";
}

double flat_bump(double x) {
  if (x <= 0.0) return 0.0;
  const double t = -1.0 / (x * x);
  if (t < kUnderflowExponent) return 0.0;
  return std::exp(t);
}

double seq_eval(const SeqFamily& s, double x) {
  check_open_domain(x);
  const double inv_n = inverse_index(s);
  switch (s.kind) {
    case SeqKind::FlatBump:
      return x > 0.0 ? flat_bump(x) + x * inv_n : x * inv_n;
    case SeqKind::PiecewiseCubic:
      if (x > 0.0) return x * x / 2.0;
      return (-x * x * x / 3.0 - x * x / 2.0) * inv_n;
  }
  return 0.0;
}

double seq_deriv(const SeqFamily& s, double x) {
  check_open_domain(x);
  const double inv_n = inverse_index(s);
  switch (s.kind) {
    case SeqKind::FlatBump:
      return x > 0.0 ? 2.0 / (x * x * x) * flat_bump(x) + inv_n : inv_n;
    case SeqKind::PiecewiseCubic:
      if (x > 0.0) return x;
      return -x * (x + 1.0) * inv_n;
  }
  return 0.0;
}

double sup_norm_gap(const SeqFamily& s, double lo, double hi, std::size_t grid_m) {
  check_open_domain(lo);
  check_open_domain(hi);
  if (!(lo <= hi)) throw ParameterError("sup-norm interval must satisfy lo <= hi");
  if (grid_m < 2) throw ParameterError("sup-norm grid needs at least 2 points");

  const SeqFamily limit = SeqFamily::limit(s.kind);
  auto gap = [&](double x) { return std::abs(seq_eval(s, x) - seq_eval(limit, x)); };
  auto point = [&](std::size_t i) {
    if (i + 1 == grid_m) return hi;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid_m - 1);
  };

  std::size_t best_i = 0;
  double best = gap(point(0));
  for (std::size_t i = 1; i < grid_m; ++i) {
    const double g = gap(point(i));
    if (g > best) {
      best = g;
      best_i = i;
    }
  }

  // Golden-section search for a maximum between the argmax's neighbours.
  double a = point(best_i == 0 ? 0 : best_i - 1);
  double b = point(std::min(best_i + 1, grid_m - 1));
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double gc = gap(c);
  double gd = gap(d);
  for (int it = 0; it < 100 && b - a > 1e-15; ++it) {
    if (gc > gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - inv_phi * (b - a);
      gc = gap(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + inv_phi * (b - a);
      gd = gap(d);
    }
  }
  return std::max({best, gc, gd});
}

std::optional<std::pair<double, double>> injectivity_witness(const SeqFamily& s,
                                                             std::size_t grid_m,
                                                             double eps) {
  if (grid_m < 3) throw ParameterError("injectivity grid needs at least 3 points");
  const double lo = -1.0 + eps;
  const double hi = 1.0 - eps;
  auto point = [&](std::size_t i) {
    if (i + 1 == grid_m) return hi;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid_m - 1);
  };
  double x_prev = point(0);
  double y_prev = seq_eval(s, x_prev);
  for (std::size_t i = 1; i < grid_m; ++i) {
    const double x = point(i);
    const double y = seq_eval(s, x);
    if (!(y > y_prev)) return std::pair{x_prev, x};
    x_prev = x;
    y_prev = y;
  }
  return std::nullopt;
}

}  // namespace automorph
