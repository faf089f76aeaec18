#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "automorph/errors.hpp"

namespace automorph {

struct TracePoint {
  double x;
  double value;
};

struct BracketedRoot {
  double x = 0.0;
  double residual = 0.0;
  int iterations = 0;
  double lo = 0.0;
  double hi = 0.0;
};

inline constexpr int kMaxRootIterations = 200;

/// Newton iteration on a sign-changing bracket [lo, hi], falling back to
/// bisection whenever the Newton step leaves the bracket or fails to shrink
/// fast enough. `fn(x)` returns {g(x), g'(x)}; the root is accepted once
/// |g(x)| <= tol. Every evaluation is appended to `trace` when non-null.
template <class Fn>
BracketedRoot safeguarded_newton(Fn&& fn, double lo, double hi, double x0,
                                 double tol, int cap = kMaxRootIterations,
                                 std::vector<TracePoint>* trace = nullptr) {
  auto record = [&](double x, double v) {
    if (trace) trace->push_back({x, v});
  };

  const auto [flo, dlo] = fn(lo);
  const auto [fhi, dhi] = fn(hi);
  record(lo, flo);
  record(hi, fhi);
  if (std::abs(flo) <= tol) return {lo, std::abs(flo), 0, lo, hi};
  if (std::abs(fhi) <= tol) return {hi, std::abs(fhi), 0, lo, hi};
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw NoBracketError("no sign change on bracket");
  }
  const bool lo_negative = std::signbit(flo);

  double x = (x0 > lo && x0 < hi) ? x0 : lo + 0.5 * (hi - lo);
  double step_prev = hi - lo;
  double step = step_prev;

  for (int it = 1; it <= cap; ++it) {
    const auto [f, d] = fn(x);
    record(x, f);
    if (std::abs(f) <= tol) return {x, std::abs(f), it, lo, hi};

    if (std::signbit(f) == lo_negative) {
      lo = x;
    } else {
      hi = x;
    }
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) {
      throw ConvergenceError("bracket collapsed with residual " +
                             std::to_string(std::abs(f)) + " above tolerance");
    }

    double next = mid;
    const bool newton_ok = std::isfinite(d) && d != 0.0;
    if (newton_ok) {
      const double candidate = x - f / d;
      if (candidate > lo && candidate < hi &&
          std::abs(candidate - x) <= 0.5 * std::abs(step_prev)) {
        next = candidate;
      }
    }
    step_prev = step;
    step = next - x;
    x = next;
  }
  throw ConvergenceError("iteration cap reached");
}

}  // namespace automorph
