#pragma once

// Test-only reference computations. Nothing here calls into the library's
// solver, series, or finite-difference code paths.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>

#include "automorph/map_expr.hpp"

namespace automorph::testing {

/// Plain bisection on a monotone function, in long double.
template <class Fn>
long double bisect(Fn&& g, long double lo, long double hi, int iterations = 200) {
  const bool lo_negative = g(lo) < 0;
  for (int i = 0; i < iterations; ++i) {
    const long double mid = (lo + hi) / 2;
    if ((g(mid) < 0) == lo_negative) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

inline double oracle_b_arctan(double a) {
  return static_cast<double>(bisect(
      [a](long double b) { return b / std::atan(b) - static_cast<long double>(a); },
      1e-12L, 1e7L));
}

inline double oracle_b_tan(double a) {
  const long double half_pi = std::acos(-1.0L) / 2;
  return static_cast<double>(bisect(
      [a](long double b) { return static_cast<long double>(a) - b / std::tan(b); },
      1e-12L, half_pi - 1e-12L));
}

/// Richardson central difference with its own stencil.
template <class Fn>
double central_difference(Fn&& f, double x, double h) {
  auto d = [&](double s) { return (f(x + s) - f(x - s)) / (2.0 * s); };
  return (4.0 * d(h / 2.0) - d(h)) / 3.0;
}

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Fraction normalized() const {
    const std::int64_t g = std::gcd(num, den);
    return g == 0 ? Fraction{0, 1} : Fraction{num / g, den / g};
  }
  friend Fraction operator+(Fraction l, Fraction r) {
    return Fraction{l.num * r.den + r.num * l.den, l.den * r.den}.normalized();
  }
  friend Fraction operator*(Fraction l, Fraction r) {
    return Fraction{l.num * r.num, l.den * r.den}.normalized();
  }
  friend bool operator==(Fraction l, Fraction r) { return l.num == r.num && l.den == r.den; }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Random tree over every node kind with admissible parameters. With
/// `normalized`, arctan/tan members use the oracle shape so that every node
/// maps [-1, 1] onto itself.
inline MapExpr random_expr(std::mt19937_64& rng, int depth, bool normalized = true) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 8 : 5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  switch (pick(rng)) {
    case 0:
      return MapExpr::identity();
    case 1:
      return MapExpr::cubic();
    case 2:
      return MapExpr::sin_half_pi();
    case 3: {
      const double a = 1.01 + 20.0 * unit(rng);
      return MapExpr::arctan_family(a, normalized ? oracle_b_arctan(a) : 0.05 + 8.0 * unit(rng));
    }
    case 4: {
      const double a = 0.05 + 0.9 * unit(rng);
      return MapExpr::tan_family(a, normalized ? oracle_b_tan(a) : 0.05 + 1.4 * unit(rng));
    }
    case 5:
      return MapExpr::erf_family(0.05 + 2.95 * unit(rng));
    case 6:
      return negate(random_expr(rng, depth - 1, normalized));
    case 7:
      return compose(random_expr(rng, depth - 1, normalized),
                     random_expr(rng, depth - 1, normalized));
    default:
      return iterate(random_expr(rng, depth - 1, normalized),
                     std::uniform_int_distribution<std::uint32_t>(1, 3)(rng));
  }
}

}  // namespace automorph::testing
