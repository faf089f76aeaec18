#include "automorph/map_expr.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "automorph/errors.hpp"
#include "automorph/format.hpp"
#include "automorph/root_finding.hpp"

namespace automorph {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const double kTwoOverSqrtPi = 2.0 / std::sqrt(std::numbers::pi);

void check_domain(double x) {
  if (!(x >= -1.0 && x <= 1.0)) {
    throw DomainError("argument " + format_double(x) + " outside [-1, 1]");
  }
}

double ipow(double base, std::uint32_t n) {
  double result = 1.0;
  while (n != 0) {
    if (n & 1u) result *= base;
    base *= base;
    n >>= 1u;
  }
  return result;
}

}  // namespace

double erf_series(double x) {
  // erf(x) = 2/sqrt(pi) * sum_n (-1)^n x^(2n+1) / (n! (2n+1))
  const double x2 = x * x;
  double power = x;  // (-1)^n x^(2n+1) / n!
  double sum = x;
  for (int n = 1; n < 400; ++n) {
    power *= -x2 / n;
    const double term = power / (2 * n + 1);
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
  }
  return kTwoOverSqrtPi * sum;
}

MapExpr MapExpr::identity() {
  return MapExpr(std::make_shared<const Node>(Node{IdentityMap{}}));
}

MapExpr MapExpr::cubic() {
  return MapExpr(std::make_shared<const Node>(Node{CubicMap{}}));
}

MapExpr MapExpr::sin_half_pi() {
  return MapExpr(std::make_shared<const Node>(Node{SinHalfPiMap{}}));
}

MapExpr MapExpr::arctan_family(double a, double b) {
  if (!std::isfinite(a) || !(a > 1.0)) {
    throw ParameterError("arctan family requires a > 1, got " + format_double(a));
  }
  if (!std::isfinite(b) || !(b > 0.0)) {
    throw ParameterError("arctan family requires b > 0, got " + format_double(b));
  }
  return MapExpr(std::make_shared<const Node>(Node{ArctanFamily{a, b}}));
}

MapExpr MapExpr::tan_family(double a, double b) {
  if (!(a > 0.0 && a < 1.0)) {
    throw ParameterError("tan family requires 0 < a < 1, got " + format_double(a));
  }
  if (!(b > 0.0 && b < kHalfPi)) {
    throw ParameterError("tan family requires 0 < b < pi/2, got " + format_double(b));
  }
  return MapExpr(std::make_shared<const Node>(Node{TanFamily{a, b}}));
}

MapExpr MapExpr::erf_family(double k) {
  if (!(k > 0.0 && k <= kMaxErfShape)) {
    throw ParameterError("erf family requires 0 < k <= 3, got " + format_double(k));
  }
  return MapExpr(std::make_shared<const Node>(Node{ErfFamily{k, erf_series(k)}}));
}

MapExpr negate(MapExpr inner) {
  return MapExpr(std::make_shared<const MapExpr::Node>(
      MapExpr::Node{NegateMap{std::move(inner)}}));
}

MapExpr compose(MapExpr outer, MapExpr inner) {
  return MapExpr(std::make_shared<const MapExpr::Node>(
      MapExpr::Node{ComposeMap{std::move(outer), std::move(inner)}}));
}

MapExpr iterate(MapExpr base, std::uint32_t n) {
  if (n == 0) throw ParameterError("iteration count must be at least 1");
  return MapExpr(std::make_shared<const MapExpr::Node>(
      MapExpr::Node{IterateMap{std::move(base), n}}));
}

NodeKind MapExpr::kind() const {
  return static_cast<NodeKind>(node_->data.index());
}

bool MapExpr::is_primitive() const {
  switch (kind()) {
    case NodeKind::Negate:
    case NodeKind::Compose:
    case NodeKind::Iterate:
      return false;
    default:
      return true;
  }
}

double MapExpr::eval(double x) const {
  check_domain(x);
  return eval_unchecked(x);
}

double MapExpr::deriv(double x) const {
  check_domain(x);
  return deriv_unchecked(x);
}

// Intermediate values inside composites may sit a rounding error outside
// [-1, 1]; only the outermost argument is domain-checked.
double MapExpr::eval_unchecked(double x) const {
  return std::visit(
      Overloaded{
          [x](const IdentityMap&) { return x; },
          [x](const CubicMap&) { return x * x * x; },
          [x](const SinHalfPiMap&) { return std::sin(kHalfPi * x); },
          [x](const ArctanFamily& f) { return f.a / f.b * std::atan(f.b * x); },
          [x](const TanFamily& f) { return f.a / f.b * std::tan(f.b * x); },
          [x](const ErfFamily& f) { return erf_series(f.k * x) / f.erf_k; },
          [x](const NegateMap& m) { return -m.inner.eval_unchecked(x); },
          [x](const ComposeMap& m) {
            return m.outer.eval_unchecked(m.inner.eval_unchecked(x));
          },
          [x](const IterateMap& m) {
            double y = x;
            for (std::uint32_t i = 0; i < m.n; ++i) y = m.base.eval_unchecked(y);
            return y;
          },
      },
      node_->data);
}

double MapExpr::deriv_unchecked(double x) const {
  return std::visit(
      Overloaded{
          [](const IdentityMap&) { return 1.0; },
          [x](const CubicMap&) { return 3.0 * x * x; },
          [x](const SinHalfPiMap&) { return kHalfPi * std::cos(kHalfPi * x); },
          [x](const ArctanFamily& f) {
            const double u = f.b * x;
            return f.a / (1.0 + u * u);
          },
          [x](const TanFamily& f) {
            const double c = std::cos(f.b * x);
            return f.a / (c * c);
          },
          [x](const ErfFamily& f) {
            const double u = f.k * x;
            return kTwoOverSqrtPi * f.k / f.erf_k * std::exp(-u * u);
          },
          [x](const NegateMap& m) { return -m.inner.deriv_unchecked(x); },
          [x](const ComposeMap& m) {
            return m.outer.deriv_unchecked(m.inner.eval_unchecked(x)) *
                   m.inner.deriv_unchecked(x);
          },
          [x](const IterateMap& m) {
            // Every node fixes the origin, so the chain collapses to a power.
            if (x == 0.0) return ipow(m.base.deriv_unchecked(0.0), m.n);
            double y = x;
            double d = 1.0;
            for (std::uint32_t i = 0; i < m.n; ++i) {
              d *= m.base.deriv_unchecked(y);
              y = m.base.eval_unchecked(y);
            }
            return d;
          },
      },
      node_->data);
}

std::string MapExpr::describe() const {
  return std::visit(
      Overloaded{
          [](const IdentityMap&) -> std::string { return "identity"; },
          [](const CubicMap&) -> std::string { return "cubic"; },
          [](const SinHalfPiMap&) -> std::string { return "sin_half_pi"; },
          [](const ArctanFamily& f) -> std::string {
            return "arctan(a=" + format_double(f.a) + ",b=" + format_double(f.b) + ")";
          },
          [](const TanFamily& f) -> std::string {
            return "tan(a=" + format_double(f.a) + ",b=" + format_double(f.b) + ")";
          },
          [](const ErfFamily& f) -> std::string {
            return "erf(k=" + format_double(f.k) + ")";
          },
          [](const NegateMap& m) -> std::string {
            return "neg(" + m.inner.describe() + ")";
          },
          [](const ComposeMap& m) -> std::string {
            return "compose(" + m.outer.describe() + "," + m.inner.describe() + ")";
          },
          [](const IterateMap& m) -> std::string {
            return "iterate(" + m.base.describe() + ",n=" + std::to_string(m.n) + ")";
          },
      },
      node_->data);
}

double invert(const MapExpr& e, double y, double tol) {
  if (!(y >= -1.0 && y <= 1.0)) {
    throw DomainError("target " + format_double(y) + " outside [-1, 1]");
  }
  auto residual = [&](double x) {
    return std::pair{e.eval(x) - y, e.deriv(x)};
  };
  return safeguarded_newton(residual, -1.0, 1.0, 0.0, tol).x;
}

}  // namespace automorph
