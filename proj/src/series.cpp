#include "automorph/series.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "automorph/errors.hpp"

namespace automorph {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_primitive(const MapExpr& e) {
  if (!e.is_primitive()) {
    throw ParameterError("series are defined for primitive nodes only, got " +
                         e.describe());
  }
}

}  // namespace

std::vector<double> tan_base_coefficients(std::size_t order) {
  std::vector<double> t(order + 1, 0.0);
  for (std::size_t m = 0; m < order; ++m) {
    double rhs = m == 0 ? 1.0 : 0.0;
    // t is odd, so t_i t_j can only be nonzero for odd i and j.
    for (std::size_t i = 1; i < m; i += 2) rhs += t[i] * t[m - i];
    if ((m + 1) % 2 == 1) t[m + 1] = rhs / static_cast<double>(m + 1);
  }
  return t;
}

std::vector<double> arctan_base_coefficients(std::size_t order) {
  std::vector<double> c(order + 1, 0.0);
  for (std::size_t j = 1; j <= order; j += 2) {
    const double sign = ((j - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
    c[j] = sign / static_cast<double>(j);
  }
  return c;
}

std::vector<double> sin_base_coefficients(std::size_t order) {
  std::vector<double> c(order + 1, 0.0);
  double term = 1.0;  // (-1)^k / (2k+1)!
  for (std::size_t j = 1; j <= order; j += 2) {
    if (j > 1) term /= -static_cast<double>(j * (j - 1));
    c[j] = term;
  }
  return c;
}

std::vector<double> erf_base_coefficients(std::size_t order) {
  std::vector<double> c(order + 1, 0.0);
  const double lead = 2.0 / std::sqrt(std::numbers::pi);
  double term = lead;  // 2/sqrt(pi) (-1)^n / n!
  for (std::size_t j = 1, n = 0; j <= order; j += 2, ++n) {
    if (n > 0) term /= -static_cast<double>(n);
    c[j] = term / static_cast<double>(j);
  }
  return c;
}

std::vector<double> scale_coefficients(const std::vector<double>& base, double scale,
                                       double prefactor) {
  std::vector<double> c(base.size(), 0.0);
  double power = 1.0;
  for (std::size_t j = 0; j < base.size(); ++j) {
    if (base[j] != 0.0) c[j] = prefactor * base[j] * power;
    power *= scale;
  }
  return c;
}

SeriesExpansion taylor(const MapExpr& family, std::size_t order) {
  require_primitive(family);
  if (order == 0) throw ParameterError("series order must be at least 1");

  SeriesExpansion s;
  s.order = order;
  s.family = family.describe();
  s.radius = radius(family);

  switch (family.kind()) {
    case NodeKind::Identity:
      s.coeffs.assign(order + 1, 0.0);
      s.coeffs[1] = 1.0;
      break;
    case NodeKind::Cubic:
      s.coeffs.assign(order + 1, 0.0);
      if (order >= 3) s.coeffs[3] = 1.0;
      break;
    case NodeKind::SinHalfPi:
      s.coeffs = scale_coefficients(sin_base_coefficients(order), kHalfPi, 1.0);
      break;
    case NodeKind::ArctanFam: {
      const auto& f = std::get<ArctanFamily>(family.node().data);
      s.coeffs = scale_coefficients(arctan_base_coefficients(order), f.b, f.a / f.b);
      break;
    }
    case NodeKind::TanFam: {
      const auto& f = std::get<TanFamily>(family.node().data);
      s.coeffs = scale_coefficients(tan_base_coefficients(order), f.b, f.a / f.b);
      break;
    }
    case NodeKind::ErfFam: {
      const auto& f = std::get<ErfFamily>(family.node().data);
      s.coeffs = scale_coefficients(erf_base_coefficients(order), f.k, 1.0 / f.erf_k);
      break;
    }
    default:
      break;
  }
  for (double c : s.coeffs) {
    if (!std::isfinite(c)) {
      throw std::range_error("series coefficient overflow for " + s.family +
                             " at order " + std::to_string(order));
    }
  }
  return s;
}

std::size_t default_order(NodeKind kind) {
  switch (kind) {
    case NodeKind::Identity:
      return 1;
    case NodeKind::Cubic:
      return 3;
    case NodeKind::SinHalfPi:
      return 40;
    case NodeKind::ArctanFam:
      return 400;
    case NodeKind::TanFam:
      // Ratio to the radius reaches 0.8, so 0.8^N must clear 1e-12 with room
      // for the (4/pi) a/b prefactor.
      return 160;
    case NodeKind::ErfFam:
      return 80;
    default:
      throw ParameterError("series are defined for primitive nodes only");
  }
}

double eval_series(const SeriesExpansion& s, double x) {
  double acc = 0.0;
  for (auto it = s.coeffs.rbegin(); it != s.coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double radius(const MapExpr& family) {
  require_primitive(family);
  switch (family.kind()) {
    case NodeKind::ArctanFam:
      return 1.0 / std::get<ArctanFamily>(family.node().data).b;
    case NodeKind::TanFam:
      return kHalfPi / std::get<TanFamily>(family.node().data).b;
    default:
      return kInf;
  }
}

}  // namespace automorph
