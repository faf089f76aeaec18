#include "automorph/curve.hpp"

#include "automorph/errors.hpp"
#include "automorph/format.hpp"

namespace automorph {

namespace {

void check_grid(std::size_t grid_n, double eps) {
  if (grid_n < 3) throw ParameterError("curve grid needs at least 3 points");
  if (!(eps >= 0.0 && eps <= 0.1)) throw ParameterError("epsilon margin must lie in [0, 0.1]");
}

template <class Value, class Slope>
CurveSample sample(std::string description, std::size_t grid_n, double eps,
                   Value&& value, Slope&& slope) {
  check_grid(grid_n, eps);
  CurveSample c;
  c.description = std::move(description);
  c.grid_n = grid_n;
  c.epsilon = eps;
  c.xs = uniform_grid(-1.0 + eps, 1.0 - eps, grid_n);
  c.ys.reserve(grid_n);
  c.dys.reserve(grid_n);
  for (double x : c.xs) {
    c.ys.push_back(value(x));
    c.dys.push_back(slope(x));
  }
  return c;
}

}  // namespace

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  if (n > 0) xs.back() = hi;
  return xs;
}

CurveSample sample_curve(const MapExpr& e, std::size_t grid_n, double eps) {
  return sample(
      e.describe(), grid_n, eps, [&](double x) { return e.eval(x); },
      [&](double x) { return e.deriv(x); });
}

CurveSample sample_curve(const SeqFamily& s, std::size_t grid_n, double eps) {
  if (!(eps > 0.0)) throw ParameterError("sequence curves need a positive epsilon margin");
  return sample(
      s.describe(), grid_n, eps, [&](double x) { return seq_eval(s, x); },
      [&](double x) { return seq_deriv(s, x); });
}

void write_csv(std::ostream& out, const CurveSample& curve) {
  out << "x,f,f_prime\n";
  for (std::size_t i = 0; i < curve.xs.size(); ++i) {
    out << format_double(curve.xs[i]) << ',' << format_double(curve.ys[i]) << ','
        << format_double(curve.dys[i]) << '\n';
  }
}

}  // namespace automorph
