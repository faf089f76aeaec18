#pragma once

// Expression trees for odd, real analytic self-maps of [-1, 1].
//
// A MapExpr is an immutable handle onto a shared node. Primitive nodes carry
// their family parameters (validated at construction); composite nodes hold
// child handles. Evaluation and differentiation are structural: primitives use
// closed forms and composites apply the chain rule.

#include <cstdint>
#include <memory>
#include <numbers>
#include <string>
#include <variant>

namespace automorph {

class MapExpr;

struct IdentityMap {};

/// x -> x^3
struct CubicMap {};

/// x -> sin(pi x / 2)
struct SinHalfPiMap {};

/// x -> (a/b) arctan(b x), with a > 1 and b > 0.
struct ArctanFamily {
  double a;
  double b;
};

/// x -> (a/b) tan(b x), with 0 < a < 1 and 0 < b < pi/2.
struct TanFamily {
  double a;
  double b;
};

/// x -> erf(k x) / erf(k), with 0 < k <= 3.
struct ErfFamily {
  double k;
  double erf_k;  // cached normaliser
};

enum class NodeKind {
  Identity,
  Cubic,
  SinHalfPi,
  ArctanFam,
  TanFam,
  ErfFam,
  Negate,
  Compose,
  Iterate,
};

class MapExpr {
 public:
  struct Node;

  static MapExpr identity();
  static MapExpr cubic();
  static MapExpr sin_half_pi();
  static MapExpr arctan_family(double a, double b);
  static MapExpr tan_family(double a, double b);
  static MapExpr erf_family(double k);

  NodeKind kind() const;
  bool is_primitive() const;
  const Node& node() const { return *node_; }

  /// Value at x. Throws DomainError unless x is in [-1, 1].
  double eval(double x) const;
  /// Exact derivative at x via closed forms and the chain rule.
  double deriv(double x) const;

  /// Human-readable, deterministic rendering of the tree.
  std::string describe() const;

  friend MapExpr negate(MapExpr inner);
  friend MapExpr compose(MapExpr outer, MapExpr inner);
  friend MapExpr iterate(MapExpr base, std::uint32_t n);

 private:
  explicit MapExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  double eval_unchecked(double x) const;
  double deriv_unchecked(double x) const;

  std::shared_ptr<const Node> node_;
};

struct NegateMap {
  MapExpr inner;
};

struct ComposeMap {
  MapExpr outer;
  MapExpr inner;
};

/// n-fold self-composition, kept symbolic.
struct IterateMap {
  MapExpr base;
  std::uint32_t n;
};

struct MapExpr::Node {
  std::variant<IdentityMap, CubicMap, SinHalfPiMap, ArctanFamily, TanFamily,
               ErfFamily, NegateMap, ComposeMap, IterateMap>
      data;
};

MapExpr negate(MapExpr inner);
MapExpr compose(MapExpr outer, MapExpr inner);
/// Throws ParameterError when n == 0.
MapExpr iterate(MapExpr base, std::uint32_t n);

/// Solve e(x) = y on [-1, 1] for strictly monotone e, returning x with
/// |e(x) - y| <= tol. Bisection-safeguarded Newton, at most 200 iterations.
double invert(const MapExpr& e, double y, double tol);

/// erf(x) from its odd Maclaurin series. Accurate to ~1e-13 for |x| <= 3.
double erf_series(double x);

inline constexpr double kHalfPi = std::numbers::pi / 2.0;
inline constexpr double kMaxErfShape = 3.0;

}  // namespace automorph
