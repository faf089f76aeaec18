#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "automorph/errors.hpp"
#include "automorph/param_solver.hpp"
#include "automorph/verifier.hpp"
#include "oracles.hpp"

namespace automorph {
namespace {

constexpr double kPi = std::numbers::pi;

const Check& get(const VerificationReport& r, const std::string& name) {
  const Check* c = r.find(name);
  if (c == nullptr) throw std::logic_error("missing check " + name);
  return *c;
}

TEST(Verify, BuiltArctanMapPasses) {
  const VerificationReport r = verify(build_automorphism(4.0), 4.0, 10001);
  EXPECT_TRUE(r.pass());
  EXPECT_LE(get(r, "endpoint_plus").measured, 1e-9);
  EXPECT_LE(get(r, "endpoint_minus").measured, 1e-9);
  EXPECT_EQ(r.grid_n, 10001u);
}

TEST(Verify, IdentityHasZeroResiduals) {
  const VerificationReport r = verify(MapExpr::identity(), 1.0, 101);
  EXPECT_TRUE(r.pass());
  for (const char* name : {"monotonicity", "endpoint_plus", "endpoint_minus", "origin_fixed",
                           "derivative_at_zero", "oddness"}) {
    EXPECT_EQ(get(r, name).measured, 0.0) << name;
  }
  // Only rounding in x +- s survives the difference quotient.
  EXPECT_LE(get(r, "fd_consistency").measured, 1e-10);
}

TEST(Verify, RejectsMisparameterisedArctan) {
  const VerificationReport r = verify(MapExpr::arctan_family(4.0, 1.0), 4.0, 1001);
  EXPECT_FALSE(r.pass());
  EXPECT_FALSE(get(r, "endpoint_plus").pass);
  EXPECT_FALSE(get(r, "endpoint_minus").pass);
  EXPECT_NEAR(get(r, "endpoint_plus").measured, kPi - 1.0, 1e-14);
  EXPECT_TRUE(get(r, "monotonicity").pass);
  EXPECT_TRUE(get(r, "derivative_at_zero").pass);
}

TEST(Verify, RejectsWrongClaimedDerivative) {
  for (double a : {-7.0, 0.25, 4.0}) {
    for (double delta : {1e-3, 1e-6}) {
      const VerificationReport r = verify(build_automorphism(a), a + delta, 2001);
      EXPECT_FALSE(r.pass()) << "a=" << a << " delta=" << delta;
      EXPECT_FALSE(get(r, "derivative_at_zero").pass);
    }
  }
}

TEST(Verify, ZeroClaimInfersDirectionFromEndpoints) {
  EXPECT_TRUE(verify(MapExpr::cubic(), 0.0, 1001).pass());
  EXPECT_TRUE(verify(negate(MapExpr::cubic()), 0.0, 1001).pass());
}

TEST(Verify, DecreasingMapWithPositiveClaimFailsMonotonicity) {
  const VerificationReport r = verify(negate(MapExpr::sin_half_pi()), kPi / 2, 101);
  EXPECT_FALSE(get(r, "monotonicity").pass);
  EXPECT_EQ(get(r, "monotonicity").measured, 100.0);
}

TEST(Verify, FlatIteratesTieButStayMonotone) {
  // h_3(x) ~ 1 - c (1 - x)^8 near 1, so neighbouring samples round together.
  const MapExpr h3 = iterate(MapExpr::sin_half_pi(), 3);
  const double x = 1.0 - 2.0 / 10000.0;
  ASSERT_EQ(h3.eval(x), h3.eval(1.0));
  const VerificationReport r = verify(h3, std::pow(kPi / 2, 3), 10001);
  EXPECT_TRUE(r.pass()) << to_json(r).dump();
}

TEST(Verify, RejectsTinyGrid) {
  EXPECT_THROW(verify(MapExpr::identity(), 1.0, 2), ParameterError);
  EXPECT_NO_THROW(verify(MapExpr::identity(), 1.0, 3));
}

TEST(Verify, ToleranceProfileIsHonoured) {
  ToleranceProfile loose;
  loose.endpoint = 10.0;
  EXPECT_TRUE(verify(MapExpr::arctan_family(4.0, 1.0), 4.0, 101, loose).pass());
}

TEST(FdDerivative, Anchors) {
  EXPECT_NEAR(fd_derivative(MapExpr::sin_half_pi(), 0.0, 1e-4), kPi / 2, 1e-9);
  EXPECT_NEAR(fd_derivative(MapExpr::cubic(), 0.0, 1e-4), 0.0, 1e-10);
  const double b = testing::oracle_b_arctan(4.0);
  const MapExpr f = MapExpr::arctan_family(4.0, b);
  const double closed = 4.0 / (1.0 + b * b * 0.25);
  EXPECT_NEAR(fd_derivative(f, 0.5, 1e-5), closed, 1e-6 * closed);
}

TEST(FdDerivative, StencilMustStayInside) {
  EXPECT_THROW(fd_derivative(MapExpr::identity(), 0.99999, 1e-4), DomainError);
  EXPECT_THROW(fd_derivative(MapExpr::identity(), 0.0, 0.0), ParameterError);
  EXPECT_NO_THROW(fd_derivative(MapExpr::identity(), 0.9999, 1e-4));
}

TEST(ReportJson, FieldNames) {
  const auto doc = to_json(verify(build_automorphism(0.25), 0.25, 101));
  for (const char* key : {"expr", "pass", "checks", "grid_n", "epsilon_margin"}) {
    EXPECT_TRUE(doc.contains(key)) << key;
  }
  ASSERT_EQ(doc["checks"].size(), 7u);
  for (const auto& c : doc["checks"]) {
    for (const char* key : {"name", "pass", "measured", "threshold"}) {
      EXPECT_TRUE(c.contains(key)) << key;
    }
  }
  EXPECT_EQ(doc["checks"][0]["name"], "monotonicity");
  EXPECT_TRUE(doc["pass"].get<bool>());
}

// Properties

TEST(VerifyProperty, SoundOnBuiltMaps) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> as(-50.0, 50.0);
  for (int t = 0; t < 60; ++t) {
    const double a = as(rng);
    const VerificationReport r = verify(build_automorphism(a), a, 10000);
    EXPECT_TRUE(r.pass()) << "a=" << a << " " << to_json(r).dump();
  }
}

TEST(VerifyProperty, MeasurementsFiniteNonnegativeAndPassIsConjunction) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 40; ++t) {
    const MapExpr e = testing::random_expr(rng, 2);
    const VerificationReport r = verify(e, e.deriv(0.0) * (t % 3 == 0 ? 1.1 : 1.0), 501);
    bool all = true;
    for (const auto& c : r.checks) {
      EXPECT_TRUE(std::isfinite(c.measured)) << c.name;
      EXPECT_GE(c.measured, 0.0) << c.name;
      all = all && c.pass;
    }
    EXPECT_EQ(r.pass(), all);
  }
}

TEST(VerifyProperty, Deterministic) {
  const MapExpr e = compose(build_automorphism(-7.0), MapExpr::erf_family(2.0));
  const double a = e.deriv(0.0);
  EXPECT_EQ(to_json(verify(e, a, 3001)).dump(), to_json(verify(e, a, 3001)).dump());
}

}  // namespace
}  // namespace automorph
