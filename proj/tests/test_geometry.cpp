#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cmc/domain.hpp"
#include "cmc/errors.hpp"
#include "cmc/geometry.hpp"
#include "oracles.hpp"

using namespace cmc;
using std::numbers::pi;

namespace {

const DelaunayParams kUnduloid{0.9, 0.1};
const DelaunayParams kNodoid{1.1, 0.1};

double dot(const Vec3& u, const Vec3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

// Contact function written out independently of the contact module.
double contact_fn(const CurvePoint& pt, double ratio) {
  return pt.x - pt.xp / pt.zp * pt.z * ratio;
}

// Positive contact root of a Delaunay curve by plain bisection on (lo, hi).
double contact_root(const ProfileCurve& c, double ratio, double lo, double hi) {
  return cmc::testing::bisection_root(
      [&](double s) { return contact_fn(c.evaluate(s), ratio); }, lo, hi);
}

double random_amplitude(std::mt19937_64& rng) {
  double b = cmc::testing::uniform(rng, 0.0, 3.0);
  return b == 1.0 ? 0.5 : b;
}

}  // namespace

TEST_CASE("surface_point") {
  const SurfaceFrame cat = surface_point(catenoid_curve(), 0.0, 0.0);
  CHECK(cat.position == Vec3{1.0, 0.0, 0.0});
  CHECK(cat.normal == Vec3{-1.0, -0.0, 0.0});

  const SurfaceFrame cyl = surface_point(delaunay_curve({0.0, 1.0}), 2.0, pi / 2);
  CHECK(std::abs(cyl.position[0]) < 1e-15);
  CHECK(cyl.position[1] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(cyl.position[2] == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(std::abs(cyl.normal[0]) < 1e-15);
  CHECK(cyl.normal[1] == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(cyl.normal[2] == 0.0);

  // unduloid: N is orthogonal to finite-difference tangents
  const ProfileCurve und = delaunay_curve(kUnduloid);
  const double s = 1.0, theta = 1.0, h = 1e-5;
  const SurfaceFrame f = surface_point(und, s, theta);
  const SurfaceFrame fs_p = surface_point(und, s + h, theta), fs_m = surface_point(und, s - h, theta);
  const SurfaceFrame ft_p = surface_point(und, s, theta + h), ft_m = surface_point(und, s, theta - h);
  Vec3 ts{}, tt{};
  for (int i = 0; i < 3; ++i) {
    ts[i] = (fs_p.position[i] - fs_m.position[i]) / (2 * h);
    tt[i] = (ft_p.position[i] - ft_m.position[i]) / (2 * h);
  }
  CHECK(std::abs(dot(f.normal, ts)) < 1e-10);
  CHECK(std::abs(dot(f.normal, tt)) < 1e-10);
  CHECK(std::abs(dot(f.normal, f.normal) - 1.0) < 1e-10);
}

TEST_CASE("principal_curvatures") {
  for (double s : {-1.0, 0.0, 1.5}) {
    const PrincipalCurvatures k = principal_curvatures(delaunay_curve({0.0, 2.0}), s);
    CHECK(k.meridian == 0.0);
    CHECK(k.parallel == doctest::Approx(2.0).epsilon(1e-15));
  }
  const ProfileCurve cat = catenoid_curve();
  for (double s : {-2.0, 0.0, 0.5}) {
    const PrincipalCurvatures k = principal_curvatures(cat, s);
    CHECK(k.meridian == doctest::Approx(-1.0 / (1.0 + s * s)).epsilon(1e-14));
    CHECK(k.parallel == doctest::Approx(1.0 / (1.0 + s * s)).epsilon(1e-14));
    CHECK(std::abs(k.meridian + k.parallel) < 1e-15);
  }
  const PrincipalCurvatures k0 = principal_curvatures(delaunay_curve(kUnduloid), 0.0);
  CHECK(k0.meridian == doctest::Approx(-0.9).epsilon(1e-13));
  CHECK(k0.parallel == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("meridian curvature forms agree off horizontal tangents") {
  auto rng = cmc::testing::make_rng(21);
  for (int i = 0; i < 300; ++i) {
    const DelaunayParams p{random_amplitude(rng), cmc::testing::uniform(rng, 0.05, 2.0)};
    const CurveDerivatives d = delaunay_derivatives(cmc::testing::uniform(rng, -30.0, 30.0), p);
    const CurvePoint pt{1.0, 0.0, d.xp, d.zp, d.xpp, d.zpp};
    if (std::abs(d.zp) <= 1e-3) continue;
    const double det_form = principal_curvatures(pt).meridian;
    CHECK(std::abs(det_form - meridian_curvature_graph_form(pt)) <= 1e-8 * std::max(1.0, std::abs(det_form)));
  }
  CHECK_THROWS_AS(meridian_curvature_graph_form(CurvePoint{1.0, 0.0, 1.0, 0.0, 0.0, 0.0}),
                  VerticalTangentError);
}

TEST_CASE("support_g") {
  for (double ratio : {1.0, 2.0, 5.0}) {
    CHECK(support_g(delaunay_curve({0.0, 0.25}), 1.7, ratio) == doctest::Approx(-4.0).epsilon(1e-15));
    CHECK(support_g(delaunay_curve(kUnduloid), 0.0, ratio) == doctest::Approx(-1.0).epsilon(1e-13));
  }
  CHECK_THROWS_AS(support_g(catenoid_curve(), 0.0, 0.5), InvalidArgument);

  const ProfileCurve und = delaunay_curve(kUnduloid);
  const double root = contact_root(und, 2.0, 1e-6, first_inflection_s0(kUnduloid));
  CHECK(std::abs(support_g(und, root, 2.0)) < 1e-9);
}

TEST_CASE("sample_geometry") {
  // g = 0: horizontal point on the z = 0 plane
  const GeometrySample flat = sample_geometry(CurvePoint{1.0, 0.0, 1.0, 0.0, 0.0, 0.3}, 0.0, 2.0);
  CHECK(flat.g == 0.0);
  CHECK(flat.lambda1 == 1.0);
  CHECK(flat.lambda2 == 1.0);
  CHECK(flat.gap_margin == 2.0);

  const GeometrySample cyl = sample_geometry(delaunay_curve({0.0, 1.0}), 0.4, 2.0);
  CHECK(cyl.lambda1 == 1.0);
  CHECK(cyl.lambda2 == 0.0);
  CHECK(cyl.gap_margin == 0.0);
  CHECK(cyl.mean_curvature == 0.5);
  CHECK(cyl.phi_sq == 0.5);

  const ProfileCurve und = delaunay_curve(kUnduloid);
  const double s_bar = contact_root(und, 2.0, 1e-6, first_inflection_s0(kUnduloid));
  double worst = INFINITY;
  for (int i = 0; i < 1000; ++i) {
    const GeometrySample g = sample_geometry(und, -s_bar + 2.0 * s_bar * i / 999.0, 2.0);
    worst = std::min({worst, g.lambda1, g.lambda2});
  }
  CHECK(worst >= -1e-12);
}

TEST_CASE("hessian_eigenvalues") {
  // sphere: the meridian term vanishes
  const DomainGenerator sphere = ellipsoid_generator({1.0, 1.0, 9.0});
  const ProfileCurve cat = catenoid_curve();
  for (double s : {-0.5, 0.0, 0.8}) {
    const HessianEigenvalues h = hessian_eigenvalues(cat, s, sphere, 1.0);
    const GeometrySample g = sample_geometry(cat, s, 1.0);
    CHECK(h.meridian == doctest::Approx(g.lambda1).epsilon(1e-14));
    CHECK(h.parallel == g.lambda2);
  }

  // contact point (g = 0), ellipsoid a = 1, b = sqrt 2 (condition -1)
  const DomainGenerator e = ellipsoid_generator({1.0, std::sqrt(2.0), 4.0});
  const double ratio = 2.0;
  // choose z so that g = -x z' + x' z ratio = 0
  const CurvePoint contact{1.0, 0.8 / (0.6 * ratio), 0.6, 0.8, 0.1, -0.075};
  CHECK(std::abs(support_g(contact, ratio)) < 1e-15);
  const HessianEigenvalues hc = hessian_eigenvalues(contact, e, ratio);
  CHECK(hc.meridian == doctest::Approx(1.0 + 0.64).epsilon(1e-14));
  CHECK(hc.parallel == 1.0);

  CHECK_THROWS_AS(hessian_eigenvalues(CurvePoint{1.0, 5.0, 0.0, 1.0, 0.0, 0.0}, e, ratio),
                  OutOfIntervalError);
}

TEST_CASE("hessian dominates the lambda~ bounds inside the certified ellipsoid") {
  const ProfileCurve und = delaunay_curve(kUnduloid);
  const double s_bar = contact_root(und, 2.0, 1e-6, first_inflection_s0(kUnduloid));
  const CurvePoint edge = und.evaluate(s_bar);
  const double r_sq = edge.x * edge.x + 2.0 * edge.z * edge.z;
  const DomainGenerator e = ellipsoid_generator({1.0, std::sqrt(2.0), r_sq});
  for (int i = 0; i < 100; ++i) {
    const double s = -s_bar + 2.0 * s_bar * i / 99.0;
    const HessianEigenvalues h = hessian_eigenvalues(und, s, e, 2.0);
    const GeometrySample g = sample_geometry(und, s, 2.0);
    CHECK(h.meridian - g.lambda1 >= -1e-12);
    CHECK(h.parallel - g.lambda2 >= -1e-12);
  }
}

TEST_CASE("h_conditions") {
  const ProfileCurve cat = catenoid_curve();
  for (int i = 0; i <= 100; ++i) {
    const double s = -0.85 + 1.7 * i / 100.0;
    const HConditionReport r = h_conditions(cat, s, 2.0);
    CHECK(r.h1_applicable);
    CHECK_FALSE(r.h2_applicable);
    CHECK(r.h1_margin >= 0.0);
    CHECK(r.h3_margin >= 0.0);
    CHECK(r.satisfied());
    // closed forms in the cosh-graph variable
    const double closed_h1 = 1.0 + (std::cosh(std::asinh(s)) - 2.0 * s * std::asinh(s)) /
                                      std::pow(1.0 + s * s, 1.5);
    const double closed_h3 = s / (1.0 + s * s) * (s * std::cosh(std::asinh(s)) + 2.0 * std::asinh(s));
    CHECK(r.h1_margin == doctest::Approx(closed_h1).epsilon(1e-12));
    CHECK(r.h3_margin == doctest::Approx(closed_h3).epsilon(1e-12));
  }

  for (const DelaunayParams& p : {kUnduloid, kNodoid, DelaunayParams{0.0, 1.0}, DelaunayParams{2.5, 0.4}}) {
    CHECK(h_conditions(delaunay_curve(p), 0.0, 2.0).h3_margin == 0.0);
  }

  const ProfileCurve nod = delaunay_curve(kNodoid);
  const double r_bar = contact_root(nod, 2.0, 1e-6, 1.0);
  for (int i = 0; i <= 200; ++i) {
    const HConditionReport r = h_conditions(nod, -r_bar + 2.0 * r_bar * i / 200.0, 2.0);
    CHECK(r.satisfied(1e-12));
  }

  // horizontal tangent switches to h2
  const HConditionReport horiz = h_conditions(CurvePoint{2.0, -1.5, 1.0, 0.0, 0.0, 0.4}, 0.0, 2.0);
  CHECK(horiz.h2_applicable);
  CHECK_FALSE(horiz.h1_applicable);
  CHECK(horiz.h2_margin == doctest::Approx(1.0 - 1.5 * 0.4 * 2.0).epsilon(1e-15));
  CHECK_FALSE(horiz.satisfied());
}

TEST_CASE("property: CMC constancy k1 + k2 = H") {
  auto rng = cmc::testing::make_rng(22);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const DelaunayParams p{random_amplitude(rng), cmc::testing::uniform(rng, 0.05, 2.0)};
    const double s = cmc::testing::uniform(rng, -pi / p.curvature(), pi / p.curvature());
    const CurveDerivatives d = delaunay_derivatives(s, p);
    const CurvePoint pt{delaunay_x(s, p), 0.0, d.xp, d.zp, d.xpp, d.zpp};
    const PrincipalCurvatures k = principal_curvatures(pt);
    worst = std::max(worst, std::abs(k.meridian + k.parallel - p.curvature()));
  }
  CHECK(worst < 1e-9);
  const ProfileCurve cat = catenoid_curve();
  for (double s : {-4.0, -1.0, 0.3, 7.0}) {
    const PrincipalCurvatures k = principal_curvatures(cat, s);
    CHECK(std::abs(k.meridian + k.parallel) < 1e-15);
  }
}

TEST_CASE("property: gap identity, support identity and h => gap") {
  auto rng = cmc::testing::make_rng(23);
  double worst_gap = 0.0, worst_support = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const DelaunayParams p{random_amplitude(rng), cmc::testing::uniform(rng, 0.05, 2.0)};
    const double s = cmc::testing::uniform(rng, -pi / p.curvature(), pi / p.curvature());
    const double ratio = cmc::testing::uniform(rng, 1.0, 4.0);
    const ProfileCurve c = delaunay_curve(p);
    const CurvePoint pt = c.evaluate(s);
    const GeometrySample g = sample_geometry(pt, s, ratio);
    const double lhs = 4.0 * g.lambda1 * g.lambda2;
    const double two_h_g = 2.0 + 2.0 * g.mean_curvature * g.g;
    const double rhs = two_h_g * two_h_g - 2.0 * g.phi_sq * g.g * g.g;
    worst_gap = std::max(worst_gap, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
    if (std::abs(pt.zp) > 1e-6) {
      const double identity = g.g + pt.zp * contact_fn(pt, ratio);
      worst_support = std::max(worst_support, std::abs(identity) / std::max(1.0, std::abs(g.g)));
    }
    const HConditionReport h = h_conditions(pt, s, ratio);
    if (h.satisfied()) CHECK(g.gap_margin >= -1e-12 * std::max(1.0, g.g * g.g));
    CHECK(g.phi_sq >= 0.0);
  }
  CHECK(worst_gap < 1e-10);
  CHECK(worst_support < 1e-10);
}
