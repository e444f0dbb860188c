#include "cmc/geometry.hpp"

#include <cmath>
#include <string>

#include "cmc/errors.hpp"

namespace cmc {

namespace {

void check_ratio(double ratio) {
  if (!(ratio >= 1.0) || !std::isfinite(ratio)) {
    throw InvalidArgument("axis ratio b^2/a^2 must be finite and >= 1");
  }
}

}  // namespace

SurfaceFrame surface_point(const CurvePoint& pt, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {{pt.x * c, pt.x * s, pt.z}, {-pt.zp * c, -pt.zp * s, pt.xp}};
}

SurfaceFrame surface_point(const ProfileCurve& c, double s, double theta) {
  return surface_point(c.evaluate(s), theta);
}

PrincipalCurvatures principal_curvatures(const CurvePoint& pt) {
  return {pt.xp * pt.zpp - pt.xpp * pt.zp, pt.zp / pt.x};
}

PrincipalCurvatures principal_curvatures(const ProfileCurve& c, double s) {
  return principal_curvatures(c.evaluate(s));
}

double meridian_curvature_graph_form(const CurvePoint& pt) {
  if (std::abs(pt.zp) <= kHorizontalTangentBand) {
    throw VerticalTangentError("-x''/z' is undefined where z' vanishes", 0.0);
  }
  return -pt.xpp / pt.zp;
}

double support_g(const CurvePoint& pt, double ratio) {
  check_ratio(ratio);
  return -pt.x * pt.zp + pt.xp * pt.z * ratio;
}

double support_g(const ProfileCurve& c, double s, double ratio) {
  return support_g(c.evaluate(s), ratio);
}

GeometrySample sample_geometry(const CurvePoint& pt, double s, double ratio) {
  GeometrySample out;
  out.s = s;
  out.point = pt;
  const PrincipalCurvatures k = principal_curvatures(pt);
  out.k1 = k.meridian;
  out.k2 = k.parallel;
  out.mean_curvature = 0.5 * (k.meridian + k.parallel);
  const double split = k.meridian - k.parallel;
  out.phi_sq = 0.5 * split * split;
  out.g = support_g(pt, ratio);
  out.lambda1 = 1.0 + k.meridian * out.g;
  out.lambda2 = 1.0 + k.parallel * out.g;
  const double trace_term = 2.0 + 2.0 * out.mean_curvature * out.g;
  out.gap_margin = 0.5 * trace_term * trace_term - out.phi_sq * out.g * out.g;
  return out;
}

GeometrySample sample_geometry(const ProfileCurve& c, double s, double ratio) {
  return sample_geometry(c.evaluate(s), s, ratio);
}

HessianEigenvalues hessian_eigenvalues(const CurvePoint& pt, const DomainGenerator& g,
                                       double ratio) {
  const double condition = meridian_condition(g, pt.z);
  const PrincipalCurvatures k = principal_curvatures(pt);
  const double support = support_g(pt, ratio);
  // E3 projects onto the meridian direction X_s with component z'.
  return {1.0 + support * k.meridian - condition * pt.zp * pt.zp,
          1.0 + support * k.parallel};
}

HessianEigenvalues hessian_eigenvalues(const ProfileCurve& c, double s,
                                       const DomainGenerator& g, double ratio) {
  return hessian_eigenvalues(c.evaluate(s), g, ratio);
}

bool HConditionReport::satisfied(double tolerance) const {
  if (h1_applicable && h1_margin < -tolerance) return false;
  if (h2_applicable && h2_margin < -tolerance) return false;
  return h3_margin >= -tolerance;
}

HConditionReport h_conditions(const CurvePoint& pt, double s, double ratio) {
  check_ratio(ratio);
  HConditionReport r;
  r.s = s;
  if (std::abs(pt.zp) > kHorizontalTangentBand) {
    r.h1_applicable = true;
    const double rho = pt.x - (pt.xp / pt.zp) * pt.z * ratio;
    r.h1_margin = 1.0 + pt.xpp * rho;
    r.h2_margin = std::nan("");
  } else {
    r.h2_applicable = true;
    r.h2_margin = 1.0 + pt.z * pt.zpp * ratio;
    r.h1_margin = std::nan("");
  }
  r.h3_margin = pt.x * pt.xp * pt.xp + pt.zp * pt.xp * pt.z * ratio;
  return r;
}

HConditionReport h_conditions(const ProfileCurve& c, double s, double ratio) {
  return h_conditions(c.evaluate(s), s, ratio);
}

}  // namespace cmc
