#pragma once

// Pointwise geometry of the surface X(s, theta) = (x cos theta, x sin theta, z)
// swept by a profile curve, measured against a rotational ellipsoid with
// axis ratio b^2/a^2.

#include "cmc/domain.hpp"
#include "cmc/profile.hpp"

namespace cmc {

/// Below this |z'| the curve is treated as horizontal: h2 replaces h1 and the
/// determinant form of k1 is used alone.
inline constexpr double kHorizontalTangentBand = 1e-8;

struct SurfaceFrame {
  Vec3 position{};
  Vec3 normal{};
};

/// Position and unit normal N = (-z' cos theta, -z' sin theta, x').
SurfaceFrame surface_point(const ProfileCurve& c, double s, double theta);
SurfaceFrame surface_point(const CurvePoint& pt, double theta);

struct PrincipalCurvatures {
  double meridian = 0.0;  ///< k1 = x' z'' - x'' z'
  double parallel = 0.0;  ///< k2 = z' / x
};

PrincipalCurvatures principal_curvatures(const ProfileCurve& c, double s);
PrincipalCurvatures principal_curvatures(const CurvePoint& pt);

/// -x''/z', the alternate meridian curvature. Requires |z'| > kHorizontalTangentBand.
double meridian_curvature_graph_form(const CurvePoint& pt);

/// g = <grad F, N> = -x z' + x' z ratio for the ellipsoid with b^2/a^2 = ratio.
double support_g(const ProfileCurve& c, double s, double ratio);
double support_g(const CurvePoint& pt, double ratio);

struct GeometrySample {
  double s = 0.0;
  CurvePoint point;
  double k1 = 0.0;
  double k2 = 0.0;
  double mean_curvature = 0.0;  ///< normalized (k1 + k2) / 2
  double phi_sq = 0.0;          ///< |phi|^2 = (k1 - k2)^2 / 2
  double g = 0.0;
  double lambda1 = 0.0;  ///< 1 + k1 g
  double lambda2 = 0.0;  ///< 1 + k2 g
  double gap_margin = 0.0;  ///< (2 + 2 H g)^2 / 2 - |phi|^2 g^2
};

GeometrySample sample_geometry(const ProfileCurve& c, double s, double ratio);
GeometrySample sample_geometry(const CurvePoint& pt, double s, double ratio);

struct HessianEigenvalues {
  double meridian = 0.0;  ///< 1 + g k1 - c(z) z'^2
  double parallel = 0.0;  ///< 1 + g k2
};

/// Eigenvalues of Hess_Sigma F in the meridian/parallel frame, where c is the
/// meridian condition of `g` at height z(s). Throws OutOfIntervalError when
/// z(s) is outside the generator interval.
HessianEigenvalues hessian_eigenvalues(const ProfileCurve& c, double s,
                                       const DomainGenerator& g, double ratio);
HessianEigenvalues hessian_eigenvalues(const CurvePoint& pt, const DomainGenerator& g,
                                       double ratio);

/// Signed margins of the three sufficient pinching conditions; >= 0 means the
/// condition holds. h1 applies where |z'| > band, h2 where |z'| <= band.
struct HConditionReport {
  double s = 0.0;
  double h1_margin = 0.0;
  double h2_margin = 0.0;
  double h3_margin = 0.0;
  bool h1_applicable = false;
  bool h2_applicable = false;

  bool satisfied(double tolerance = 0.0) const;
};

HConditionReport h_conditions(const ProfileCurve& c, double s, double ratio);
HConditionReport h_conditions(const CurvePoint& pt, double s, double ratio);

}  // namespace cmc
