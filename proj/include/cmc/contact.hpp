#pragma once

// Orthogonal contact of rotated profile segments with rotational ellipsoids,
// and pointwise certification of the pinching condition on the segment.

#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cmc/geometry.hpp"
#include "cmc/profile.hpp"

namespace cmc {

/// Semi-axis scales of a^2 x^2 + a^2 y^2 + b^2 z^2 = R^2; R is fixed by the
/// contact point.
struct EllipsoidAxes {
  double a = 1.0;
  double b = 1.0;

  void validate() const;
  double ratio() const noexcept { return (b * b) / (a * a); }
};

/// rho is refused where |z'| <= this.
inline constexpr double kRhoVerticalBand = 1e-12;
/// Certificate and gap-verdict tolerances.
inline constexpr double kRhoResidualTolerance = 1e-10;
inline constexpr double kSymmetryTolerance = 1e-9;
inline constexpr double kCertificationTolerance = 1e-12;

/// rho(s) = x - (x'/z') z ratio; its zeros are the orthogonal-contact circles.
double rho(const CurvePoint& pt, double ratio);
double rho(const ProfileCurve& c, double s, double ratio);

/// rho'(s) = ((a^2 - b^2)/a^2) x' - (x''/z'^3) z (b^2/a^2) for any arc-length
/// curve.
double rho_prime(const CurvePoint& pt, double a_sq, double b_sq);
double rho_prime(const ProfileCurve& c, double s, double a_sq, double b_sq);

struct ContactOptions {
  QuadratureConfig quadrature;
  double bisection_tolerance = 1e-13;
  int containment_samples = 1000;
  /// Search for an unduloid root even when z(s0) < z0.
  bool force_search = false;
  /// Upper limit for growing the catenoid bracket.
  double catenoid_search_cap = 1e3;
};

struct ContactCertificate {
  std::string curve;  ///< "unduloid", "nodoid" or "catenoid"
  std::optional<DelaunayParams> params;
  double a = 1.0;
  double b = 1.0;

  double s_bar = 0.0;
  double r_bar_sq = 0.0;  ///< a^2 x(s_bar)^2 + b^2 z(s_bar)^2
  double rho_residual = 0.0;
  double symmetry_residual = 0.0;  ///< |rho(-s_bar)|
  double level_residual = 0.0;     ///< |a^2 x(-s_bar)^2 + b^2 z(-s_bar)^2 - R^2|
  double orthogonality_residual = 0.0;  ///< |g(s_bar)|
  double interior_min_margin = 0.0;
  int sample_count = 0;
  /// a^2 x^2 + b^2 z^2 decreases on (-s_bar, 0) and increases on (0, s_bar).
  bool monotone_structure = false;

  double bracket_hi = 0.0;  ///< s0, r0 or the grown catenoid bracket
  std::optional<double> z_at_s0;  ///< unduloid existence test
  std::optional<double> z0;
  bool forced = false;  ///< root searched despite a failed existence test
  std::vector<std::string> notes;

  double ratio() const noexcept { return (b * b) / (a * a); }
  /// Residual, symmetry and strict-containment invariants all hold.
  bool valid() const;
};

/// Contact root of an unduloid (in (0, s0]) or nodoid (in (0, r0)) against the
/// ellipsoid family with the given axes. Throws NoRoot for cylinders,
/// ExistenceHypothesisFailed for unduloids with z(s0) < z0 (unless forced) and
/// BracketFailure when the bracket holds no sign change.
ContactCertificate find_contact(const DelaunayParams& p, const EllipsoidAxes& axes,
                                const ContactOptions& options = {});

/// Contact root of the catenoid in the ellipsoid with a = 1, b^2 = ratio.
ContactCertificate catenoid_contact(double ratio, const ContactOptions& options = {});

/// The profile curve a certificate was issued for.
ProfileCurve certificate_curve(const ContactCertificate& cert,
                               const QuadratureConfig& q = {});

enum class GapVerdict { Certified, Violated, Inapplicable };

std::string_view to_string(GapVerdict verdict);

struct GapOptions {
  int samples = 2048;
};

struct GapReport {
  static constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

  double s_lo = 0.0;
  double s_hi = 0.0;
  int sample_count = 0;

  double min_lambda1 = kUnset;
  double min_lambda2 = kUnset;
  double min_gap_margin = kUnset;
  /// Worst applicable h-margins; NaN when the condition never applied.
  double worst_h1 = kUnset;
  double worst_h2 = kUnset;
  double worst_h3 = kUnset;
  /// min over samples and i of (lambda_i - lambda~_i), exact Hessian vs bound.
  double min_hessian_excess = kUnset;
  double min_hessian_eigenvalue = kUnset;
  double min_mean_curvature = kUnset;
  double max_mean_curvature = kUnset;

  GapVerdict verdict = GapVerdict::Inapplicable;
  std::optional<double> offending_s;
  std::string detail;
};

GapReport certify_gap(const ProfileCurve& c, const ContactCertificate& cert,
                      const EllipsoidAxes& axes, const GapOptions& options = {});
GapReport certify_gap(const ContactCertificate& cert, const GapOptions& options = {});

}  // namespace cmc
