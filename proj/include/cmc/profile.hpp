#pragma once

// Generating curves of rotational CMC surfaces: Kenmotsu's closed-form
// Delaunay profiles and the arc-length catenoid.

#include <functional>
#include <optional>
#include <string_view>

#include "cmc/numerics.hpp"

namespace cmc {

enum class DelaunayKind { Cylinder, Unduloid, Nodoid };

std::string_view to_string(DelaunayKind kind);

/// Kenmotsu parameter pair. The curvature parameter equals k1 + k2 of the
/// resulting surface (twice its normalized mean curvature).
class DelaunayParams {
 public:
  /// Throws InvalidArgument unless amplitude >= 0, amplitude != 1 and
  /// curvature > 0.
  DelaunayParams(double amplitude, double curvature);

  double amplitude() const noexcept { return amplitude_; }
  double curvature() const noexcept { return curvature_; }

 private:
  double amplitude_;
  double curvature_;
};

DelaunayKind classify(const DelaunayParams& p);

/// One point of an arc-length plane curve with two derivative orders.
struct CurvePoint {
  double x = 0.0;
  double z = 0.0;
  double xp = 0.0;
  double zp = 0.0;
  double xpp = 0.0;
  double zpp = 0.0;
};

struct CurveDerivatives {
  double xp = 0.0;
  double zp = 0.0;
  double xpp = 0.0;
  double zpp = 0.0;
};

double delaunay_x(double s, const DelaunayParams& p);
double delaunay_z(double s, const DelaunayParams& p, const QuadratureConfig& q = {});
CurveDerivatives delaunay_derivatives(double s, const DelaunayParams& p);

/// Smallest positive zero of x'' for an unduloid: asin(-B)/H + pi/(2H).
double first_inflection_s0(const DelaunayParams& p);
/// Smallest positive zero of z' for a nodoid: asin(-1/B)/H + pi/(2H).
double first_vertical_r0(const DelaunayParams& p);
/// (1 - B^2) / (H B); an unduloid with z(s0) >= z0 has a contact root in (0, s0].
double unduloid_threshold_z0(const DelaunayParams& p);

/// An evaluable arc-length curve s -> (x(s), z(s)) on [s_min, s_max].
class ProfileCurve {
 public:
  enum class Tag { Delaunay, Catenoid, Custom };
  using Evaluator = std::function<CurvePoint(double)>;

  /// Maximum tolerated |x'^2 + z'^2 - 1| at an evaluated point.
  static constexpr double kArcLengthTolerance = 1e-9;

  ProfileCurve(Evaluator evaluator, double s_min, double s_max, Tag tag = Tag::Custom);

  /// Throws OutOfIntervalError outside [s_min, s_max], DomainError when x <= 0
  /// or the arc-length invariant is broken.
  CurvePoint evaluate(double s) const;

  double s_min() const noexcept { return s_min_; }
  double s_max() const noexcept { return s_max_; }
  Tag tag() const noexcept { return tag_; }
  bool contains(double s) const noexcept { return s >= s_min_ && s <= s_max_; }

  /// Set for curves built by delaunay_curve().
  const std::optional<DelaunayParams>& delaunay() const noexcept { return delaunay_; }

 private:
  friend ProfileCurve delaunay_curve(const DelaunayParams&, double, double,
                                     const QuadratureConfig&);

  Evaluator evaluator_;
  double s_min_;
  double s_max_;
  Tag tag_;
  std::optional<DelaunayParams> delaunay_;
};

std::string_view to_string(ProfileCurve::Tag tag);

/// Kenmotsu profile on [s_min, s_max]; z is integrated with q at each evaluation.
ProfileCurve delaunay_curve(const DelaunayParams& p, double s_min, double s_max,
                            const QuadratureConfig& q = {});
/// Kenmotsu profile over one period [-pi/H, pi/H].
ProfileCurve delaunay_curve(const DelaunayParams& p, const QuadratureConfig& q = {});

/// x(s) = sqrt(1 + s^2), z(s) = asinh(s): the catenoid cosh profile by arc length.
ProfileCurve catenoid_curve(double s_min = -1e6, double s_max = 1e6);

}  // namespace cmc
