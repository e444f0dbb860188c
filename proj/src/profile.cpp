#include "cmc/profile.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "cmc/errors.hpp"

namespace cmc {

namespace {

using std::numbers::pi;

// Kenmotsu's formulas are written with the phase H s + 3 pi/2; with
// sin(t + 3pi/2) = -cos t and cos(t + 3pi/2) = sin t they are evaluated in the
// shifted form, which keeps x'(0) = 0 and the parity identities exact.
struct Phase {
  double sin_u;  // sin(H s + 3 pi / 2)
  double cos_u;  // cos(H s + 3 pi / 2)
  double radicand;
};

Phase phase(double s, const DelaunayParams& p) {
  const double b = p.amplitude();
  const double hs = p.curvature() * s;
  const double sin_u = -std::cos(hs);
  const double cos_u = std::sin(hs);
  const double radicand = 1.0 + b * b + 2.0 * b * sin_u;
  if (!(radicand > 0.0)) {
    throw DomainError("Delaunay radicand 1 + B^2 + 2B sin(Hs + 3pi/2) is not positive at s = " +
                      std::to_string(s));
  }
  return {sin_u, cos_u, radicand};
}

double z_integrand(double t, const DelaunayParams& p) {
  const Phase ph = phase(t, p);
  return (1.0 + p.amplitude() * ph.sin_u) / std::sqrt(ph.radicand);
}

}  // namespace

std::string_view to_string(DelaunayKind kind) {
  switch (kind) {
    case DelaunayKind::Cylinder: return "cylinder";
    case DelaunayKind::Unduloid: return "unduloid";
    case DelaunayKind::Nodoid: return "nodoid";
  }
  return "unknown";
}

std::string_view to_string(ProfileCurve::Tag tag) {
  switch (tag) {
    case ProfileCurve::Tag::Delaunay: return "delaunay";
    case ProfileCurve::Tag::Catenoid: return "catenoid";
    case ProfileCurve::Tag::Custom: return "custom";
  }
  return "unknown";
}

DelaunayParams::DelaunayParams(double amplitude, double curvature)
    : amplitude_(amplitude), curvature_(curvature) {
  if (!std::isfinite(amplitude) || amplitude < 0.0) {
    throw InvalidArgument("Delaunay amplitude B must be finite and >= 0");
  }
  if (amplitude == 1.0) {
    throw InvalidArgument("Delaunay amplitude B = 1 is excluded");
  }
  if (!std::isfinite(curvature) || !(curvature > 0.0)) {
    throw InvalidArgument("Delaunay curvature parameter H must be finite and > 0");
  }
}

DelaunayKind classify(const DelaunayParams& p) {
  if (p.amplitude() == 0.0) return DelaunayKind::Cylinder;
  return p.amplitude() < 1.0 ? DelaunayKind::Unduloid : DelaunayKind::Nodoid;
}

double delaunay_x(double s, const DelaunayParams& p) {
  return std::sqrt(phase(s, p).radicand) / p.curvature();
}

double delaunay_z(double s, const DelaunayParams& p, const QuadratureConfig& q) {
  q.validate();
  if (s == 0.0) return 0.0;
  if (p.amplitude() == 0.0) return s;
  // The shifted integrand is even, so integrating from 0 keeps z odd.
  return integrate([&p](double t) { return z_integrand(t, p); }, 0.0, s, q).value;
}

CurveDerivatives delaunay_derivatives(double s, const DelaunayParams& p) {
  const double b = p.amplitude();
  const double h = p.curvature();
  const Phase ph = phase(s, p);
  const double root = std::sqrt(ph.radicand);
  const double root3 = ph.radicand * root;
  CurveDerivatives d;
  d.xp = b * ph.cos_u / root;
  d.zp = (1.0 + b * ph.sin_u) / root;
  d.xpp = -b * h * (b + ph.sin_u) * (b * ph.sin_u + 1.0) / root3;
  d.zpp = h * b * b * ph.cos_u * (b + ph.sin_u) / root3;
  return d;
}

double first_inflection_s0(const DelaunayParams& p) {
  if (classify(p) != DelaunayKind::Unduloid) {
    throw KindError("s0 is defined for unduloids (0 < B < 1) only");
  }
  const double h = p.curvature();
  return std::asin(-p.amplitude()) / h + pi / (2.0 * h);
}

double first_vertical_r0(const DelaunayParams& p) {
  if (classify(p) != DelaunayKind::Nodoid) {
    throw KindError("r0 is defined for nodoids (B > 1) only");
  }
  const double h = p.curvature();
  return std::asin(-1.0 / p.amplitude()) / h + pi / (2.0 * h);
}

double unduloid_threshold_z0(const DelaunayParams& p) {
  if (classify(p) != DelaunayKind::Unduloid) {
    throw KindError("z0 is defined for unduloids (0 < B < 1) only");
  }
  const double b = p.amplitude();
  return (1.0 - b * b) / (p.curvature() * b);
}

ProfileCurve::ProfileCurve(Evaluator evaluator, double s_min, double s_max, Tag tag)
    : evaluator_(std::move(evaluator)), s_min_(s_min), s_max_(s_max), tag_(tag) {
  if (!evaluator_) throw InvalidArgument("profile curve needs an evaluator");
  if (!(s_min < s_max)) throw InvalidArgument("profile curve interval must satisfy s_min < s_max");
}

CurvePoint ProfileCurve::evaluate(double s) const {
  if (!contains(s)) {
    throw OutOfIntervalError("s = " + std::to_string(s) + " outside curve interval [" +
                                 std::to_string(s_min_) + ", " + std::to_string(s_max_) + "]",
                             s);
  }
  const CurvePoint pt = evaluator_(s);
  if (!(pt.x > 0.0)) {
    throw DomainError("profile curve touches the axis (x <= 0) at s = " + std::to_string(s));
  }
  if (std::abs(pt.xp * pt.xp + pt.zp * pt.zp - 1.0) > kArcLengthTolerance) {
    throw DomainError("profile curve is not arc-length parametrized at s = " + std::to_string(s));
  }
  return pt;
}

ProfileCurve delaunay_curve(const DelaunayParams& p, double s_min, double s_max,
                            const QuadratureConfig& q) {
  q.validate();
  ProfileCurve curve(
      [p, q](double s) {
        const CurveDerivatives d = delaunay_derivatives(s, p);
        return CurvePoint{delaunay_x(s, p), delaunay_z(s, p, q), d.xp, d.zp, d.xpp, d.zpp};
      },
      s_min, s_max, ProfileCurve::Tag::Delaunay);
  curve.delaunay_ = p;
  return curve;
}

ProfileCurve delaunay_curve(const DelaunayParams& p, const QuadratureConfig& q) {
  const double half_period = pi / p.curvature();
  return delaunay_curve(p, -half_period, half_period, q);
}

ProfileCurve catenoid_curve(double s_min, double s_max) {
  return ProfileCurve(
      [](double s) {
        const double w = 1.0 + s * s;
        const double root = std::sqrt(w);
        const double root3 = w * root;
        return CurvePoint{root, std::asinh(s), s / root, 1.0 / root, 1.0 / root3, -s / root3};
      },
      s_min, s_max, ProfileCurve::Tag::Catenoid);
}

}  // namespace cmc
