#include "cmc/contact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "cmc/domain.hpp"
#include "cmc/errors.hpp"
#include "cmc/numerics.hpp"

namespace cmc {

namespace {

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

double level(const CurvePoint& pt, double a_sq, double b_sq) {
  return a_sq * pt.x * pt.x + b_sq * pt.z * pt.z;
}

// Fills every field that depends only on the root and the curve.
void complete_certificate(ContactCertificate& cert, const ProfileCurve& curve,
                          const ContactOptions& options) {
  const double a_sq = cert.a * cert.a;
  const double b_sq = cert.b * cert.b;
  const double ratio = cert.ratio();

  const CurvePoint at_root = curve.evaluate(cert.s_bar);
  const CurvePoint at_mirror = curve.evaluate(-cert.s_bar);
  cert.r_bar_sq = level(at_root, a_sq, b_sq);
  cert.rho_residual = std::abs(rho(at_root, ratio));
  cert.symmetry_residual = std::abs(rho(at_mirror, ratio));
  cert.level_residual = std::abs(level(at_mirror, a_sq, b_sq) - cert.r_bar_sq);
  cert.orthogonality_residual = std::abs(support_g(at_root, ratio));

  // Strict containment on the open interval, plus the sign pattern of
  // d/ds (a^2 x^2 + b^2 z^2) = 2 (a^2 x x' + b^2 z z').
  const int n = std::max(1, options.containment_samples);
  std::vector<double> margins(static_cast<std::size_t>(n));
  std::vector<char> monotone(static_cast<std::size_t>(n));
  const double width = 2.0 * cert.s_bar;
  parallel_for(margins.size(), [&](std::size_t i) {
    const double s = -cert.s_bar + width * static_cast<double>(i + 1) / (n + 1);
    const CurvePoint pt = curve.evaluate(s);
    margins[i] = cert.r_bar_sq - level(pt, a_sq, b_sq);
    const double slope = a_sq * pt.x * pt.xp + b_sq * pt.z * pt.zp;
    const double slack = 1e-12 * std::max(1.0, cert.r_bar_sq);
    monotone[i] = (s < 0.0) ? slope <= slack : (s > 0.0 ? slope >= -slack : true);
  });
  cert.sample_count = n;
  cert.interior_min_margin = *std::min_element(margins.begin(), margins.end());
  cert.monotone_structure = std::all_of(monotone.begin(), monotone.end(),
                                        [](char ok) { return ok != 0; });
}

double root_in(const ProfileCurve& curve, double ratio, double lo, double hi,
               const ContactOptions& options) {
  const auto f = [&](double s) { return rho(curve.evaluate(s), ratio); };
  return bisect(f, lo, hi, options.bisection_tolerance).root;
}

}  // namespace

void EllipsoidAxes::validate() const {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw InvalidArgument("ellipsoid axes a, b must be positive and finite");
  }
  if (a * a > b * b) throw InvalidArgument("ellipsoid axes must satisfy a^2 <= b^2");
}

double rho(const CurvePoint& pt, double ratio) {
  if (std::abs(pt.zp) <= kRhoVerticalBand) {
    throw VerticalTangentError("rho is undefined where z' = 0", 0.0);
  }
  return pt.x - (pt.xp / pt.zp) * pt.z * ratio;
}

double rho(const ProfileCurve& c, double s, double ratio) {
  try {
    return rho(c.evaluate(s), ratio);
  } catch (const VerticalTangentError&) {
    throw VerticalTangentError("rho is undefined where z' = 0 (s = " + format_number(s) + ")", s);
  }
}

double rho_prime(const CurvePoint& pt, double a_sq, double b_sq) {
  if (std::abs(pt.zp) <= kRhoVerticalBand) {
    throw VerticalTangentError("rho' is undefined where z' = 0", 0.0);
  }
  const double zp3 = pt.zp * pt.zp * pt.zp;
  return (a_sq - b_sq) / a_sq * pt.xp - (pt.xpp / zp3) * pt.z * (b_sq / a_sq);
}

double rho_prime(const ProfileCurve& c, double s, double a_sq, double b_sq) {
  return rho_prime(c.evaluate(s), a_sq, b_sq);
}

bool ContactCertificate::valid() const {
  return rho_residual <= kRhoResidualTolerance && symmetry_residual <= kSymmetryTolerance &&
         interior_min_margin > 0.0;
}

ProfileCurve certificate_curve(const ContactCertificate& cert, const QuadratureConfig& q) {
  if (cert.params) return delaunay_curve(*cert.params, q);
  if (cert.curve == "catenoid") return catenoid_curve();
  throw InvalidArgument("certificate does not name a known curve");
}

ContactCertificate find_contact(const DelaunayParams& p, const EllipsoidAxes& axes,
                                const ContactOptions& options) {
  axes.validate();
  options.quadrature.validate();
  const DelaunayKind kind = classify(p);
  if (kind == DelaunayKind::Cylinder) {
    throw NoRoot("cylinder profile never meets an ellipsoid orthogonally: rho = x = " +
                 format_number(1.0 / p.curvature()) + " > 0");
  }

  ContactCertificate cert;
  cert.curve = std::string(to_string(kind));
  cert.params = p;
  cert.a = axes.a;
  cert.b = axes.b;
  const ProfileCurve curve = delaunay_curve(p, options.quadrature);
  const double ratio = axes.ratio();

  if (kind == DelaunayKind::Unduloid) {
    const double s0 = first_inflection_s0(p);
    const double z_s0 = delaunay_z(s0, p, options.quadrature);
    const double z0 = unduloid_threshold_z0(p);
    cert.bracket_hi = s0;
    cert.z_at_s0 = z_s0;
    cert.z0 = z0;
    if (z_s0 < z0) {
      if (!options.force_search) {
        throw ExistenceHypothesisFailed("unduloid existence test failed: z(s0) = " +
                                            format_number(z_s0) + " < z0 = " + format_number(z0),
                                        z_s0, z0);
      }
      cert.forced = true;
      cert.notes.push_back("root searched although z(s0) < z0");
    }
    const double delta = 1e-9 * s0;
    cert.s_bar = root_in(curve, ratio, delta, s0, options);
  } else {
    const double r0 = first_vertical_r0(p);
    cert.bracket_hi = r0;
    const double delta = 1e-9 * r0;
    cert.s_bar = root_in(curve, ratio, delta, r0 - delta, options);
  }

  complete_certificate(cert, curve, options);
  return cert;
}

ContactCertificate catenoid_contact(double ratio, const ContactOptions& options) {
  if (!(ratio >= 1.0) || !std::isfinite(ratio)) {
    throw InvalidArgument("axis ratio b^2/a^2 must be finite and >= 1");
  }
  ContactCertificate cert;
  cert.curve = "catenoid";
  cert.a = 1.0;
  cert.b = std::sqrt(ratio);
  const ProfileCurve curve = catenoid_curve();

  double upper = 1.0;
  while (rho(curve, upper, ratio) > 0.0) {
    upper *= 2.0;
    if (upper > options.catenoid_search_cap) {
      throw NoRoot("catenoid rho has no sign change below s = " +
                   format_number(options.catenoid_search_cap));
    }
  }
  cert.bracket_hi = upper;
  cert.s_bar = root_in(curve, ratio, 1e-9 * upper, upper, options);
  complete_certificate(cert, curve, options);
  cert.notes.push_back("root in the arc-length parameter s_bar: " + format_number(cert.s_bar));
  cert.notes.push_back("root in the cosh-graph parameter t = asinh(s_bar): " +
                       format_number(std::asinh(cert.s_bar)));
  return cert;
}

std::string_view to_string(GapVerdict verdict) {
  switch (verdict) {
    case GapVerdict::Certified: return "certified";
    case GapVerdict::Violated: return "violated";
    case GapVerdict::Inapplicable: return "inapplicable";
  }
  return "unknown";
}

namespace {

struct PointCheck {
  GeometrySample geometry;
  HConditionReport h;
  HessianEigenvalues hessian;
  bool failed = false;
  std::string error;
};

double min_ignoring_nan(double current, double candidate) {
  if (std::isnan(candidate)) return current;
  if (std::isnan(current)) return candidate;
  return std::min(current, candidate);
}

double max_ignoring_nan(double current, double candidate) {
  if (std::isnan(candidate)) return current;
  if (std::isnan(current)) return candidate;
  return std::max(current, candidate);
}

}  // namespace

GapReport certify_gap(const ProfileCurve& c, const ContactCertificate& cert,
                      const EllipsoidAxes& axes, const GapOptions& options) {
  axes.validate();
  if (axes.a != cert.a || axes.b != cert.b) {
    throw InvalidArgument("ellipsoid axes differ from the certificate's");
  }
  if (!(cert.s_bar > 0.0) || !(cert.r_bar_sq > 0.0)) {
    throw InvalidArgument("certificate has no contact root");
  }
  if (options.samples < 2) throw InvalidArgument("gap certification needs >= 2 samples");

  GapReport report;
  report.s_lo = -cert.s_bar;
  report.s_hi = cert.s_bar;
  report.sample_count = options.samples;

  const double ratio = axes.ratio();
  const DomainGenerator generator = ellipsoid_generator({axes.a, axes.b, cert.r_bar_sq});
  const auto n = static_cast<std::size_t>(options.samples);
  std::vector<PointCheck> checks(n);
  std::vector<double> params(n);
  for (std::size_t i = 0; i < n; ++i) {
    params[i] = (i + 1 == n) ? cert.s_bar
                             : -cert.s_bar + 2.0 * cert.s_bar * static_cast<double>(i) /
                                                 static_cast<double>(n - 1);
  }

  parallel_for(n, [&](std::size_t i) {
    PointCheck& out = checks[i];
    try {
      const CurvePoint pt = c.evaluate(params[i]);
      out.geometry = sample_geometry(pt, params[i], ratio);
      out.h = h_conditions(pt, params[i], ratio);
      out.hessian = hessian_eigenvalues(pt, generator, ratio);
    } catch (const Error& e) {
      out.failed = true;
      out.error = e.what();
    }
  });

  // Sequential reduction keeps the report independent of the thread count.
  for (std::size_t i = 0; i < n; ++i) {
    const PointCheck& pc = checks[i];
    if (pc.failed) {
      report.verdict = GapVerdict::Inapplicable;
      report.offending_s = params[i];
      report.detail = pc.error;
      return report;
    }
    const GeometrySample& g = pc.geometry;
    report.min_lambda1 = min_ignoring_nan(report.min_lambda1, g.lambda1);
    report.min_lambda2 = min_ignoring_nan(report.min_lambda2, g.lambda2);
    report.min_gap_margin = min_ignoring_nan(report.min_gap_margin, g.gap_margin);
    if (pc.h.h1_applicable) report.worst_h1 = min_ignoring_nan(report.worst_h1, pc.h.h1_margin);
    if (pc.h.h2_applicable) report.worst_h2 = min_ignoring_nan(report.worst_h2, pc.h.h2_margin);
    report.worst_h3 = min_ignoring_nan(report.worst_h3, pc.h.h3_margin);
    report.min_hessian_excess =
        min_ignoring_nan(report.min_hessian_excess,
                         std::min(pc.hessian.meridian - g.lambda1, pc.hessian.parallel - g.lambda2));
    report.min_hessian_eigenvalue = min_ignoring_nan(
        report.min_hessian_eigenvalue, std::min(pc.hessian.meridian, pc.hessian.parallel));
    report.min_mean_curvature = min_ignoring_nan(report.min_mean_curvature, g.mean_curvature);
    report.max_mean_curvature = max_ignoring_nan(report.max_mean_curvature, g.mean_curvature);

    if (!report.offending_s) {
      const bool bounds_ok = g.lambda1 >= -kCertificationTolerance &&
                             g.lambda2 >= -kCertificationTolerance;
      const bool h_ok = pc.h.satisfied(kCertificationTolerance);
      const bool gap_ok = g.gap_margin >= -kCertificationTolerance;
      if (!bounds_ok || !h_ok || !gap_ok) {
        report.offending_s = params[i];
        report.detail = !bounds_ok ? "lambda~ bound negative"
                                   : (!h_ok ? "sufficient condition h1/h2/h3 fails"
                                            : "gap inequality fails");
      }
    }
  }
  report.verdict = report.offending_s ? GapVerdict::Violated : GapVerdict::Certified;
  return report;
}

GapReport certify_gap(const ContactCertificate& cert, const GapOptions& options) {
  return certify_gap(certificate_curve(cert), cert, {cert.a, cert.b}, options);
}

}  // namespace cmc
