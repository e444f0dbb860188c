#include "cmc/export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>

#include "cmc/errors.hpp"

namespace cmc {

using nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

SurfaceMesh build_mesh(const ProfileCurve& c, double s_lo, double s_hi, std::size_t n_s,
                       std::size_t n_theta) {
  if (n_s < 2 || n_theta < 3) throw InvalidArgument("mesh needs n_s >= 2 and n_theta >= 3");
  if (!(s_lo < s_hi)) throw InvalidArgument("mesh range needs s_lo < s_hi");

  SurfaceMesh m;
  m.n_s = n_s;
  m.n_theta = n_theta;
  m.vertices.reserve(n_s * n_theta);
  m.normals.reserve(n_s * n_theta);
  for (std::size_t i = 0; i < n_s; ++i) {
    const double s = (i + 1 == n_s)
                         ? s_hi
                         : s_lo + (s_hi - s_lo) * static_cast<double>(i) /
                                      static_cast<double>(n_s - 1);
    const CurvePoint pt = c.evaluate(s);
    for (std::size_t j = 0; j < n_theta; ++j) {
      const double theta =
          2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_theta);
      const SurfaceFrame frame = surface_point(pt, theta);
      m.vertices.push_back(frame.position);
      m.normals.push_back(frame.normal);
    }
  }

  // Wound so that the face normal follows X_s x X_theta = x N.
  m.faces.reserve(2 * (n_s - 1) * n_theta);
  for (std::size_t i = 0; i + 1 < n_s; ++i) {
    for (std::size_t j = 0; j < n_theta; ++j) {
      const std::size_t jn = (j + 1) % n_theta;
      const std::size_t v00 = i * n_theta + j;
      const std::size_t v01 = i * n_theta + jn;
      const std::size_t v10 = (i + 1) * n_theta + j;
      const std::size_t v11 = (i + 1) * n_theta + jn;
      m.faces.push_back({v00, v10, v11});
      m.faces.push_back({v00, v11, v01});
    }
  }
  return m;
}

void write_obj(const SurfaceMesh& m, std::ostream& out) {
  if (m.normals.size() != m.vertices.size()) {
    throw InvalidArgument("mesh needs one normal per vertex");
  }
  for (const Vec3& v : m.vertices) {
    out << "v " << format_double(v[0]) << ' ' << format_double(v[1]) << ' '
        << format_double(v[2]) << '\n';
  }
  for (const Vec3& n : m.normals) {
    out << "vn " << format_double(n[0]) << ' ' << format_double(n[1]) << ' '
        << format_double(n[2]) << '\n';
  }
  for (const auto& f : m.faces) {
    out << 'f';
    for (std::size_t idx : f) {
      if (idx >= m.vertices.size()) throw InvalidArgument("mesh face index out of range");
      out << ' ' << idx + 1 << "//" << idx + 1;
    }
    out << '\n';
  }
  if (!out) throw Error("failed writing OBJ stream");
}

std::string write_obj(const SurfaceMesh& m) {
  std::ostringstream out;
  write_obj(m, out);
  return out.str();
}

void write_csv(std::span<const GeometrySample> samples, std::ostream& out) {
  if (samples.empty()) throw InvalidArgument("CSV export needs at least one sample");
  out << kCsvHeader << '\n';
  for (const GeometrySample& g : samples) {
    const double row[] = {g.s,       g.point.x,        g.point.z,  g.point.xp, g.point.zp,
                          g.point.xpp, g.point.zpp,    g.k1,       g.k2,
                          g.mean_curvature, g.phi_sq,  g.g,        g.lambda1,
                          g.lambda2, g.gap_margin};
    for (std::size_t i = 0; i < std::size(row); ++i) {
      if (i > 0) out << ',';
      out << format_double(row[i]);
    }
    out << '\n';
  }
  if (!out) throw Error("failed writing CSV stream");
}

std::string write_csv(std::span<const GeometrySample> samples) {
  std::ostringstream out;
  write_csv(samples, out);
  return out.str();
}

DomainCheck check_ellipsoid_domain(const EllipsoidSpec& e, int samples) {
  if (samples < 1) throw InvalidArgument("domain check needs at least one sample");
  const DomainGenerator g = ellipsoid_generator_unchecked(e);
  DomainCheck check;
  check.generator = std::string(to_string(g.tag()));
  check.a = e.a;
  check.b = e.b;
  check.r_sq = e.r_sq;
  check.y_lo = g.lo();
  check.y_hi = g.hi();
  check.sample_count = samples;
  check.closed_form = (e.a * e.a - e.b * e.b) / (e.a * e.a);
  check.condition_min = INFINITY;
  check.condition_max = -INFINITY;
  check.gauss_min = INFINITY;
  check.mean_min = INFINITY;
  check.curvature_split_min = INFINITY;
  for (int k = 0; k < samples; ++k) {
    const double y = g.lo() + (g.hi() - g.lo()) * (k + 1) / (samples + 1);
    const double c = meridian_condition(g, y);
    const BoundaryCurvatures bc = boundary_curvatures(g, y);
    check.condition_min = std::min(check.condition_min, c);
    check.condition_max = std::max(check.condition_max, c);
    check.gauss_min = std::min(check.gauss_min, bc.gauss);
    check.mean_min = std::min(check.mean_min, bc.mean);
    check.curvature_split_min = std::min(check.curvature_split_min, bc.meridian - bc.parallel);
  }
  check.admissible = check.condition_max <= kConditionTolerance;
  return check;
}

namespace {

ordered_json optional_number(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json with_header(const char* kind, const ordered_json& body) {
  ordered_json doc;
  doc["schema_version"] = std::to_string(kReportSchemaVersion);
  doc["kind"] = kind;
  for (auto it = body.begin(); it != body.end(); ++it) doc[it.key()] = it.value();
  return doc;
}

void dump_value(const ordered_json& v, int indent, int depth, std::string& out) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (v.type()) {
    case ordered_json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += ordered_json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        dump_value(it.value(), indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case ordered_json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& item : v) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        dump_value(item, indent, depth + 1, out);
      }
      newline(depth);
      out += ']';
      return;
    }
    case ordered_json::value_t::number_float: {
      const double d = v.get<double>();
      out += std::isfinite(d) ? format_double(d) : "null";
      return;
    }
    default:
      out += v.dump();
  }
}

}  // namespace

std::string dump_json(const ordered_json& value, int indent) {
  std::string out;
  dump_value(value, indent, 0, out);
  out += '\n';
  return out;
}

ordered_json to_json(const ContactCertificate& cert) {
  ordered_json j;
  j["curve"] = cert.curve;
  if (cert.params) {
    j["b_amplitude"] = cert.params->amplitude();
    j["h_curvature"] = cert.params->curvature();
  } else {
    j["b_amplitude"] = nullptr;
    j["h_curvature"] = nullptr;
  }
  j["a"] = cert.a;
  j["b"] = cert.b;
  j["ratio"] = cert.ratio();
  j["s_bar"] = cert.s_bar;
  j["r_bar_sq"] = cert.r_bar_sq;
  j["rho_residual"] = cert.rho_residual;
  j["symmetry_residual"] = cert.symmetry_residual;
  j["level_residual"] = cert.level_residual;
  j["orthogonality_residual"] = cert.orthogonality_residual;
  j["interior_min_margin"] = cert.interior_min_margin;
  j["sample_count"] = cert.sample_count;
  j["monotone_structure"] = cert.monotone_structure;
  j["bracket_hi"] = cert.bracket_hi;
  j["z_at_s0"] = optional_number(cert.z_at_s0);
  j["z0"] = optional_number(cert.z0);
  j["forced"] = cert.forced;
  j["valid"] = cert.valid();
  j["notes"] = cert.notes;
  return j;
}

ordered_json to_json(const GapReport& r) {
  ordered_json j;
  j["verdict"] = std::string(to_string(r.verdict));
  j["s_lo"] = r.s_lo;
  j["s_hi"] = r.s_hi;
  j["sample_count"] = r.sample_count;
  j["min_lambda1"] = r.min_lambda1;
  j["min_lambda2"] = r.min_lambda2;
  j["min_gap_margin"] = r.min_gap_margin;
  j["worst_h1"] = r.worst_h1;
  j["worst_h2"] = r.worst_h2;
  j["worst_h3"] = r.worst_h3;
  j["min_hessian_excess"] = r.min_hessian_excess;
  j["min_hessian_eigenvalue"] = r.min_hessian_eigenvalue;
  j["min_mean_curvature"] = r.min_mean_curvature;
  j["max_mean_curvature"] = r.max_mean_curvature;
  j["offending_s"] = optional_number(r.offending_s);
  j["detail"] = r.detail;
  return j;
}

ordered_json to_json(const DomainCheck& c) {
  ordered_json j;
  j["generator"] = c.generator;
  j["a"] = c.a;
  j["b"] = c.b;
  j["r_sq"] = c.r_sq;
  j["y_lo"] = c.y_lo;
  j["y_hi"] = c.y_hi;
  j["sample_count"] = c.sample_count;
  j["condition_value"] = c.closed_form;
  j["condition_min"] = c.condition_min;
  j["condition_max"] = c.condition_max;
  j["condition_margin"] = -c.condition_max;
  j["gauss_curvature_min"] = c.gauss_min;
  j["mean_curvature_min"] = c.mean_min;
  j["curvature_split_min"] = c.curvature_split_min;
  j["admissible"] = c.admissible;
  return j;
}

ordered_json to_json(const GeometrySample& g) {
  ordered_json j;
  j["s"] = g.s;
  j["x"] = g.point.x;
  j["z"] = g.point.z;
  j["xp"] = g.point.xp;
  j["zp"] = g.point.zp;
  j["xpp"] = g.point.xpp;
  j["zpp"] = g.point.zpp;
  j["k1"] = g.k1;
  j["k2"] = g.k2;
  j["h_n"] = g.mean_curvature;
  j["phi_sq"] = g.phi_sq;
  j["g"] = g.g;
  j["lambda1"] = g.lambda1;
  j["lambda2"] = g.lambda2;
  j["gap_margin"] = g.gap_margin;
  return j;
}

std::string write_report(const ContactCertificate& cert) {
  return dump_json(with_header("contact_certificate", to_json(cert)));
}

std::string write_report(const GapReport& report) {
  return dump_json(with_header("gap_report", to_json(report)));
}

std::string write_report(const DomainCheck& check) {
  return dump_json(with_header("domain_check", to_json(check)));
}

}  // namespace cmc
