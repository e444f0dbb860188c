#include "cmc/cli.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cmc/contact.hpp"
#include "cmc/domain.hpp"
#include "cmc/errors.hpp"
#include "cmc/export.hpp"
#include "cmc/geometry.hpp"
#include "cmc/profile.hpp"

namespace cmc::cli {

namespace {

struct CommandSpec {
  std::optional<double> amplitude;  // --B
  std::optional<double> curvature;  // --H
  bool catenoid = false;
  std::optional<double> a;
  std::optional<double> b;
  double radius = 1.0;  // --R
  std::optional<double> ratio;
  std::optional<double> s_min;
  std::optional<double> s_max;
  std::optional<int> samples;
  int theta_samples = 64;
  double tolerance = 1e-10;
  std::string out_path;
  std::string format;
  bool force_search = false;
};

/// A curve choice plus the ellipsoid it is measured against.
struct Setup {
  std::optional<DelaunayParams> params;
  EllipsoidAxes axes;
  QuadratureConfig quadrature;
};

Setup resolve(const CommandSpec& spec, bool need_curve) {
  Setup setup;
  setup.quadrature.tolerance = spec.tolerance;
  setup.quadrature.validate();
  if (spec.ratio) {
    if (!(*spec.ratio >= 1.0)) throw InvalidArgument("--ratio must be >= 1");
    setup.axes = {1.0, std::sqrt(*spec.ratio)};
  } else {
    setup.axes = {spec.a.value_or(1.0), spec.b.value_or(1.0)};
  }
  setup.axes.validate();
  if (!need_curve) return setup;
  if (spec.catenoid) {
    if (spec.amplitude || spec.curvature) {
      throw InvalidArgument("--catenoid cannot be combined with --B/--H");
    }
    return setup;
  }
  if (!spec.amplitude || !spec.curvature) {
    throw InvalidArgument("give --B and --H, or --catenoid");
  }
  setup.params = DelaunayParams(*spec.amplitude, *spec.curvature);
  return setup;
}

ContactOptions contact_options(const CommandSpec& spec, const Setup& setup) {
  ContactOptions options;
  options.quadrature = setup.quadrature;
  options.force_search = spec.force_search;
  return options;
}

ContactCertificate solve_contact(const CommandSpec& spec, const Setup& setup) {
  const ContactOptions options = contact_options(spec, setup);
  if (setup.params) return find_contact(*setup.params, setup.axes, options);
  return catenoid_contact(setup.axes.ratio(), options);
}

ProfileCurve curve_for(const Setup& setup) {
  if (setup.params) return delaunay_curve(*setup.params, setup.quadrature);
  return catenoid_curve();
}

void check_format(const CommandSpec& spec, std::initializer_list<const char*> allowed) {
  if (spec.format.empty()) return;
  for (const char* f : allowed) {
    if (spec.format == f) return;
  }
  throw InvalidArgument("--format " + spec.format + " is not supported by this subcommand");
}

std::string effective_format(const CommandSpec& spec, const char* fallback) {
  return spec.format.empty() ? std::string(fallback) : spec.format;
}

int domain_check(const CommandSpec& spec, std::ostream& data, std::ostream& err) {
  check_format(spec, {"json"});
  if (!spec.a || !spec.b) throw InvalidArgument("domain check needs --a and --b");
  const EllipsoidSpec e{*spec.a, *spec.b, spec.radius * spec.radius};
  const DomainCheck check = check_ellipsoid_domain(e, spec.samples.value_or(101));
  data << write_report(check);
  if (!check.admissible) {
    err << "meridian condition violated: (f')^2 + f f'' + 1 = " << format_double(check.condition_max)
        << " > 0\n";
    return kHypothesisViolated;
  }
  return kSuccess;
}

int profile(const CommandSpec& spec, std::ostream& data) {
  check_format(spec, {"csv", "json"});
  const Setup setup = resolve(spec, true);
  const ProfileCurve curve = curve_for(setup);
  const double default_half =
      setup.params ? std::numbers::pi / setup.params->curvature() : 1.0;
  const double lo = spec.s_min.value_or(-default_half);
  const double hi = spec.s_max.value_or(default_half);
  const int n = spec.samples.value_or(101);
  if (n < 2) throw InvalidArgument("--samples must be >= 2");
  if (!(lo < hi)) throw InvalidArgument("--s-min must be below --s-max");

  std::vector<GeometrySample> samples;
  samples.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double s = (i + 1 == n) ? hi : lo + (hi - lo) * i / (n - 1);
    samples.push_back(sample_geometry(curve, s, setup.axes.ratio()));
  }
  if (effective_format(spec, "csv") == "csv") {
    write_csv(samples, data);
  } else {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& g : samples) rows.push_back(to_json(g));
    nlohmann::ordered_json doc;
    doc["schema_version"] = std::to_string(kReportSchemaVersion);
    doc["kind"] = "profile";
    doc["curve"] = setup.params ? "delaunay" : "catenoid";
    doc["ratio"] = setup.axes.ratio();
    doc["samples"] = rows;
    data << dump_json(doc);
  }
  return kSuccess;
}

int contact(const CommandSpec& spec, std::ostream& data, std::ostream& err) {
  check_format(spec, {"json"});
  const Setup setup = resolve(spec, true);
  const ContactCertificate cert = solve_contact(spec, setup);
  data << write_report(cert);
  if (!cert.valid()) {
    err << "contact certificate invariants fail (rho residual " << format_double(cert.rho_residual)
        << ", interior margin " << format_double(cert.interior_min_margin) << ")\n";
    return kHypothesisViolated;
  }
  return kSuccess;
}

int certify(const CommandSpec& spec, std::ostream& data, std::ostream& err) {
  check_format(spec, {"json"});
  const Setup setup = resolve(spec, true);
  const ContactCertificate cert = solve_contact(spec, setup);
  GapOptions options;
  options.samples = spec.samples.value_or(options.samples);
  const GapReport report = certify_gap(curve_for(setup), cert, setup.axes, options);
  data << write_report(report);
  switch (report.verdict) {
    case GapVerdict::Certified:
      return kSuccess;
    case GapVerdict::Violated:
      err << "pinching condition violated at s = " << format_double(*report.offending_s) << ": "
          << report.detail << '\n';
      return kHypothesisViolated;
    case GapVerdict::Inapplicable:
      err << "evaluation failed";
      if (report.offending_s) err << " at s = " << format_double(*report.offending_s);
      err << ": " << report.detail << '\n';
      return kFailure;
  }
  return kFailure;
}

int mesh(const CommandSpec& spec, std::ostream& data) {
  check_format(spec, {"obj"});
  const Setup setup = resolve(spec, true);
  double lo = 0.0;
  double hi = 0.0;
  if (spec.s_min || spec.s_max) {
    if (!spec.s_min || !spec.s_max) throw InvalidArgument("give both --s-min and --s-max");
    lo = *spec.s_min;
    hi = *spec.s_max;
  } else {
    const ContactCertificate cert = solve_contact(spec, setup);
    lo = -cert.s_bar;
    hi = cert.s_bar;
  }
  const int n_s = spec.samples.value_or(64);
  if (n_s < 2 || spec.theta_samples < 3) {
    throw InvalidArgument("mesh needs --samples >= 2 and --theta-samples >= 3");
  }
  const SurfaceMesh m = build_mesh(curve_for(setup), lo, hi, static_cast<std::size_t>(n_s),
                                   static_cast<std::size_t>(spec.theta_samples));
  write_obj(m, data);
  return kSuccess;
}

void add_curve_flags(CLI::App* cmd, CommandSpec& spec) {
  cmd->add_option("--B", spec.amplitude, "Delaunay amplitude B (>= 0, != 1)");
  cmd->add_option("--H", spec.curvature, "Delaunay curvature parameter H (> 0)");
  cmd->add_flag("--catenoid", spec.catenoid, "use the catenoid profile");
  cmd->add_option("--tol", spec.tolerance, "quadrature tolerance for z(s)");
}

void add_ellipsoid_flags(CLI::App* cmd, CommandSpec& spec) {
  auto* a = cmd->add_option("--a", spec.a, "ellipsoid scale a");
  auto* b = cmd->add_option("--b", spec.b, "ellipsoid scale b");
  auto* ratio = cmd->add_option("--ratio", spec.ratio, "axis ratio b^2/a^2 (sets a = 1)");
  ratio->excludes(a)->excludes(b);
}

void add_output_flags(CLI::App* cmd, CommandSpec& spec) {
  cmd->add_option("--out", spec.out_path, "output file (default: standard output)");
  cmd->add_option("--format", spec.format, "output format")
      ->check(CLI::IsMember({"csv", "obj", "json"}));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Delaunay CMC profiles, orthogonal contact with rotational ellipsoids and "
               "pinching-condition certificates"};
  app.name("cmc_forge");
  app.require_subcommand(1);
  CommandSpec spec;

  auto* domain = app.add_subcommand("domain", "rotational domain checks");
  domain->require_subcommand(1);
  auto* check = domain->add_subcommand("check", "meridian condition and boundary curvatures");
  check->add_option("--a", spec.a, "ellipsoid scale a")->required();
  check->add_option("--b", spec.b, "ellipsoid scale b")->required();
  check->add_option("--R", spec.radius, "level constant R (R^2 on the right-hand side)");
  check->add_option("--samples", spec.samples, "number of heights sampled");
  add_output_flags(check, spec);

  auto* prof = app.add_subcommand("profile", "sample the profile geometry as CSV");
  add_curve_flags(prof, spec);
  add_ellipsoid_flags(prof, spec);
  prof->add_option("--s-min", spec.s_min, "first arc-length parameter");
  prof->add_option("--s-max", spec.s_max, "last arc-length parameter");
  prof->add_option("--samples", spec.samples, "number of samples (>= 2)");
  add_output_flags(prof, spec);

  auto* cont = app.add_subcommand("contact", "solve for the orthogonal-contact parameter");
  add_curve_flags(cont, spec);
  add_ellipsoid_flags(cont, spec);
  cont->add_flag("--force-search", spec.force_search,
                 "search for an unduloid root even when z(s0) < z0");
  add_output_flags(cont, spec);

  auto* cert = app.add_subcommand("certify", "certify the pinching condition on the segment");
  add_curve_flags(cert, spec);
  add_ellipsoid_flags(cert, spec);
  cert->add_flag("--force-search", spec.force_search,
                 "search for an unduloid root even when z(s0) < z0");
  cert->add_option("--samples", spec.samples, "uniform samples on [-s_bar, s_bar]");
  add_output_flags(cert, spec);

  auto* msh = app.add_subcommand("mesh", "OBJ mesh of the certified segment");
  add_curve_flags(msh, spec);
  add_ellipsoid_flags(msh, spec);
  msh->add_flag("--force-search", spec.force_search,
                "search for an unduloid root even when z(s0) < z0");
  msh->add_option("--s-min", spec.s_min, "explicit first parameter");
  msh->add_option("--s-max", spec.s_max, "explicit last parameter");
  msh->add_option("--samples", spec.samples, "rings along s (>= 2)");
  msh->add_option("--theta-samples", spec.theta_samples, "vertices per ring (>= 3)");
  add_output_flags(msh, spec);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kFailure;
  }

  std::ostringstream buffer;
  int code = kFailure;
  try {
    if (check->parsed()) {
      code = domain_check(spec, buffer, err);
    } else if (prof->parsed()) {
      code = profile(spec, buffer);
    } else if (cont->parsed()) {
      code = contact(spec, buffer, err);
    } else if (cert->parsed()) {
      code = certify(spec, buffer, err);
    } else if (msh->parsed()) {
      code = mesh(spec, buffer);
    }
  } catch (const ExistenceHypothesisFailed& e) {
    err << "ExistenceHypothesisFailed: " << e.what() << '\n';
    return kHypothesisViolated;
  } catch (const NoRoot& e) {
    err << "NoRoot: " << e.what() << '\n';
    return kHypothesisViolated;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }

  if (spec.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(spec.out_path, std::ios::binary);
    file << buffer.str();
    if (!file) {
      err << "error: cannot write " << spec.out_path << '\n';
      return kFailure;
    }
  }
  return code;
}

}  // namespace cmc::cli
