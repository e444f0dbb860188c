#pragma once

// Serialization of profiles, meshes and certificates. Every number is written
// with 17 significant digits so text round-trips exactly at double precision.

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmc/contact.hpp"
#include "cmc/domain.hpp"
#include "cmc/geometry.hpp"

namespace cmc {

inline constexpr int kReportSchemaVersion = 1;

struct SurfaceMesh {
  std::vector<Vec3> vertices;
  std::vector<Vec3> normals;
  std::vector<std::array<std::size_t, 3>> faces;  ///< 0-based vertex indices
  std::size_t n_s = 0;
  std::size_t n_theta = 0;
};

/// Samples X(s, theta) on an n_s x n_theta grid over [s_lo, s_hi] x [0, 2 pi),
/// closing the theta direction. Vertex (i, j) has index i * n_theta + j.
SurfaceMesh build_mesh(const ProfileCurve& c, double s_lo, double s_hi, std::size_t n_s,
                       std::size_t n_theta);

/// Wavefront OBJ with "v", "vn" and "f i//i j//j k//k" lines.
void write_obj(const SurfaceMesh& m, std::ostream& out);
std::string write_obj(const SurfaceMesh& m);

inline constexpr const char* kCsvHeader =
    "s,x,z,xp,zp,xpp,zpp,k1,k2,h_n,phi_sq,g,lambda1,lambda2,gap_margin";

/// Header plus one row per sample. Throws InvalidArgument on an empty list.
void write_csv(std::span<const GeometrySample> samples, std::ostream& out);
std::string write_csv(std::span<const GeometrySample> samples);

/// Summary of the meridian condition and boundary curvatures of a generator
/// over a set of heights.
struct DomainCheck {
  std::string generator;  ///< tag
  double a = 0.0;
  double b = 0.0;
  double r_sq = 0.0;
  double y_lo = 0.0;
  double y_hi = 0.0;
  int sample_count = 0;
  double condition_min = 0.0;
  double condition_max = 0.0;
  double closed_form = 0.0;  ///< (a^2 - b^2) / a^2
  double gauss_min = 0.0;
  double mean_min = 0.0;
  double curvature_split_min = 0.0;  ///< min of kappa1 - kappa2
  bool admissible = false;           ///< condition_max <= kConditionTolerance
};

/// Rounding allowance on the meridian condition; the sphere sits exactly at 0.
inline constexpr double kConditionTolerance = 1e-12;

/// Evaluates the ellipsoid generator of `e` at `samples` evenly spaced heights
/// strictly inside its interval. a^2 > b^2 is allowed and reported inadmissible.
DomainCheck check_ellipsoid_domain(const EllipsoidSpec& e, int samples = 101);

nlohmann::ordered_json to_json(const ContactCertificate& cert);
nlohmann::ordered_json to_json(const GapReport& report);
nlohmann::ordered_json to_json(const DomainCheck& check);
nlohmann::ordered_json to_json(const GeometrySample& sample);

/// Report document: {"schema_version": "1", "kind": kind, <body fields>}.
std::string write_report(const ContactCertificate& cert);
std::string write_report(const GapReport& report);
std::string write_report(const DomainCheck& check);

/// Serializes JSON with floating-point values printed as %.17g and
/// non-finite values as null. Output is terminated by a line feed.
std::string dump_json(const nlohmann::ordered_json& value, int indent = 2);

/// "%.17g", the single number format used by every writer.
std::string format_double(double v);

}  // namespace cmc
