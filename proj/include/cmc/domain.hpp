#pragma once

// Rotational domains bounded by the revolution of the graph t -> (f(t), t)
// about the vertical axis, encoded as the level set F = 1.

#include <array>
#include <functional>
#include <string_view>

namespace cmc {

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;

struct GeneratorPoint {
  double f = 0.0;
  double fp = 0.0;
  double fpp = 0.0;
};

/// Profile function f of a rotational domain with analytic f', f''.
class DomainGenerator {
 public:
  enum class Tag { Ellipsoid, Sphere, Custom };
  using Evaluator = std::function<GeneratorPoint(double)>;

  /// The interval is [lo, hi] shrunk by `guard` on both sides; points outside
  /// are rejected. Open-ended generators (f -> 0 at the ends) pass guard > 0.
  DomainGenerator(Evaluator evaluator, double lo, double hi, Tag tag = Tag::Custom,
                  double guard = 0.0);

  /// Throws OutOfIntervalError outside the interval and DomainError if f <= 0.
  GeneratorPoint evaluate(double y) const;

  bool contains(double y) const noexcept { return y >= lo_ + guard_ && y <= hi_ - guard_; }
  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  Tag tag() const noexcept { return tag_; }

 private:
  Evaluator evaluator_;
  double lo_;
  double hi_;
  Tag tag_;
  double guard_;
};

std::string_view to_string(DomainGenerator::Tag tag);

/// Rotational ellipsoid a^2 x^2 + a^2 y^2 + b^2 z^2 = R^2.
struct EllipsoidSpec {
  double a = 1.0;
  double b = 1.0;
  double r_sq = 1.0;

  /// Throws InvalidArgument unless a, b, r_sq > 0 and a^2 <= b^2.
  void validate() const;
  double ratio() const noexcept { return (b * b) / (a * a); }
};

/// Distance from the open ends of ellipsoid/sphere generators inside which
/// evaluation is refused.
inline constexpr double kGeneratorEndGuard = 1e-9;

/// F(x, y) = (|x|^2 - f(y)^2) / 2 + 1.
double evaluate_F(const Vec2& x, double y, const DomainGenerator& g);
/// (x1, x2, -f(y) f'(y)).
Vec3 gradient_F(const Vec2& x, double y, const DomainGenerator& g);

/// c(y) = f'^2 + f f'' + 1; the domain is admissible at y iff c(y) <= 0.
double meridian_condition(const DomainGenerator& g, double y);

struct BoundaryCurvatures {
  double gauss = 0.0;     ///< K
  double mean = 0.0;      ///< (kappa1 + kappa2) / 2
  double meridian = 0.0;  ///< kappa1 = -f'' / (1 + f'^2)^{3/2}
  double parallel = 0.0;  ///< kappa2 = 1 / (f sqrt(1 + f'^2))
};

/// Curvatures of the boundary surface of revolution at height t, with respect
/// to the inward normal.
BoundaryCurvatures boundary_curvatures(const DomainGenerator& g, double t);

/// f(y) = (b/a) sqrt((R/b)^2 - y^2) on (-R/b, R/b). Rejects a^2 > b^2.
DomainGenerator ellipsoid_generator(const EllipsoidSpec& e);

/// Same formulas without the a^2 <= b^2 requirement, for reporting on
/// inadmissible (prolate) ellipsoids.
DomainGenerator ellipsoid_generator_unchecked(const EllipsoidSpec& e);

struct Sphere {
  Vec3 center{};
  double radius = 0.0;
};

/// Equality case of the meridian condition: f^2 = 2 c1 t - t^2 + c2 bounds the
/// sphere centred at (0, 0, c1) with radius sqrt(c2 + c1^2).
Sphere sphere_from_equality(double c1, double c2);

/// Generator of the sphere above on (c1 - r, c1 + r).
DomainGenerator sphere_generator(double c1, double c2);

/// Generator from user-supplied f, f', f'' on the closed interval [lo, hi].
DomainGenerator custom_generator(std::function<double(double)> f,
                                 std::function<double(double)> fp,
                                 std::function<double(double)> fpp, double lo, double hi);

}  // namespace cmc
