#include "cmc/domain.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "cmc/errors.hpp"

namespace cmc {

DomainGenerator::DomainGenerator(Evaluator evaluator, double lo, double hi, Tag tag,
                                 double guard)
    : evaluator_(std::move(evaluator)), lo_(lo), hi_(hi), tag_(tag), guard_(guard) {
  if (!evaluator_) throw InvalidArgument("domain generator needs an evaluator");
  if (!(lo < hi)) throw InvalidArgument("generator interval must satisfy lo < hi");
  if (guard < 0.0 || 2.0 * guard >= hi - lo) {
    throw InvalidArgument("generator end guard leaves an empty interval");
  }
}

GeneratorPoint DomainGenerator::evaluate(double y) const {
  if (!contains(y)) {
    throw OutOfIntervalError("y = " + std::to_string(y) + " outside generator interval (" +
                                 std::to_string(lo_) + ", " + std::to_string(hi_) + ")",
                             y);
  }
  const GeneratorPoint pt = evaluator_(y);
  if (!(pt.f > 0.0)) {
    throw DomainError("generator f is not positive at y = " + std::to_string(y));
  }
  return pt;
}

std::string_view to_string(DomainGenerator::Tag tag) {
  switch (tag) {
    case DomainGenerator::Tag::Ellipsoid: return "ellipsoid";
    case DomainGenerator::Tag::Sphere: return "sphere";
    case DomainGenerator::Tag::Custom: return "custom";
  }
  return "unknown";
}

void EllipsoidSpec::validate() const {
  if (!(a > 0.0) || !(b > 0.0) || !(r_sq > 0.0) || !std::isfinite(a) || !std::isfinite(b) ||
      !std::isfinite(r_sq)) {
    throw InvalidArgument("ellipsoid needs positive finite a, b and R^2");
  }
  if (a * a > b * b) {
    throw InvalidArgument("ellipsoid must satisfy a^2 <= b^2");
  }
}

double evaluate_F(const Vec2& x, double y, const DomainGenerator& g) {
  const double f = g.evaluate(y).f;
  return 0.5 * (x[0] * x[0] + x[1] * x[1] - f * f) + 1.0;
}

Vec3 gradient_F(const Vec2& x, double y, const DomainGenerator& g) {
  const GeneratorPoint pt = g.evaluate(y);
  return {x[0], x[1], -pt.f * pt.fp};
}

double meridian_condition(const DomainGenerator& g, double y) {
  const GeneratorPoint pt = g.evaluate(y);
  return pt.fp * pt.fp + pt.f * pt.fpp + 1.0;
}

BoundaryCurvatures boundary_curvatures(const DomainGenerator& g, double t) {
  const GeneratorPoint pt = g.evaluate(t);
  const double w = 1.0 + pt.fp * pt.fp;
  const double root = std::sqrt(w);
  BoundaryCurvatures c;
  c.meridian = -pt.fpp / (w * root);
  c.parallel = 1.0 / (pt.f * root);
  c.gauss = -pt.f * pt.fpp / (w * w * pt.f * pt.f);
  c.mean = (w - pt.f * pt.fpp) / (2.0 * pt.f * w * root);
  return c;
}

DomainGenerator ellipsoid_generator_unchecked(const EllipsoidSpec& e) {
  if (!(e.a > 0.0) || !(e.b > 0.0) || !(e.r_sq > 0.0)) {
    throw InvalidArgument("ellipsoid needs positive a, b and R^2");
  }
  const double a = e.a;
  const double b = e.b;
  const double half_height_sq = e.r_sq / (b * b);  // (R/b)^2
  const double half_height = std::sqrt(half_height_sq);
  return DomainGenerator(
      [a, b, half_height_sq, r_sq = e.r_sq](double y) {
        const double u = half_height_sq - y * y;
        const double root = std::sqrt(u);
        return GeneratorPoint{(b / a) * root, -(b / a) * y / root,
                              -r_sq / (a * b * u * root)};
      },
      -half_height, half_height, DomainGenerator::Tag::Ellipsoid, kGeneratorEndGuard);
}

DomainGenerator ellipsoid_generator(const EllipsoidSpec& e) {
  e.validate();
  return ellipsoid_generator_unchecked(e);
}

Sphere sphere_from_equality(double c1, double c2) {
  const double r_sq = c2 + c1 * c1;
  if (!(r_sq > 0.0)) {
    throw DegenerateError("c2 + c1^2 must be positive for a sphere");
  }
  return {{0.0, 0.0, c1}, std::sqrt(r_sq)};
}

DomainGenerator sphere_generator(double c1, double c2) {
  const Sphere sphere = sphere_from_equality(c1, c2);
  return DomainGenerator(
      [c1, c2](double t) {
        const double f_sq = 2.0 * c1 * t - t * t + c2;
        const double f = std::sqrt(f_sq);
        const double fp = (c1 - t) / f;
        // (f f')' = -1  =>  f'' = (-1 - f'^2) / f
        return GeneratorPoint{f, fp, (-1.0 - fp * fp) / f};
      },
      c1 - sphere.radius, c1 + sphere.radius, DomainGenerator::Tag::Sphere,
      kGeneratorEndGuard);
}

DomainGenerator custom_generator(std::function<double(double)> f,
                                 std::function<double(double)> fp,
                                 std::function<double(double)> fpp, double lo, double hi) {
  if (!f || !fp || !fpp) throw InvalidArgument("custom generator needs f, f' and f''");
  return DomainGenerator(
      [f = std::move(f), fp = std::move(fp), fpp = std::move(fpp)](double y) {
        return GeneratorPoint{f(y), fp(y), fpp(y)};
      },
      lo, hi, DomainGenerator::Tag::Custom);
}

}  // namespace cmc
