#pragma once

#include <cstddef>
#include <functional>

namespace cmc {

/// Settings for the adaptive z(s) integration.
struct QuadratureConfig {
  double tolerance = 1e-10;
  int max_subdivisions = 10000;

  /// Throws InvalidArgument unless tolerance > 0 and max_subdivisions >= 1.
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions = 0;
};

/// Globally adaptive 7/15-point Gauss-Kronrod integration of f over [lo, hi].
/// Reversed limits give the negated integral. Throws QuadratureError when the
/// error estimate is still above config.tolerance after the subdivision budget.
QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, const QuadratureConfig& config = {});

struct BisectionResult {
  double root = 0.0;
  double residual = 0.0;
  int iterations = 0;
};

/// Bracketed bisection. f(lo) and f(hi) must have opposite signs (or one be
/// zero); iterates until hi - lo <= x_tolerance. Throws BracketFailure otherwise.
BisectionResult bisect(const std::function<double(double)>& f, double lo,
                       double hi, double x_tolerance = 1e-13,
                       int max_iterations = 400);

/// Worker count for bulk sampling: CMC_FORGE_THREADS if set and positive,
/// otherwise hardware concurrency (at least 1).
unsigned worker_count();

/// Runs body(i) for i in [0, count) across worker_count() threads.
/// body must be safe to call concurrently for distinct i.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace cmc
