#include "cmc/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <queue>
#include <string>
#include <thread>
#include <vector>

#include "cmc/errors.hpp"

namespace cmc {

namespace {

// Kronrod abscissae on [0, 1]; odd indices are the embedded Gauss nodes.
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo;
  double hi;
  double value;
  double error;

  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel kronrod_panel(const std::function<double(double)>& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[j] * sum;
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  return {lo, hi, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
    throw InvalidArgument("quadrature tolerance must be positive");
  }
  if (max_subdivisions < 1) {
    throw InvalidArgument("quadrature subdivision budget must be >= 1");
  }
}

QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, const QuadratureConfig& config) {
  config.validate();
  if (lo == hi) return {};
  if (hi < lo) {
    QuadratureResult flipped = integrate(f, hi, lo, config);
    flipped.value = -flipped.value;
    return flipped;
  }

  std::priority_queue<Panel> panels;
  Panel first = kronrod_panel(f, lo, hi);
  double total = first.value;
  double error = first.error;
  panels.push(first);
  int subdivisions = 0;

  while (error > config.tolerance) {
    if (subdivisions >= config.max_subdivisions) {
      throw QuadratureError("quadrature did not reach tolerance " +
                            std::to_string(config.tolerance) + " within " +
                            std::to_string(config.max_subdivisions) +
                            " subdivisions (estimate " + std::to_string(error) + ")");
    }
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    const Panel left = kronrod_panel(f, worst.lo, mid);
    const Panel right = kronrod_panel(f, mid, worst.hi);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++subdivisions;
  }

  // Re-sum to shed the drift of the incremental updates.
  double value = 0.0;
  double estimate = 0.0;
  while (!panels.empty()) {
    value += panels.top().value;
    estimate += panels.top().error;
    panels.pop();
  }
  return {value, estimate, subdivisions};
}

BisectionResult bisect(const std::function<double(double)>& f, double lo,
                       double hi, double x_tolerance, int max_iterations) {
  if (!(lo < hi)) throw BracketFailure("bisection needs lo < hi");
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (!std::isfinite(f_lo) || !std::isfinite(f_hi)) {
    throw BracketFailure("non-finite function value at bracket end");
  }
  if (f_lo == 0.0) return {lo, 0.0, 0};
  if (f_hi == 0.0) return {hi, 0.0, 0};
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    throw BracketFailure("bracket [" + std::to_string(lo) + ", " + std::to_string(hi) +
                         "] does not enclose a sign change");
  }

  int iterations = 0;
  while (hi - lo > x_tolerance && iterations < max_iterations) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // interval is one ulp wide
    const double f_mid = f(mid);
    ++iterations;
    if (f_mid == 0.0) return {mid, 0.0, iterations};
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  const double root = 0.5 * (lo + hi);
  return {root, f(root), iterations};
}

unsigned worker_count() {
  if (const char* env = std::getenv("CMC_FORGE_THREADS")) {
    char* end = nullptr;
    const long requested = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && requested > 0) {
      return static_cast<unsigned>(requested);
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(worker_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  std::vector<std::exception_ptr> failures(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        const std::size_t end = std::min(count, (w + 1) * chunk);
        for (std::size_t i = w * chunk; i < end; ++i) body(i);
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
}

}  // namespace cmc
