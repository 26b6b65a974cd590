#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace cars {

// An unnormalized log-concave density: the log-density V, its derivative,
// and the support interval (endpoints may be infinite). The normalizer, when
// known, is metadata for diagnostics only; the samplers never touch it.
//
// Concavity of V on the support is the caller's contract. Outside the
// support V evaluates to -inf (density zero), which callers can detect.
// Evaluating exactly at an infinite endpoint is forbidden.
struct LogConcaveTarget {
  std::function<double(double)> log_density;
  std::function<double(double)> log_density_derivative;
  double support_lower = -std::numeric_limits<double>::infinity();
  double support_upper = std::numeric_limits<double>::infinity();
  std::optional<double> known_log_normalizer;
};

struct GaussianTargetParams {
  double sigma2 = 0.5;  // variance
};

struct GammaTargetParams {
  double r = 2.0;  // shape, must exceed 1 for log-concavity on (0, inf)
  double a = 2.0;  // scale
};

// Zero-mean Gaussian with V(x) = -x^2 / (2 sigma2) on the whole real line.
inline LogConcaveTarget make_gaussian(GaussianTargetParams params) {
  const double s2 = params.sigma2;
  if (!(s2 > 0.0) || !std::isfinite(s2)) {
    throw std::invalid_argument("make_gaussian: sigma2 must be positive");
  }
  LogConcaveTarget t;
  t.log_density = [s2](double x) { return -x * x / (2.0 * s2); };
  t.log_density_derivative = [s2](double x) { return -x / s2; };
  t.known_log_normalizer = 0.5 * std::log(2.0 * std::numbers::pi * s2);
  return t;
}

// Gamma with V(x) = (r-1) log x - x/a on (0, inf). r > 1 is required:
// otherwise V' is bounded above near 0 and no tangent dominates the left
// tail of the density.
inline LogConcaveTarget make_gamma(GammaTargetParams params) {
  const double r = params.r;
  const double a = params.a;
  if (!(r > 1.0) || !std::isfinite(r)) {
    throw std::invalid_argument("make_gamma: shape r must exceed 1");
  }
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw std::invalid_argument("make_gamma: scale a must be positive");
  }
  LogConcaveTarget t;
  t.log_density = [r, a](double x) {
    if (x <= 0.0) return -std::numeric_limits<double>::infinity();
    return (r - 1.0) * std::log(x) - x / a;
  };
  t.log_density_derivative = [r, a](double x) {
    if (x <= 0.0) return std::numeric_limits<double>::quiet_NaN();
    return (r - 1.0) / x - 1.0 / a;
  };
  t.support_lower = 0.0;
  t.known_log_normalizer = r * std::log(a) + std::lgamma(r);
  return t;
}

}  // namespace cars
