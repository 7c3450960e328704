#include "chaoskernel/alpha.hpp"

#include <cmath>
#include <stdexcept>

#include "chaoskernel/errors.hpp"

namespace chaoskernel {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kPiSq = kPi * kPi;
constexpr double kSeriesThreshold = 0.15;

// sh y / (sh^2 y + cos^2 y), underflowing cleanly instead of overflowing.
double sinh_kernel(double y) {
  if (y > 350.0) return 0.0;
  const double sh = std::sinh(y);
  const double c = std::cos(y);
  return sh / (sh * sh + c * c);
}

}  // namespace

AlphaEval alpha1_series(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("alpha1_series: x must be positive and finite");
  }
  if (x < kSeriesThreshold) {
    throw ToleranceUnreachableError(
        "alpha1_series: x below series-reliability threshold 0.15; "
        "use alpha1_integral");
  }
  // Terms (n + 1/2) e^{-(n+1/2)^2 pi^2 x} decrease from n = 0 once
  // pi^2 x > ln(3)/2, comfortably true here, so the alternating remainder
  // is bounded by the first omitted term.
  double sum = 0.0;
  double next = 0.0;
  int n = 0;
  for (; n <= 200; ++n) {
    const double h = n + 0.5;
    const double term = h * std::exp(-h * h * kPiSq * x);
    if (n > 0 && term < 1e-14 * std::abs(sum)) {
      next = term;
      break;
    }
    sum += (n % 2 == 0) ? term : -term;
    next = term;
  }
  AlphaEval out;
  out.x = x;
  out.value = 2.0 * kPi * sum;
  out.method = AlphaMethod::series;
  out.est_error = 2.0 * kPi * next;
  return out;
}

AlphaEval alpha1_integral(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("alpha1_integral: x must be positive and finite");
  }
  const auto f1 = [x](double y) {
    return ComplexValue(std::cos(2.0 * x * y * y - y) * y * sinh_kernel(y),
                        0.0);
  };
  const auto f2 = [x](double y) {
    if (y > 350.0) return ComplexValue(0.0, 0.0);
    const double sh = std::sinh(y);
    const double c = std::cos(y);
    return ComplexValue(std::cos(y) * std::cos(2.0 * x * y * y) *
                            std::exp(-y) * y / (sh * sh + c * c),
                        0.0);
  };
  // Envelopes validated pointwise: y sh y/(sh^2 y+cos^2 y) <= y/sh y
  // <= 1.5 e^{-y/2}, and e^{-y} y/(sh^2 y+cos^2 y) <= 2 e^{-2y}.
  const DecayEnvelope env1 = DecayEnvelope::exp_t(0.5, 1.5);
  const DecayEnvelope env2 = DecayEnvelope::exp_t(2.0, 2.0);
  OscillationHint hint;
  hint.quad_phase_coeff = 2.0 * x;
  const double scale = 4.0 / kPi;
  // First pass at a loose absolute tolerance to learn the magnitude, then a
  // second pass tightened to a relative target (floored above roundoff).
  QuadResult i1 = integrate_semiline(f1, env1, 1e-10, hint);
  QuadResult i2 = integrate_semiline(f2, env2, 1e-10, hint);
  double value = scale * (i1.value.real() + i2.value.real());
  const double abs_target =
      std::max(2e-14, std::abs(value) / scale * 3e-10);
  if (abs_target < 1e-10) {
    i1 = integrate_semiline(f1, env1, abs_target, hint);
    i2 = integrate_semiline(f2, env2, abs_target, hint);
    value = scale * (i1.value.real() + i2.value.real());
  }
  AlphaEval out;
  out.x = x;
  out.value = value;
  out.method = AlphaMethod::integral;
  out.est_error = scale * (i1.total_error() + i2.total_error());
  return out;
}

double alpha_scaled(double s, double x) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw std::domain_error("alpha_scaled: s must be positive and finite");
  }
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("alpha_scaled: x must be positive and finite");
  }
  const double x1 = x / (s * s);
  const AlphaEval e =
      (x1 >= kSeriesThreshold) ? alpha1_series(x1) : alpha1_integral(x1);
  return e.value / (s * s);
}

double alpha_laplace(double lambda) {
  if (!std::isfinite(lambda)) {
    throw std::domain_error("alpha_laplace: lambda must be finite");
  }
  const double rate = 0.25 * kPiSq - lambda;
  if (rate < 0.02) {
    throw ToleranceUnreachableError(
        "alpha_laplace: lambda too close to pi^2/4; integrand decay too slow");
  }
  const auto f = [lambda](double x) {
    if (x <= 0.0) return ComplexValue(0.0, 0.0);
    const AlphaEval e = (x >= kSeriesThreshold) ? alpha1_series(x)
                                                : alpha1_integral(x);
    return ComplexValue(std::exp(lambda * x) * e.value, 0.0);
  };
  // alpha_1(x) <= pi e^{-pi^2 x/4} for every x > 0 (sandwich upper bound for
  // x >= 1/pi^2; below it the bound exceeds the global maximum ~1.84).
  const DecayEnvelope env = DecayEnvelope::exp_t(rate, kPi);
  const QuadResult q = integrate_semiline(f, env, 1e-9);
  return q.value.real();
}

}  // namespace chaoskernel
