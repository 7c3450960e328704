#pragma once

#include "chaoskernel/numerics.hpp"

namespace chaoskernel {

enum class AlphaMethod { series, integral };

// One evaluation of the chaos-coordinate density alpha_1, tagged with the
// method used and an error estimate.  For x >= 1/pi^2 the value obeys the
// sandwich pi e^{-pi^2 x/4} (1 - 3 e^{-2 pi^2 x}) <= value <= pi e^{-pi^2 x/4}.
struct AlphaEval {
  double x = 0.0;
  double value = 0.0;
  AlphaMethod method = AlphaMethod::series;
  double est_error = 0.0;
};

// Alternating series alpha_1(x) = 2 pi sum_n (-1)^n (n + 1/2) e^{-(n+1/2)^2 pi^2 x},
// truncated once the next term drops below 1e-14 of the partial sum (or at
// n = 200); est_error is the alternating-series remainder bound.  Throws
// ToleranceUnreachableError for x < 0.15, where the terms are not yet
// comfortably decreasing; use alpha1_integral there.
AlphaEval alpha1_series(double x);

// Oscillatory-integral evaluation
//   alpha_1(x) = (4/pi) int_0^inf cos(2xy^2 - y) y sh y / (sh^2 y + cos^2 y) dy
//              + (4/pi) int_0^inf cos y cos(2xy^2) e^{-y} y / (sh^2 y + cos^2 y) dy
// via integrate_semiline with the envelopes 1.5 e^{-y/2} and 2 e^{-2y}.
AlphaEval alpha1_integral(double x);

// alpha_s(x) = s^{-2} alpha_1(x/s^2), dispatching to the series for
// x/s^2 >= 0.15 and to the integral below.
double alpha_scaled(double s, double x);

// int_0^inf e^{lambda x} alpha_1(x) dx by direct quadrature; equals
// 1/cos(sqrt(lambda)) for 0 <= lambda < pi^2/4 and 1/ch(sqrt(-lambda)) for
// lambda < 0.  Throws ToleranceUnreachableError when pi^2/4 - lambda < 0.02
// (integrand decay too slow against the e^{-pi^2 x/4} tail).
double alpha_laplace(double lambda);

}  // namespace chaoskernel
