#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "chaoskernel/alpha.hpp"

using namespace chaoskernel;

namespace {
double rel(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}
}  // namespace

TEST_CASE("series value at x = 1") {
  const AlphaEval e = alpha1_series(1.0);
  CHECK(rel(e.value, 0.26642267636486352) <= 1e-15);
  CHECK(e.est_error <= 1e-14 * e.value);
  CHECK(e.method == AlphaMethod::series);
}

TEST_CASE("series refuses the slowly-converging region") {
  CHECK_THROWS_AS(alpha1_series(0.1), ToleranceUnreachableError);
  CHECK_NOTHROW(alpha1_series(0.15));
}

TEST_CASE("dual methods agree on the overlap") {
  for (double x : {0.2, 0.35, 0.5, 0.8, 1.0, 1.6, 2.4, 3.3, 4.1, 5.0}) {
    CAPTURE(x);
    const AlphaEval s = alpha1_series(x);
    const AlphaEval i = alpha1_integral(x);
    CHECK(rel(s.value, i.value) <= 1e-8);
  }
}

TEST_CASE("integral method below the series threshold") {
  const AlphaEval a = alpha1_integral(0.05);
  const AlphaEval b = alpha1_integral(0.1);
  CHECK(a.value > 0.0);
  CHECK(b.value > a.value);  // alpha_1 rises steeply out of 0 on this range
  CHECK(a.method == AlphaMethod::integral);
}

TEST_CASE("theta sandwich for x >= 1/pi^2") {
  for (double x = 0.11; x <= 6.0; x += 0.13) {
    CAPTURE(x);
    const double v = (x >= 0.15) ? alpha1_series(x).value
                                 : alpha1_integral(x).value;
    const double hi = M_PI * std::exp(-M_PI * M_PI * x / 4.0);
    const double lo = hi * (1.0 - 3.0 * std::exp(-2.0 * M_PI * M_PI * x));
    CHECK(v <= hi * (1.0 + 1e-12));
    CHECK(v >= lo - 1e-12 * hi);
  }
}

TEST_CASE("scaled density identity") {
  for (double s : {0.5, 1.0, 2.0}) {
    for (double x : {0.1, 0.4, 1.0}) {
      CAPTURE(s);
      CAPTURE(x);
      const double direct = alpha_scaled(s, x);
      const double xs = x / (s * s);
      const double ref = (xs >= 0.15 ? alpha1_series(xs).value
                                     : alpha1_integral(xs).value) /
                         (s * s);
      CHECK(rel(direct, ref) <= 1e-12);
    }
  }
}

TEST_CASE("laplace transform identities") {
  CHECK(std::abs(alpha_laplace(0.0) - 1.0) <= 1e-7);  // total mass
  CHECK(std::abs(alpha_laplace(-1.0) - 1.0 / std::cosh(1.0)) <= 1e-7);
  CHECK(std::abs(alpha_laplace(-4.0) - 1.0 / std::cosh(2.0)) <= 1e-7);
  CHECK(std::abs(alpha_laplace(1.0) - 1.0 / std::cos(1.0)) <= 1e-6);
}

TEST_CASE("laplace transform guard near the abscissa") {
  CHECK_THROWS_AS(alpha_laplace(M_PI * M_PI / 4.0 - 0.01),
                  ToleranceUnreachableError);
  CHECK_THROWS_AS(alpha_laplace(100.0), ToleranceUnreachableError);
}
