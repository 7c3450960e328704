#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "chaoskernel/transforms.hpp"

using namespace chaoskernel;

namespace {
double rel(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}
double crel(ComplexValue got, ComplexValue want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}
}  // namespace

TEST_CASE("langevin density closed form") {
  // (sqrt(3)/(pi s^2)) exp[-(6/s^3)(z - s w/2)^2 - w^2/(2s)]
  CHECK(rel(langevin_density(1.0, 0.0, 0.0), std::sqrt(3.0) / M_PI) <= 1e-15);
  const double s = 0.7, w = 0.3, z = -0.2;
  const double want = std::sqrt(3.0) / (M_PI * s * s) *
                      std::exp(-6.0 / (s * s * s) * std::pow(z - s * w / 2, 2) -
                               w * w / (2 * s));
  CHECK(rel(langevin_density(s, w, z), want) <= 1e-14);
}

TEST_CASE("flt_Z against high-precision references") {
  CHECK(rel(flt_Z({1, 0.5, 0.3, 0.7}).real(), 0.74353647482232133208) <= 1e-14);
  CHECK(rel(flt_Z({2, 0.3, -0.4, 1.2}).real(), 0.40998046397947058413) <= 1e-14);
  CHECK(rel(flt_Z({1, 1, 1, 1e-6}).real(), 0.31140322391465736943) <= 1e-13);
  CHECK(rel(flt_Z({0.5, -0.8, 2.0, 0.35}).real(), 0.9504215979706565567) <= 1e-14);
  CHECK(rel(flt_Z({1, 1, 1, 0}).real(), 0.31140322391459768381) <= 1e-14);
}

TEST_CASE("flt_Z properties: real, even, unit at zero frequency") {
  for (double b : {0.0, 0.4, 1.3}) {
    CAPTURE(b);
    CHECK(flt_Z({1.0, 0.8, -0.6, b}).imag() == 0.0);
    CHECK(flt_Z({1.0, -0.8, 0.6, b}).real() ==
          doctest::Approx(flt_Z({1.0, 0.8, -0.6, b}).real()).epsilon(1e-15));
    // r = c = 0 gives E[exp(-b^2/2 int w^2)] = (ch bs)^{-1/2}
    CHECK(rel(flt_Z({1.0, 0.0, 0.0, b}).real(),
              1.0 / std::sqrt(std::cosh(b))) <= 1e-14);
  }
}

TEST_CASE("flt_Z series and closed branches agree at the seam") {
  // References straddle the bs = 0.1 branch switch; each side must hit the
  // same high-precision value, so neither branch drifts near the seam.
  CHECK(rel(flt_Z({1.0, 0.8, -0.6, 0.0999}).real(),
            0.86745991829330845934) <= 1e-13);
  CHECK(rel(flt_Z({1.0, 0.8, -0.6, 0.1001}).real(),
            0.86745232853116344656) <= 1e-13);
}

TEST_CASE("flt_Y factorizes over the two scalar pairs") {
  const FLQueryY q{1.0, 0.5, -0.3, 0.2, 0.7, 0.9};
  const ComplexValue lhs = flt_Y(q);
  const ComplexValue rhs =
      flt_Z({1.0, 0.5, 0.7, 0.9}) * flt_Z({1.0, -0.3, 0.2, 0.9});
  CHECK(crel(lhs, rhs) <= 1e-14);
}

TEST_CASE("laplace_Z1 against high-precision references") {
  CHECK(rel(laplace_Z1(0.1, 0.4, 1), 0.23197742967760227528) <= 1e-13);
  CHECK(rel(laplace_Z1(-0.5, 0.3, 2), 0.049674257031251241784) <= 1e-13);
  CHECK(rel(laplace_Z1(0.7, -0.2, 0.5), 0.06846890762560320085) <= 1e-13);
  CHECK(rel(laplace_Z1(0.3, 0.2, 1e-4), 0.51922199975073573983) <= 1e-12);
  CHECK(rel(laplace_Z1(0.3, 0.2, 0), 0.51922200004842301975) <= 1e-14);
}

TEST_CASE("laplace_Z1 limits and seams") {
  // b = 0 reduces to the unit-time langevin density
  CHECK(laplace_Z1(0.3, 0.2, 0.0) ==
        doctest::Approx(langevin_density(1.0, 0.3, 0.2)).epsilon(1e-15));
  // Straddle the b = 0.05 branch switch against fixed references.
  CHECK(rel(laplace_Z1(0.45, -0.3, 0.0499), 0.095301623840915077411) <= 1e-13);
  CHECK(rel(laplace_Z1(0.45, -0.3, 0.0501), 0.095301405923413846193) <= 1e-13);
}

TEST_CASE("psi marginal transform references and factorization") {
  const MarginalPoint p{0.1, 0.2, 0.4, 0.3};  // (w, beta, zeta, z)
  CHECK(rel(psi(p, 0.0), 0.11873662392650879863) <= 1e-14);
  CHECK(rel(psi(p, 0.5), 0.11269600002214106162) <= 1e-13);
  CHECK(rel(psi(p, 1.0), 0.096397463258430717617) <= 1e-13);
  CHECK(rel(psi(p, 2.0), 0.051919747466505547869) <= 1e-13);
  CHECK(rel(psi(p, 1.0), laplace_Z1(p.w, p.z, 1.0) *
                             laplace_Z1(p.beta, p.zeta, 1.0)) <= 1e-14);
  // b = 0 closed form (3/pi^2) exp[-(w^2+b^2)/2 - 6(z - w/2)^2 - 6(zt - b/2)^2]
  const double want0 =
      3.0 / (M_PI * M_PI) *
      std::exp(-(p.w * p.w + p.beta * p.beta) / 2.0 -
               6.0 * std::pow(p.z - p.w / 2, 2) -
               6.0 * std::pow(p.zeta - p.beta / 2, 2));
  CHECK(rel(psi(p, 0.0), want0) <= 1e-14);
}

TEST_CASE("phi continuation against references") {
  const MarginalPoint p{0.1, 0.2, 0.4, 0.3};
  CHECK(crel(phi(p, {-1, 0}), {0.096397463258430717617, 0}) <= 1e-13);
  CHECK(crel(phi(p, {1e-5, 0}), {0.11873687208631902056, 0}) <= 1e-12);
  CHECK(crel(phi(p, {0, 1e-5}),
             {0.1187366239262425833, 2.4815954400620736008e-7}) <= 1e-12);
  CHECK(crel(phi(p, {2, 3}),
             {0.14482301795990381904, 0.10648617246567177194}) <= 1e-13);
  CHECK(crel(phi(p, {-4, 10}),
             {-0.022414432482079799421, 0.044095504103344401122}) <= 1e-13);
  CHECK(rel(std::abs(phi(p, {0, 50})), 0.044623421) <= 1e-7);
}

TEST_CASE("phi equals psi on the negative real axis") {
  const MarginalPoint p{0.4, -0.1, 0.2, -0.3};
  for (double b : {0.3, 1.0, 2.5}) {
    CAPTURE(b);
    const ComplexValue v = phi(p, {-b * b, 0.0});
    CHECK(v.imag() == 0.0);
    CHECK(rel(v.real(), psi(p, b)) <= 1e-13);
  }
}

TEST_CASE("phi series branch is continuous at the small-lambda seam") {
  // Straddle the |lambda| = 1e-3 switch: the protected series below, the
  // closed form (with its ~1e4 cancellation amplification) just above.
  const MarginalPoint p{0.1, 0.2, 0.4, 0.3};
  const ComplexValue a = phi(p, {0.6e-3 * 0.999, 0.8e-3 * 0.999});
  const ComplexValue b = phi(p, {0.6e-3 * 1.001, 0.8e-3 * 1.001});
  CHECK(crel(a, {0.1187514978654807253, 1.983546138419589604e-5}) <= 1e-11);
  CHECK(crel(b, {0.11875152764164329333, 1.9875177134319664753e-5}) <= 1e-11);
}

TEST_CASE("phi pole guard") {
  const MarginalPoint p{0.1, 0.2, 0.4, 0.3};
  CHECK_THROWS_AS(phi(p, {4.0 * M_PI * M_PI + 0.1, 0.0}), std::domain_error);
  CHECK_NOTHROW(phi(p, {39.0, 5.0}));
}

TEST_CASE("tilted covariance oracle") {
  const Eigen::Matrix2d K = ou_covariance_oracle(0.7, 1.3);
  CHECK(rel(K(0, 0), 0.83797424906611922616) <= 1e-14);
  CHECK(rel(K(0, 1), 0.40557926378355967043) <= 1e-14);
  CHECK(rel(K(1, 0), K(0, 1)) <= 1e-15);
  CHECK(rel(K(1, 1), 0.31229892963508840247) <= 1e-14);
  CHECK(rel(K.determinant(), 0.097203921833901734755) <= 1e-13);
  // positive definite across scales
  for (double bs : {0.05, 0.5, 3.0, 20.0}) {
    const Eigen::Matrix2d M = ou_covariance_oracle(1.0, bs);
    CAPTURE(bs);
    CHECK(M(0, 0) > 0.0);
    CHECK(M.determinant() > 0.0);
  }
}
