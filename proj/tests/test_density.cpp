#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "chaoskernel/density.hpp"
#include "chaoskernel/numerics.hpp"
#include "chaoskernel/transforms.hpp"

using namespace chaoskernel;

namespace {

// doctest::Approx is absolute-ish for tiny magnitudes; compare relatively.
double rel(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

}  // namespace

TEST_CASE("scale_params identities") {
  ScaleParams sp = scale_params({0, 0, 0.7, 0, 0}, 0.5);
  CHECK(rel(sp.mu, -0.7 / 0.25) <= 1e-15);
  CHECK(sp.nu == 0.0);

  const ChaosPoint p{0.3, -0.8, 1.1, 0.45, -0.2};
  const double s = 0.7;
  sp = scale_params(p, s);
  // s B' = (z^2 + zeta^2)/2 - B^2
  const double lhs = s * sp.b_prime;
  const double rhs = (p.z * p.z + p.zeta * p.zeta) / 2.0 - sp.b_sq;
  CHECK(rel(lhs, rhs) <= 1e-14);
  // mu as a sum of squares minus x/s^2
  const double alt = 3.0 * (std::pow(p.z - s * p.w / 12.0, 2) +
                            std::pow(p.zeta - s * p.beta / 12.0, 2)) /
                         (5.0 * s * s * s) +
                     (p.w * p.w + p.beta * p.beta) / (16.0 * s) - p.x / (s * s);
  CHECK(rel(sp.mu, alt) <= 1e-12);
}

TEST_CASE("marginal_gauss closed form") {
  CHECK(rel(marginal_gauss(0, 0, 0, 0, 1.0), 3.0 / (M_PI * M_PI)) <= 1e-15);
  const double w = 0.1, b = 0.2, zt = 0.3, z = 0.4, s = 0.5;
  const double prod = langevin_density(s, w, z) * langevin_density(s, b, zt);
  CHECK(rel(marginal_gauss(w, b, zt, z, s), prod) <= 1e-14);
}

TEST_CASE("q_exact against high-precision references") {
  struct Case {
    ChaosPoint p;
    double s, q;
    double integral;  // NaN when not pinned
  };
  const double NaN = std::nan("");
  const Case cases[] = {
      {{0, 0, 0.5, 0, 0}, 1.0, 2.1123227204099570372e-7, NaN},
      {{0.1, 0.2, 0.3, 0.4, 0.5}, 1.0, 0.57546423505625269269, NaN},
      {{-0.3, 0.6, 0.8, -0.2, 0.1}, 1.0, 3.8114608063147158264e-10,
       9.65071495247004025e-8},
      {{0.4, -0.2, 0.6, 0.1, -0.3}, 1.0, 2.1056247729043814517e-7,
       4.11085772474445929e-5},
      {{0.28284271247461901, -0.1414213562373095, 0.15,
        0.035355339059327376, -0.10606601717798213},
       0.5, 1.3475998546588029884e-5, NaN},
      {{0.5, -0.4, 1.2, 0.3, -0.6}, 2.0, 6.4461209071384174566e-5,
       0.507187671101348528},
  };
  for (const auto& cs : cases) {
    CAPTURE(cs.p.w);
    CAPTURE(cs.p.x);
    CAPTURE(cs.s);
    const QuadResult r = q_exact(cs.p, cs.s, 1e-11);
    // The 3.8e-10 case sits on a ~2e7 cancellation (integrand scale S over
    // |I|), so the requested tolerance is S-relative and the achievable
    // point-relative accuracy is correspondingly coarser.
    const double rtol = (cs.q < 1e-9) ? 1e-6 : 1e-8;
    CHECK(rel(r.value.real(), cs.q) <= rtol);
    CHECK(r.value.real() > -r.total_error());  // a density, up to the error bar
    if (std::isfinite(cs.integral)) {
      const DensityParts dp = q_exact_parts(cs.p, cs.s, 1e-11);
      CHECK(rel(dp.integral.value.real(), cs.integral) <= rtol);
    }
  }
}

TEST_CASE("q_exact symmetries are exact") {
  const ChaosPoint p{0.1, 0.2, 0.3, 0.4, 0.5};
  const ChaosPoint m1{-0.1, 0.2, 0.3, 0.4, -0.5};
  const ChaosPoint m2{0.1, -0.2, 0.3, -0.4, 0.5};
  const double a = q_exact(p, 1.0, 1e-8).value.real();
  CHECK(rel(q_exact(m1, 1.0, 1e-8).value.real(), a) <= 1e-13);
  CHECK(rel(q_exact(m2, 1.0, 1e-8).value.real(), a) <= 1e-13);
}

TEST_CASE("q_exact obeys the s^6 space-time scaling") {
  // q_s(delta_s p) = s^-6 q_1(p) with delta_s = (sqrt s, sqrt s, s^2,
  // s^1.5, s^1.5) acting componentwise.
  const double s = 0.25;
  const ChaosPoint p1{-0.3, 0.6, 0.8, -0.2, 0.1};
  const ChaosPoint ps{p1.w * std::sqrt(s), p1.beta * std::sqrt(s),
                      p1.x * s * s, p1.zeta * std::pow(s, 1.5),
                      p1.z * std::pow(s, 1.5)};
  const double lhs = q_exact(ps, s, 1e-9).value.real();
  const double rhs = std::pow(s, -6.0) * q_exact(p1, 1.0, 1e-9).value.real();
  CHECK(rel(lhs, rhs) <= 1e-8);
}

TEST_CASE("integrand behaviour at the endpoints") {
  const ChaosPoint p{0.1, 0.2, 0.3, 0.4, 0.5};
  CHECK(integrand_eval(p, 1.0, 0.0) == 0.0);
  // Leading behaviour 2 f_r_reg(0) xi = 12 xi.
  CHECK(rel(integrand_eval(p, 1.0, 1e-4), 12.0e-4) <= 1e-6);
  CHECK(std::abs(integrand_eval(p, 1.0, 80.0)) < 1e-6);
}

TEST_CASE("x-marginal of q integrates to the Gaussian marginal") {
  // integral_0^inf q_1(w, beta, x, zeta, z) dx = Psi at b = 0.
  const MarginalPoint mp{0.1, 0.2, 0.3, 0.4};
  const double s = 1.0;
  const double cb = (std::pow(s * mp.w - 2.0 * mp.z, 2) +
                     std::pow(s * mp.beta - 2.0 * mp.zeta, 2)) /
                    8.0 / (s * s * s);
  const double cv = (mp.w * mp.w + mp.beta * mp.beta) / (2.0 * s);
  const double log_pref =
      -3.0 * std::log(M_PI) - 6.0 * std::log(s) - 12.0 * cb - cv;
  // x-uniform head bound on |q| plus the analytic tail of the envelope; past
  // the knee x = 1.5 the density decays at least like e^{-20 x}.
  const double rate_in = 0.5 + 2.0 * cb + 0.5 * cv;
  const double head_k =
      6.0 * std::pow(2.0 * M_PI, 2) + 0.4 * std::pow(2.0 * M_PI, 4);
  const double tail_k =
      std::exp(std::log(600.0) + 8.0 * cb + 1.05 * cv - rate_in * 2.0 * M_PI) /
      rate_in;
  const double target = psi(mp, 0.0);
  const DecayEnvelope env = DecayEnvelope::exp_t_log(
      20.0, log_pref + std::log(head_k + tail_k) + 20.0 * 1.5, 0.0);
  auto f = [&](double x) {
    const ChaosPoint p{mp.w, mp.beta, x, mp.zeta, mp.z};
    return ComplexValue(q_exact(p, s, 1e-9).value.real(), 0.0);
  };
  const QuadResult q = integrate_semiline(f, env, 1e-6 * target, {});
  CHECK(rel(q.value.real(), target) <= 1e-5);
}

TEST_CASE("regime_check classifies the two asymptotic conditions") {
  RegimeReport r = regime_check({1, 1, 0.01, 0.5, 0.5}, 0.1, 0.5, 10.0);
  CHECK(r.satisfied == RegimeCondition::condition22);
  CHECK(r.mu > 10.0);
  r = regime_check({0, 0, 5.0, 0, 0}, 0.5, 0.5, 10.0);
  CHECK(r.satisfied == RegimeCondition::none);
  CHECK(r.mu < 0.0);
}

TEST_CASE("q_asymptotic prefactor, log-space identity, and guards") {
  const ChaosPoint p{1, 1, 0.01, 0.5, 0.5};
  const double s = 0.3;
  const AsymptoticResult a = q_asymptotic(p, s, 0.5);
  const double qt = marginal_gauss(p.w, p.beta, p.zeta, p.z, s);
  const double mu = scale_params(p, s).mu;
  CHECK(rel(a.value, qt / (60.0 * M_PI * s * s * mu * mu * mu)) <= 1e-13);

  // Deep regime: the linear-scale value underflows but log_value stays exact.
  const AsymptoticResult deep = q_asymptotic(p, 0.05, 0.5);
  const double mu2 = scale_params(p, 0.05).mu;
  const double dw = 0.05 * p.w - 2 * p.z, db = 0.05 * p.beta - 2 * p.zeta;
  const double logwant =
      std::log(3.0) - 2 * std::log(M_PI) - 4 * std::log(0.05) -
      1.5 * (dw * dw + db * db) / std::pow(0.05, 3) -
      (p.w * p.w + p.beta * p.beta) / 0.1 -
      std::log(60.0 * M_PI * 0.05 * 0.05 * mu2 * mu2 * mu2);
  CHECK(rel(deep.log_value, logwant) <= 1e-12);
  CHECK(deep.value == 0.0);

  // Outside the regime (mu <= 0) the equivalent is undefined.
  const AsymptoticResult bad = q_asymptotic({0, 0, 5.0, 0, 0}, 0.5, 0.5);
  CHECK(std::isnan(bad.value));
}
