#include "chaoskernel/acceptance.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <sstream>
#include <thread>
#include <vector>

#include "chaoskernel/alpha.hpp"
#include "chaoskernel/density.hpp"
#include "chaoskernel/errors.hpp"
#include "chaoskernel/model.hpp"
#include "chaoskernel/numerics.hpp"
#include "chaoskernel/special.hpp"
#include "chaoskernel/transforms.hpp"

namespace chaoskernel {

namespace {

std::string fmt(const char* format, ...) {
  va_list args;
  va_start(args, format);
  char buf[512];
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

// Contiguous-range fan-out; ranges and reduction order are fixed by the
// worker index, so results are identical for any worker count.
void parallel_ranges(std::size_t n, unsigned workers,
                     const std::function<void(std::size_t, std::size_t,
                                              unsigned)>& body) {
  const unsigned w = std::max(1u, std::min<unsigned>(workers,
                                                     static_cast<unsigned>(n)));
  if (w == 1) {
    body(0, n, 0);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < w; ++i) {
    const std::size_t lo = n * i / w;
    const std::size_t hi = n * (i + 1) / w;
    pool.emplace_back(body, lo, hi, i);
  }
  for (auto& t : pool) t.join();
}

double uniform01(std::uint64_t seed, std::uint64_t path, std::uint32_t step,
                 std::uint32_t stream) {
  const auto b = philox_block(seed, {static_cast<std::uint32_t>(path),
                                     static_cast<std::uint32_t>(path >> 32),
                                     step, stream});
  const std::uint64_t v = (static_cast<std::uint64_t>(b[0]) << 32) | b[1];
  return static_cast<double>(v) * 0x1p-64;
}

// 1. Laplace-transform family of the chaos-coordinate density:
//    integral of e^{-b^2 x} alpha_1(x) equals 1/ch b; analytic continuation
//    at +1 equals 1/cos 1.
CriterionResult run_c1(unsigned) {
  CriterionResult r{1, "laplace-identity-family", false, 0.0, 1e-7, ""};
  std::ostringstream detail;
  double worst = 0.0;
  bool ok = true;
  for (double b : {0.5, 1.0, 2.0}) {
    const double got = alpha_laplace(-b * b);
    const double want = 1.0 / std::cosh(b);
    const double diff = std::abs(got - want);
    worst = std::max(worst, diff);
    ok = ok && diff <= 1e-7;
    detail << fmt("b=%g: |diff|=%.3e  ", b, diff);
  }
  const double diff1 = std::abs(alpha_laplace(1.0) - 1.0 / std::cos(1.0));
  ok = ok && diff1 <= 1e-6;
  detail << fmt("lambda=1: |diff|=%.3e (limit 1e-6)", diff1);
  r.measured = worst;
  r.passed = ok;
  r.detail = detail.str();
  return r;
}

// 2. Series and integral representations of alpha_1 agree to 1e-8 on 50
//    points of [0.2, 5]; theta-series sandwich
//    pi e^{-pi^2 x/4}(1 - 3 e^{-2 pi^2 x}) <= alpha_1 <= pi e^{-pi^2 x/4}.
CriterionResult run_c2(unsigned) {
  CriterionResult r{2, "alpha-dual-method", false, 0.0, 1e-8, ""};
  double worst = 0.0;
  int sandwich_bad = 0;
  for (int i = 0; i < 50; ++i) {
    const double x = 0.2 + (5.0 - 0.2) * i / 49.0;
    const double vs = alpha1_series(x).value;
    const double vi = alpha1_integral(x).value;
    worst = std::max(worst, std::abs(vs - vi) / std::abs(vs));
    const double hi = M_PI * std::exp(-M_PI * M_PI * x / 4.0);
    const double lo = hi * (1.0 - 3.0 * std::exp(-2.0 * M_PI * M_PI * x));
    const double slack = 1e-14 * hi;
    if (!(vs >= lo - slack && vs <= hi + slack)) ++sandwich_bad;
  }
  r.measured = worst;
  r.passed = worst <= 1e-8 && sandwich_bad == 0;
  r.detail = fmt("worst dual rel diff %.3e; sandwich violations %d/50",
                 worst, sandwich_bad);
  return r;
}

// 3. Normalization of the b = 1 velocity-coordinate marginal:
//    double integral of laplace_Z1(w, z, 1) equals (ch 1)^{-1/2}.
CriterionResult run_c3(unsigned) {
  CriterionResult r{3, "marginal-normalization", false, 0.0, 1e-8, ""};
  const double kHalf = 16.0;
  const int kPanels = 64;
  const double width = 2.0 * kHalf / kPanels;
  auto integrate_line = [&](const std::function<double(double)>& f) {
    double total = 0.0;
    for (int i = 0; i < kPanels; ++i) {
      const double a = -kHalf + i * width;
      ComplexValue k15;
      double err = 0.0, abs15 = 0.0;
      detail::gauss_kronrod_panel(
          [&](double t) { return ComplexValue(f(t), 0.0); }, a, a + width, k15,
          err, abs15);
      total += k15.real();
    }
    return total;
  };
  const double value = integrate_line([&](double w) {
    return integrate_line([&](double z) { return laplace_Z1(w, z, 1.0); });
  });
  const double want = 1.0 / std::sqrt(std::cosh(1.0));
  r.measured = std::abs(value - want);
  r.passed = r.measured <= 1e-8;
  r.detail = fmt("got %.15f want %.15f", value, want);
  return r;
}

// 4. Laplace transform in the chaos coordinate recovers the Gaussian-marginal
//    transform: integral of e^{-b^2 x} q_1(w,b,x,zeta,z) dx = psi(p, b).
CriterionResult run_c4(unsigned) {
  CriterionResult r{4, "inversion-consistency", false, 0.0, 1e-5, ""};
  const MarginalPoint mp{0.1, 0.2, 0.3, 0.4};
  const double s = 1.0;
  const double cb =
      (std::pow(s * mp.w - 2.0 * mp.z, 2) + std::pow(s * mp.beta - 2.0 * mp.zeta, 2)) /
      8.0 / (s * s * s);
  const double cv = (mp.w * mp.w + mp.beta * mp.beta) / (2.0 * s);
  const double log_pref =
      -3.0 * std::log(M_PI) - 6.0 * std::log(s) - 12.0 * cb - cv;
  // x-uniform bound on |q|: damping <= 1 and |f_r_reg| <= 6, |f_i_reg| <= 0.8
  // give a head bound 6(2pi)^2 + 0.4(2pi)^4; add the analytic tail.
  const double rate_in = 0.5 + 2.0 * cb + 0.5 * cv;
  const double head_k = 6.0 * std::pow(2.0 * M_PI, 2) +
                        0.4 * std::pow(2.0 * M_PI, 4);
  const double tail_k =
      std::exp(std::log(600.0) + 8.0 * cb + 1.05 * cv - rate_in * 2.0 * M_PI) /
      rate_in;
  std::ostringstream detail;
  double worst = 0.0;
  for (double b : {0.5, 1.0}) {
    const double target = psi(mp, b);
    // Beyond the knee x = 1.5 the density decays at least like e^{-20x}
    // (transform pole near 4 pi^2); the integrator validates by sampling.
    const DecayEnvelope env = DecayEnvelope::exp_t_log(
        b * b + 20.0, log_pref + std::log(head_k + tail_k) + 20.0 * 1.5, 0.0);
    auto f = [&](double x) {
      const ChaosPoint p{mp.w, mp.beta, x, mp.zeta, mp.z};
      return ComplexValue(
          std::exp(-b * b * x) * q_exact(p, s, 1e-9).value.real(), 0.0);
    };
    const QuadResult q = integrate_semiline(f, env, 1e-6 * target, {});
    const double rel = std::abs(q.value.real() / target - 1.0);
    worst = std::max(worst, rel);
    detail << fmt("b=%g: rel=%.3e (panels %zu)  ", b, rel, q.panels_used);
  }
  r.measured = worst;
  r.passed = worst <= 1e-5;
  r.detail = detail.str();
  return r;
}

// 5. Scaling covariance: q_s(p_s) = s^-6 q_1(p) under
//    p_s = (w sqrt s, beta sqrt s, x s^2, zeta s^{3/2}, z s^{3/2}).
CriterionResult run_c5(unsigned) {
  CriterionResult r{5, "scaling-law", false, 0.0, 1e-6, ""};
  const std::uint64_t seed = 20250823;
  double worst = 0.0;
  for (int j = 0; j < 10; ++j) {
    const double u1 = uniform01(seed, j, 0, 7), u2 = uniform01(seed, j, 1, 7);
    const double u3 = uniform01(seed, j, 2, 7), u4 = uniform01(seed, j, 3, 7);
    const double u5 = uniform01(seed, j, 4, 7);
    const ChaosPoint p{-1.2 + 2.4 * u1, -1.2 + 2.4 * u2, 0.3 + 0.7 * u3,
                       -0.6 + 1.2 * u4, -0.6 + 1.2 * u5};
    const double ref = q_exact(p, 1.0, 1e-9).value.real();
    for (double s : {0.25, 0.5}) {
      const double rt = std::sqrt(s);
      const ChaosPoint ps{p.w * rt, p.beta * rt, p.x * s * s,
                          p.zeta * s * rt, p.z * s * rt};
      const double lhs = q_exact(ps, s, 1e-9).value.real();
      const double rhs = std::pow(s, -6.0) * ref;
      worst = std::max(worst, std::abs(lhs / rhs - 1.0));
    }
  }
  r.measured = worst;
  r.passed = worst <= 1e-6;
  r.detail = fmt("worst rel mismatch over 10 points x {0.25, 0.5}: %.3e", worst);
  return r;
}

// 6. Monte Carlo end-to-end: empirical cell probabilities of the tangent
//    sample at s = 1 vs the integrated exact density over 10 cells.  The
//    cells partition a coarse box around the anchor (0, 0, 0.5, 0, 0) into
//    x-bins spanning both sides of 0.5, so every cell carries hundreds to
//    thousands of expected hits and the comparison has real power (the
//    joint density pinned at all four Gaussian coordinates is tiny, so
//    cells isolated at x = 0.5 exactly would pass vacuously).
CriterionResult run_c6(unsigned workers) {
  CriterionResult r{6, "monte-carlo-cells", false, 0.0, 3.0, ""};
  // Box |w|, |beta| <= 0.9, |zeta|, |z| <= 0.45; x-bin edges below.
  static const std::array<double, 11> kEdge = {0.06, 0.12, 0.18, 0.24, 0.30,
                                               0.38, 0.48, 0.60, 0.75, 0.95,
                                               1.20};
  const double kWHalf = 0.9, kZHalf = 0.45;
  const std::size_t kPaths = 1000000;
  const PathConfig cfg{1.0, 4096, 777, Scheme::exact_gaussian_plus_trapezoid};

  const unsigned w = std::max(1u, workers);
  std::vector<std::array<std::uint64_t, 10>> partial(
      w, std::array<std::uint64_t, 10>{});
  parallel_ranges(kPaths, w, [&](std::size_t lo, std::size_t hi, unsigned id) {
    auto& counts = partial[id];
    for (std::size_t j = lo; j < hi; ++j) {
      const ChaosPoint y = simulate_tangent(cfg, j);
      if (std::abs(y.w) > kWHalf || std::abs(y.beta) > kWHalf ||
          std::abs(y.zeta) > kZHalf || std::abs(y.z) > kZHalf) {
        continue;
      }
      for (std::size_t ci = 0; ci < 10; ++ci) {
        if (y.x >= kEdge[ci] && y.x < kEdge[ci + 1]) {
          ++counts[ci];
          break;
        }
      }
    }
  });
  std::array<std::uint64_t, 10> counts{};
  for (const auto& part : partial) {
    for (std::size_t ci = 0; ci < counts.size(); ++ci) counts[ci] += part[ci];
  }

  // Cell integrals by tensor 8-point Gauss-Legendre (single panel per
  // dimension is accurate to ~1e-5 relative here, far below the MC bands).
  static const std::array<double, 8> kNode = {
      -0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
      -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
      0.7966664774136267,  0.9602898564975363};
  static const std::array<double, 8> kWeight = {
      0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
      0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
      0.2223810344533745, 0.1012285362903763};
  const std::size_t kPerCell = 32768;  // 8^5
  std::vector<double> vals(10 * kPerCell, 0.0);
  parallel_ranges(vals.size(), w,
                  [&](std::size_t lo, std::size_t hi, unsigned) {
    for (std::size_t t = lo; t < hi; ++t) {
      const std::size_t ci = t / kPerCell;
      std::size_t ix = t % kPerCell;
      std::array<std::size_t, 5> idx{};
      for (int d = 4; d >= 0; --d) {
        idx[static_cast<std::size_t>(d)] = ix % 8;
        ix /= 8;
      }
      const double xc = 0.5 * (kEdge[ci] + kEdge[ci + 1]);
      const double xh = 0.5 * (kEdge[ci + 1] - kEdge[ci]);
      const std::array<double, 5> center = {0.0, 0.0, xc, 0.0, 0.0};
      const std::array<double, 5> half = {kWHalf, kWHalf, xh, kZHalf, kZHalf};
      ChaosPoint p;
      std::array<double*, 5> slot = {&p.w, &p.beta, &p.x, &p.zeta, &p.z};
      double wgt = 1.0;
      for (std::size_t d = 0; d < 5; ++d) {
        *slot[d] = center[d] + half[d] * kNode[idx[d]];
        wgt *= kWeight[idx[d]] * half[d];
      }
      vals[t] = wgt * q_exact(p, 1.0, 1e-9).value.real();
    }
  });

  std::ostringstream detail;
  int within = 0;
  double worst_z = 0.0;
  for (std::size_t ci = 0; ci < 10; ++ci) {
    double p_int = 0.0;
    for (std::size_t t = ci * kPerCell; t < (ci + 1) * kPerCell; ++t) {
      p_int += vals[t];
    }
    const double p_hat =
        static_cast<double>(counts[ci]) / static_cast<double>(kPaths);
    const double sigma =
        std::sqrt(p_int * (1.0 - p_int) / static_cast<double>(kPaths));
    const double z = (p_hat - p_int) / sigma;
    worst_z = std::max(worst_z, std::abs(z));
    within += std::abs(z) <= 3.0 ? 1 : 0;
    detail << fmt("x in [%.2f,%.2f): n=%6llu p_hat=%.4e p_int=%.4e z=%+.2f\n",
                  kEdge[ci], kEdge[ci + 1],
                  static_cast<unsigned long long>(counts[ci]), p_hat, p_int, z);
  }
  r.measured = within;
  r.threshold = 9.0;
  r.passed = within >= 9;
  r.detail = fmt("cells within 3 sigma: %d/10 (worst |z| %.2f)\n", within,
                 worst_z) + detail.str();
  return r;
}

// 7. Small-time equivalent: along the admissible family
//    p(s) = (6, 6, 0.01 s^2, 1.5 s, 1.5 s) (mu = 5.7/s - 0.01, regime
//    condition22), |q_exact/q_asymptotic - 1| should decrease and fit a
//    log-log slope <= -0.5 against mu.  The ratio reduces to 20 mu^3 I with
//    I the raw inversion integral.
CriterionResult run_c7(unsigned) {
  CriterionResult r{7, "small-time-equivalent-trend", false, 0.0, -0.5, ""};
  const std::array<double, 5> ss = {0.4, 0.3, 0.2, 0.15, 0.1};
  std::ostringstream detail;
  std::vector<double> mus, devs;
  bool monotone = true;
  double prev_dev = 0.0;
  for (std::size_t i = 0; i < ss.size(); ++i) {
    const double s = ss[i];
    const ChaosPoint p{6.0, 6.0, 0.01 * s * s, 1.5 * s, 1.5 * s};
    const RegimeReport regime = regime_check(p, s, 0.5);
    const ScaleParams sp = scale_params(p, s);
    const DensityParts parts = q_exact_parts(p, s, 1e-10);
    const double integral = parts.integral.value.real();
    const double ratio = 20.0 * sp.mu * sp.mu * sp.mu * integral;
    const double dev = std::abs(ratio - 1.0);
    mus.push_back(sp.mu);
    devs.push_back(dev);
    if (i > 0 && !(dev < prev_dev)) monotone = false;
    prev_dev = dev;
    detail << fmt(
        "s=%-5g mu=%7.3f regime=%d I=%+.3e (err %.1e, zero-consistent %d) "
        "ratio=%+.3e |ratio-1|=%.6f\n",
        s, sp.mu, static_cast<int>(regime.satisfied), integral,
        parts.integral.total_error(),
        consistent_with_zero(parts.integral) ? 1 : 0, ratio, dev);
  }
  const double slope = fit_log_slope(mus, devs);
  r.measured = slope;
  r.passed = monotone && slope <= -0.5;
  r.detail =
      fmt("monotone decrease: %s; log-log slope vs mu: %+.4f (need <= -0.5)\n",
          monotone ? "yes" : "no", slope) +
      detail.str();
  return r;
}

// 8. Full bracket rank 6 at 1000 random phase points; closed-form brackets
//    match the finite-difference Lie bracket oracle.
CriterionResult run_c8(unsigned) {
  CriterionResult r{8, "hormander-rank", false, 0.0, 1e-6, ""};
  const std::uint64_t seed = 4242;
  int rank_bad = 0;
  for (int j = 0; j < 1000; ++j) {
    PhasePoint p;
    std::array<double*, 5> slot = {&p.lambda, &p.mu, &p.x, &p.y, &p.z};
    for (std::uint32_t d = 0; d < 5; ++d) {
      *slot[d] = -3.0 + 6.0 * uniform01(seed, static_cast<std::uint64_t>(j), d, 8);
    }
    if (hormander_rank(p) != 6) ++rank_bad;
  }
  auto v1f = [](const PhasePoint& q) { return vector_fields(q).v1; };
  auto v2f = [](const PhasePoint& q) { return vector_fields(q).v2; };
  auto v0f = [](const PhasePoint& q) { return vector_fields(q).v0prime; };
  auto b20f = [](const PhasePoint& q) { return bracket_basis(q)[4]; };
  double worst = 0.0;
  for (int j = 0; j < 20; ++j) {
    PhasePoint p;
    std::array<double*, 5> slot = {&p.lambda, &p.mu, &p.x, &p.y, &p.z};
    for (std::uint32_t d = 0; d < 5; ++d) {
      *slot[d] = -2.0 + 4.0 * uniform01(seed + 1, static_cast<std::uint64_t>(j), d, 8);
    }
    const auto basis = bracket_basis(p);
    worst = std::max(worst, (lie_bracket_fd(v1f, v0f, p, 1e-5) - basis[3])
                                .cwiseAbs().maxCoeff());
    worst = std::max(worst, (lie_bracket_fd(v2f, v0f, p, 1e-5) - basis[4])
                                .cwiseAbs().maxCoeff());
    worst = std::max(worst, (lie_bracket_fd(v2f, b20f, p, 1e-5) - basis[5])
                                .cwiseAbs().maxCoeff());
  }
  r.measured = worst;
  r.passed = rank_bad == 0 && worst <= 1e-6;
  r.detail = fmt("rank failures %d/1000; worst FD bracket deviation %.3e",
                 rank_bad, worst);
  return r;
}

// 9. Remainder scaling: fitted median exponents 1.5 +- 0.15 for
//    R = (lambda, mu) - (w, beta) and 2.5 +- 0.2 for the position remainder.
CriterionResult run_c9(unsigned) {
  CriterionResult r{9, "remainder-scaling", false, 0.0, 1.5, ""};
  const RemainderTable t =
      remainder_probe({0.2, 0.1, 0.05, 0.025}, 1.0, 10000, 1234);
  std::ostringstream detail;
  detail << fmt("exponent R %.4f (band 1.5+-0.15), R' %.4f (band 2.5+-0.2)\n",
                t.exponent_r, t.exponent_rprime);
  for (const auto& row : t.rows) {
    detail << fmt("s=%-6g medR=%.4e medR'=%.4e tailR=%.4f tailR'=%.4f\n",
                  row.s, row.median_r, row.median_rprime, row.tail_r,
                  row.tail_rprime);
  }
  r.measured = t.exponent_r;
  r.passed = std::abs(t.exponent_r - 1.5) <= 0.15 &&
             std::abs(t.exponent_rprime - 2.5) <= 0.2;
  r.detail = detail.str();
  return r;
}

// 10. Root sequences: tangent fixed points with residual <= 1e-12, interval
//     and gap monotonicity for n < 16; closed-form complex zeros of
//     sh^2 z + cos^2 z with residual <= 1e-12.
CriterionResult run_c10(unsigned) {
  CriterionResult r{10, "root-sequences", false, 0.0, 1e-12, ""};
  const auto ys = tan_fixed_points(16);
  long double worst = 0.0L;
  bool ok = ys.size() == 16;
  long double prev_gap = 0.0L;
  const long double pi = 3.14159265358979323846264338327950288L;
  for (std::size_t n = 0; n < ys.size(); ++n) {
    const long double y = ys[n];
    const long double res = std::abs(std::tan(y) - y);
    worst = std::max(worst, res);
    const long double lo = (static_cast<long double>(n) + 1.0L) * pi;
    const long double hi = lo + 0.5L * pi;
    ok = ok && res <= 1e-12L && y > lo && y < hi;
    const long double gap = hi - y;
    if (n > 0) ok = ok && gap < prev_gap;
    prev_gap = gap;
  }
  const auto zs = sh2cos2_zeros(5);
  for (const auto& z : zs) {
    const auto sh = std::sinh(z);
    const auto co = std::cos(z);
    const long double res = std::abs(sh * sh + co * co);
    worst = std::max(worst, res);
    ok = ok && res <= 1e-12L;
  }
  r.measured = static_cast<double>(worst);
  r.passed = ok;
  r.detail = fmt("16 fixed points + 5 complex zeros, worst residual %.3e",
                 static_cast<double>(worst));
  return r;
}

// 11. The law of 2 A_1 matches the first hitting time of +-1 by a Brownian
//     motion (two-sample KS with Brownian-bridge crossing correction).
CriterionResult run_c11(unsigned workers) {
  CriterionResult r{11, "hitting-time-distribution", false, 0.0, 0.01, ""};
  const std::size_t n = 100000;
  std::vector<double> chaos(n), hit(n);
  const PathConfig cfg{1.0, 4096, 31415, Scheme::exact_gaussian_plus_trapezoid};
  parallel_ranges(n, workers, [&](std::size_t lo, std::size_t hi, unsigned) {
    for (std::size_t j = lo; j < hi; ++j) {
      chaos[j] = 2.0 * simulate_tangent(cfg, j).x;
    }
  });
  const std::uint64_t seed_hit = 27182;
  const double h = 1.0 / 4096.0;
  const double rt_h = std::sqrt(h);
  const std::uint32_t kMaxSteps = 30 * 4096;
  parallel_ranges(n, workers, [&](std::size_t lo, std::size_t hi, unsigned) {
    for (std::size_t j = lo; j < hi; ++j) {
      double w = 0.0;
      double t = 30.0;
      for (std::uint32_t k = 0; k < kMaxSteps; ++k) {
        const auto [g1, g2] = gaussian_pair(seed_hit, j, k, 0);
        (void)g2;
        const double w_next = w + rt_h * g1;
        if (std::abs(w_next) >= 1.0) {
          const double frac =
              (1.0 - std::abs(w)) / (std::abs(w_next) - std::abs(w));
          t = (static_cast<double>(k) + std::clamp(frac, 0.0, 1.0)) * h;
          break;
        }
        // Brownian-bridge barrier-crossing probabilities within the step.
        const double pu = std::exp(-2.0 * (1.0 - w) * (1.0 - w_next) / h);
        const double pl = std::exp(-2.0 * (1.0 + w) * (1.0 + w_next) / h);
        const double pc = pu + pl - pu * pl;
        if (uniform01(seed_hit, j, k, 1) < pc) {
          t = (static_cast<double>(k) + 0.5) * h;
          break;
        }
        w = w_next;
      }
      hit[j] = t;
    }
  });
  const double d = ks_statistic(chaos, hit);
  const double p = ks_pvalue(d, n, n);
  r.measured = p;
  r.passed = p > 0.01;
  r.detail = fmt("KS D=%.5f p=%.4f (n=%zu per sample)", d, p, n);
  return r;
}

}  // namespace

const std::vector<Criterion>& acceptance_registry() {
  static const std::vector<Criterion> registry = {
      {1, "laplace-identity-family", run_c1},
      {2, "alpha-dual-method", run_c2},
      {3, "marginal-normalization", run_c3},
      {4, "inversion-consistency", run_c4},
      {5, "scaling-law", run_c5},
      {6, "monte-carlo-cells", run_c6},
      {7, "small-time-equivalent-trend", run_c7},
      {8, "hormander-rank", run_c8},
      {9, "remainder-scaling", run_c9},
      {10, "root-sequences", run_c10},
      {11, "hitting-time-distribution", run_c11},
  };
  return registry;
}

CriterionResult run_criterion(int id, unsigned workers) {
  for (const Criterion& c : acceptance_registry()) {
    if (c.id != id) continue;
    try {
      return c.run(workers);
    } catch (const std::exception& e) {
      CriterionResult r{id, c.name, false, 0.0, 0.0, ""};
      r.detail = std::string("exception: ") + e.what();
      return r;
    }
  }
  CriterionResult r{id, "unknown", false, 0.0, 0.0, "no such criterion"};
  return r;
}

std::string format_criterion_line(const CriterionResult& r) {
  return fmt("[%2d] %s %-28s measured=%.6g threshold=%.6g", r.id,
             r.passed ? "PASS" : "FAIL", r.name.c_str(), r.measured,
             r.threshold);
}

}  // namespace chaoskernel
