#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <vector>

#include "chaoskernel/errors.hpp"
#include "chaoskernel/model.hpp"
#include "chaoskernel/transforms.hpp"

using namespace chaoskernel;

TEST_CASE("philox 4x32-10 known-answer vectors") {
  // Reference vectors from the Random123 distribution.
  auto r = philox_block(0, {0, 0, 0, 0});
  CHECK(r[0] == 0x6627e8d5u);
  CHECK(r[1] == 0xe169c58du);
  CHECK(r[2] == 0xbc57ac4cu);
  CHECK(r[3] == 0x9b00dbd8u);

  const std::uint64_t keyff = 0xffffffffffffffffull;
  auto r2 = philox_block(keyff,
                         {0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu});
  CHECK(r2[0] == 0x408f276du);
  CHECK(r2[1] == 0x41c83b0eu);
  CHECK(r2[2] == 0xa20bc7c6u);
  CHECK(r2[3] == 0x6d5451fdu);

  const std::uint64_t keypi = (0x299f31d0ull << 32) | 0xa4093822ull;
  auto r3 = philox_block(keypi,
                         {0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u});
  CHECK(r3[0] == 0xd16cfe09u);
  CHECK(r3[1] == 0x94fdccebu);
  CHECK(r3[2] == 0x5001e420u);
  CHECK(r3[3] == 0x24126ea1u);
}

TEST_CASE("gaussian_pair is deterministic with sane moments") {
  auto [a1, a2] = gaussian_pair(123, 45, 67, 8);
  auto [b1, b2] = gaussian_pair(123, 45, 67, 8);
  CHECK(a1 == b1);
  CHECK(a2 == b2);
  auto [c1, c2] = gaussian_pair(123, 45, 67, 9);
  CHECK(a1 != c1);

  const int n = 20000;
  double s = 0, s2 = 0, s4 = 0;
  for (int j = 0; j < n; ++j) {
    auto [g1, g2] = gaussian_pair(2024, j, 0, 3);
    s += g1 + g2;
    s2 += g1 * g1 + g2 * g2;
    s4 += g1 * g1 * g1 * g1 + g2 * g2 * g2 * g2;
  }
  CHECK(std::abs(s / (2 * n)) < 0.02);        // mean 0, SE ~ 0.005
  CHECK(std::abs(s2 / (2 * n) - 1.0) < 0.03); // variance 1
  CHECK(std::abs(s4 / (2 * n) - 3.0) < 0.2);  // Gaussian kurtosis
}

TEST_CASE("vector fields at reference points") {
  DrivingFields f = vector_fields({0, 0, 0, 0, 0});
  CHECK(f.v1[1] == 1.0);
  CHECK(f.v2[2] == 1.0);
  CHECK(f.v0prime[0] == 1.0);
  CHECK(f.v0prime[3] == 1.0);
  CHECK(f.v0prime[1] == 0.0);
  DrivingFields g = vector_fields({1, 0, 0, 0, 0});
  CHECK(g.v0prime[5] == doctest::Approx(std::sinh(1.0)).epsilon(1e-15));
}

TEST_CASE("bracket basis closed forms at the origin") {
  auto basis = bracket_basis({0, 0, 0, 0, 0});
  CHECK(basis[3][5] == 1.0);  // [V1, V0'] has unit dz part
  CHECK(basis[3][1] == 0.5);  // and 1/(2 ch^2) dlambda part
  CHECK(basis[5][3] == 1.0);  // [V2, [V2, V0']] has unit dx part
  CHECK(basis[5][4] == 0.0);
}

TEST_CASE("closed-form brackets match finite-difference brackets") {
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    auto [g1, g2] = gaussian_pair(7, t, 0, 9);
    auto [g3, g4] = gaussian_pair(7, t, 1, 9);
    const PhasePoint p{g1, g2, g3, g4, 0.3};
    auto basis = bracket_basis(p);
    auto v1f = [](const PhasePoint& q) { return vector_fields(q).v1; };
    auto v2f = [](const PhasePoint& q) { return vector_fields(q).v2; };
    auto v0f = [](const PhasePoint& q) { return vector_fields(q).v0prime; };
    auto b20f = [](const PhasePoint& q) { return bracket_basis(q)[4]; };
    const FieldVector e1 = lie_bracket_fd(v1f, v0f, p, 1e-5) - basis[3];
    const FieldVector e2 = lie_bracket_fd(v2f, v0f, p, 1e-5) - basis[4];
    const FieldVector e3 = lie_bracket_fd(v2f, b20f, p, 1e-5) - basis[5];
    worst = std::max({worst, e1.cwiseAbs().maxCoeff(), e2.cwiseAbs().maxCoeff(),
                      e3.cwiseAbs().maxCoeff()});
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("bracket family spans all six directions everywhere") {
  CHECK(hormander_rank({0, 0, 0, 0, 0}) == 6);
  for (int t = 0; t < 100; ++t) {
    auto [g1, g2] = gaussian_pair(11, t, 0, 9);
    auto [g3, g4] = gaussian_pair(11, t, 1, 9);
    CAPTURE(t);
    CHECK(hormander_rank({3 * std::sin(g1 * 10), 3 * std::sin(g2 * 10), g3, g4,
                          g1}) == 6);
  }
}

TEST_CASE("zero-noise path is the unit-speed geodesic") {
  PhasePoint p;
  const int n = 1000;
  for (int k = 0; k < n; ++k) dudley_step(p, 1.0 / n, 0.0, 0.0);
  CHECK(p.lambda == 0.0);
  CHECK(p.mu == 0.0);
  CHECK(p.x == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p.z == 0.0);
}

TEST_CASE("simulated paths stay on the mass shell and reproduce bitwise") {
  auto path = simulate_dudley({0.5, 2048, 42, Scheme::euler}, 3);
  double worst = 0.0;
  for (const auto& p : path) {
    const double chl = std::cosh(p.lambda), shl = std::sinh(p.lambda);
    const double chm = std::cosh(p.mu), shm = std::sinh(p.mu);
    const double v0 = chl * chm, v1 = chl * shm;
    worst = std::max(worst, std::abs(v0 * v0 - v1 * v1 - shl * shl - 1.0));
  }
  CHECK(worst <= 1e-12);

  auto path2 = simulate_dudley({0.5, 2048, 42, Scheme::euler}, 3);
  REQUIRE(path.size() == path2.size());
  bool same = true;
  for (std::size_t i = 0; i < path.size(); ++i)
    same = same && path[i].x == path2[i].x && path[i].lambda == path2[i].lambda;
  CHECK(same);
}

TEST_CASE("runaway paths trip the overflow guard") {
  // Over a horizon of 700 the lambda drift ~ s/2 crosses the |lambda| = 300
  // guard long before the path ends.
  CHECK_THROWS_AS(simulate_dudley({700.0, 2048, 1, Scheme::euler}, 0),
                  OverflowGuardError);
}

TEST_CASE("E[x_s] matches s + s^2/2 at s = 0.1") {
  const std::size_t paths = 200000;
  const PathConfig cfg{0.1, 512, 2024, Scheme::euler};
  double sum = 0.0, sumsq = 0.0;
  for (std::size_t j = 0; j < paths; ++j) {
    const double x = simulate_dudley(cfg, j).back().x;
    sum += x;
    sumsq += x * x;
  }
  const double mean = sum / paths;
  const double var = sumsq / paths - mean * mean;
  const double se = std::sqrt(var / paths);
  // The euler scheme carries a genuine O(s^3) weak bias, hence the 2e-3 slack.
  CHECK(std::abs(mean - 0.105) <= 3 * se + 2e-3);
}

TEST_CASE("tangent sampler hits the exact A_1 moments") {
  const std::size_t paths = 100000;
  const PathConfig cfg{1.0, 1024, 99, Scheme::exact_gaussian_plus_trapezoid};
  double sa = 0, sa2 = 0, sf = 0, sf2 = 0;
  for (std::size_t j = 0; j < paths; ++j) {
    const ChaosPoint c = simulate_tangent(cfg, j);
    sa += c.x;
    sa2 += c.x * c.x;
    const double f = std::exp(-c.x);
    sf += f;
    sf2 += f * f;
  }
  const double ma = sa / paths, va = sa2 / paths - ma * ma;
  const double mf = sf / paths, vf = sf2 / paths - mf * mf;
  CHECK(std::abs(ma - 0.5) <= 3 * std::sqrt(va / paths));
  CHECK(std::abs(mf - 1.0 / std::cosh(1.0)) <= 3 * std::sqrt(vf / paths));
}

TEST_CASE("tangent characteristic function matches the transform") {
  const std::size_t paths = 100000;
  const PathConfig cfg{1.0, 512, 7, Scheme::exact_gaussian_plus_trapezoid};
  const double r = 0.7, c = -0.4;
  double s1 = 0, s2 = 0;
  for (std::size_t j = 0; j < paths; ++j) {
    const ChaosPoint cp = simulate_tangent(cfg, j);
    const double v = std::cos(r * cp.w + c * cp.z);
    s1 += v;
    s2 += v * v;
  }
  const double m = s1 / paths, var = s2 / paths - m * m;
  const double want = flt_Z({1.0, r, c, 0.0}).real();
  CHECK(std::abs(m - want) <= 3 * std::sqrt(var / paths));
}

TEST_CASE("median_of and fit_log_slope utilities") {
  std::vector<double> odd{5.0, 1.0, 3.0};
  CHECK(median_of(odd) == 3.0);
  std::vector<double> even{4.0, 1.0, 3.0, 2.0};
  CHECK(median_of(even) == doctest::Approx(2.5).epsilon(1e-15));
  // Exact power law y = 7 x^2.5 recovers its exponent.
  std::vector<double> xs{0.1, 0.2, 0.4, 0.8};
  std::vector<double> ys;
  for (double x : xs) ys.push_back(7.0 * std::pow(x, 2.5));
  CHECK(fit_log_slope(xs, ys) == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("KS two-sample test separates null from shifted") {
  std::vector<double> a, b, c;
  for (int j = 0; j < 4000; ++j) {
    auto [g1, g2] = gaussian_pair(5, j, 0, 9);
    auto [g3, g4] = gaussian_pair(6, j, 0, 9);
    a.push_back(g1);
    b.push_back(g3);
    c.push_back(g4 + 0.2);
  }
  const double d1 = ks_statistic(a, b);
  const double p1 = ks_pvalue(d1, a.size(), b.size());
  const double d2 = ks_statistic(a, c);
  const double p2 = ks_pvalue(d2, a.size(), c.size());
  CHECK(p1 >= 0.01);
  CHECK(p2 <= 1e-6);
  // Degenerate statistics clamp to the unit interval.
  CHECK(ks_pvalue(0.0, 100, 100) == 1.0);
  CHECK(ks_pvalue(1.0, 100, 100) <= 1e-12);
}

TEST_CASE("remainder probe recovers the s^1.5 and s^2.5 scalings") {
  const RemainderTable t = remainder_probe({0.2, 0.1, 0.05, 0.025}, 1.0, 4000, 31);
  REQUIRE(t.rows.size() == 4);
  CHECK(std::abs(t.exponent_r - 1.5) <= 0.15);
  CHECK(std::abs(t.exponent_rprime - 2.5) <= 0.2);
}
