#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "chaoskernel/density.hpp"

namespace chaoskernel {

// Hyperbolic velocity coordinates (lambda, mu) and Minkowski position
// (x, y, z); the reconstructed four-velocity (ch l ch m, ch l sh m, sh l)
// satisfies the mass-shell identity ch^2 l ch^2 m - ch^2 l sh^2 m - sh^2 l = 1
// identically in the coordinates.
struct PhasePoint {
  double lambda = 0.0;
  double mu = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

enum class Scheme { euler, exact_gaussian_plus_trapezoid };

struct PathConfig {
  double s_final = 1.0;
  std::size_t steps = 4096;  // default 2^12 per unit proper time
  std::uint64_t seed = 0;
  Scheme scheme = Scheme::exact_gaussian_plus_trapezoid;
};

// Components over (s, lambda, mu, x, y, z); the s slot carries the
// deterministic-time part of V0'.
using FieldVector = Eigen::Matrix<double, 6, 1>;

struct DrivingFields {
  FieldVector v1;       // d/dlambda
  FieldVector v2;       // (1/ch lambda) d/dmu
  FieldVector v0prime;  // d/ds + (1/2) th l d/dlambda + ch l ch m d/dx
                        //      + ch l sh m d/dy + sh l d/dz
};

DrivingFields vector_fields(const PhasePoint& p);

// (V0', V1, V2, [V1,V0'], [V2,V0'], [V2,[V2,V0']]) from the closed forms
//   [V1,V0'] = (1/(2 ch^2 l)) dl + sh l ch m dx + sh l sh m dy + ch l dz,
//   [V2,V0'] = (sh^2 l/(2 ch^3 l)) dm + sh m dx + ch m dy,
//   [V2,[V2,V0']] = (ch m/ch l) dx + (sh m/ch l) dy.
std::array<FieldVector, 6> bracket_basis(const PhasePoint& p);

// Central-difference Lie bracket [f, g] = Dg.f - Df.g along field directions;
// oracle for cross-checking the closed forms (agreement ~ h^2).
FieldVector lie_bracket_fd(
    const std::function<FieldVector(const PhasePoint&)>& f,
    const std::function<FieldVector(const PhasePoint&)>& g,
    const PhasePoint& p, double h);

// Numerical rank of the 6x6 bracket matrix: singular values above
// 1e-10 x largest.  Full rank 6 everywhere is the weak Hormander condition.
int hormander_rank(const PhasePoint& p);

// One Euler-Maruyama step of the relativistic diffusion (Ito form):
//   dl = dw + (1/2) th l ds,  dm = db / ch l,
//   dx = ch l ch m ds,  dy = ch l sh m ds,  dz = sh l ds.
void dudley_step(PhasePoint& p, double h, double dw, double dbeta);

// Full path from the origin, steps+1 states including the initial one.
// Gaussian increments are exact N(0, h); |lambda| > 300 aborts the path
// (OverflowGuardError) rather than overflowing ch lambda.
std::vector<PhasePoint> simulate_dudley(const PathConfig& cfg,
                                        std::uint64_t path_index = 0);

// One sample of (w_s, beta_s, A_s, zeta_s, zbar_s).  The default scheme draws
// (w, beta) exactly on the grid and integrates the piecewise-linear
// interpolant (trapezoid), removing all bias from the Gaussian coordinates;
// the euler scheme uses left-endpoint sums throughout.
ChaosPoint simulate_tangent(const PathConfig& cfg,
                            std::uint64_t path_index = 0);

// Empirical tails and scaling exponents of the coordinate remainders
//   R_t  = (lambda_t - w_t, mu_t - beta_t)            (expected ~ s^{3/2})
//   R'_t = (x_t - t - A_t, y_t - zeta_t, z_t - zbar_t) (expected ~ s^{5/2})
// along Dudley paths driven by the same increments.
struct RemainderRow {
  double s = 0.0;
  double tail_r = 0.0;        // P[sup ||R|| >= R s^{3/2}]
  double tail_rprime = 0.0;   // P[sup ||R'|| >= R s^{5/2}]
  double median_r = 0.0;
  double median_rprime = 0.0;
};

struct RemainderTable {
  std::vector<RemainderRow> rows;
  double exponent_r = 0.0;       // log-log slope of median_r vs s
  double exponent_rprime = 0.0;  // log-log slope of median_rprime vs s
};

RemainderTable remainder_probe(const std::vector<double>& s_values, double R,
                               std::size_t paths, std::uint64_t seed);

// Counter-based Philox4x32-10 generator: one block per (seed; path, step,
// stream) tuple, so every path owns a reproducible stream and parallel
// fan-out needs no generator state.
std::array<std::uint32_t, 4> philox_block(std::uint64_t key,
                                          const std::array<std::uint32_t, 4>& counter);

// Two independent N(0,1) variates from one Philox block via Box-Muller.
std::pair<double, double> gaussian_pair(std::uint64_t seed, std::uint64_t path,
                                        std::uint32_t step,
                                        std::uint32_t stream);

// Order statistics and fits for the probe tables and acceptance checks.
double median_of(std::vector<double> values);
double fit_log_slope(const std::vector<double>& xs,
                     const std::vector<double>& ys);

// Two-sample Kolmogorov-Smirnov: max CDF distance and the asymptotic p-value
// with the (sqrt(ne) + 0.12 + 0.11/sqrt(ne)) finite-sample correction.
double ks_statistic(std::vector<double> a, std::vector<double> b);
double ks_pvalue(double d, std::size_t n, std::size_t m);

}  // namespace chaoskernel
