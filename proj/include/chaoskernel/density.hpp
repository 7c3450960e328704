#pragma once

#include "chaoskernel/numerics.hpp"

namespace chaoskernel {

// Evaluation point of the 5D tangent density: endpoint velocities (w, beta),
// second-chaos coordinate x > 0, integrated coordinates (zeta, z).
struct ChaosPoint {
  double w = 0.0;
  double beta = 0.0;
  double x = 0.0;
  double zeta = 0.0;
  double z = 0.0;
};

// Scale functionals of a point at time s:
//   B_s^2  = ((s w - 2z)^2 + (s beta - 2 zeta)^2) / 8
//   B'_s   = (4 w z + 4 beta zeta - s (w^2 + beta^2)) / 8
//   mu_s   = 6 B_s^2/(5 s^3) + (B'_s - x)/s^2 + (w^2 + beta^2)/(24 s)
//   nu_s   = B_s^2/(175 s^3) + (w^2 + beta^2)/(360 s)
// with the identities s B'_s = (z^2 + zeta^2)/2 - B_s^2 and
//   mu_s = 3[(z - s w/12)^2 + (zeta - s beta/12)^2]/(5 s^3)
//          + (w^2 + beta^2)/(16 s) - x/s^2.
struct ScaleParams {
  double b_sq = 0.0;
  double b_prime = 0.0;
  double mu = 0.0;
  double nu = 0.0;
};

enum class RegimeCondition { none, condition22, condition23 };

// Which admissibility condition of the small-time regime holds; mu_s -> inf
// is proxied by mu >= the caller's threshold.
struct RegimeReport {
  RegimeCondition satisfied = RegimeCondition::none;
  double mu = 0.0;
  double epsilon = 0.0;
};

// Underflow-safe split of q_s: q = exp(log_prefactor) * integral.value with
//   log_prefactor = -3 log(pi) - 6 log(s) - 12 B_s^2/s^3 - (w^2+beta^2)/(2s).
struct DensityParts {
  QuadResult integral;
  double log_prefactor = 0.0;
};

// q_asymptotic result; log_value stays finite when value underflows.
struct AsymptoticResult {
  double value = 0.0;
  double log_value = 0.0;
  RegimeReport report;
};

ScaleParams scale_params(const ChaosPoint& p, double s);

// Gaussian marginal of (w_s, beta_s, zeta_s, z_s):
//   (3/(pi^2 s^4)) exp[-3((sw-2z)^2 + (s beta - 2 zeta)^2)/(2 s^3)
//                      - (w^2+beta^2)/(2s)]
// = langevin_density(s, w, z) * langevin_density(s, beta, zeta).
double marginal_gauss(double w, double beta, double zeta, double z, double s);

// Integrand of the Fourier inversion at inversion-line offset 0:
//   G_s(xi) exp[-(B^2/s^3)(U_r - 12) - ((w^2+beta^2)/2s)(V_r - 1)] xi^5,
//   G_s = 2 F_r cos(Lambda_s) - 2 F_i sin(Lambda_s),
//   Lambda_s(xi) = 2 xi^2 [ (B^2/s^3) U_i + (B'-x)/s^2 + ((w^2+beta^2)/2s) V_i ],
// finite at xi = 0 through the regularized F_r, F_i.
double integrand_eval(const ChaosPoint& p, double s, double xi);

// Semi-infinite quadrature of integrand_eval with its closed-form decay
// envelope, plus the log prefactor; tol is relative to the integral's
// a-priori scale (max sampled magnitude on [0, 2pi] plus the tail bound).
DensityParts q_exact_parts(const ChaosPoint& p, double s, double tol);

// Exact density q_s as a QuadResult (value, quadrature error, tail bound, all
// scaled by the prefactor).  Tiny negative values within the reported error
// are possible and flagged by consistent_with_zero, never clamped.
QuadResult q_exact(const ChaosPoint& p, double s, double tol);

// Small-time admissibility: condition22 means mu >= mu_threshold and
// x/s^2 <= (z^2+zeta^2)/s^3 + mu/eps; condition23 means mu >= mu_threshold
// and 2 s x <= z^2 + zeta^2 + eps s^2 (w^2 + beta^2).
RegimeReport regime_check(const ChaosPoint& p, double s, double eps,
                          double mu_threshold = 10.0);

// Small-time closed form (1/(20 pi^3 s^6 mu_s^3)) exp[-12 B^2/s^3 - W/(2s)],
// computed in log space; NaN value with report.satisfied == none when the
// regime does not hold or mu_s <= 0.
AsymptoticResult q_asymptotic(const ChaosPoint& p, double s, double eps);

}  // namespace chaoskernel
