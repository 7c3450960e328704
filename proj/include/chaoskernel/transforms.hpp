#pragma once

#include <Eigen/Dense>

#include "chaoskernel/numerics.hpp"

namespace chaoskernel {

// Fourier-Laplace query for the scalar pair Z_s = (w_s, int_0^s w), with
// Laplace rate b dual to the quadratic functional int_0^s w^2.
struct FLQueryZ {
  double s = 0.0;  // proper time, >= 0
  double r = 0.0;  // frequency dual to w_s
  double c = 0.0;  // frequency dual to int_0^s w
  double b = 0.0;  // Laplace rate, >= 0
};

// Query for the full tangent variable Y_s = (w_s, beta_s, A_s, zeta_s, z_s):
// frequencies (r, rho) dual to the endpoint velocities, (gamma, c) dual to
// the integrated coordinates, b dual to A_s = (1/2) int (w^2 + beta^2).
struct FLQueryY {
  double s = 0.0;
  double r = 0.0;
  double rho = 0.0;
  double gamma = 0.0;
  double c = 0.0;
  double b = 0.0;  // >= 0
};

// Argument of the marginal transform Psi: endpoint velocities (w, beta) and
// integrated coordinates (zeta, z) at unit time.
struct MarginalPoint {
  double w = 0.0;
  double beta = 0.0;
  double zeta = 0.0;
  double z = 0.0;
};

// Joint density of (w_s, int_0^s w) for a standard Brownian w started at 0:
//   (sqrt(3)/(pi s^2)) exp[-(6/s^3)(z - s w/2)^2 - w^2/(2 s)].
double langevin_density(double s, double w, double z);

// E[exp(i r w_s + i c int_0^s w - b^2/2 int_0^s w^2)] evaluated at real
// frequencies, where the closed form reads
//   (ch bs)^{-1/2} exp[-(th(bs)/2b) r^2 - 2(sh^2(bs/2)/(b^2 ch bs)) r c
//                      - ((bs - th bs)/2b^3) c^2],
// with the b -> 0 limit exp[-(r^2 + s r c + s^2 c^2/3) s/2].
ComplexValue flt_Z(const FLQueryZ& q);

// x-Laplace transform in the third coordinate of the unit-time density of
// (w_1, x_1 = (1/2) int w^2, z_1 = int w), i.e. the joint density of
// (w_1, z_1) weighted by exp(-b^2 x_1):
//   (b^2/(2 pi sqrt((b - 2 th(b/2)) sh b)))
//     * exp[(b^2/8)(w - 2z)^2 / (1 - (b/2) coth(b/2))
//           - (b^2/2) z^2 - (b/4) coth(b/2) w^2].
// b = 0 returns langevin_density(1, w, z).
double laplace_Z1(double w, double z, double b);

// Transform of the 5D tangent variable: product of two independent copies,
// flt_Z(s, r, c, b) * flt_Z(s, rho, gamma, b).
ComplexValue flt_Y(const FLQueryY& q);

// Marginal x-Laplace transform Psi_{w,beta,zeta,z}(b)
//   = laplace_Z1(w, z, b) * laplace_Z1(beta, zeta, b);
// at b = 0 equals (3/pi^2) exp[-(w^2+beta^2)/2 - 6(z - w/2)^2 - 6(zeta - beta/2)^2].
double psi(const MarginalPoint& p, double b);

// Meromorphic continuation Phi(lambda) := Psi(sqrt(-lambda)), analytic for
// Re(lambda) < 4 pi^2.  With u = sqrt(lambda)/2 (principal branch):
//   Phi = u^4 / (pi^2 sin u (sin u - u cos u))
//         * exp[ (u^2/2) S1 / (u cot u - 1) + 2 u^2 (z^2 + zeta^2)
//               - (w^2 + beta^2) (u/2) cot u ],
// where S1 = (w - 2z)^2 + (beta - 2 zeta)^2.  Near lambda = 0 the vanishing
// denominators are replaced by their Taylor series; real lambda <= 0 routes
// through psi(p, sqrt(-lambda)).
ComplexValue phi(const MarginalPoint& p, ComplexValue lambda);

// Covariance matrix K_{bs} of the rescaled Gaussian pair
// (sqrt(2b) w_s, sqrt(2b^3) int_0^s tau dw_tau) under the b-tilted measure:
//   K11 = 1 - e^{-2bs},
//   K12 = bs - 1 + 2 e^{-bs} - (bs + 1) e^{-2bs},
//   K22 = (bs)^2 - 3 + 4(bs + 1) e^{-bs} - (bs + 1)^2 e^{-2bs},
// with det K = delta_{bs} = 2(bs - 2) + 8 e^{-bs} - 2(bs + 2) e^{-2bs} > 0.
Eigen::Matrix2d ou_covariance_oracle(double b, double s);

}  // namespace chaoskernel
