#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "chaoskernel/numerics.hpp"

namespace chaoskernel {

// The six real auxiliary functions at a given xi >= 0:
//   U(2 xi^2) = U_r/(2 xi^4) + i U_i/(2 xi^2)   split into u_r, u_i,
//   V(2 xi^2) = V_r + i V_i                     split into v_r, v_i,
//   F(2 xi^2) = F_r + i F_i.
// u_r >= 12 and v_r >= 1 for all real xi; f_r and f_i diverge as xi -> 0
// (f_r ~ 6/xi^4, f_i ~ (4/5)/xi^2) and are +infinity at xi = 0 exactly.
struct AuxValues {
  double f_r, f_i, u_r, u_i, v_r, v_i;
};

// Regularized companions, finite at xi = 0:
//   f_r_reg = F_r xi^4, f_i_reg = F_i xi^2,
//   tilde_u_r = (U_r - 12)/xi^4, tilde_u_i = (U_i - 6/5)/xi^4,
//   tilde_v_r = (V_r - 1)/xi^4,  tilde_v_i = (V_i - 1/12)/xi^4.
// Values at 0 from the generated series: f_r_reg = 6, f_i_reg = 4/5,
// tilde_u_r = 1/175, tilde_u_i = -1/15750, tilde_v_r = 1/180,
// tilde_v_i = -1/7560.
struct RegularizedAux {
  double f_r_reg, f_i_reg, tilde_u_r, tilde_u_i, tilde_v_r, tilde_v_i;
};

// Evaluate the six auxiliary functions.  Series branch below xi = 1/2;
// rescaled closed forms (every hyperbolic factor carried as e^{-xi} times a
// bounded quantity) above, stable for arbitrarily large xi.
AuxValues aux_eval(double xi);

RegularizedAux aux_eval_regularized(double xi);

// First n fixed points of tg y = y with y_k in ((k+1) pi, (k+3/2) pi),
// increasing.  Computed and returned in long double: the residual
// |tg y - y| is amplified by 1 + y^2, so double storage alone would exceed
// 1e-12 already near k = 10.
std::vector<long double> tan_fixed_points(std::size_t n);

// First-quadrant zeros of sh^2 z + cos^2 z: z_k = (1+i)(pi/4)(1+2k).
// Long double for the same conditioning reason (residual grows like
// e^{sqrt(2)|z|} times the rounding of z).
std::vector<std::complex<long double>> sh2cos2_zeros(std::size_t n);

namespace detail {
// Individual branches, exposed for cross-branch consistency tests.
AuxValues aux_series(double xi);
AuxValues aux_closed(double xi);
RegularizedAux aux_regularized_series(double xi);
}  // namespace detail

}  // namespace chaoskernel
