#include "chaoskernel/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "chaoskernel/special.hpp"

namespace chaoskernel {

namespace {

void require_finite_point(const ChaosPoint& p) {
  if (!(std::isfinite(p.w) && std::isfinite(p.beta) && std::isfinite(p.x) &&
        std::isfinite(p.zeta) && std::isfinite(p.z))) {
    throw std::domain_error("chaos point coordinates must be finite");
  }
}

void require_time(double s) {
  if (!(std::isfinite(s) && s > 0.0)) {
    throw std::domain_error("time s must be positive and finite");
  }
}

// Scale-reduced coefficients of the oscillatory integral:
//   Lambda(xi) = 2 xi^2 [cb U_i + cl + cv V_i],
//   damping exponent = -cb (U_r - 12) - cv (V_r - 1),
// with cb = B^2/s^3, cl = (B' - x)/s^2, cv = (w^2+beta^2)/(2s).
struct IntegralCoeffs {
  double cb = 0.0;
  double cl = 0.0;
  double cv = 0.0;
};

IntegralCoeffs reduce(const ChaosPoint& p, double s) {
  const ScaleParams sp = scale_params(p, s);
  const double wsq = p.w * p.w + p.beta * p.beta;
  return {sp.b_sq / (s * s * s), (sp.b_prime - p.x) / (s * s),
          wsq / (2.0 * s)};
}

// Everything is phrased through the regularized auxiliaries so that the
// xi -> 0 limit needs no special case:
//   F_r xi^5 = f_r_reg xi,  F_i xi^5 = f_i_reg xi^3,
//   U_r - 12 = tilde_u_r xi^4,  V_r - 1 = tilde_v_r xi^4.
double integrand_core(const IntegralCoeffs& c, double xi) {
  const RegularizedAux r = aux_eval_regularized(xi);
  const double xi2 = xi * xi;
  const double xi4 = xi2 * xi2;
  const double u_i = 6.0 / 5.0 + xi4 * r.tilde_u_i;
  const double v_i = 1.0 / 12.0 + xi4 * r.tilde_v_i;
  const double lambda = 2.0 * xi2 * (c.cb * u_i + c.cl + c.cv * v_i);
  const double damping = -xi4 * (c.cb * r.tilde_u_r + c.cv * r.tilde_v_r);
  const double osc = 2.0 * r.f_r_reg * xi * std::cos(lambda) -
                     2.0 * r.f_i_reg * xi2 * xi * std::sin(lambda);
  return osc * std::exp(damping);
}

}  // namespace

ScaleParams scale_params(const ChaosPoint& p, double s) {
  require_time(s);
  require_finite_point(p);
  const double wsq = p.w * p.w + p.beta * p.beta;
  const double dw = s * p.w - 2.0 * p.z;
  const double db = s * p.beta - 2.0 * p.zeta;
  ScaleParams sp;
  sp.b_sq = (dw * dw + db * db) / 8.0;
  sp.b_prime = (4.0 * p.w * p.z + 4.0 * p.beta * p.zeta - s * wsq) / 8.0;
  sp.mu = 6.0 * sp.b_sq / (5.0 * s * s * s) + (sp.b_prime - p.x) / (s * s) +
          wsq / (24.0 * s);
  sp.nu = sp.b_sq / (175.0 * s * s * s) + wsq / (360.0 * s);
  return sp;
}

double marginal_gauss(double w, double beta, double zeta, double z, double s) {
  require_time(s);
  if (!(std::isfinite(w) && std::isfinite(beta) && std::isfinite(zeta) &&
        std::isfinite(z))) {
    throw std::domain_error("marginal_gauss arguments must be finite");
  }
  const double dw = s * w - 2.0 * z;
  const double db = s * beta - 2.0 * zeta;
  const double expo = -1.5 * (dw * dw + db * db) / (s * s * s) -
                      (w * w + beta * beta) / (2.0 * s);
  const double log_pref = std::log(3.0) - 2.0 * std::log(M_PI) - 4.0 * std::log(s);
  return std::exp(log_pref + expo);
}

double integrand_eval(const ChaosPoint& p, double s, double xi) {
  require_time(s);
  require_finite_point(p);
  if (!(std::isfinite(xi) && xi >= 0.0)) {
    throw std::domain_error("xi must be nonnegative and finite");
  }
  return integrand_core(reduce(p, s), xi);
}

DensityParts q_exact_parts(const ChaosPoint& p, double s, double tol) {
  require_time(s);
  require_finite_point(p);
  if (!(p.x > 0.0)) {
    throw std::domain_error("second-chaos coordinate x must be positive");
  }
  if (!(std::isfinite(tol) && tol > 0.0)) {
    throw std::domain_error("tolerance must be positive and finite");
  }
  const IntegralCoeffs c = reduce(p, s);

  // Large-xi majorant, valid from 2pi on:  |F_r| + |F_i| <= 4 e^{-xi}/xi,
  // U_r - 12 >= 2 xi - 8, V_r - 1 >= xi/2 - 21/20, xi^4 <= 75 e^{xi/2}, so
  // |integrand| <= 600 e^{8 cb + 1.05 cv} e^{-(1/2 + 2 cb + cv/2) xi}.
  const double rate = 0.5 + 2.0 * c.cb + 0.5 * c.cv;
  const double log_pref_env = std::log(600.0) + 8.0 * c.cb + 1.05 * c.cv;
  const double head = 2.0 * M_PI;
  const DecayEnvelope env = DecayEnvelope::exp_t_log(rate, log_pref_env, head);

  // Lambda ~ 2 mu xi^2 near the origin; the absolute-value version bounds the
  // phase curvature over the whole line (U_i <= 6/5, 0 <= V_i <= 1/12).
  const double a_phase =
      2.0 * (1.2 * c.cb + std::abs(c.cl) + c.cv / 12.0);
  const OscillationHint hint{a_phase, 1e4};

  auto f = [&c](double xi) {
    return ComplexValue(integrand_core(c, xi), 0.0);
  };

  // Scale for the absolute tolerance: peak magnitude over the head interval
  // (sampled densely against the oscillation) plus the analytic tail.
  const std::size_t n_samples = std::max<std::size_t>(
      256, std::min<std::size_t>(20000,
                                 static_cast<std::size_t>(101.0 * a_phase) + 1));
  double peak = 0.0;
  for (std::size_t i = 0; i <= n_samples; ++i) {
    const double xi = head * static_cast<double>(i) / static_cast<double>(n_samples);
    peak = std::max(peak, std::abs(integrand_core(c, xi)));
  }
  const double scale = peak * head + env.tail(head);

  DensityParts parts;
  parts.log_prefactor = -3.0 * std::log(M_PI) - 6.0 * std::log(s) -
                        12.0 * c.cb - c.cv;
  if (!(scale > 0.0)) {
    // Integrand certifiably zero at double precision on the whole line.
    parts.integral = QuadResult{};
    return parts;
  }
  parts.integral = integrate_semiline(f, env, tol * scale, hint);
  return parts;
}

QuadResult q_exact(const ChaosPoint& p, double s, double tol) {
  const DensityParts parts = q_exact_parts(p, s, tol);
  const double pref = std::exp(parts.log_prefactor);
  QuadResult out = parts.integral;
  out.value *= pref;
  out.quad_error *= pref;
  out.tail_bound *= pref;
  return out;
}

RegimeReport regime_check(const ChaosPoint& p, double s, double eps,
                          double mu_threshold) {
  require_time(s);
  require_finite_point(p);
  if (!(std::isfinite(eps) && eps > 0.0)) {
    throw std::domain_error("epsilon must be positive and finite");
  }
  if (!(std::isfinite(mu_threshold) && mu_threshold > 0.0)) {
    throw std::domain_error("mu_threshold must be positive and finite");
  }
  const ScaleParams sp = scale_params(p, s);
  const double zsq = p.z * p.z + p.zeta * p.zeta;
  const double wsq = p.w * p.w + p.beta * p.beta;
  RegimeReport report;
  report.mu = sp.mu;
  report.epsilon = eps;
  const bool diverging = sp.mu >= mu_threshold;
  if (diverging && p.x / (s * s) <= zsq / (s * s * s) + sp.mu / eps) {
    report.satisfied = RegimeCondition::condition22;
  } else if (diverging && 2.0 * s * p.x <= zsq + eps * s * s * wsq) {
    report.satisfied = RegimeCondition::condition23;
  }
  return report;
}

AsymptoticResult q_asymptotic(const ChaosPoint& p, double s, double eps) {
  AsymptoticResult out;
  out.report = regime_check(p, s, eps);
  const ScaleParams sp = scale_params(p, s);
  if (!(sp.mu > 0.0)) {
    out.value = std::numeric_limits<double>::quiet_NaN();
    out.log_value = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  const double dw = s * p.w - 2.0 * p.z;
  const double db = s * p.beta - 2.0 * p.zeta;
  const double expo = -1.5 * (dw * dw + db * db) / (s * s * s) -
                      (p.w * p.w + p.beta * p.beta) / (2.0 * s);
  out.log_value = -std::log(20.0) - 3.0 * std::log(M_PI) - 6.0 * std::log(s) -
                  3.0 * std::log(sp.mu) + expo;
  out.value = std::exp(out.log_value);
  return out;
}

}  // namespace chaoskernel
