#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <limits>

#include "chaoskernel/errors.hpp"

namespace chaoskernel {

using ComplexValue = std::complex<double>;

// Result of a semi-infinite quadrature: value plus a two-part error estimate
// (accumulated panel discrepancy + analytic bound on the discarded tail).
struct QuadResult {
  ComplexValue value{0.0, 0.0};
  double quad_error = 0.0;
  double tail_bound = 0.0;
  std::size_t panels_used = 0;

  double total_error() const { return quad_error + tail_bound; }
};

enum class EnvelopeKind { exponential_in_t, exponential_in_sqrt_t };

// Majorant |f(t)| <= prefactor * exp(-rate * t)          (exponential_in_t)
//          |f(t)| <= prefactor * exp(-rate * sqrt(t))    (exponential_in_sqrt_t)
// valid for t >= threshold.  log_prefactor is authoritative when finite so
// that envelopes whose linear prefactor overflows double remain usable.
struct DecayEnvelope {
  EnvelopeKind kind = EnvelopeKind::exponential_in_t;
  double rate = 1.0;
  double prefactor = 1.0;
  double threshold = 0.0;
  double log_prefactor = std::numeric_limits<double>::quiet_NaN();

  static DecayEnvelope exp_t(double rate, double prefactor, double threshold = 0.0);
  static DecayEnvelope exp_sqrt_t(double rate, double prefactor, double threshold = 0.0);
  static DecayEnvelope exp_t_log(double rate, double log_prefactor, double threshold = 0.0);

  double resolved_log_prefactor() const;
  // log of the majorant at t.
  double log_bound(double t) const;
  // Upper bound for the integral of the majorant over [T, infinity).
  double tail(double T) const;
  // Smallest T >= threshold with tail(T) <= tol/2.
  double choose_truncation(double tol) const;
};

// Caller-supplied oscillation information: phase ~ quad_phase_coeff * t^2.
// Initial panel widths are capped at a fraction of the local phase period;
// more than cycle_budget total oscillations on [0, T] is refused upfront.
struct OscillationHint {
  double quad_phase_coeff = 0.0;
  double cycle_budget = 1e4;
};

// Principal complex square root: nonnegative real part, positive reals map to
// positive reals.  Inputs on the open negative real axis raise BranchCutError.
ComplexValue principal_sqrt(ComplexValue v);

// Bracketed root finding: bisection to bracket width 1e-6, then Newton with
// finite-difference derivative to |f(r)| <= tol.  Requires a sign change.
double find_root_bracketed(const std::function<double(double)>& f, double lo,
                           double hi, double tol);

// Adaptive Gauss-Kronrod (G7/K15) quadrature of f over [0, infinity).  The
// envelope picks the truncation point T (tail < tol/2) and is spot-validated
// by sampling; tol is an absolute target for the returned value.
QuadResult integrate_semiline(const std::function<ComplexValue(double)>& f,
                              const DecayEnvelope& envelope, double tol,
                              const OscillationHint& hint = {});

// True when |value| is within the reported error of zero (oscillatory
// quadrature of a nonnegative quantity may legitimately return tiny
// negatives; callers flag rather than clamp).
bool consistent_with_zero(const QuadResult& r);

namespace detail {
// Single G7/K15 panel application on [a, b]: Kronrod value, |K15 - G7|, and
// the Kronrod quadrature of |f| (roundoff-floor reference for oscillatory
// panels whose signed value cancels).
void gauss_kronrod_panel(const std::function<ComplexValue(double)>& f, double a,
                         double b, ComplexValue& k15, double& err,
                         double& abs15);
}  // namespace detail

}  // namespace chaoskernel
