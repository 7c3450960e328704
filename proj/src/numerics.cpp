#include "chaoskernel/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace chaoskernel {

namespace {

// QUADPACK dqk15 abscissae/weights.  xgk holds the positive Kronrod nodes
// (descending) plus 0; Gauss-7 nodes are the odd-indexed entries.
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299785, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
constexpr double kWg[4] = {0.1294849661688697, 0.2797053914892767,
                           0.3818300505051189, 0.4179591836734694};

double cabs(const ComplexValue& v) { return std::hypot(v.real(), v.imag()); }

}  // namespace

DecayEnvelope DecayEnvelope::exp_t(double rate, double prefactor,
                                   double threshold) {
  return {EnvelopeKind::exponential_in_t, rate, prefactor, threshold,
          std::log(prefactor)};
}

DecayEnvelope DecayEnvelope::exp_sqrt_t(double rate, double prefactor,
                                        double threshold) {
  return {EnvelopeKind::exponential_in_sqrt_t, rate, prefactor, threshold,
          std::log(prefactor)};
}

DecayEnvelope DecayEnvelope::exp_t_log(double rate, double log_prefactor,
                                       double threshold) {
  return {EnvelopeKind::exponential_in_t, rate, std::exp(log_prefactor),
          threshold, log_prefactor};
}

double DecayEnvelope::resolved_log_prefactor() const {
  if (std::isfinite(log_prefactor)) return log_prefactor;
  return std::log(prefactor);
}

double DecayEnvelope::log_bound(double t) const {
  const double lp = resolved_log_prefactor();
  if (kind == EnvelopeKind::exponential_in_t) return lp - rate * t;
  return lp - rate * std::sqrt(std::max(t, 0.0));
}

double DecayEnvelope::tail(double T) const {
  const double lp = resolved_log_prefactor();
  if (kind == EnvelopeKind::exponential_in_t)
    return std::exp(lp - rate * T) / rate;
  const double u = std::sqrt(std::max(T, 0.0));
  return std::exp(lp - rate * u) * 2.0 * (rate * u + 1.0) / (rate * rate);
}

double DecayEnvelope::choose_truncation(double tol) const {
  if (!(rate > 0.0)) throw std::domain_error("DecayEnvelope: rate must be > 0");
  const double lp = resolved_log_prefactor();
  const double target = std::log(tol / 2.0);
  double T;
  if (kind == EnvelopeKind::exponential_in_t) {
    // (p/r) e^{-rT} = tol/2
    T = (lp - std::log(rate) - target) / rate;
  } else {
    // fixed-point iteration on u = sqrt(T)
    double u = std::max(std::sqrt(std::max(threshold, 1.0)), 1.0);
    for (int i = 0; i < 64; ++i) {
      const double next =
          (lp + std::log(2.0 * (rate * u + 1.0) / (rate * rate)) - target) /
          rate;
      if (!(next > 0.0)) {
        u = std::sqrt(std::max(threshold, 1.0));
        break;
      }
      if (std::abs(next - u) < 1e-12 * std::max(1.0, u)) {
        u = next;
        break;
      }
      u = next;
    }
    T = u * u;
  }
  return std::max(T, threshold);
}

ComplexValue principal_sqrt(ComplexValue v) {
  if (v.imag() == 0.0 && v.real() < 0.0)
    throw BranchCutError(
        "principal_sqrt: input on the open negative real axis");
  ComplexValue r = std::sqrt(v);
  if (r.real() < 0.0) r = -r;  // defensive; std::sqrt is already principal
  return r;
}

double find_root_bracketed(const std::function<double(double)>& f, double lo,
                           double hi, double tol) {
  if (!(lo < hi))
    throw std::domain_error("find_root_bracketed: requires lo < hi");
  double flo = f(lo), fhi = f(hi);
  if (!std::isfinite(flo) || !std::isfinite(fhi))
    throw NumericError("find_root_bracketed: non-finite endpoint value");
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw NoSignChangeError("find_root_bracketed: f(lo)*f(hi) > 0");

  // Bisection to bracket width 1e-6.
  for (int i = 0; i < 200 && (hi - lo) > 1e-6; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }

  // Newton polish with finite-difference derivative, kept inside the bracket.
  double x = 0.5 * (lo + hi);
  double fx = f(x);
  for (int i = 0; i < 60; ++i) {
    if (std::abs(fx) <= tol) return x;
    const double h = 1e-7 * std::max(1.0, std::abs(x));
    const double d = (f(x + h) - f(x - h)) / (2.0 * h);
    double next = (d != 0.0) ? x - fx / d : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double fn = f(next);
    if ((fn > 0.0) == (flo > 0.0)) {
      lo = next;
      flo = fn;
    } else {
      hi = next;
      fhi = fn;
    }
    x = next;
    fx = fn;
  }
  if (std::abs(fx) <= tol) return x;
  throw NonConvergenceError("find_root_bracketed: residual above tol after polish");
}

namespace detail {

void gauss_kronrod_panel(const std::function<ComplexValue(double)>& f, double a,
                         double b, ComplexValue& k15, double& err,
                         double& abs15) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  ComplexValue sum15{0.0, 0.0}, sum7{0.0, 0.0};
  double suma = 0.0;
  for (int j = 0; j < 8; ++j) {
    const double x = kXgk[j];
    ComplexValue fv;
    double av;
    if (j == 7) {
      fv = f(c);
      av = cabs(fv);
    } else {
      const ComplexValue fl = f(c - h * x);
      const ComplexValue fr = f(c + h * x);
      fv = fl + fr;
      av = cabs(fl) + cabs(fr);
    }
    sum15 += kWgk[j] * fv;
    suma += kWgk[j] * av;
    if (j % 2 == 1) sum7 += kWg[j / 2] * fv;
  }
  k15 = h * sum15;
  err = cabs(h * (sum15 - sum7));
  abs15 = h * suma;
}

}  // namespace detail

QuadResult integrate_semiline(const std::function<ComplexValue(double)>& f,
                              const DecayEnvelope& envelope, double tol,
                              const OscillationHint& hint) {
  if (!(tol > 0.0)) throw std::domain_error("integrate_semiline: tol must be > 0");
  if (!(envelope.rate > 0.0))
    throw std::domain_error("integrate_semiline: envelope rate must be > 0");

  const double T = envelope.choose_truncation(tol);
  const double a = hint.quad_phase_coeff;
  if (a * T * T / (2.0 * M_PI) > hint.cycle_budget)
    throw BudgetExceededError(
        "integrate_semiline: oscillation cycles exceed budget on [0, T]");

  // Initial panel edges; width capped so each panel spans at most half an
  // oscillation period (phase a t^2, local frequency 2 a t) -- a span the
  // 15-point rule resolves to machine accuracy.
  std::vector<double> edges;
  edges.push_back(0.0);
  const double wmax = T / 16.0;
  double t = 0.0;
  while (t < T) {
    double w = wmax;
    if (a > 0.0) w = std::min(w, M_PI / std::max(1.0, 2.0 * a * t));
    t = std::min(t + w, T);
    edges.push_back(t);
  }

  // Envelope spot-validation on a geometric sample of [threshold', T].
  {
    const double lo = std::max(envelope.threshold, T * 1e-3);
    if (lo < T) {
      const int ns = 33;
      for (int i = 0; i <= ns; ++i) {
        const double ts = lo * std::pow(T / lo, double(i) / ns);
        const double av = cabs(f(ts));
        if (av > 0.0 &&
            std::log(av) > envelope.log_bound(ts) + 1e-9 + 1e-12 * std::abs(envelope.log_bound(ts)))
          throw EnvelopeViolationError(
              "integrate_semiline: integrand exceeds its decay envelope");
      }
    }
  }

  constexpr std::size_t kPanelCap = 150000;
  QuadResult out;
  out.tail_bound = envelope.tail(T);

  // Depth-first adaptive bisection, left to right: deterministic accumulation.
  struct Seg {
    double a, b;
    int depth;
  };
  std::vector<Seg> stack;
  for (std::size_t i = edges.size() - 1; i >= 1; --i)
    stack.push_back({edges[i - 1], edges[i], 0});

  const double quad_tol = 0.5 * tol;
  while (!stack.empty()) {
    const Seg s = stack.back();
    stack.pop_back();
    ComplexValue k15;
    double err, abs15;
    detail::gauss_kronrod_panel(f, s.a, s.b, k15, err, abs15);
    const double width = s.b - s.a;
    // Second disjunct: roundoff floor relative to the |f|-mass of the panel.
    // Oscillatory panels cancel in k15 but not in abs15, and splitting cannot
    // push the estimate below the evaluation noise of f itself, which for a
    // phase ~ a t^2 integrand is ~eps * phase * |f| (argument conditioning).
    const double phase_mag = a * s.b * s.b;
    const double noise_floor = (5e-16 + 2.3e-16 * phase_mag) * abs15;
    const bool small_enough = err <= quad_tol * (width / T) ||
                              err <= noise_floor || s.depth >= 48;
    if (small_enough) {
      out.value += k15;
      out.quad_error += err;
      ++out.panels_used;
      if (out.panels_used > kPanelCap)
        throw ToleranceUnreachableError(
            "integrate_semiline: panel budget exhausted");
    } else {
      const double mid = 0.5 * (s.a + s.b);
      stack.push_back({mid, s.b, s.depth + 1});
      stack.push_back({s.a, mid, s.depth + 1});
      if (stack.size() > kPanelCap)
        throw ToleranceUnreachableError(
            "integrate_semiline: refinement stack exhausted");
    }
  }
  return out;
}

bool consistent_with_zero(const QuadResult& r) {
  return std::abs(r.value.real()) <= r.total_error() &&
         std::abs(r.value.imag()) <= r.total_error();
}

}  // namespace chaoskernel
