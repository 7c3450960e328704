#include "chaoskernel/special.hpp"

#include <cmath>

#include "chaoskernel/aux_series.hpp"

namespace chaoskernel {

namespace {

constexpr double kCrossover = 0.5;          // series below, closed forms above
constexpr long double kPiL = 3.141592653589793238462643383279502884L;

double horner(const double* c, int n, double t) {
  double acc = c[n - 1];
  for (int j = n - 2; j >= 0; --j) acc = acc * t + c[j];
  return acc;
}

// Horner sum of c[1..n-1] in t (the polynomial with the constant term
// dropped and degree shifted down): exact regularized tilde series.
double horner_shifted(const double* c, int n, double t) {
  double acc = c[n - 1];
  for (int j = n - 2; j >= 1; --j) acc = acc * t + c[j];
  return acc;
}

}  // namespace

namespace detail {

AuxValues aux_series(double xi) {
  namespace tbl = chaoskernel::aux_series;
  const double t = xi * xi * xi * xi;
  AuxValues v;
  v.u_r = horner(tbl::k_u_r, tbl::kTerms, t);
  v.u_i = horner(tbl::k_u_i, tbl::kTerms, t);
  v.v_r = horner(tbl::k_v_r, tbl::kTerms, t);
  v.v_i = horner(tbl::k_v_i, tbl::kTerms, t);
  const double fr_reg = horner(tbl::k_f_r_reg, tbl::kTerms, t);
  const double fi_reg = horner(tbl::k_f_i_reg, tbl::kTerms, t);
  if (xi == 0.0) {
    v.f_r = std::numeric_limits<double>::infinity();
    v.f_i = std::numeric_limits<double>::infinity();
  } else {
    v.f_r = fr_reg / t;
    v.f_i = fi_reg / (xi * xi);
  }
  return v;
}

// Closed forms with every hyperbolic factor rescaled by E = e^{-xi}, so the
// evaluation never overflows and loses no accuracy at large xi:
//   d+ = D+/(2E), d- = D-/(2E), S+ = P/(2E), S- = M/(2E),
//   D+ = 1 + 2E cos + E^2, D- = 1 - 2E cos + E^2,
//   P  = 1 + 2E sin - E^2, M  = 1 - 2E sin - E^2.
AuxValues aux_closed(double xi) {
  const double E = std::exp(-xi);
  const double c = std::cos(xi), s = std::sin(xi);
  const double E2 = E * E;
  const double Dp = 1.0 + 2.0 * E * c + E2;
  const double Dm = 1.0 - 2.0 * E * c + E2;
  const double P = 1.0 + 2.0 * E * s - E2;
  const double M = 1.0 - 2.0 * E * s - E2;

  AuxValues v;
  const double a = xi - P / Dp;
  const double b = M / Dp;
  const double r2 = a * a + b * b;
  v.u_i = xi * a / r2;
  v.u_r = 2.0 * xi * xi * xi * b / r2;
  v.v_i = M / (4.0 * xi * Dm);
  v.v_r = xi * P / (2.0 * Dm);

  if (E == 0.0) {
    // F carries an overall e^{-xi}: below double underflow it is exactly 0.
    v.f_r = 0.0;
    v.f_i = 0.0;
    return v;
  }
  // A = (2E - N_A)/(2E), Btilde = N_B/(2E) with
  const double NA =
      (1.0 + E2) * c + 0.5 * xi * ((s - c) + E2 * (s + c));
  const double NB = (1.0 - E2) * s - 0.5 * xi * ((s + c) + E2 * (s - c));
  const double u = NA - 2.0 * E;
  const double den = u * u + NB * NB;
  v.f_r = 2.0 * E * u / den;
  v.f_i = 2.0 * E * NB / den;
  return v;
}

RegularizedAux aux_regularized_series(double xi) {
  namespace tbl = chaoskernel::aux_series;
  const double t = xi * xi * xi * xi;
  RegularizedAux r;
  r.f_r_reg = horner(tbl::k_f_r_reg, tbl::kTerms, t);
  r.f_i_reg = horner(tbl::k_f_i_reg, tbl::kTerms, t);
  r.tilde_u_r = horner_shifted(tbl::k_u_r, tbl::kTerms, t);
  r.tilde_u_i = horner_shifted(tbl::k_u_i, tbl::kTerms, t);
  r.tilde_v_r = horner_shifted(tbl::k_v_r, tbl::kTerms, t);
  r.tilde_v_i = horner_shifted(tbl::k_v_i, tbl::kTerms, t);
  return r;
}

}  // namespace detail

AuxValues aux_eval(double xi) {
  if (!(xi >= 0.0) || !std::isfinite(xi))
    throw std::domain_error("aux_eval: xi must be finite and >= 0");
  return xi <= kCrossover ? detail::aux_series(xi) : detail::aux_closed(xi);
}

RegularizedAux aux_eval_regularized(double xi) {
  if (!(xi >= 0.0) || !std::isfinite(xi))
    throw std::domain_error("aux_eval_regularized: xi must be finite and >= 0");
  if (xi <= kCrossover) return detail::aux_regularized_series(xi);
  const AuxValues v = detail::aux_closed(xi);
  const double t = xi * xi * xi * xi;
  RegularizedAux r;
  r.f_r_reg = v.f_r * t;
  r.f_i_reg = v.f_i * xi * xi;
  r.tilde_u_r = (v.u_r - 12.0) / t;
  r.tilde_u_i = (v.u_i - 1.2) / t;
  r.tilde_v_r = (v.v_r - 1.0) / t;
  r.tilde_v_i = (v.v_i - 1.0 / 12.0) / t;
  return r;
}

std::vector<long double> tan_fixed_points(std::size_t n) {
  if (n < 1) throw std::domain_error("tan_fixed_points: n must be >= 1");
  if (n > 64) throw std::domain_error("tan_fixed_points: n exceeds cap 64");
  // Fixed points of tg y = y via the pole-free form f(y) = y cos y - sin y,
  // one per interval ((k+1) pi, (k+3/2) pi).
  std::vector<long double> roots;
  roots.reserve(n);
  const auto f = [](long double y) { return y * cosl(y) - sinl(y); };
  for (std::size_t k = 0; k < n; ++k) {
    long double lo = (k + 1) * kPiL + 1e-6L;
    long double hi = (k + 1.5L) * kPiL - 1e-9L;
    long double flo = f(lo);
    for (int it = 0; it < 90; ++it) {
      const long double mid = 0.5L * (lo + hi);
      const long double fm = f(mid);
      if ((fm > 0) == (flo > 0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    long double y = 0.5L * (lo + hi);
    for (int it = 0; it < 8; ++it) {
      const long double d = -y * sinl(y);  // f'(y)
      if (d == 0.0L) break;
      y -= f(y) / d;
    }
    roots.push_back(y);
  }
  return roots;
}

std::vector<std::complex<long double>> sh2cos2_zeros(std::size_t n) {
  if (n < 1) throw std::domain_error("sh2cos2_zeros: n must be >= 1");
  std::vector<std::complex<long double>> zeros;
  zeros.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const long double m = kPiL / 4.0L * (1.0L + 2.0L * k);
    zeros.emplace_back(m, m);
  }
  return zeros;
}

}  // namespace chaoskernel
