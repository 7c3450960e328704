#include "chaoskernel/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "chaoskernel/errors.hpp"

namespace chaoskernel {

namespace {

enum Slot { kS = 0, kLambda, kMu, kX, kY, kZ };

void require_config(const PathConfig& cfg) {
  if (!(std::isfinite(cfg.s_final) && cfg.s_final > 0.0)) {
    throw std::domain_error("s_final must be positive and finite");
  }
  if (cfg.steps < 1) {
    throw std::domain_error("steps must be >= 1");
  }
}

PhasePoint displace(const PhasePoint& p, const FieldVector& v, double h) {
  // Field coefficients depend on (lambda, mu) only; the s slot is carried by
  // constants, so displacing the five phase coordinates suffices.
  return {p.lambda + h * v[kLambda], p.mu + h * v[kMu], p.x + h * v[kX],
          p.y + h * v[kY], p.z + h * v[kZ]};
}

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void philox_round(std::array<std::uint32_t, 4>& c, std::uint32_t k0,
                         std::uint32_t k1) {
  const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * c[0];
  const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * c[2];
  const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
  const auto lo0 = static_cast<std::uint32_t>(p0);
  const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
  const auto lo1 = static_cast<std::uint32_t>(p1);
  c = {hi1 ^ c[1] ^ k0, lo1, hi0 ^ c[3] ^ k1, lo0};
}

}  // namespace

DrivingFields vector_fields(const PhasePoint& p) {
  const double ch_l = std::cosh(p.lambda);
  const double sh_l = std::sinh(p.lambda);
  const double th_l = std::tanh(p.lambda);
  const double ch_m = std::cosh(p.mu);
  const double sh_m = std::sinh(p.mu);
  DrivingFields f;
  f.v1 = FieldVector::Zero();
  f.v1[kLambda] = 1.0;
  f.v2 = FieldVector::Zero();
  f.v2[kMu] = 1.0 / ch_l;
  f.v0prime = FieldVector::Zero();
  f.v0prime[kS] = 1.0;
  f.v0prime[kLambda] = 0.5 * th_l;
  f.v0prime[kX] = ch_l * ch_m;
  f.v0prime[kY] = ch_l * sh_m;
  f.v0prime[kZ] = sh_l;
  return f;
}

std::array<FieldVector, 6> bracket_basis(const PhasePoint& p) {
  const DrivingFields f = vector_fields(p);
  const double ch_l = std::cosh(p.lambda);
  const double sh_l = std::sinh(p.lambda);
  const double ch_m = std::cosh(p.mu);
  const double sh_m = std::sinh(p.mu);

  FieldVector b10 = FieldVector::Zero();  // [V1, V0']
  b10[kLambda] = 0.5 / (ch_l * ch_l);
  b10[kX] = sh_l * ch_m;
  b10[kY] = sh_l * sh_m;
  b10[kZ] = ch_l;

  FieldVector b20 = FieldVector::Zero();  // [V2, V0']
  b20[kMu] = 0.5 * sh_l * sh_l / (ch_l * ch_l * ch_l);
  b20[kX] = sh_m;
  b20[kY] = ch_m;

  FieldVector b220 = FieldVector::Zero();  // [V2, [V2, V0']]
  b220[kX] = ch_m / ch_l;
  b220[kY] = sh_m / ch_l;

  return {f.v0prime, f.v1, f.v2, b10, b20, b220};
}

FieldVector lie_bracket_fd(
    const std::function<FieldVector(const PhasePoint&)>& f,
    const std::function<FieldVector(const PhasePoint&)>& g,
    const PhasePoint& p, double h) {
  if (!(std::isfinite(h) && h > 0.0)) {
    throw std::domain_error("finite-difference step must be positive");
  }
  const FieldVector fp = f(p);
  const FieldVector gp = g(p);
  // Dg.f - Df.g with directional central differences.
  const FieldVector dg = g(displace(p, fp, h)) - g(displace(p, fp, -h));
  const FieldVector df = f(displace(p, gp, h)) - f(displace(p, gp, -h));
  return (dg - df) / (2.0 * h);
}

int hormander_rank(const PhasePoint& p) {
  const std::array<FieldVector, 6> basis = bracket_basis(p);
  Eigen::Matrix<double, 6, 6> m;
  for (int i = 0; i < 6; ++i) m.row(i) = basis[static_cast<std::size_t>(i)];
  Eigen::JacobiSVD<Eigen::Matrix<double, 6, 6>> svd(m);
  const Eigen::Matrix<double, 6, 1> sv = svd.singularValues();
  const double cutoff = 1e-10 * sv[0];
  int rank = 0;
  for (int i = 0; i < 6; ++i) rank += sv[i] > cutoff ? 1 : 0;
  return rank;
}

void dudley_step(PhasePoint& p, double h, double dw, double dbeta) {
  const double ch_l = std::cosh(p.lambda);
  const double sh_l = std::sinh(p.lambda);
  const double ch_m = std::cosh(p.mu);
  const double sh_m = std::sinh(p.mu);
  p.x += ch_l * ch_m * h;
  p.y += ch_l * sh_m * h;
  p.z += sh_l * h;
  p.mu += dbeta / ch_l;
  p.lambda += 0.5 * std::tanh(p.lambda) * h + dw;
}

std::vector<PhasePoint> simulate_dudley(const PathConfig& cfg,
                                        std::uint64_t path_index) {
  require_config(cfg);
  const double h = cfg.s_final / static_cast<double>(cfg.steps);
  const double rt_h = std::sqrt(h);
  std::vector<PhasePoint> path(cfg.steps + 1);
  PhasePoint p;
  for (std::size_t k = 0; k < cfg.steps; ++k) {
    const auto [g1, g2] =
        gaussian_pair(cfg.seed, path_index, static_cast<std::uint32_t>(k), 0);
    dudley_step(p, h, rt_h * g1, rt_h * g2);
    if (std::abs(p.lambda) > 300.0) {
      throw OverflowGuardError(
          "dudley path exceeded |lambda| > 300; reduce the horizon or step");
    }
    path[k + 1] = p;
  }
  return path;
}

ChaosPoint simulate_tangent(const PathConfig& cfg, std::uint64_t path_index) {
  require_config(cfg);
  const double h = cfg.s_final / static_cast<double>(cfg.steps);
  const double rt_h = std::sqrt(h);
  const bool trapezoid = cfg.scheme == Scheme::exact_gaussian_plus_trapezoid;
  double w = 0.0, beta = 0.0, a = 0.0, zeta = 0.0, zbar = 0.0;
  for (std::size_t k = 0; k < cfg.steps; ++k) {
    const auto [g1, g2] =
        gaussian_pair(cfg.seed, path_index, static_cast<std::uint32_t>(k), 0);
    const double w_next = w + rt_h * g1;
    const double beta_next = beta + rt_h * g2;
    if (trapezoid) {
      zbar += 0.5 * h * (w + w_next);
      zeta += 0.5 * h * (beta + beta_next);
      a += 0.25 * h *
           (w * w + beta * beta + w_next * w_next + beta_next * beta_next);
    } else {
      zbar += h * w;
      zeta += h * beta;
      a += 0.5 * h * (w * w + beta * beta);
    }
    w = w_next;
    beta = beta_next;
  }
  return {w, beta, a, zeta, zbar};
}

RemainderTable remainder_probe(const std::vector<double>& s_values, double R,
                               std::size_t paths, std::uint64_t seed) {
  if (s_values.empty()) {
    throw std::domain_error("s_values must be nonempty");
  }
  for (double s : s_values) {
    if (!(std::isfinite(s) && s > 0.0 && s <= 1.0)) {
      throw std::domain_error("s_values must lie in (0, 1]");
    }
  }
  if (paths < 1000) {
    throw std::domain_error(
        "remainder_probe needs >= 1000 paths for usable tail estimates");
  }
  if (!(std::isfinite(R) && R > 0.0)) {
    throw std::domain_error("threshold scale R must be positive");
  }

  RemainderTable table;
  std::vector<double> sup_r(paths), sup_rp(paths);
  for (double s : s_values) {
    const std::size_t steps = std::max<std::size_t>(
        64, static_cast<std::size_t>(std::lround(4096.0 * s)));
    const double h = s / static_cast<double>(steps);
    const double rt_h = std::sqrt(h);
    std::size_t count_r = 0, count_rp = 0;
    const double thr_r = R * std::pow(s, 1.5);
    const double thr_rp = R * std::pow(s, 2.5);
    for (std::size_t j = 0; j < paths; ++j) {
      PhasePoint p;
      double w = 0.0, beta = 0.0, a = 0.0, zeta = 0.0, zbar = 0.0;
      double mr = 0.0, mrp = 0.0;
      for (std::size_t k = 0; k < steps; ++k) {
        const auto [g1, g2] =
            gaussian_pair(seed, j, static_cast<std::uint32_t>(k), 0);
        const double dw = rt_h * g1, dbeta = rt_h * g2;
        dudley_step(p, h, dw, dbeta);
        const double w_next = w + dw;
        const double beta_next = beta + dbeta;
        zbar += 0.5 * h * (w + w_next);
        zeta += 0.5 * h * (beta + beta_next);
        a += 0.25 * h *
             (w * w + beta * beta + w_next * w_next + beta_next * beta_next);
        w = w_next;
        beta = beta_next;
        const double t = h * static_cast<double>(k + 1);
        const double r1 = p.lambda - w, r2 = p.mu - beta;
        const double q1 = p.x - t - a, q2 = p.y - zeta, q3 = p.z - zbar;
        mr = std::max(mr, std::sqrt(r1 * r1 + r2 * r2));
        mrp = std::max(mrp, std::sqrt(q1 * q1 + q2 * q2 + q3 * q3));
      }
      sup_r[j] = mr;
      sup_rp[j] = mrp;
      count_r += mr >= thr_r ? 1 : 0;
      count_rp += mrp >= thr_rp ? 1 : 0;
    }
    RemainderRow row;
    row.s = s;
    row.tail_r = static_cast<double>(count_r) / static_cast<double>(paths);
    row.tail_rprime = static_cast<double>(count_rp) / static_cast<double>(paths);
    row.median_r = median_of(sup_r);
    row.median_rprime = median_of(sup_rp);
    table.rows.push_back(row);
  }

  std::vector<double> ss, mr, mrp;
  for (const RemainderRow& row : table.rows) {
    ss.push_back(row.s);
    mr.push_back(row.median_r);
    mrp.push_back(row.median_rprime);
  }
  if (ss.size() >= 2) {
    table.exponent_r = fit_log_slope(ss, mr);
    table.exponent_rprime = fit_log_slope(ss, mrp);
  }
  return table;
}

std::array<std::uint32_t, 4> philox_block(
    std::uint64_t key, const std::array<std::uint32_t, 4>& counter) {
  auto k0 = static_cast<std::uint32_t>(key);
  auto k1 = static_cast<std::uint32_t>(key >> 32);
  std::array<std::uint32_t, 4> c = counter;
  for (int round = 0;; ++round) {
    philox_round(c, k0, k1);
    if (round == 9) break;
    k0 += kPhiloxW0;
    k1 += kPhiloxW1;
  }
  return c;
}

std::pair<double, double> gaussian_pair(std::uint64_t seed, std::uint64_t path,
                                        std::uint32_t step,
                                        std::uint32_t stream) {
  const std::array<std::uint32_t, 4> counter = {
      static_cast<std::uint32_t>(path), static_cast<std::uint32_t>(path >> 32),
      step, stream};
  const std::array<std::uint32_t, 4> b = philox_block(seed, counter);
  const std::uint64_t v1 =
      (static_cast<std::uint64_t>(b[0]) << 32) | b[1];
  const std::uint64_t v2 =
      (static_cast<std::uint64_t>(b[2]) << 32) | b[3];
  const double u1 = (static_cast<double>(v1) + 1.0) * 0x1p-64;  // (0, 1]
  const double u2 = static_cast<double>(v2) * 0x1p-64;          // [0, 1)
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * M_PI * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

double median_of(std::vector<double> values) {
  if (values.empty()) {
    throw std::domain_error("median of empty sample");
  }
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid),
                   values.end());
  double m = values[mid];
  if (values.size() % 2 == 0) {
    const double lower =
        *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
    m = 0.5 * (m + lower);
  }
  return m;
}

double fit_log_slope(const std::vector<double>& xs,
                     const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw std::domain_error("slope fit needs two matching samples at least");
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0.0 && ys[i] > 0.0)) {
      throw std::domain_error("log-log fit needs positive samples");
    }
    const double lx = std::log(xs[i]);
    const double ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double ks_statistic(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) {
    throw std::domain_error("KS statistic needs nonempty samples");
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double t = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= t) ++i;
    while (j < b.size() && b[j] <= t) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na -
                             static_cast<double>(j) / nb));
  }
  return d;
}

double ks_pvalue(double d, std::size_t n, std::size_t m) {
  if (!(d >= 0.0) || n == 0 || m == 0) {
    throw std::domain_error("invalid KS p-value inputs");
  }
  const double ne = static_cast<double>(n) * static_cast<double>(m) /
                    (static_cast<double>(n) + static_cast<double>(m));
  const double lambda =
      (std::sqrt(ne) + 0.12 + 0.11 / std::sqrt(ne)) * d;
  // Kolmogorov tail sum 2 sum_{j>=1} (-1)^{j-1} exp(-2 j^2 lambda^2).
  double sum = 0.0;
  double sign = 1.0;
  for (int j = 1; j <= 100; ++j) {
    const double term = std::exp(-2.0 * lambda * lambda * j * j);
    sum += sign * term;
    if (term < 1e-16 * std::abs(sum)) {
      return std::clamp(2.0 * sum, 0.0, 1.0);
    }
    sign = -sign;
  }
  // The series oscillates without settling only for tiny lambda, where the
  // tail probability is 1 (the clamp of the truncated sum would be garbage).
  return 1.0;
}

}  // namespace chaoskernel
