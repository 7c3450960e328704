#include "chaoskernel/transforms.hpp"

#include <cmath>
#include <stdexcept>

#include "chaoskernel/errors.hpp"

namespace chaoskernel {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLn2 = 0.6931471805599453094172321214581766;

// log cosh(x) without overflow for any x >= 0.
double log_cosh(double x) {
  if (x < 350.0) {
    const double sh = std::sinh(0.5 * x);
    return std::log1p(2.0 * sh * sh);
  }
  return x - kLn2 + std::log1p(std::exp(-2.0 * x));
}

// log sinh(x), x > 0, without overflow.
double log_sinh(double x) {
  if (x < 30.0) return std::log(std::sinh(x));
  return x - kLn2 + std::log1p(-std::exp(-2.0 * x));
}

// 1/cosh(x) without overflow for any x >= 0.
double sech(double x) {
  const double e = std::exp(-x);
  return 2.0 * e / (1.0 + e * e);
}

}  // namespace

double langevin_density(double s, double w, double z) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw std::domain_error("langevin_density: s must be positive and finite");
  }
  if (!std::isfinite(w) || !std::isfinite(z)) {
    throw std::domain_error("langevin_density: w, z must be finite");
  }
  const double d = z - 0.5 * s * w;
  const double expo = -(6.0 / (s * s * s)) * d * d - w * w / (2.0 * s);
  return std::sqrt(3.0) / (kPi * s * s) * std::exp(expo);
}

ComplexValue flt_Z(const FLQueryZ& q) {
  if (!(q.s >= 0.0) || !(q.b >= 0.0)) {
    throw std::domain_error("flt_Z: requires s >= 0 and b >= 0");
  }
  if (!std::isfinite(q.s) || !std::isfinite(q.b) || !std::isfinite(q.r) ||
      !std::isfinite(q.c)) {
    throw std::domain_error("flt_Z: non-finite query");
  }
  const double s = q.s, r = q.r, c = q.c, b = q.b;
  const double x = b * s;
  double A, B, C;  // coefficients of r^2, r c, c^2 in the (negated) exponent
  if (x < 0.1) {
    // Small-parameter series in y = (bs)^2; the b = 0 limit is y = 0:
    //   th(x)/x       = 1 - y/3 + 2y^2/15 - 17y^3/315 + 62y^4/2835 - ...
    //   (1-sech x)/x^2: h(y)/2, h = 1 - 5y/12 + 61y^2/360 - 1385y^3/20160 + ...
    //   (x-th x)/x^3  = 1/3 - 2y/15 + 17y^2/315 - 62y^3/2835 + ...
    const double y = x * x;
    const double T =
        1.0 +
        y * (-1.0 / 3.0 +
             y * (2.0 / 15.0 +
                  y * (-17.0 / 315.0 +
                       y * (62.0 / 2835.0 + y * (-1382.0 / 155925.0)))));
    const double H =
        1.0 + y * (-5.0 / 12.0 +
                   y * (61.0 / 360.0 +
                        y * (-1385.0 / 20160.0 +
                             y * (50521.0 / 1814400.0 +
                                  y * (-2702765.0 / 239500800.0)))));
    const double G =
        1.0 / 3.0 +
        y * (-2.0 / 15.0 +
             y * (17.0 / 315.0 +
                  y * (-62.0 / 2835.0 +
                       y * (1382.0 / 155925.0 + y * (-21844.0 / 6081075.0)))));
    A = 0.5 * s * T;
    B = 0.5 * s * s * H;
    C = 0.5 * s * s * s * G;
  } else {
    const double th = std::tanh(x);
    A = th / (2.0 * b);
    B = (1.0 - sech(x)) / (b * b);  // = 2 sh^2(bs/2) / (b^2 ch bs)
    C = (x - th) / (2.0 * b * b * b);
  }
  // Quadratic form is positive semidefinite (|characteristic function| <= 1),
  // so the exponent never exceeds the log-prefactor -log(ch bs)/2 <= 0.
  const double expo = -0.5 * log_cosh(x) - A * r * r - B * r * c - C * c * c;
  return ComplexValue(std::exp(expo), 0.0);
}

double laplace_Z1(double w, double z, double b) {
  if (!(b >= 0.0) || !std::isfinite(b)) {
    throw std::domain_error("laplace_Z1: b must be >= 0 and finite");
  }
  if (!std::isfinite(w) || !std::isfinite(z)) {
    throw std::domain_error("laplace_Z1: w, z must be finite");
  }
  if (b == 0.0) return langevin_density(1.0, w, z);
  const double d = w - 2.0 * z;
  const double Ssq = d * d;
  if (b < 0.05) {
    // Small-b series in y = b^2 for the cancellation-prone groups:
    //   (b - 2 th(b/2)) sh(b) = (b^4/12) P,  P = 1 + y/15 + y^2/560 + y^3/37800
    //   1 - (b/2)coth(b/2)    = -(y/12) R,   R = 1 - y/60 + y^2/2520 - y^3/100800
    //   (b/4)coth(b/2)        = Q,           Q = 1/2 + y/24 - y^2/1440 + y^3/60480
    // so that (b^2/8) S / (1-(b/2)coth(b/2)) = -(3/2) S / R exactly.
    const double y = b * b;
    const double P =
        1.0 + y * (1.0 / 15.0 + y * (1.0 / 560.0 + y * (1.0 / 37800.0)));
    const double R =
        1.0 + y * (-1.0 / 60.0 + y * (1.0 / 2520.0 + y * (-1.0 / 100800.0)));
    const double Q =
        0.5 + y * (1.0 / 24.0 + y * (-1.0 / 1440.0 + y * (1.0 / 60480.0)));
    const double expo = -1.5 * Ssq / R - 0.5 * y * z * z - Q * w * w;
    return std::sqrt(3.0) / (kPi * std::sqrt(P)) * std::exp(expo);
  }
  // Direct evaluation; the two O(b^2)-cancelling groups go through long
  // double, everything else combines in log space and exponentiates last.
  const long double bl = b;
  const long double delta = bl - 2.0L * std::tanh(0.5L * bl);  // b - 2 th(b/2)
  const long double Dl = 1.0L - 0.5L * bl / std::tanh(0.5L * bl);
  const double D = static_cast<double>(Dl);  // 1 - (b/2)coth(b/2) < 0
  const double Q = 0.25 * b / std::tanh(0.5 * b);
  const double log_pref = 2.0 * std::log(b) - std::log(2.0 * kPi) -
                          0.5 * (std::log(static_cast<double>(delta)) + log_sinh(b));
  const double expo = 0.125 * b * b * Ssq / D - 0.5 * b * b * z * z - Q * w * w;
  return std::exp(log_pref + expo);
}

ComplexValue flt_Y(const FLQueryY& q) {
  const FLQueryZ first{q.s, q.r, q.c, q.b};
  const FLQueryZ second{q.s, q.rho, q.gamma, q.b};
  return flt_Z(first) * flt_Z(second);
}

double psi(const MarginalPoint& p, double b) {
  return laplace_Z1(p.w, p.z, b) * laplace_Z1(p.beta, p.zeta, b);
}

ComplexValue phi(const MarginalPoint& p, ComplexValue lambda) {
  constexpr double kFourPiSq = 4.0 * kPi * kPi;
  if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag())) {
    throw std::domain_error("phi: non-finite lambda");
  }
  if (lambda.real() >= kFourPiSq) {
    throw std::domain_error("phi: requires Re(lambda) < 4*pi^2");
  }
  const double S1 = (p.w - 2.0 * p.z) * (p.w - 2.0 * p.z) +
                    (p.beta - 2.0 * p.zeta) * (p.beta - 2.0 * p.zeta);
  const double W = p.w * p.w + p.beta * p.beta;
  const double Z2 = p.z * p.z + p.zeta * p.zeta;
  if (lambda.imag() == 0.0 && lambda.real() <= 0.0) {
    // Real nonpositive axis: Phi(lambda) = Psi(sqrt(-lambda)).
    return ComplexValue(psi(p, std::sqrt(-lambda.real())), 0.0);
  }
  if (std::abs(lambda) < 1e-3) {
    // Analytic continuation through lambda = 0: with u = sqrt(lambda)/2,
    //   sin u (sin u - u cos u) = (lambda^2/48) D1,
    //   u cot u - 1             = -(lambda/12) D2,
    //   (u/2) cot u             = K,
    // each replaced by its Taylor series through lambda^3.
    const ComplexValue L = lambda;
    const ComplexValue D1 =
        1.0 + L * (-1.0 / 15.0 + L * (1.0 / 560.0 + L * (-1.0 / 37800.0)));
    const ComplexValue D2 =
        1.0 + L * (1.0 / 60.0 + L * (1.0 / 2520.0 + L * (1.0 / 100800.0)));
    const ComplexValue K =
        0.5 + L * (-1.0 / 24.0 + L * (-1.0 / 1440.0 + L * (-1.0 / 60480.0)));
    const ComplexValue pref = 3.0 / (kPi * kPi * D1);
    const ComplexValue expo = -1.5 * S1 / D2 + 0.5 * L * Z2 - W * K;
    return pref * std::exp(expo);
  }
  const ComplexValue u = 0.5 * principal_sqrt(lambda);
  if (std::abs(u.imag()) > 600.0) {
    throw OverflowGuardError("phi: |Im sqrt(lambda)/2| too large for sin/cos");
  }
  const ComplexValue sinu = std::sin(u);
  const ComplexValue cosu = std::cos(u);
  const ComplexValue den = sinu * (sinu - u * cosu);
  const ComplexValue u2 = u * u;
  const ComplexValue pref = u2 * u2 / (kPi * kPi * den);
  const ComplexValue ucotu = u * cosu / sinu;
  const ComplexValue expo =
      0.5 * u2 * S1 / (ucotu - 1.0) + 2.0 * u2 * Z2 - 0.5 * W * ucotu;
  return pref * std::exp(expo);
}

Eigen::Matrix2d ou_covariance_oracle(double b, double s) {
  if (!(b > 0.0) || !(s > 0.0) || !std::isfinite(b) || !std::isfinite(s)) {
    throw std::domain_error("ou_covariance_oracle: requires b, s > 0 finite");
  }
  // Entries cancel to O((bs)^2) .. O((bs)^3) as bs -> 0; long double keeps
  // full double accuracy down to bs ~ 1e-5.
  const long double x = static_cast<long double>(b) * s;
  const long double E = std::exp(-x);
  const long double E2 = E * E;
  const long double k11 = -std::expm1(-2.0L * x);
  const long double k12 = x - 1.0L + 2.0L * E - (x + 1.0L) * E2;
  const long double k22 =
      x * x - 3.0L + 4.0L * (x + 1.0L) * E - (x + 1.0L) * (x + 1.0L) * E2;
  Eigen::Matrix2d K;
  K << static_cast<double>(k11), static_cast<double>(k12),
      static_cast<double>(k12), static_cast<double>(k22);
  return K;
}

}  // namespace chaoskernel
