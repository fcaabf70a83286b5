#include "catneg/analytic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "catneg/error.hpp"

namespace catneg::analytic {

namespace {

// Below this a normalization or coefficient denominator is treated as zero.
constexpr double kDenominatorFloor = 1e-14;

void check_theta(double theta0) {
  if (!(theta0 >= 0.0 && theta0 <= std::numbers::pi / 2)) {
    throw InvalidArgument("theta0 must lie in [0, pi/2], got " + std::to_string(theta0));
  }
}

void check_gamma_t(double gamma_t) {
  if (!(gamma_t >= 0.0)) throw InvalidArgument("gamma_t must be >= 0");
}

double checked_ratio(double num, double den, const char* what) {
  if (std::abs(den) < kDenominatorFloor) {
    throw NumericError(std::string("vanishing denominator in ") + what);
  }
  return num / den;
}

}  // namespace

T0Spectrum t0_spectrum(int n, int k, double theta0) {
  if (n < 2) throw InvalidArgument("t0_spectrum: N must be >= 2");
  if (k < 1 || k > n - 1) throw InvalidArgument("t0_spectrum: k must lie in [1, N-1]");
  check_theta(theta0);
  const double c = std::cos(2.0 * theta0);
  const double ck = std::pow(c, k);
  const double cr = std::pow(c, n - k);
  const double den = 2.0 * (1.0 + std::pow(c, n));
  T0Spectrum s{n, k, theta0};
  s.lambda1 = checked_ratio((1.0 + ck) * (1.0 + cr), den, "lambda1 (1 + cos^N 2theta0 = 0)");
  s.lambda2 = checked_ratio((1.0 - ck) * (1.0 - cr), den, "lambda2 (1 + cos^N 2theta0 = 0)");
  const double off = std::sqrt(1.0 - ck * ck) * std::sqrt(1.0 - cr * cr);
  s.lambda3 = off / den;
  s.lambda4 = -off / den;
  return s;
}

namespace {

ComplexVector product_power(double alpha, double beta, int count) {
  ComplexVector v = ComplexVector::Ones(1);
  ComplexVector single(2);
  single << alpha, beta;
  for (int i = 0; i < count; ++i) v = kron(v, single);
  return v;
}

ComplexVector u_vector(int count, double theta0, bool plus, const char* side) {
  const double c = std::cos(2.0 * theta0);
  const double norm2 = 2.0 * (1.0 + (plus ? 1.0 : -1.0) * std::pow(c, count));
  if (norm2 < kDenominatorFloor) {
    throw NumericError(std::string("u_") + (plus ? "+" : "-") + " on the " + side +
                       " side has vanishing normalization 2[1 " + (plus ? "+" : "-") +
                       " cos^i(2theta0)]");
  }
  const double s = std::sin(theta0);
  const double co = std::cos(theta0);
  const ComplexVector a = product_power(co, s, count);
  const ComplexVector b = product_power(co, -s, count);
  return (plus ? ComplexVector(a + b) : ComplexVector(a - b)) / std::sqrt(norm2);
}

}  // namespace

std::array<ComplexVector, 4> t0_eigenvectors(int n, int k, double theta0) {
  if (n < 2 || k < 1 || k > n - 1) throw InvalidArgument("t0_eigenvectors: invalid N or k");
  check_theta(theta0);
  const ComplexVector kp = u_vector(k, theta0, true, "k");
  const ComplexVector km = u_vector(k, theta0, false, "k");
  const ComplexVector rp = u_vector(n - k, theta0, true, "N-k");
  const ComplexVector rm = u_vector(n - k, theta0, false, "N-k");
  const ComplexVector pm = kron(kp, rm);
  const ComplexVector mp = kron(km, rp);
  return {kron(kp, rp), kron(km, rm), (pm + mp) / std::sqrt(2.0), (pm - mp) / std::sqrt(2.0)};
}

ShortTimeCoefficients short_time_negativity_k1(int n, double theta0, double gamma_t,
                                               BReading reading) {
  if (n < 4) {
    throw InvalidArgument("short_time_negativity_k1 needs N >= 4; for N = 2, 3 only the "
                          "t = 0 negative eigenvalue evolves, use the numeric path");
  }
  check_theta(theta0);
  check_gamma_t(gamma_t);
  const double c = std::cos(2.0 * theta0);
  const double g = gamma_t / 2.0;
  const double nn = n;
  ShortTimeCoefficients r;

  const double den_p = 1.0 + std::pow(c, n - 1);
  const double den_m = 1.0 - std::pow(c, n - 1);
  r.a_plus = checked_ratio(c + std::pow(c, n - 2), den_p, "a_plus");
  r.a_minus = checked_ratio(c - std::pow(c, n - 2), den_m, "a_minus");
  r.b_plus = checked_ratio(c * c + std::pow(c, n - 3), den_p, "b_plus");
  r.b_minus = checked_ratio(c * c - std::pow(c, n - 3), den_m, "b_minus");

  const double lead = 1.0 - (nn + 1.0) * g;
  r.A = lead * lead + 2.0 * (nn - 1.0) * g * (1.0 + (nn + 1.0) * g) * r.a_minus * r.a_plus +
        g * g * ((nn - 2.0) * r.b_plus + 1.0) * ((nn - 2.0) * r.b_minus + 1.0);
  const double second_b = reading == BReading::verbatim ? r.b_plus : r.b_minus;
  r.B = 4.0 * g * g * lead * lead *
        ((nn - 2.0) * r.b_plus - (nn - 1.0) * r.a_minus * r.a_minus + 1.0) *
        ((nn - 2.0) * second_b - (nn - 1.0) * r.a_plus * r.a_plus + 1.0);

  const double disc = r.A * r.A - r.B;
  if (disc < 0.0) {
    throw NumericError("short-time formula invalid here: A^2 < B (A = " + std::to_string(r.A) +
                       ", B = " + std::to_string(r.B) + "); use the numeric path");
  }
  const double lambda4 = t0_spectrum(n, 1, theta0).lambda4;
  const double root = std::sqrt(disc);
  r.gamma1 = lambda4 / std::sqrt(2.0) * std::sqrt(r.A + root);
  const double lower = r.A - root;
  if (lower < -1e-14 * std::abs(r.A)) {
    throw NumericError("short-time formula invalid here: A - sqrt(A^2 - B) < 0 (B < 0); "
                       "use the numeric path");
  }
  r.gamma2 = lambda4 / std::sqrt(2.0) * std::sqrt(std::max(0.0, lower));

  const double radicand = (r.b_plus - 1.0) * (r.b_minus - 1.0);
  if (radicand < 0.0) {
    r.gamma3 = std::numeric_limits<double>::quiet_NaN();
    r.flags.push_back(kGamma3Radicand);
  } else {
    r.gamma3 = g * lambda4 * std::sqrt(radicand);
  }
  r.value = -((nn - 2.0) * r.gamma3 + r.gamma2 + r.gamma1);
  if (gamma_t > kShortTimeLimit) r.flags.push_back(kShortTime);
  return r;
}

GeneralPartitionCoefficients general_partition_gamma1(int n, int k, double theta0,
                                                      double gamma_t) {
  if (n < 2 || k < 1 || 2 * k > n) {
    throw InvalidArgument("general_partition_gamma1 needs 1 <= k <= N/2");
  }
  if (!(theta0 > 0.0 && theta0 < std::numbers::pi / 2)) {
    throw InvalidArgument("general_partition_gamma1 needs theta0 in (0, pi/2)");
  }
  check_gamma_t(gamma_t);
  const double c = std::cos(2.0 * theta0);
  auto coefficient = [c](int i, bool plus) {
    const double sign = plus ? 1.0 : -1.0;
    return checked_ratio(c + sign * std::pow(c, i - 1), 1.0 + sign * std::pow(c, i),
                         plus ? "A_plus" : "A_minus");
  };
  GeneralPartitionCoefficients r;
  r.A_plus_k = coefficient(k, true);
  r.A_minus_k = coefficient(k, false);
  r.A_plus_rest = coefficient(n - k, true);
  r.A_minus_rest = coefficient(n - k, false);
  r.lambda4 = t0_spectrum(n, k, theta0).lambda4;
  const double bracket = -static_cast<double>(n) + k * r.A_plus_k * r.A_minus_k +
                         (n - k) * r.A_plus_rest * r.A_minus_rest;
  r.gamma1 = r.lambda4 * (1.0 + gamma_t / 2.0 * bracket);
  if (gamma_t > kShortTimeLimit) r.flags.push_back(kShortTime);
  return r;
}

SmallAngleResult small_angle_negativity(int n, int k, double theta0, double gamma_t) {
  if (n < 2 || k < 1 || k > n - 1) throw InvalidArgument("small_angle_negativity: invalid N or k");
  check_theta(theta0);
  check_gamma_t(gamma_t);
  SmallAngleResult r;
  r.value = std::sqrt(static_cast<double>(k) * (n - k)) * theta0 * theta0 * (1.0 - 2.0 * gamma_t);
  r.n_theta2 = n * theta0 * theta0;
  r.n_theta_gamma_t = n * theta0 * gamma_t;
  if (gamma_t > kShortTimeLimit) r.flags.push_back(kShortTime);
  if (r.n_theta2 > kSmallAngleLimit) r.flags.push_back(kSmallAngle);
  if (r.n_theta_gamma_t > kSmallAngleLimit) r.flags.push_back(kSmallAngleTime);
  return r;
}

}  // namespace catneg::analytic
