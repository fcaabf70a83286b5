#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "catneg/linalg.hpp"

namespace catneg::analytic {

// Validity flags. Formulas are evaluated regardless; these mark results
// computed outside the regime the closed form was derived for.
inline constexpr std::string_view kShortTime = "gamma_t_not_small";        // gamma_t > 0.1
inline constexpr std::string_view kSmallAngle = "n_theta2_not_small";      // N theta0^2 > 0.1
inline constexpr std::string_view kSmallAngleTime = "n_theta_gt_not_small";  // N theta0 gamma_t > 0.1
inline constexpr std::string_view kGamma3Radicand = "gamma3_radicand_negative";

inline constexpr double kShortTimeLimit = 0.1;
inline constexpr double kSmallAngleLimit = 0.1;

using Flags = std::vector<std::string_view>;

/// The four nonzero eigenvalues of the partial transpose of the pure delta
/// cat state; all remaining 2^N - 4 eigenvalues vanish.
struct T0Spectrum {
  int n = 0;
  int k = 0;
  double theta0 = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda3 = 0.0;
  double lambda4 = 0.0;  // the negative one; negativity at t = 0 is |lambda4|
};

T0Spectrum t0_spectrum(int n, int k, double theta0);

/// |lambda_1..4> built from |u_(+-)^(i)> = (phi1^i +- phi2^i) / sqrt(2 (1 +- cos^i 2theta0)).
/// Ordered to match T0Spectrum::lambda1..lambda4.
std::array<ComplexVector, 4> t0_eigenvectors(int n, int k, double theta0);

/// Which of the two printed factors of B uses b_minus. The verbatim form
/// repeats b_plus in both factors.
enum class BReading { verbatim, symmetric };

struct ShortTimeCoefficients {
  double a_plus = 0.0;
  double a_minus = 0.0;
  double b_plus = 0.0;
  double b_minus = 0.0;
  double A = 0.0;
  double B = 0.0;
  double gamma1 = 0.0;  // dominant negative eigenvalue
  double gamma2 = 0.0;
  double gamma3 = 0.0;  // (N - 2)-fold degenerate; NaN when its radicand is negative
  double value = 0.0;   // -[(N-2) gamma3 + gamma2 + gamma1]; NaN with gamma3
  double valid_gamma_t = kShortTimeLimit;
  Flags flags;
};

/// Short-time negativity of the {1, N-1} partition under dephasing, N >= 4.
/// Throws NumericError when A^2 < B (the formula has left its real domain).
ShortTimeCoefficients short_time_negativity_k1(int n, double theta0, double gamma_t,
                                               BReading reading = BReading::verbatim);

struct GeneralPartitionCoefficients {
  double A_plus_k = 0.0;
  double A_minus_k = 0.0;
  double A_plus_rest = 0.0;  // side of N - k qubits
  double A_minus_rest = 0.0;
  double lambda4 = 0.0;
  double gamma1 = 0.0;  // negative
  Flags flags;
};

/// Dominant negative eigenvalue for a {k, N-k} partition to first order in gamma_t.
GeneralPartitionCoefficients general_partition_gamma1(int n, int k, double theta0,
                                                      double gamma_t);

struct SmallAngleResult {
  double value = 0.0;  // sqrt(k (N - k)) theta0^2 (1 - 2 gamma_t)
  double n_theta2 = 0.0;
  double n_theta_gamma_t = 0.0;
  Flags flags;
};

SmallAngleResult small_angle_negativity(int n, int k, double theta0, double gamma_t);

/// Negativity once the dephasing has run to completion.
constexpr double asymptotic_negativity() { return 0.0; }

}  // namespace catneg::analytic
