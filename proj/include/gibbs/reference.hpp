#pragma once

// Explicit low-order forms used as regression references for the general
// generators: the n = 2, 3, 4 cycle-index polynomials in Z1(q^k) and the
// two-particle theta_3 closed forms. The polynomials are evaluated in 50-digit
// arithmetic so that alternating fermion sums stay meaningful at small q.

#include <array>
#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "gibbs/core_model.hpp"
#include "gibbs/theta.hpp"

namespace gibbs::reference {

using HighPrecision = boost::multiprecision::cpp_bin_float_50;

/// z[k-1] = Z1(q^k), k = 1..4. sign = +1 bosons, -1 fermions.
template <class T>
T low_order_polynomial(int n, int sign, const std::array<T, 4>& z) {
  const T s(sign);
  switch (n) {
    case 2:
      return (z[0] * z[0] + s * z[1]) / 2;
    case 3:
      return (z[0] * z[0] * z[0] + s * 3 * z[1] * z[0] + 2 * z[2]) / 6;
    case 4:
      return (z[0] * z[0] * z[0] * z[0] + 3 * z[1] * z[1] + s * 6 * z[3] +
              s * 6 * z[1] * z[0] * z[0] + 8 * z[2] * z[0]) /
             24;
    default:
      throw std::invalid_argument("explicit forms exist for n = 2, 3, 4 only");
  }
}

/// Z1(q^k) by direct summation in 50-digit arithmetic.
inline HighPrecision z1_high_precision(double q, int k) {
  const HighPrecision tau = boost::multiprecision::pow(HighPrecision(q), k);
  const HighPrecision cutoff("1e-55");
  HighPrecision sum = 0;
  for (long n = 1;; ++n) {
    const HighPrecision term = boost::multiprecision::pow(tau, n * n);
    sum += term;
    if (term < cutoff * sum) break;
  }
  return sum;
}

/// Table polynomial for Z_n at nome q, evaluated from high-precision Z1 values.
inline double low_order_reference(int n, Statistics stat, double q) {
  std::array<HighPrecision, 4> z;
  for (int k = 1; k <= 4; ++k) z[k - 1] = z1_high_precision(q, k);
  const int sign = stat == Statistics::Fermi ? -1 : 1;
  return static_cast<double>(low_order_polynomial<HighPrecision>(n, sign, z));
}

/// Two uncolored particles, through theta_3 of the full-well nome q:
///   unmixed  (1/2)[th3(q^4)-1]^2 +- (1/2)[th3(q^8)-1]
///   mixed    (1/8)[th3(q)-1]^2   +- (1/4)[th3(q^2)-1]
inline double uncolored_pair_theta_form(Stage stage, Statistics stat, Nome q) {
  const double s = stat == Statistics::Fermi ? -1.0 : 1.0;
  if (stage == Stage::Unmixed) {
    const double a = theta3(q.pow(4)).value - 1.0;
    const double b = theta3(q.pow(8)).value - 1.0;
    return 0.5 * a * a + s * 0.5 * b;
  }
  const double a = theta3(q).value - 1.0;
  const double b = theta3(q.pow(2)).value - 1.0;
  return 0.125 * a * a + s * 0.25 * b;
}

}  // namespace gibbs::reference
