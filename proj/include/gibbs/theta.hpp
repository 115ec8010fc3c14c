#pragma once

// Jacobi theta_3 at zero argument and the one-particle series built on it:
//
//   theta3(q) = 1 + 2 sum_{n>=1} q^{n^2}
//   z1(tau)   = sum_{n>=1} tau^{n^2}           = (theta3(tau) - 1) / 2
//   s1(tau)   = sum_{n>=1} n^2 tau^{n^2}       = tau d/dtau z1(tau)
//
// Small nomes are summed directly. Above kDualityThreshold the modular
// transform theta3(q) = (-ln q / pi)^{-1/2} theta3(exp(pi^2 / ln q)) is used,
// so the number of terms stays bounded as q -> 1.

#include "gibbs/core_model.hpp"

namespace gibbs {

/// A truncated series with a certified bound on the truncation error.
struct SeriesValue {
  double value = 0.0;
  double error_bound = 0.0;  // absolute, truncation only
  int terms_used = 1;
};

inline constexpr double kDefaultTolerance = 1e-13;
inline constexpr double kDualityThreshold = 0.3;

SeriesValue theta3(Nome q, double tol = kDefaultTolerance);
SeriesValue theta3(double q, double tol = kDefaultTolerance);

SeriesValue z1(Nome tau, double tol = kDefaultTolerance);
SeriesValue z1(double tau, double tol = kDefaultTolerance);

/// sum_{n>=1} n^(2*power) tau^{n^2}; only power == 1 is supported.
SeriesValue weighted_series(Nome tau, int power, double tol = kDefaultTolerance);
SeriesValue weighted_series(double tau, int power, double tol = kDefaultTolerance);

// Explicit evaluation routes, used for cross-checks.
SeriesValue theta3_direct(Nome q, double tol = kDefaultTolerance);
SeriesValue theta3_dual(Nome q, double tol = kDefaultTolerance);

/// exp(pi^2 / ln q).
Nome dual_nome(Nome q);
bool uses_duality(Nome q);

/// First n_terms of z1 together with the geometric tail bound
/// tau^{(N+1)^2} / (1 - tau^{2N+3}).
SeriesValue z1_truncated(Nome tau, int n_terms);
double z1_tail_bound(Nome tau, int n_terms);
/// Tail bound for s1 after n_terms terms (infinite if the ratio test fails).
double weighted_tail_bound(Nome tau, int n_terms);

}  // namespace gibbs
