#pragma once

// Canonical partition functions of ideal Bose, Fermi and distinguishable
// particles in the full well (width l) and a half cell (width l/2), and the
// scenario-level combinations for the unmixed and mixed stages.

#include <cstdint>
#include <span>
#include <vector>

#include "gibbs/core_model.hpp"
#include "gibbs/theta.hpp"

namespace gibbs {

/// A positive series f = q^ground * (degeneracy + excess), where q is the
/// full-well nome, degeneracy weights the lowest exponent and excess collects
/// q^(e - ground) over the higher ones. excess_deriv is beta d/dbeta of the
/// excess. Keeping the ground factor symbolic means entropies and energies of
/// ground-dominated states never subtract nearly equal numbers.
struct Jet {
  std::int64_t ground = 0;
  double log_q = 0.0;  // 0 for constants
  double degeneracy = 0.0;
  double excess = 0.0;
  double excess_deriv = 0.0;
  double excess_err = 0.0;
  double deriv_err = 0.0;

  Jet() = default;
  Jet(double c) : degeneracy(c) {}  // NOLINT: constants promote implicitly
  /// q^ground with nothing above it.
  static Jet monomial(std::int64_t ground, double log_q);

  bool is_zero() const { return degeneracy == 0.0 && excess == 0.0 && excess_err == 0.0; }
  double reduced() const { return degeneracy + excess; }
  /// ln(degeneracy + excess), accurate when the excess is tiny.
  double log_reduced() const;
  double log_value() const;
  double value() const;
  /// beta d/dbeta ln f.
  double beta_log_deriv() const;
  /// beta d/dbeta f.
  double beta_deriv() const;
  /// Absolute error of value().
  double value_err() const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Jet& o);
  Jet& operator/=(double s);
};

Jet operator+(Jet a, const Jet& b);
Jet operator-(Jet a, const Jet& b);
Jet operator*(Jet a, const Jet& b);
Jet operator/(Jet a, double s);

/// Default relative truncation tolerance for every single-particle series.
inline constexpr double kEnsembleTolerance = 1e-15;
/// Condition number above which the alternating Fermi recursion is replaced by
/// direct elementary-symmetric summation over levels.
inline constexpr double kFermiConditionLimit = 256.0;

/// Z1(q^scale) as a jet; the excess sum_{n>=2} q^{scale (n^2-1)} is accurate to
/// rel_tol relative to itself.
Jet z1_jet(Nome q, int scale, double rel_tol = kEnsembleTolerance);

/// Z_N = (1/N) sum_{k=1..N} sign^{k-1} Z1(base^k) Z_{N-k}, Z_0 = 1.
/// z1_multiples[k-1] holds Z1(base^k) for k = 1..n. sign is +1 for bosons and
/// -1 for fermions. Returns Z_0..Z_n.
template <class T>
std::vector<T> cycle_recursion(std::span<const T> z1_multiples, int n, int sign) {
  std::vector<T> table(static_cast<std::size_t>(n) + 1, T(0));
  table[0] = T(1);
  for (int m = 1; m <= n; ++m) {
    T acc(0);
    for (int k = 1; k <= m; ++k) {
      const T term = z1_multiples[k - 1] * table[m - k];
      if (sign < 0 && k % 2 == 0) {
        acc -= term;
      } else {
        acc += term;
      }
    }
    table[m] = acc / static_cast<double>(m);
  }
  return table;
}

struct ZnTable {
  std::vector<Jet> z;        // Z_0 .. Z_n
  bool level_summed = false; // fermion values came from the level sum
  int series_terms = 0;
};

/// Z_0..Z_n for one species in one well.
ZnTable zn_table(int n, Statistics stat, Well well, Nome q,
                 double rel_tol = kEnsembleTolerance);

/// Z_n alone; error_bound is the propagated first-order estimate.
SeriesValue zn_ideal(int n, Statistics stat, Well well, Nome q,
                     double rel_tol = kEnsembleTolerance);
SeriesValue zn_ideal(int n, Statistics stat, Well well, double q,
                     double rel_tol = kEnsembleTolerance);

/// Fermion Z_0..Z_n as elementary symmetric polynomials of the level weights
/// q^{scale n^2}, accumulated level by level. No cancellation at any temperature.
std::vector<Jet> fermi_level_sum(int n, Nome q, int scale,
                                 double rel_tol = kEnsembleTolerance);

struct PartitionResult {
  ScenarioSpec scenario;
  PhysicalConfig config;
  double q = 0.0;
  double log_z = 0.0;
  SeriesValue z;             // may underflow to 0; log_z stays exact
  Jet jet;
  double beta_dz = 0.0;      // beta dZ/dbeta
  double beta_dz_err = 0.0;
};

/// Partition function of a full scenario:
///   WithColors    Unmixed (Z_{N/2}[half])^2,  Mixed (Z_{N/2}[full])^2
///   WithoutColors Unmixed sum_n Z_n[half] Z_{N-n}[half],  Mixed Z_N[full]
PartitionResult scenario_partition(const ScenarioSpec& scenario,
                                   const PhysicalConfig& config,
                                   double rel_tol = kEnsembleTolerance);

}  // namespace gibbs
