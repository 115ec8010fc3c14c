#pragma once

// Brute-force reference: explicit enumeration of many-body states over a
// truncated single-particle spectrum. Shares only the scenario vocabulary
// with the series engine.

#include <cstdint>
#include <vector>

#include "gibbs/core_model.hpp"

namespace gibbs {

struct TruncatedSpectrum {
  Well well = Well::Full;
  int n_max = 0;
  std::vector<std::int64_t> exponents;  // ascending, one per level

  static TruncatedSpectrum build(Well well, int n_max);
};

/// All states sharing one total Boltzmann exponent.
struct StateClass {
  std::int64_t exponent = 0;
  std::uint64_t multiplicity = 0;

  friend bool operator==(const StateClass&, const StateClass&) = default;
};

/// Sorted by exponent, exponents distinct.
using StateList = std::vector<StateClass>;

/// count particles of one species in one well: Bose multisets, Fermi strict
/// subsets, or ordered tuples for distinguishable particles.
StateList enumerate_group(const TruncatedSpectrum& spectrum, int count, Statistics stat);

/// Product of two independent subsystems.
StateList combine(const StateList& a, const StateList& b);
/// Disjoint union of two state sets.
StateList merge(const StateList& a, const StateList& b);

/// Every state of the scenario over the given spectrum. The spectrum must be
/// the half cell for the unmixed stage and the full well for the mixed stage.
/// Unmixed WithoutColors includes every left/right occupation split.
StateList enumerate_states(const ScenarioSpec& scenario, const TruncatedSpectrum& spectrum);

struct OracleOptions {
  double tolerance = 1e-12;  // relative weight allowed outside the cutoff
  int forced_n_max = 0;      // 0 selects the cutoff automatically
  int max_levels = 10'000;
};

struct OracleStates {
  StateList states;
  int n_max = 0;
  double truncation_bound = 0.0;  // relative to the enumerated partition function
};

/// Enumerates with a cutoff large enough that the omitted weight is below
/// options.tolerance. Throws CutoffError when that cannot be achieved.
OracleStates enumerate_states(const ScenarioSpec& scenario, Nome q,
                              const OracleOptions& options = {});

double oracle_log_partition(const StateList& states, Nome q);
double oracle_partition(const StateList& states, Nome q);
/// Gibbs entropy -sum p ln p over individual states.
double oracle_entropy(const StateList& states, Nome q);
/// Mean Boltzmann exponent <e>; <E> = <e> pi^2 / (2 l^2).
double oracle_mean_exponent(const StateList& states, Nome q);
double oracle_energy(const StateList& states, const PhysicalConfig& config);

}  // namespace gibbs
