#pragma once

#include <span>
#include <vector>

#include "gibbs/ensembles.hpp"

namespace gibbs {

/// S = (1 - beta d/dbeta) ln Z = ln Z - (beta dZ/dbeta) / Z.
double entropy(const PartitionResult& partition, const PhysicalConfig& config);
/// First-order estimate of the truncation/rounding error of entropy().
double entropy_error(const PartitionResult& partition);
/// <E> = -d ln Z / dbeta.
double mean_energy(const PartitionResult& partition, const PhysicalConfig& config);

/// S(mixed) - S(unmixed). Throws MismatchError when the two partitions were
/// built at different (beta, l) or for different species.
double delta_entropy(const PartitionResult& unmixed, const PartitionResult& mixed,
                     const PhysicalConfig& config);

/// Isothermal work (1/beta)(ln Z_unmixed - ln Z_mixed), i.e. F_mixed - F_unmixed.
double work(const PartitionResult& unmixed, const PartitionResult& mixed,
            const PhysicalConfig& config);

/// Species and particle number shared by both stages of a mixing process.
struct ScenarioPair {
  int n_particles = 2;
  Labels labels = Labels::WithColors;
  Statistics statistics = Statistics::Bose;

  ScenarioSpec unmixed() const { return {n_particles, labels, Stage::Unmixed, statistics}; }
  ScenarioSpec mixed() const { return {n_particles, labels, Stage::Mixed, statistics}; }
};

struct ThermoReport {
  ScenarioSpec unmixed;
  ScenarioSpec mixed;
  double beta = 0.0;
  double length = 0.0;
  double q = 0.0;
  double z_unmixed = 0.0;
  double z_unmixed_err = 0.0;
  double z_mixed = 0.0;
  double z_mixed_err = 0.0;
  double s_unmixed = 0.0;
  double s_mixed = 0.0;
  double delta_s = 0.0;
  double delta_s_err = 0.0;
  double work = 0.0;
  double work_err = 0.0;
  double mean_energy_unmixed = 0.0;
  double mean_energy_mixed = 0.0;
};

ThermoReport thermo_report(const ScenarioPair& pair, const PhysicalConfig& config,
                           double rel_tol = kEnsembleTolerance);

struct PowerLawFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  int points = 0;
};

/// Least squares of ln|y| against ln x over the last tail_points samples.
/// Throws FitError if y vanishes or changes sign on that tail.
PowerLawFit fit_power_law(std::span<const double> x, std::span<const double> y,
                          int tail_points);

/// Fitted exponent of |W| against T = 1/beta over the high-temperature end of
/// the supplied inverse-temperature grid (any order) at fixed trap width.
PowerLawFit asymptotic_work_exponent(const ScenarioPair& pair, double length,
                                     std::span<const double> betas, int tail_points);

/// n_points inverse temperatures with T = 1/beta geometric over [t_min, t_max].
std::vector<double> geometric_temperature_grid(double t_min, double t_max, int n_points);

}  // namespace gibbs
