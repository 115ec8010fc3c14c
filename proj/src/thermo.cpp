#include "gibbs/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "gibbs/errors.hpp"

namespace gibbs {

namespace {

void check_same_point(const PartitionResult& p, const PhysicalConfig& config) {
  if (!(p.config == config)) {
    throw MismatchError("partition function was built at a different (beta, l)");
  }
}

void check_pair(const PartitionResult& unmixed, const PartitionResult& mixed,
                const PhysicalConfig& config) {
  check_same_point(unmixed, config);
  check_same_point(mixed, config);
  const ScenarioSpec& u = unmixed.scenario;
  const ScenarioSpec& m = mixed.scenario;
  if (u.stage != Stage::Unmixed || m.stage != Stage::Mixed) {
    throw MismatchError("expected an (unmixed, mixed) pair of partitions");
  }
  if (u.n_particles != m.n_particles || u.labels != m.labels ||
      u.statistics != m.statistics) {
    throw MismatchError("unmixed and mixed partitions describe different species");
  }
}

}  // namespace

double entropy(const PartitionResult& partition, const PhysicalConfig& config) {
  check_same_point(partition, config);
  const Jet& z = partition.jet;
  if (!(z.reduced() > 0.0)) throw RangeError("entropy needs a positive partition function");
  // The ground factor contributes equally to ln Z and beta d/dbeta ln Z.
  return z.log_reduced() - z.excess_deriv / z.reduced();
}

double entropy_error(const PartitionResult& partition) {
  const Jet& z = partition.jet;
  const double r = z.reduced();
  return z.excess_err / r + z.deriv_err / r + std::abs(z.excess_deriv) * z.excess_err / (r * r);
}

double mean_energy(const PartitionResult& partition, const PhysicalConfig& config) {
  check_same_point(partition, config);
  return -partition.jet.beta_log_deriv() / config.beta;
}

double delta_entropy(const PartitionResult& unmixed, const PartitionResult& mixed,
                     const PhysicalConfig& config) {
  check_pair(unmixed, mixed, config);
  return entropy(mixed, config) - entropy(unmixed, config);
}

double work(const PartitionResult& unmixed, const PartitionResult& mixed,
            const PhysicalConfig& config) {
  check_pair(unmixed, mixed, config);
  const Jet& u = unmixed.jet;
  const Jet& m = mixed.jet;
  const double ground_gap = static_cast<double>(u.ground - m.ground) * u.log_q;
  return (ground_gap + u.log_reduced() - m.log_reduced()) / config.beta;
}

ThermoReport thermo_report(const ScenarioPair& pair, const PhysicalConfig& config,
                           double rel_tol) {
  const PartitionResult u = scenario_partition(pair.unmixed(), config, rel_tol);
  const PartitionResult m = scenario_partition(pair.mixed(), config, rel_tol);
  ThermoReport r;
  r.unmixed = u.scenario;
  r.mixed = m.scenario;
  r.beta = config.beta;
  r.length = config.length;
  r.q = u.q;
  r.z_unmixed = u.z.value;
  r.z_unmixed_err = u.z.error_bound;
  r.z_mixed = m.z.value;
  r.z_mixed_err = m.z.error_bound;
  r.s_unmixed = entropy(u, config);
  r.s_mixed = entropy(m, config);
  r.delta_s = r.s_mixed - r.s_unmixed;
  r.delta_s_err = entropy_error(u) + entropy_error(m);
  r.work = work(u, m, config);
  r.work_err = (u.jet.excess_err / u.jet.reduced() + m.jet.excess_err / m.jet.reduced()) /
               config.beta;
  r.mean_energy_unmixed = mean_energy(u, config);
  r.mean_energy_mixed = mean_energy(m, config);
  return r;
}

PowerLawFit fit_power_law(std::span<const double> x, std::span<const double> y,
                          int tail_points) {
  if (x.size() != y.size()) throw FitError("x and y differ in length");
  if (tail_points < 2 || static_cast<std::size_t>(tail_points) > x.size()) {
    throw FitError("need at least two tail points within the data");
  }
  const std::size_t first = x.size() - static_cast<std::size_t>(tail_points);
  const double sign = y[first] > 0.0 ? 1.0 : -1.0;
  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t i = first; i < x.size(); ++i) {
    if (!(x[i] > 0.0)) throw FitError("abscissa must be positive for a log fit");
    if (!(y[i] * sign > 0.0)) throw FitError("ordinate vanishes or changes sign on the tail");
    lx.push_back(std::log(x[i]));
    ly.push_back(std::log(std::abs(y[i])));
  }
  const double n = static_cast<double>(lx.size());
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / n;
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (!(sxx > 0.0)) throw FitError("degenerate abscissa");
  PowerLawFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  fit.points = tail_points;
  return fit;
}

PowerLawFit asymptotic_work_exponent(const ScenarioPair& pair, double length,
                                     std::span<const double> betas, int tail_points) {
  // Order by increasing temperature so the tail is the hot end.
  std::vector<double> sorted(betas.begin(), betas.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::vector<double> temperatures;
  std::vector<double> works;
  for (double beta : sorted) {
    const PhysicalConfig config{beta, length};
    const PartitionResult u = scenario_partition(pair.unmixed(), config);
    const PartitionResult m = scenario_partition(pair.mixed(), config);
    temperatures.push_back(1.0 / beta);
    works.push_back(work(u, m, config));
  }
  return fit_power_law(temperatures, works, tail_points);
}

std::vector<double> geometric_temperature_grid(double t_min, double t_max, int n_points) {
  if (!(t_min > 0.0 && t_max > t_min) || n_points < 2) {
    throw InvalidArgument("temperature grid needs 0 < t_min < t_max and >= 2 points");
  }
  std::vector<double> betas;
  const double ratio = std::log(t_max / t_min) / (n_points - 1);
  for (int i = 0; i < n_points; ++i) betas.push_back(1.0 / (t_min * std::exp(ratio * i)));
  return betas;
}

}  // namespace gibbs
