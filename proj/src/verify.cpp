#include "gibbs/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gibbs/ensembles.hpp"
#include "gibbs/errors.hpp"
#include "gibbs/format.hpp"
#include "gibbs/oracle.hpp"
#include "gibbs/reference.hpp"
#include "gibbs/theta.hpp"
#include "gibbs/thermo.hpp"

namespace gibbs {

namespace {

double relative_gap(double a, double b) {
  const double scale = std::max(std::abs(b), 1e-300);
  return std::abs(a - b) / scale;
}

CheckResult make(std::string name, double measured, double threshold, bool passed,
                 std::string detail = {}) {
  return {std::move(name), passed, measured, threshold, std::move(detail)};
}

// Configuration with full-well nome q at unit trap width.
PhysicalConfig config_for_nome(double q) {
  return {-2.0 * std::log(q) / (kPi * kPi), 1.0};
}

std::vector<ScenarioSpec> small_scenarios() {
  std::vector<ScenarioSpec> out;
  for (int n : {2, 4}) {
    for (Labels labels : {Labels::WithColors, Labels::WithoutColors}) {
      for (Statistics stat :
           {Statistics::Bose, Statistics::Fermi, Statistics::Distinguishable}) {
        if (labels == Labels::WithoutColors && stat == Statistics::Distinguishable) continue;
        for (Stage stage : {Stage::Unmixed, Stage::Mixed}) {
          out.push_back({n, labels, stage, stat});
        }
      }
    }
  }
  return out;
}

}  // namespace

CheckResult check_duality() {
  double worst = 0.0;
  for (double qv : {0.05, 0.2, 0.5, 0.9, 0.99}) {
    const Nome q = Nome::from_value(qv);
    const double lhs = std::sqrt(-q.log() / kPi) * theta3_direct(q, 1e-15).value;
    const double rhs = theta3_direct(dual_nome(q), 1e-15).value;
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return make("theta3 duality identity", worst, 1e-12, worst <= 1e-12);
}

CheckResult check_low_order_regression(const ZnGenerator& generator) {
  double worst = 0.0;
  std::string where;
  for (int n : {2, 3, 4}) {
    for (Statistics stat : {Statistics::Bose, Statistics::Fermi}) {
      for (double q : {0.1, 0.5, 0.9}) {
        const double gap =
            relative_gap(generator(n, stat, q), reference::low_order_reference(n, stat, q));
        if (!(gap <= worst)) {
          worst = gap;
          where = "n=" + std::to_string(n) + " " + std::string(to_string(stat)) +
                  " q=" + format_number(q);
        }
      }
    }
  }
  return make("cycle recursion vs explicit n<=4 forms", worst, 1e-12, worst <= 1e-12,
              "worst at " + where);
}

CheckResult check_low_order_regression() {
  return check_low_order_regression([](int n, Statistics stat, double q) {
    return zn_ideal(n, stat, Well::Full, q).value;
  });
}

CheckResult check_oracle_equivalence(double q, int forced_n_max) {
  const PhysicalConfig config = config_for_nome(q);
  OracleOptions options;
  options.forced_n_max = forced_n_max;
  double worst = 0.0;
  std::string where;
  for (const ScenarioSpec& sc : small_scenarios()) {
    OracleStates states;
    try {
      states = enumerate_states(sc, nome(config), options);
    } catch (const CutoffError& e) {
      return make("oracle equivalence (Z, <E>, S) q=" + format_number(q), INFINITY, 1e-9,
                  false, e.what());
    }
    const PartitionResult p = scenario_partition(sc, config);
    const Nome nq = nome(config);
    const double gaps[] = {
        relative_gap(p.z.value, oracle_partition(states.states, nq)),
        relative_gap(mean_energy(p, config), oracle_energy(states.states, config)),
        relative_gap(entropy(p, config), oracle_entropy(states.states, nq))};
    for (double g : gaps) {
      if (!(g <= worst)) {
        worst = g;
        where = describe(sc);
      }
    }
  }
  return make("oracle equivalence (Z, <E>, S) q=" + format_number(q), worst, 1e-9,
              worst <= 1e-9, "worst at " + where);
}

CheckResult check_species_equality(int grid_points) {
  double worst = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    for (int j = 0; j < grid_points; ++j) {
      const double beta = 0.1 + (5.0 - 0.1) * i / (grid_points - 1);
      const double length = 1.0 + (50.0 - 1.0) * j / (grid_points - 1);
      const PhysicalConfig config{beta, length};
      double ds[3];
      int k = 0;
      for (Statistics stat :
           {Statistics::Bose, Statistics::Fermi, Statistics::Distinguishable}) {
        ds[k++] = thermo_report({2, Labels::WithColors, stat}, config).delta_s;
      }
      worst = std::max({worst, std::abs(ds[0] - ds[1]), std::abs(ds[0] - ds[2]),
                        std::abs(ds[1] - ds[2])});
    }
  }
  return make("colored pair: dS equal across statistics", worst, 1e-12, worst <= 1e-12,
              std::to_string(grid_points) + "x" + std::to_string(grid_points) + " grid");
}

CheckResult check_classical_pair() {
  const double target = 2.0 * std::numbers::ln2;
  std::vector<double> deviation;
  for (double length : {1e2, 1e3, 1e4}) {
    const ThermoReport r =
        thermo_report({2, Labels::WithColors, Statistics::Bose}, {1.0, length});
    deviation.push_back(std::abs(r.delta_s - target));
  }
  const bool monotone = deviation[0] > deviation[1] && deviation[1] > deviation[2];
  return make("colored pair: dS -> 2 ln 2", deviation.back(), 1e-3,
              deviation.back() <= 1e-3 && monotone,
              monotone ? "monotone in l" : "deviation not monotone in l");
}

CheckResult check_classical_four() {
  const PhysicalConfig config{1.0, 1e4};
  double worst = 0.0;
  for (Statistics stat : {Statistics::Bose, Statistics::Fermi}) {
    const double with = thermo_report({4, Labels::WithColors, stat}, config).delta_s;
    const double without = thermo_report({4, Labels::WithoutColors, stat}, config).delta_s;
    worst = std::max({worst, std::abs(with - 4.0 * std::numbers::ln2), std::abs(without)});
  }
  return make("four particles: dS -> 4 ln 2 (colors), 0 (no colors)", worst, 1e-3,
              worst <= 1e-3);
}

CheckResult check_entropy_identity(double q) {
  const PhysicalConfig config = config_for_nome(q);
  double worst = 0.0;
  std::string where;
  for (const ScenarioSpec& sc : small_scenarios()) {
    const OracleStates states = enumerate_states(sc, nome(config));
    const double gap = relative_gap(entropy(scenario_partition(sc, config), config),
                                    oracle_entropy(states.states, nome(config)));
    if (!(gap <= worst)) {
      worst = gap;
      where = describe(sc);
    }
  }
  // Term-wise derivative against a central difference at tau = 0.3.
  const double tau = 0.3;
  const double h = 1e-6;
  const double fd = (z1(tau + h).value - z1(tau - h).value) / (2.0 * h);
  const double fd_gap = relative_gap(fd, weighted_series(tau, 1).value / tau);
  const bool ok = worst <= 1e-9 && fd_gap <= 1e-5;
  return make("entropy (1 - beta d/dbeta) ln Z vs -sum p ln p", worst, 1e-9, ok,
              "worst at " + where + "; finite difference gap " + format_number(fd_gap));
}

CheckResult check_low_temperature_split() {
  const PhysicalConfig config{3.0, 2.0};
  const double b = thermo_report({4, Labels::WithColors, Statistics::Bose}, config).delta_s;
  const double f = thermo_report({4, Labels::WithColors, Statistics::Fermi}, config).delta_s;
  const double gap = std::abs(b - f);
  return make("four colored particles: Bose/Fermi split at beta=3, l=2", gap, 1e-6,
              gap > 1e-6,
              "dS_bose=" + format_number(b) + " dS_fermi=" + format_number(f));
}

CheckResult check_work_identity() {
  double worst = 0.0;
  for (const ScenarioSpec& sc : small_scenarios()) {
    if (sc.stage != Stage::Unmixed) continue;
    for (const PhysicalConfig config :
         {PhysicalConfig{0.5, 2.0}, PhysicalConfig{1.0, 10.0}, PhysicalConfig{3.0, 2.0}}) {
      const ThermoReport r = thermo_report({sc.n_particles, sc.labels, sc.statistics}, config);
      const double free_energy_change = (r.mean_energy_mixed - r.mean_energy_unmixed) -
                                        (r.s_mixed - r.s_unmixed) / config.beta;
      worst = std::max(worst, std::abs(r.work - free_energy_change) /
                                  std::max(1.0, std::abs(r.work)));
    }
  }
  return make("work equals free energy change", worst, 1e-9, worst <= 1e-9);
}

CheckResult check_work_exponent() {
  const std::vector<double> betas = geometric_temperature_grid(1e2, 1e5, 31);
  std::ostringstream detail;
  double worst_r2 = 1.0;
  for (Labels labels : {Labels::WithoutColors, Labels::WithColors}) {
    const PowerLawFit fit =
        asymptotic_work_exponent({2, labels, Statistics::Bose}, 10.0, betas, 16);
    worst_r2 = std::min(worst_r2, fit.r_squared);
    detail << "colors=" << to_string(labels) << " slope=" << format_number(fit.slope)
           << " R2=" << format_number(fit.r_squared) << "; ";
  }
  return make("work exponent fit, T in [1e2, 1e5], l=10", worst_r2, 0.999, worst_r2 > 0.999,
              detail.str());
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  if (options.profile != "default" && options.profile != "quick") {
    throw InvalidArgument("unknown verification profile '" + options.profile + "'");
  }
  const bool quick = options.profile == "quick";
  std::vector<CheckResult> out;
  auto guarded = [&](auto&& check) {
    try {
      out.push_back(check());
    } catch (const Error& e) {
      out.push_back(make("check aborted", INFINITY, 0.0, false, e.what()));
    }
  };
  guarded([] { return check_duality(); });
  guarded([] { return check_low_order_regression(); });
  guarded([&] { return check_oracle_equivalence(0.5, options.oracle_n_max); });
  if (!quick) {
    guarded([&] { return check_oracle_equivalence(0.3, options.oracle_n_max); });
    guarded([&] { return check_oracle_equivalence(0.7, options.oracle_n_max); });
  }
  guarded([&] { return check_species_equality(quick ? 5 : 20); });
  guarded([] { return check_classical_pair(); });
  guarded([] { return check_classical_four(); });
  guarded([] { return check_entropy_identity(0.5); });
  guarded([] { return check_low_temperature_split(); });
  guarded([] { return check_work_identity(); });
  guarded([] { return check_work_exponent(); });
  return out;
}

}  // namespace gibbs
