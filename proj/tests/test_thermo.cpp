#include <cmath>
#include <vector>

#include "doctest.h"
#include "gibbs/ensembles.hpp"
#include "gibbs/errors.hpp"
#include "gibbs/thermo.hpp"

using namespace gibbs;

namespace {

PhysicalConfig config_for_nome(double q) { return {-2.0 * std::log(q) / (kPi * kPi), 1.0}; }

const double kTwoLn2 = 2.0 * std::log(2.0);

}  // namespace

TEST_CASE("entropy of two free distinguishable particles at q=0.5") {
  // Twice -sum p_n ln p_n with p_n = 0.5^{n^2} / Z1(0.5).
  const PhysicalConfig c = config_for_nome(0.5);
  const PartitionResult p = scenario_partition(
      {2, Labels::WithColors, Stage::Mixed, Statistics::Distinguishable}, c);
  CHECK(entropy(p, c) == doctest::Approx(2 * 0.37098855835117635425).epsilon(1e-13));
  CHECK(entropy_error(p) < 1e-13);
}

TEST_CASE("four colored particles at beta=3, l=2") {
  const PhysicalConfig c{3.0, 2.0};
  const ThermoReport b = thermo_report({4, Labels::WithColors, Statistics::Bose}, c);
  const ThermoReport f = thermo_report({4, Labels::WithColors, Statistics::Fermi}, c);
  CHECK(b.delta_s == doctest::Approx(3.6461638539783420e-4).epsilon(1e-11));
  CHECK(f.delta_s == doctest::Approx(3.583912594108930e-7).epsilon(1e-10));
  CHECK(b.delta_s_err < 1e-15);
  CHECK(f.delta_s_err < 1e-18);
}

TEST_CASE("colored pair approaches 2 ln 2 from above") {
  double prev = 1e9;
  for (double l : {1e2, 1e3, 1e4, 1e5}) {
    const ThermoReport r = thermo_report({2, Labels::WithColors, Statistics::Bose}, {1.0, l});
    const double dev = r.delta_s - kTwoLn2;
    CHECK(dev > 0.0);
    CHECK(dev < prev);
    prev = dev;
  }
  CHECK(prev < 1e-4);
}

TEST_CASE("uncolored pair mixing entropy vanishes classically") {
  for (Statistics stat : {Statistics::Bose, Statistics::Fermi}) {
    const ThermoReport r = thermo_report({2, Labels::WithoutColors, stat}, {1.0, 1e4});
    CHECK(std::abs(r.delta_s) < 1e-3);
  }
}

TEST_CASE("work equals the free energy change") {
  for (Statistics stat : {Statistics::Bose, Statistics::Fermi}) {
    for (Labels labels : {Labels::WithColors, Labels::WithoutColors}) {
      for (double beta : {0.2, 1.0, 5.0}) {
        const PhysicalConfig c{beta, 4.0};
        const ThermoReport r = thermo_report({4, labels, stat}, c);
        const double t = 1.0 / beta;
        const double expected = (r.mean_energy_mixed - r.mean_energy_unmixed) -
                                t * (r.s_mixed - r.s_unmixed);
        CHECK(r.work == doctest::Approx(expected).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("entropy keeps relative precision deep in the quantum regime") {
  // Three particles per color in the full well; the lowest excitation costs 3
  // (bosons) or 7 (fermions) exponent units, x = q^gap, and S ~ 2x(1 - ln x).
  const PhysicalConfig c{10.0, 1.0};
  const double lq = log_boltzmann_base(c);
  for (auto [stat, gap] : {std::pair{Statistics::Bose, 3}, std::pair{Statistics::Fermi, 7}}) {
    const PartitionResult p =
        scenario_partition({6, Labels::WithColors, Stage::Mixed, stat}, c);
    const double x = std::exp(gap * lq);
    CHECK(entropy(p, c) == doctest::Approx(2 * x * (1 - gap * lq)).epsilon(1e-12));
    const ThermoReport r = thermo_report({6, Labels::WithColors, stat}, c);
    CHECK(r.s_unmixed >= 0.0);
    CHECK(r.delta_s > 0.0);
  }
}

TEST_CASE("mean energy follows the ground state at low temperature") {
  const PhysicalConfig c{60.0, 1.0};
  const PartitionResult p = scenario_partition(
      {2, Labels::WithoutColors, Stage::Mixed, Statistics::Fermi}, c);
  CHECK(mean_energy(p, c) == doctest::Approx(5.0 * energy_quantum(c)).epsilon(1e-12));
}

TEST_CASE("mismatched partitions are rejected") {
  const PhysicalConfig c{1.0, 2.0};
  const PartitionResult u =
      scenario_partition({2, Labels::WithColors, Stage::Unmixed, Statistics::Bose}, c);
  const PartitionResult m =
      scenario_partition({2, Labels::WithColors, Stage::Mixed, Statistics::Bose}, c);
  const PartitionResult mf =
      scenario_partition({2, Labels::WithColors, Stage::Mixed, Statistics::Fermi}, c);
  CHECK_NOTHROW(delta_entropy(u, m, c));
  CHECK_THROWS_AS(delta_entropy(m, u, c), MismatchError);
  CHECK_THROWS_AS(work(u, mf, c), MismatchError);
  CHECK_THROWS_AS(entropy(u, PhysicalConfig{2.0, 2.0}), MismatchError);
}

TEST_CASE("power law fit recovers a synthetic exponent") {
  std::vector<double> x;
  std::vector<double> y;
  for (int i = 0; i < 20; ++i) {
    x.push_back(std::pow(10.0, i * 0.2));
    y.push_back(-3.0 * std::pow(x.back(), 0.5));
  }
  const PowerLawFit fit = fit_power_law(x, y, 10);
  CHECK(fit.slope == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(fit.intercept == doctest::Approx(std::log(3.0)).epsilon(1e-12));
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
  y[15] = -y[15];
  CHECK_THROWS_AS(fit_power_law(x, y, 10), FitError);
  CHECK_NOTHROW(fit_power_law(x, y, 4));
  CHECK_THROWS_AS(fit_power_law(x, y, 1), FitError);
  CHECK_THROWS_AS(fit_power_law(x, std::vector<double>(3, 1.0), 2), FitError);
}

TEST_CASE("work exponents of the two pair setups") {
  const std::vector<double> betas = geometric_temperature_grid(1e2, 1e5, 31);
  CHECK(betas.size() == 31);
  CHECK(1.0 / betas.front() == doctest::Approx(1e2));
  CHECK(1.0 / betas.back() == doctest::Approx(1e5));
  const PowerLawFit without =
      asymptotic_work_exponent({2, Labels::WithoutColors, Statistics::Bose}, 10.0, betas, 16);
  const PowerLawFit with =
      asymptotic_work_exponent({2, Labels::WithColors, Statistics::Bose}, 10.0, betas, 16);
  CHECK(without.r_squared > 0.999);
  CHECK(with.r_squared > 0.999);
  CHECK(without.slope == doctest::Approx(0.5).epsilon(0.01));
  CHECK(with.slope == doctest::Approx(1.0).epsilon(0.01));
  CHECK_THROWS_AS(geometric_temperature_grid(0.0, 1.0, 5), InvalidArgument);
}
