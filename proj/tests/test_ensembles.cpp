#include <array>
#include <cmath>

#include "doctest.h"
#include "gibbs/ensembles.hpp"
#include "gibbs/errors.hpp"
#include "gibbs/oracle.hpp"
#include "gibbs/reference.hpp"

using namespace gibbs;

namespace {

PhysicalConfig config_for_nome(double q) { return {-2.0 * std::log(q) / (kPi * kPi), 1.0}; }

double relative(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("jet keeps the ground factor symbolic") {
  const double lq = std::log(0.3);
  const Jet a = Jet::monomial(2, lq);
  const Jet b = Jet::monomial(5, lq);
  const Jet s = a + b;
  CHECK(s.ground == 2);
  CHECK(s.degeneracy == 1.0);
  CHECK(s.excess == doctest::Approx(std::pow(0.3, 3)));
  CHECK(s.excess_deriv == doctest::Approx(3 * lq * std::pow(0.3, 3)));
  CHECK(s.value() == doctest::Approx(0.09 + std::pow(0.3, 5)).epsilon(1e-15));
  const Jet p = s * s;
  CHECK(p.ground == 4);
  CHECK(p.value() == doctest::Approx(s.value() * s.value()).epsilon(1e-15));
  CHECK(p.beta_deriv() ==
        doctest::Approx(2 * s.value() * s.beta_deriv()).epsilon(1e-14));
  const Jet d = (s + s) / 2.0;
  CHECK(d.value() == doctest::Approx(s.value()).epsilon(1e-15));
  CHECK((s - s).reduced() == 0.0);
  CHECK((Jet(0.0) + a).ground == 2);
  CHECK((Jet(1.0) * a).log_q == lq);
}

TEST_CASE("cycle recursion on plain numbers reproduces the low-order table") {
  for (double q : {0.1, 0.5, 0.9}) {
    std::array<double, 4> z{};
    for (int k = 1; k <= 4; ++k) z[k - 1] = reference::z1_high_precision(q, k).convert_to<double>();
    const auto bose = cycle_recursion<double>(z, 4, +1);
    for (int n = 2; n <= 4; ++n) {
      CHECK(relative(bose[n], reference::low_order_reference(n, Statistics::Bose, q)) <= 1e-14);
    }
  }
  // The alternating sum in double precision is only trustworthy when hot.
  std::array<double, 4> z{};
  for (int k = 1; k <= 4; ++k) z[k - 1] = reference::z1_high_precision(0.9, k).convert_to<double>();
  CHECK(relative(cycle_recursion<double>(z, 4, -1)[4],
                 reference::low_order_reference(4, Statistics::Fermi, 0.9)) <= 1e-12);
  for (int k = 1; k <= 4; ++k) z[k - 1] = reference::z1_high_precision(0.1, k).convert_to<double>();
  CHECK(relative(cycle_recursion<double>(z, 4, -1)[4],
                 reference::low_order_reference(4, Statistics::Fermi, 0.1)) > 1e-3);
}

TEST_CASE("cycle recursion in 50-digit arithmetic") {
  using reference::HighPrecision;
  std::array<HighPrecision, 4> z;
  for (int k = 1; k <= 4; ++k) z[k - 1] = reference::z1_high_precision(0.1, k);
  const auto fermi = cycle_recursion<HighPrecision>(std::span<const HighPrecision>(z), 4, -1);
  CHECK(relative(static_cast<double>(fermi[4]),
                 reference::low_order_reference(4, Statistics::Fermi, 0.1)) <= 1e-14);
}

TEST_CASE("engine Z_n matches high-precision low-order forms") {
  for (double q : {0.1, 0.5, 0.9}) {
    for (Statistics stat : {Statistics::Bose, Statistics::Fermi}) {
      for (int n = 2; n <= 4; ++n) {
        CHECK(relative(zn_ideal(n, stat, Well::Full, q).value,
                       reference::low_order_reference(n, stat, q)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("Z_3 Bose at q=0.5 matches multiset enumeration over 40 levels") {
  const double frozen = 0.14338574127167933334;
  const double engine = zn_ideal(3, Statistics::Bose, Well::Full, 0.5).value;
  CHECK(relative(engine, frozen) <= 1e-14);
  const StateList states =
      enumerate_group(TruncatedSpectrum::build(Well::Full, 40), 3, Statistics::Bose);
  CHECK(relative(oracle_partition(states, Nome::from_value(0.5)), engine) <= 1e-14);
}

TEST_CASE("distinguishable particles factorize") {
  for (double q : {0.2, 0.7, 0.99}) {
    const double z = zn_ideal(1, Statistics::Distinguishable, Well::Full, q).value;
    for (int n : {2, 5, 10}) {
      CHECK(relative(zn_ideal(n, Statistics::Distinguishable, Well::Full, q).value,
                     std::pow(z, n)) <= 1e-13);
    }
  }
}

TEST_CASE("bosons outweigh fermions") {
  for (double q : {0.05, 0.3, 0.6, 0.95}) {
    for (int n : {2, 3, 6, 12}) {
      CHECK(zn_ideal(n, Statistics::Bose, Well::Full, q).value >
            zn_ideal(n, Statistics::Fermi, Well::Full, q).value);
    }
  }
}

TEST_CASE("fermion level sum and recursion agree where both are usable") {
  const Nome q = Nome::from_value(0.995);
  const ZnTable rec = zn_table(4, Statistics::Fermi, Well::Full, q);
  CHECK_FALSE(rec.level_summed);
  const auto lev = fermi_level_sum(4, q, 1);
  for (int k = 1; k <= 4; ++k) {
    CHECK(relative(lev[k].value(), rec.z[k].value()) <= 1e-11);
    CHECK(relative(lev[k].beta_deriv(), rec.z[k].beta_deriv()) <= 1e-10);
  }
  CHECK(zn_table(6, Statistics::Fermi, Well::Full, Nome::from_value(0.2)).level_summed);
}

TEST_CASE("fermion level sum at low temperature is ground dominated") {
  const Nome q = Nome::from_value(1e-3);
  const auto e = fermi_level_sum(3, q, 1);
  // Ground 1+4+9, first excitation 1+4+16.
  CHECK(e[3].ground == 14);
  CHECK(e[3].degeneracy == 1.0);
  CHECK(relative(e[3].excess, std::pow(1e-3, 7) * (1 + std::pow(1e-3, 9))) <= 1e-6);
}

TEST_CASE("colored pair unmixed at q=0.5") {
  const PartitionResult r = scenario_partition(
      {2, Labels::WithColors, Stage::Unmixed, Statistics::Bose}, config_for_nome(0.5));
  CHECK(relative(r.z.value, 0.0039081575832828896536) <= 1e-13);
  CHECK(r.q == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("uncolored pair matches its theta closed forms") {
  for (double q : {0.2, 0.5, 0.8}) {
    const PhysicalConfig c = config_for_nome(q);
    for (Stage stage : {Stage::Unmixed, Stage::Mixed}) {
      for (Statistics stat : {Statistics::Bose, Statistics::Fermi}) {
        const double engine =
            scenario_partition({2, Labels::WithoutColors, stage, stat}, c).z.value;
        // Same closed form with theta_3 - 1 = 2 Z1 in 50 digits.
        using reference::z1_high_precision;
        const double s = stat == Statistics::Fermi ? -1.0 : 1.0;
        const auto exact =
            stage == Stage::Unmixed
                ? 2 * z1_high_precision(q, 4) * z1_high_precision(q, 4) + s * z1_high_precision(q, 8)
                : z1_high_precision(q, 1) * z1_high_precision(q, 1) / 2 +
                      s * z1_high_precision(q, 2) / 2;
        CHECK(relative(engine, static_cast<double>(exact)) <= 1e-13);
        CHECK(relative(reference::uncolored_pair_theta_form(stage, stat, nome(c)),
                       static_cast<double>(exact)) <= 1e-10);
      }
    }
  }
}

TEST_CASE("colored scenario partitions do not depend on statistics for N=2") {
  const PhysicalConfig c{0.7, 3.0};
  for (Stage stage : {Stage::Unmixed, Stage::Mixed}) {
    const double b = scenario_partition({2, Labels::WithColors, stage, Statistics::Bose}, c).z.value;
    const double f = scenario_partition({2, Labels::WithColors, stage, Statistics::Fermi}, c).z.value;
    const double d =
        scenario_partition({2, Labels::WithColors, stage, Statistics::Distinguishable}, c).z.value;
    CHECK(b == f);
    CHECK(relative(b, d) <= 1e-15);
  }
}

TEST_CASE("large N stays finite at both ends of temperature") {
  for (Statistics stat : {Statistics::Bose, Statistics::Fermi, Statistics::Distinguishable}) {
    const PartitionResult hot =
        scenario_partition({64, Labels::WithColors, Stage::Mixed, stat}, {1.0, 1e3});
    CHECK(std::isfinite(hot.log_z));
    const PartitionResult cold =
        scenario_partition({64, Labels::WithColors, Stage::Unmixed, stat}, {50.0, 1.0});
    CHECK(std::isfinite(cold.log_z));
    CHECK(cold.log_z < -700.0);  // value itself underflows; the logarithm does not
  }
}

TEST_CASE("ensemble guards") {
  CHECK_THROWS_AS(zn_ideal(2, Statistics::Bose, Well::Full, 1.0), InvalidArgument);
  CHECK_THROWS_AS(zn_ideal(-1, Statistics::Bose, Well::Full, 0.5), InvalidArgument);
  CHECK_THROWS_AS(zn_ideal(65, Statistics::Bose, Well::Full, 0.5), InvalidArgument);
  CHECK_THROWS_AS(zn_ideal(2, Statistics::Bose, Well::Full, 0.5, 0.0), InvalidArgument);
  CHECK_THROWS_AS(
      scenario_partition({3, Labels::WithColors, Stage::Mixed, Statistics::Bose}, {1.0, 1.0}),
      InvalidArgument);
  CHECK(zn_ideal(0, Statistics::Fermi, Well::Half, 0.5).value == 1.0);
}
