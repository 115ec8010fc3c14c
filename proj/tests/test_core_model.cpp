#include <cmath>
#include <limits>

#include "doctest.h"
#include "gibbs/core_model.hpp"
#include "gibbs/errors.hpp"

using namespace gibbs;

TEST_CASE("nome at beta=1, l=10") {
  const PhysicalConfig c{1.0, 10.0};
  CHECK(boltzmann_base(c) == doctest::Approx(0.95184980736927344874).epsilon(1e-15));
  CHECK(log_boltzmann_base(c) == doctest::Approx(-kPi * kPi / 200.0).epsilon(1e-15));
  CHECK(energy_quantum(c) == doctest::Approx(kPi * kPi / 200.0));
}

TEST_CASE("nome keeps precision next to one") {
  const PhysicalConfig c{1.0, 1e7};
  const Nome q = nome(c);
  CHECK(q.log() == doctest::Approx(-kPi * kPi / 2e14).epsilon(1e-15));
  CHECK(q.value() < 1.0);
  CHECK(q.pow(4).log() == doctest::Approx(4.0 * q.log()).epsilon(1e-15));
}

TEST_CASE("nome construction guards") {
  CHECK_THROWS_AS(Nome::from_value(1.0), InvalidArgument);
  CHECK_THROWS_AS(Nome::from_value(-0.1), InvalidArgument);
  CHECK_THROWS_AS(Nome::from_log(0.0), InvalidArgument);
  CHECK(Nome::from_value(0.0).is_zero());
  CHECK(Nome::from_value(0.0).value() == 0.0);
  CHECK_THROWS_AS(Nome::from_value(0.5).pow(0), InvalidArgument);
}

TEST_CASE("physical config validation") {
  CHECK_NOTHROW((PhysicalConfig{0.5, 3.0}.validate()));
  CHECK_THROWS_AS((PhysicalConfig{0.0, 1.0}.validate()), InvalidArgument);
  CHECK_THROWS_AS((PhysicalConfig{1.0, -2.0}.validate()), InvalidArgument);
  CHECK_THROWS_AS((PhysicalConfig{std::numeric_limits<double>::infinity(), 1.0}.validate()),
                  InvalidArgument);
  CHECK_THROWS_AS(boltzmann_base(PhysicalConfig{-1.0, 1.0}), InvalidArgument);
}

TEST_CASE("level exponents are integer") {
  CHECK(level_weight_exponent(Well::Full, 1) == 1);
  CHECK(level_weight_exponent(Well::Full, 3) == 9);
  CHECK(level_weight_exponent(Well::Half, 1) == 4);
  CHECK(level_weight_exponent(Well::Half, 5) == 100);
  CHECK_THROWS_AS(level_weight_exponent(Well::Full, 0), InvalidArgument);
}

TEST_CASE("scenario validation") {
  CHECK_NOTHROW((ScenarioSpec{2, Labels::WithColors, Stage::Unmixed, Statistics::Bose}.validate()));
  CHECK_NOTHROW(
      (ScenarioSpec{64, Labels::WithoutColors, Stage::Mixed, Statistics::Fermi}.validate()));
  CHECK_THROWS_AS(
      (ScenarioSpec{3, Labels::WithColors, Stage::Unmixed, Statistics::Bose}.validate()),
      InvalidArgument);
  CHECK_THROWS_AS(
      (ScenarioSpec{0, Labels::WithColors, Stage::Unmixed, Statistics::Bose}.validate()),
      InvalidArgument);
  CHECK_THROWS_AS(
      (ScenarioSpec{66, Labels::WithColors, Stage::Unmixed, Statistics::Bose}.validate()),
      InvalidArgument);
  CHECK_THROWS_AS((ScenarioSpec{2, Labels::WithoutColors, Stage::Mixed,
                                Statistics::Distinguishable}
                       .validate()),
                  InvalidArgument);
}

TEST_CASE("names round trip") {
  for (Statistics s : {Statistics::Bose, Statistics::Fermi, Statistics::Distinguishable}) {
    CHECK(parse_statistics(to_string(s)) == s);
  }
  for (Labels l : {Labels::WithColors, Labels::WithoutColors}) {
    CHECK(parse_labels(to_string(l)) == l);
  }
  CHECK_FALSE(parse_statistics("boson").has_value());
  const ScenarioSpec s{4, Labels::WithoutColors, Stage::Mixed, Statistics::Fermi};
  CHECK(s.with_stage(Stage::Unmixed).stage == Stage::Unmixed);
  CHECK(describe(s).find("N=4") != std::string::npos);
}
