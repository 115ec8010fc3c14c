#include <string>

#include "doctest.h"
#include "gibbs/ensembles.hpp"
#include "gibbs/errors.hpp"
#include "gibbs/verify.hpp"

using namespace gibbs;

TEST_CASE("quick profile passes") {
  VerifyOptions o;
  o.profile = "quick";
  for (const CheckResult& c : run_verification(o)) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.passed);
  }
}

TEST_CASE("a flipped fermion sign is caught by the regression") {
  const ZnGenerator flipped = [](int n, Statistics stat, double q) {
    const Statistics other = stat == Statistics::Fermi ? Statistics::Bose : Statistics::Fermi;
    return zn_ideal(n, other, Well::Full, q).value;
  };
  const CheckResult r = check_low_order_regression(flipped);
  CHECK_FALSE(r.passed);
  CHECK(r.measured > 1e-3);
  CHECK(check_low_order_regression().passed);
}

TEST_CASE("forced small cutoff yields a diagnostic") {
  const CheckResult r = check_oracle_equivalence(0.5, 3);
  CHECK_FALSE(r.passed);
  CHECK(r.detail.find("cutoff too small") != std::string::npos);
}

TEST_CASE("unknown profile") {
  VerifyOptions o;
  o.profile = "strict";
  CHECK_THROWS_AS(run_verification(o), InvalidArgument);
}
