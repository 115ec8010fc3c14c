#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gibbs/core_model.hpp"

namespace gibbs {

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;   // worst observed deviation, or the reported quantity
  double threshold = 0.0;
  std::string detail;
};

/// Z_n generator under test: (n, statistics, q) -> Z_n in the full well.
using ZnGenerator = std::function<double(int, Statistics, double)>;

CheckResult check_duality();
CheckResult check_low_order_regression(const ZnGenerator& generator);
CheckResult check_low_order_regression();
CheckResult check_oracle_equivalence(double q, int forced_n_max = 0);
CheckResult check_species_equality(int grid_points);
CheckResult check_classical_pair();
CheckResult check_classical_four();
CheckResult check_entropy_identity(double q);
CheckResult check_low_temperature_split();
CheckResult check_work_identity();
CheckResult check_work_exponent();

struct VerifyOptions {
  std::string profile = "default";  // "default" or "quick"
  int oracle_n_max = 0;             // forces the oracle cutoff when > 0
};

std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

}  // namespace gibbs
