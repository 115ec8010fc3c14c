#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gibbs/core_model.hpp"

namespace gibbs {

enum class SweptParameter { Beta, Length };
enum class Spacing { Linear, Geometric };

struct SweepRequest {
  int n_particles = 2;
  Labels labels = Labels::WithColors;
  SweptParameter swept = SweptParameter::Length;
  double fixed = 1.0;  // the parameter that is not swept
  double start = 1.0;
  double stop = 100.0;
  int count = 50;
  Spacing spacing = Spacing::Geometric;
  int threads = 0;  // 0 picks hardware concurrency

  void validate() const;
};

std::vector<double> sweep_grid(const SweepRequest& request);

struct SweepRow {
  double param = 0.0;
  double delta_s_bose = 0.0;
  double delta_s_fermi = 0.0;
  double delta_s_dist = 0.0;
  double work_bose = 0.0;
  double work_fermi = 0.0;
  double work_dist = 0.0;
  double classical_ref = 0.0;
};

/// Classical mixing entropy drawn as the reference line: 2 ln 2 for two
/// particles, N ln 2 with colors and 0 without colors for larger N.
double classical_reference(int n_particles, Labels labels);

/// Distinguishable columns always use the colored setup, which is how
/// non-identical atoms are prepared in either experiment.
SweepRow sweep_point(const SweepRequest& request, double param);

/// Rows in grid order. Grid points are evaluated concurrently. A numeric
/// failure aborts with the offending parameter value in the message.
std::vector<SweepRow> run_sweep(const SweepRequest& request);

inline constexpr const char* kSweepCsvHeader =
    "param,delta_s_bose,delta_s_fermi,delta_s_dist,work_bose,work_fermi,work_dist,"
    "classical_ref";

void write_csv(std::ostream& out, std::span<const SweepRow> rows);
std::string sweep_csv(const SweepRequest& request);
/// Throws IoError if the file cannot be written.
void write_sweep_file(const SweepRequest& request, const std::string& path);

}  // namespace gibbs
