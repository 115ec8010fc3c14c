#include "gibbs/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <fstream>
#include <numbers>
#include <sstream>
#include <thread>

#include "gibbs/errors.hpp"
#include "gibbs/format.hpp"
#include "gibbs/thermo.hpp"

namespace gibbs {

void SweepRequest::validate() const {
  if (n_particles < 2 || n_particles % 2 != 0 || n_particles > kMaxParticles) {
    throw InvalidArgument("sweep particle number must be even and in [2, 64]");
  }
  if (!(std::isfinite(start) && std::isfinite(stop) && start < stop)) {
    throw InvalidArgument("sweep needs start < stop");
  }
  if (count < 2) throw InvalidArgument("sweep needs at least two grid points");
  if (!(start > 0.0)) throw InvalidArgument("swept parameter must stay positive");
  if (!(std::isfinite(fixed) && fixed > 0.0)) {
    throw InvalidArgument("fixed parameter must be finite and positive");
  }
  if (threads < 0) throw InvalidArgument("thread count must be non-negative");
}

std::vector<double> sweep_grid(const SweepRequest& request) {
  request.validate();
  std::vector<double> grid(static_cast<std::size_t>(request.count));
  const double last = request.count - 1;
  for (int i = 0; i < request.count; ++i) {
    const double f = i / last;
    grid[i] = request.spacing == Spacing::Linear
                  ? request.start + f * (request.stop - request.start)
                  : request.start * std::pow(request.stop / request.start, f);
  }
  grid.front() = request.start;
  grid.back() = request.stop;
  return grid;
}

double classical_reference(int n_particles, Labels labels) {
  if (n_particles == 2) return 2.0 * std::numbers::ln2;
  return labels == Labels::WithColors ? n_particles * std::numbers::ln2 : 0.0;
}

SweepRow sweep_point(const SweepRequest& request, double param) {
  const PhysicalConfig config = request.swept == SweptParameter::Beta
                                    ? PhysicalConfig{param, request.fixed}
                                    : PhysicalConfig{request.fixed, param};
  auto eval = [&](Labels labels, Statistics stat) {
    return thermo_report({request.n_particles, labels, stat}, config);
  };
  const ThermoReport bose = eval(request.labels, Statistics::Bose);
  const ThermoReport fermi = eval(request.labels, Statistics::Fermi);
  const ThermoReport dist = eval(Labels::WithColors, Statistics::Distinguishable);
  return {param,      bose.delta_s, fermi.delta_s, dist.delta_s,
          bose.work,  fermi.work,   dist.work,
          classical_reference(request.n_particles, request.labels)};
}

std::vector<SweepRow> run_sweep(const SweepRequest& request) {
  const std::vector<double> grid = sweep_grid(request);
  std::vector<SweepRow> rows(grid.size());
  std::vector<std::exception_ptr> failures(grid.size());
  unsigned workers = request.threads > 0 ? static_cast<unsigned>(request.threads)
                                         : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(grid.size()));

  auto work_on = [&](unsigned id) {
    for (std::size_t i = id; i < grid.size(); i += workers) {
      try {
        rows[i] = sweep_point(request, grid[i]);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned id = 1; id < workers; ++id) pool.emplace_back(work_on, id);
    work_on(0);
  }

  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!failures[i]) continue;
    const std::string name = request.swept == SweptParameter::Beta ? "beta" : "length";
    try {
      std::rethrow_exception(failures[i]);
    } catch (const InvalidArgument& e) {
      throw InvalidArgument("sweep failed at " + name + "=" + format_number(grid[i]) + ": " +
                            e.what());
    } catch (const std::exception& e) {
      throw RangeError("sweep failed at " + name + "=" + format_number(grid[i]) + ": " +
                       e.what());
    }
  }
  return rows;
}

void write_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << kSweepCsvHeader << '\n';
  for (const SweepRow& r : rows) {
    out << format_number(r.param) << ',' << format_number(r.delta_s_bose) << ','
        << format_number(r.delta_s_fermi) << ',' << format_number(r.delta_s_dist) << ','
        << format_number(r.work_bose) << ',' << format_number(r.work_fermi) << ','
        << format_number(r.work_dist) << ',' << format_number(r.classical_ref) << '\n';
  }
}

std::string sweep_csv(const SweepRequest& request) {
  const std::vector<SweepRow> rows = run_sweep(request);
  std::ostringstream os;
  write_csv(os, rows);
  return os.str();
}

void write_sweep_file(const SweepRequest& request, const std::string& path) {
  const std::string csv = sweep_csv(request);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << csv;
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace gibbs
