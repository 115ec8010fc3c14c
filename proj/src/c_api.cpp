#include "gibbs/gibbs.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>
#include <vector>

#include "gibbs/ensembles.hpp"
#include "gibbs/errors.hpp"
#include "gibbs/format.hpp"
#include "gibbs/sweep.hpp"
#include "gibbs/thermo.hpp"
#include "gibbs/theta.hpp"
#include "gibbs/verify.hpp"

struct gibbs_report {
  gibbs::ThermoReport report;
};

struct gibbs_verification {
  std::vector<gibbs::CheckResult> checks;
};

namespace {

thread_local std::string last_error;

template <class Fn>
gibbs_status guard(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return GIBBS_OK;
  } catch (const gibbs::InvalidArgument& e) {
    last_error = e.what();
    return GIBBS_ERR_INVALID_ARGUMENT;
  } catch (const gibbs::RangeError& e) {
    last_error = e.what();
    return GIBBS_ERR_RANGE;
  } catch (const gibbs::MismatchError& e) {
    last_error = e.what();
    return GIBBS_ERR_MISMATCH;
  } catch (const gibbs::CutoffError& e) {
    last_error = e.what();
    return GIBBS_ERR_CUTOFF;
  } catch (const gibbs::FitError& e) {
    last_error = e.what();
    return GIBBS_ERR_FIT;
  } catch (const gibbs::IoError& e) {
    last_error = e.what();
    return GIBBS_ERR_IO;
  } catch (const std::exception& e) {
    last_error = e.what();
    return GIBBS_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return GIBBS_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw gibbs::InvalidArgument(std::string(what) + " must not be null");
}

gibbs::Statistics to_cpp(gibbs_statistics s) {
  switch (s) {
    case GIBBS_BOSE: return gibbs::Statistics::Bose;
    case GIBBS_FERMI: return gibbs::Statistics::Fermi;
    case GIBBS_DISTINGUISHABLE: return gibbs::Statistics::Distinguishable;
  }
  throw gibbs::InvalidArgument("unknown statistics value");
}

gibbs::Labels to_cpp(gibbs_labels l) {
  switch (l) {
    case GIBBS_WITH_COLORS: return gibbs::Labels::WithColors;
    case GIBBS_WITHOUT_COLORS: return gibbs::Labels::WithoutColors;
  }
  throw gibbs::InvalidArgument("unknown label mode");
}

gibbs::Stage to_cpp(gibbs_stage s) {
  switch (s) {
    case GIBBS_UNMIXED: return gibbs::Stage::Unmixed;
    case GIBBS_MIXED: return gibbs::Stage::Mixed;
  }
  throw gibbs::InvalidArgument("unknown stage");
}

gibbs::Well to_cpp(gibbs_well w) {
  switch (w) {
    case GIBBS_FULL_WELL: return gibbs::Well::Full;
    case GIBBS_HALF_WELL: return gibbs::Well::Half;
  }
  throw gibbs::InvalidArgument("unknown well");
}

gibbs::SweepRequest to_cpp(const gibbs_sweep_request& r) {
  gibbs::SweepRequest out;
  out.n_particles = r.n_particles;
  out.labels = to_cpp(r.labels);
  switch (r.swept) {
    case GIBBS_SWEEP_BETA: out.swept = gibbs::SweptParameter::Beta; break;
    case GIBBS_SWEEP_LENGTH: out.swept = gibbs::SweptParameter::Length; break;
    default: throw gibbs::InvalidArgument("unknown swept parameter");
  }
  switch (r.spacing) {
    case GIBBS_SPACING_LINEAR: out.spacing = gibbs::Spacing::Linear; break;
    case GIBBS_SPACING_GEOMETRIC: out.spacing = gibbs::Spacing::Geometric; break;
    default: throw gibbs::InvalidArgument("unknown spacing");
  }
  out.fixed = r.fixed;
  out.start = r.start;
  out.stop = r.stop;
  out.count = r.count;
  out.threads = r.threads;
  return out;
}

void store(const gibbs::SeriesValue& s, gibbs_series* out) {
  out->value = s.value;
  out->error_bound = s.error_bound;
  out->terms_used = s.terms_used;
}

constexpr const char* kFieldNames[GIBBS_FIELD_COUNT] = {
    "beta",          "length",           "q",
    "z_unmixed",     "z_unmixed_err",    "z_mixed",
    "z_mixed_err",   "mean_energy_unmixed", "mean_energy_mixed",
    "s_unmixed",     "s_mixed",          "delta_s",
    "delta_s_err",   "work",             "work_err"};

}  // namespace

extern "C" {

const char* gibbs_version(void) { return "1.0.0"; }

const char* gibbs_last_error(void) { return last_error.c_str(); }

const char* gibbs_status_name(gibbs_status status) {
  switch (status) {
    case GIBBS_OK: return "ok";
    case GIBBS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GIBBS_ERR_RANGE: return "numeric range failure";
    case GIBBS_ERR_MISMATCH: return "parameter mismatch";
    case GIBBS_ERR_CUTOFF: return "cutoff too small";
    case GIBBS_ERR_FIT: return "fit failure";
    case GIBBS_ERR_IO: return "i/o failure";
    case GIBBS_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

gibbs_status gibbs_format_number(double x, char* buffer, size_t len) {
  return guard([&] {
    require(buffer, "buffer");
    const std::string s = gibbs::format_number(x);
    if (s.size() + 1 > len) throw gibbs::InvalidArgument("buffer too small");
    std::memcpy(buffer, s.c_str(), s.size() + 1);
  });
}

gibbs_status gibbs_boltzmann_base(double beta, double length, double* q) {
  return guard([&] {
    require(q, "q");
    *q = gibbs::boltzmann_base({beta, length});
  });
}

gibbs_status gibbs_theta3(double q, double tol, gibbs_series* out) {
  return guard([&] {
    require(out, "out");
    store(gibbs::theta3(q, tol), out);
  });
}

gibbs_status gibbs_z1(double tau, double tol, gibbs_series* out) {
  return guard([&] {
    require(out, "out");
    store(gibbs::z1(tau, tol), out);
  });
}

gibbs_status gibbs_weighted_series(double tau, int power, double tol, gibbs_series* out) {
  return guard([&] {
    require(out, "out");
    store(gibbs::weighted_series(tau, power, tol), out);
  });
}

gibbs_status gibbs_zn_ideal(int n, gibbs_statistics stat, gibbs_well well, double q,
                            double tol, gibbs_series* out) {
  return guard([&] {
    require(out, "out");
    store(gibbs::zn_ideal(n, to_cpp(stat), to_cpp(well), q, tol), out);
  });
}

gibbs_status gibbs_scenario_partition(int n, gibbs_labels labels, gibbs_stage stage,
                                      gibbs_statistics stat, double beta, double length,
                                      double* z, double* log_z) {
  return guard([&] {
    const gibbs::PartitionResult r = gibbs::scenario_partition(
        {n, to_cpp(labels), to_cpp(stage), to_cpp(stat)}, {beta, length});
    if (z) *z = r.z.value;
    if (log_z) *log_z = r.log_z;
  });
}

gibbs_status gibbs_report_create(int n, gibbs_labels labels, gibbs_statistics stat,
                                 double beta, double length, gibbs_report** out) {
  return guard([&] {
    require(out, "out");
    *out = nullptr;
    auto handle = new gibbs_report{
        gibbs::thermo_report({n, to_cpp(labels), to_cpp(stat)}, {beta, length})};
    *out = handle;
  });
}

gibbs_status gibbs_report_get(const gibbs_report* report, gibbs_report_field field,
                              double* out) {
  return guard([&] {
    require(report, "report");
    require(out, "out");
    const gibbs::ThermoReport& r = report->report;
    switch (field) {
      case GIBBS_FIELD_BETA: *out = r.beta; break;
      case GIBBS_FIELD_LENGTH: *out = r.length; break;
      case GIBBS_FIELD_Q: *out = r.q; break;
      case GIBBS_FIELD_Z_UNMIXED: *out = r.z_unmixed; break;
      case GIBBS_FIELD_Z_UNMIXED_ERR: *out = r.z_unmixed_err; break;
      case GIBBS_FIELD_Z_MIXED: *out = r.z_mixed; break;
      case GIBBS_FIELD_Z_MIXED_ERR: *out = r.z_mixed_err; break;
      case GIBBS_FIELD_MEAN_ENERGY_UNMIXED: *out = r.mean_energy_unmixed; break;
      case GIBBS_FIELD_MEAN_ENERGY_MIXED: *out = r.mean_energy_mixed; break;
      case GIBBS_FIELD_S_UNMIXED: *out = r.s_unmixed; break;
      case GIBBS_FIELD_S_MIXED: *out = r.s_mixed; break;
      case GIBBS_FIELD_DELTA_S: *out = r.delta_s; break;
      case GIBBS_FIELD_DELTA_S_ERR: *out = r.delta_s_err; break;
      case GIBBS_FIELD_WORK: *out = r.work; break;
      case GIBBS_FIELD_WORK_ERR: *out = r.work_err; break;
      default: throw gibbs::InvalidArgument("unknown report field");
    }
  });
}

const char* gibbs_report_field_name(gibbs_report_field field) {
  if (field < 0 || field >= GIBBS_FIELD_COUNT) return nullptr;
  return kFieldNames[field];
}

void gibbs_report_destroy(gibbs_report* report) { delete report; }

gibbs_status gibbs_sweep_write_csv(const gibbs_sweep_request* request, const char* path) {
  return guard([&] {
    require(request, "request");
    require(path, "path");
    gibbs::write_sweep_file(to_cpp(*request), path);
  });
}

gibbs_status gibbs_sweep_csv(const gibbs_sweep_request* request, char** out) {
  return guard([&] {
    require(request, "request");
    require(out, "out");
    *out = nullptr;
    const std::string csv = gibbs::sweep_csv(to_cpp(*request));
    char* text = static_cast<char*>(std::malloc(csv.size() + 1));
    if (text == nullptr) throw std::bad_alloc();
    std::memcpy(text, csv.c_str(), csv.size() + 1);
    *out = text;
  });
}

void gibbs_string_free(char* text) { std::free(text); }

gibbs_status gibbs_work_exponent(int n, gibbs_labels labels, gibbs_statistics stat,
                                 double length, double t_min, double t_max, int points,
                                 int tail_points, double* slope, double* r_squared) {
  return guard([&] {
    require(slope, "slope");
    const std::vector<double> betas = gibbs::geometric_temperature_grid(t_min, t_max, points);
    const gibbs::PowerLawFit fit = gibbs::asymptotic_work_exponent(
        {n, to_cpp(labels), to_cpp(stat)}, length, betas, tail_points);
    *slope = fit.slope;
    if (r_squared) *r_squared = fit.r_squared;
  });
}

gibbs_status gibbs_verify_run(const char* profile, int oracle_n_max,
                              gibbs_verification** out) {
  return guard([&] {
    require(out, "out");
    *out = nullptr;
    gibbs::VerifyOptions options;
    if (profile) options.profile = profile;
    options.oracle_n_max = oracle_n_max;
    *out = new gibbs_verification{gibbs::run_verification(options)};
  });
}

size_t gibbs_verification_count(const gibbs_verification* v) {
  return v ? v->checks.size() : 0;
}

gibbs_status gibbs_verification_get(const gibbs_verification* v, size_t index,
                                    gibbs_check* out) {
  return guard([&] {
    require(v, "verification");
    require(out, "out");
    if (index >= v->checks.size()) throw gibbs::InvalidArgument("check index out of range");
    const gibbs::CheckResult& c = v->checks[index];
    out->name = c.name.c_str();
    out->passed = c.passed ? 1 : 0;
    out->measured = c.measured;
    out->threshold = c.threshold;
    out->detail = c.detail.c_str();
  });
}

int gibbs_verification_all_passed(const gibbs_verification* v) {
  if (v == nullptr || v->checks.empty()) return 0;
  for (const auto& c : v->checks) {
    if (!c.passed) return 0;
  }
  return 1;
}

void gibbs_verification_destroy(gibbs_verification* v) { delete v; }

}  // extern "C"
