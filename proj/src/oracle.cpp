#include "gibbs/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "gibbs/errors.hpp"

namespace gibbs {

TruncatedSpectrum TruncatedSpectrum::build(Well well, int n_max) {
  if (n_max < 1) throw InvalidArgument("spectrum needs at least one level");
  TruncatedSpectrum s;
  s.well = well;
  s.n_max = n_max;
  s.exponents.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) s.exponents.push_back(level_weight_exponent(well, n));
  return s;
}

namespace {

using Histogram = std::map<std::int64_t, std::uint64_t>;

StateList to_list(const Histogram& h) {
  StateList out;
  out.reserve(h.size());
  for (const auto& [e, m] : h) out.push_back({e, m});
  return out;
}

void enumerate(const std::vector<std::int64_t>& levels, int remaining, std::size_t first,
               Statistics stat, std::int64_t partial, Histogram& out) {
  if (remaining == 0) {
    ++out[partial];
    return;
  }
  const std::size_t begin = stat == Statistics::Distinguishable ? 0 : first;
  for (std::size_t i = begin; i < levels.size(); ++i) {
    const std::size_t next = stat == Statistics::Fermi ? i + 1 : i;
    enumerate(levels, remaining - 1, next, stat, partial + levels[i], out);
  }
}

// sum_{n > m} q^{scale n^2}, bounded geometrically.
double oracle_tail(Nome q, std::int64_t scale, int m) {
  const double t = q.log() * static_cast<double>(scale);
  const double next = m + 1.0;
  const double head = std::exp(next * next * t);
  if (head == 0.0) return 0.0;
  return head / -std::expm1((2.0 * next + 1.0) * t);
}

double truncated_sum(Nome q, std::int64_t scale, int m) {
  double s = 0.0;
  for (int n = m; n >= 1; --n) s += std::exp(static_cast<double>(scale) * n * n * q.log());
  return s;
}

// Upper bound on the relative weight of states touching a level above m:
// N * tail * s^{N-1} / Z, with s the per-particle single-state sum.
double relative_truncation_bound(const ScenarioSpec& sc, const StateList& states, Nome q,
                                 int m) {
  const std::int64_t scale = sc.stage == Stage::Unmixed ? 4 : 1;
  const double cells = (sc.stage == Stage::Unmixed && sc.labels == Labels::WithoutColors) ? 2.0 : 1.0;
  const double tail = cells * oracle_tail(q, scale, m);
  if (tail == 0.0) return 0.0;
  const double s = cells * truncated_sum(q, scale, m) + tail;
  const int n = sc.n_particles;
  const double log_bound = std::log(static_cast<double>(n)) + std::log(tail) +
                           (n - 1) * std::log(s);
  return std::exp(log_bound - oracle_log_partition(states, q));
}

}  // namespace

StateList enumerate_group(const TruncatedSpectrum& spectrum, int count, Statistics stat) {
  if (count < 0) throw InvalidArgument("particle count must be non-negative");
  Histogram h;
  enumerate(spectrum.exponents, count, 0, stat, 0, h);
  return to_list(h);
}

StateList combine(const StateList& a, const StateList& b) {
  Histogram h;
  for (const auto& x : a) {
    for (const auto& y : b) h[x.exponent + y.exponent] += x.multiplicity * y.multiplicity;
  }
  return to_list(h);
}

StateList merge(const StateList& a, const StateList& b) {
  Histogram h;
  for (const auto& x : a) h[x.exponent] += x.multiplicity;
  for (const auto& y : b) h[y.exponent] += y.multiplicity;
  return to_list(h);
}

StateList enumerate_states(const ScenarioSpec& scenario, const TruncatedSpectrum& spectrum) {
  scenario.validate();
  const Well expected = scenario.stage == Stage::Unmixed ? Well::Half : Well::Full;
  if (spectrum.well != expected) {
    throw InvalidArgument("spectrum well does not match the scenario stage");
  }
  const int n = scenario.n_particles;
  const Statistics stat = scenario.statistics;
  if (scenario.labels == Labels::WithColors) {
    // One color group per cell (unmixed) or both groups in the full well.
    const StateList group = enumerate_group(spectrum, n / 2, stat);
    return combine(group, group);
  }
  if (scenario.stage == Stage::Mixed) return enumerate_group(spectrum, n, stat);
  StateList all;
  for (int left = 0; left <= n; ++left) {
    all = merge(all, combine(enumerate_group(spectrum, left, stat),
                             enumerate_group(spectrum, n - left, stat)));
  }
  return all;
}

OracleStates enumerate_states(const ScenarioSpec& scenario, Nome q,
                              const OracleOptions& options) {
  scenario.validate();
  const Well well = scenario.stage == Stage::Unmixed ? Well::Half : Well::Full;
  auto attempt = [&](int m) {
    OracleStates out;
    out.n_max = m;
    out.states = enumerate_states(scenario, TruncatedSpectrum::build(well, m));
    out.truncation_bound = relative_truncation_bound(scenario, out.states, q, m);
    return out;
  };
  if (options.forced_n_max > 0) {
    OracleStates out = attempt(options.forced_n_max);
    if (!(out.truncation_bound < options.tolerance)) {
      throw CutoffError("cutoff too small: n_max=" + std::to_string(out.n_max) +
                        " leaves relative weight bound " +
                        std::to_string(out.truncation_bound) + " for " + describe(scenario));
    }
    return out;
  }
  int m = std::max(scenario.n_particles + 1, 4);
  while (m <= options.max_levels) {
    OracleStates out = attempt(m);
    if (out.truncation_bound < options.tolerance) return out;
    m += std::max(1, m / 4);
  }
  throw CutoffError("cutoff too small: no n_max <= " + std::to_string(options.max_levels) +
                    " meets the oracle tolerance for " + describe(scenario));
}

double oracle_log_partition(const StateList& states, Nome q) {
  if (states.empty()) throw InvalidArgument("empty state list");
  const std::int64_t ground = states.front().exponent;
  double reduced = 0.0;
  for (auto it = states.rbegin(); it != states.rend(); ++it) {
    reduced += static_cast<double>(it->multiplicity) *
               std::exp(static_cast<double>(it->exponent - ground) * q.log());
  }
  return static_cast<double>(ground) * q.log() + std::log(reduced);
}

double oracle_partition(const StateList& states, Nome q) {
  return std::exp(oracle_log_partition(states, q));
}

namespace {

struct Moments {
  double entropy = 0.0;
  double mean_exponent = 0.0;
};

Moments moments(const StateList& states, Nome q) {
  if (states.empty()) throw InvalidArgument("empty state list");
  const std::int64_t ground = states.front().exponent;
  const double lq = q.log();
  double degeneracy = 0.0;
  double excited = 0.0;
  for (auto it = states.rbegin(); it != states.rend(); ++it) {
    const double mult = static_cast<double>(it->multiplicity);
    if (it->exponent == ground) {
      degeneracy += mult;
    } else {
      excited += mult * std::exp(static_cast<double>(it->exponent - ground) * lq);
    }
  }
  const double log_reduced = std::log(degeneracy) + std::log1p(excited / degeneracy);
  Moments m;
  for (auto it = states.rbegin(); it != states.rend(); ++it) {
    const double log_p = static_cast<double>(it->exponent - ground) * lq - log_reduced;
    const double p = std::exp(log_p);
    const double mult = static_cast<double>(it->multiplicity);
    if (p > 0.0) m.entropy -= mult * p * log_p;
    m.mean_exponent += mult * p * static_cast<double>(it->exponent - ground);
  }
  m.mean_exponent += static_cast<double>(ground);
  return m;
}

}  // namespace

double oracle_entropy(const StateList& states, Nome q) { return moments(states, q).entropy; }

double oracle_mean_exponent(const StateList& states, Nome q) {
  return moments(states, q).mean_exponent;
}

double oracle_energy(const StateList& states, const PhysicalConfig& config) {
  return oracle_mean_exponent(states, nome(config)) * energy_quantum(config);
}

}  // namespace gibbs
