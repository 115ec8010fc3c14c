#include "gibbs/core_model.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "gibbs/errors.hpp"

namespace gibbs {

void PhysicalConfig::validate() const {
  if (!(std::isfinite(beta) && beta > 0.0)) {
    throw InvalidArgument("beta must be finite and positive");
  }
  if (!(std::isfinite(length) && length > 0.0)) {
    throw InvalidArgument("length must be finite and positive");
  }
}

Nome Nome::from_log(double log_q) {
  if (std::isnan(log_q) || !(log_q < 0.0)) {
    throw InvalidArgument("nome logarithm must be negative (q in [0,1))");
  }
  return Nome(log_q);
}

Nome Nome::from_value(double q) {
  if (std::isnan(q) || q < 0.0 || q >= 1.0) {
    throw InvalidArgument("nome must lie in [0,1)");
  }
  if (q == 0.0) return Nome(-std::numeric_limits<double>::infinity());
  return Nome(std::log(q));
}

double Nome::value() const { return std::exp(log_); }

bool Nome::is_zero() const { return std::isinf(log_); }

Nome Nome::pow(std::int64_t k) const {
  if (k < 1) throw InvalidArgument("nome power must be positive");
  return Nome(static_cast<double>(k) * log_);
}

double log_boltzmann_base(const PhysicalConfig& config) {
  config.validate();
  const double lq = -config.beta * kPi * kPi / (2.0 * config.length * config.length);
  if (!(lq < 0.0)) {
    throw RangeError("beta/length^2 underflows: q is indistinguishable from 1");
  }
  return lq;
}

double boltzmann_base(const PhysicalConfig& config) {
  return std::exp(log_boltzmann_base(config));
}

Nome nome(const PhysicalConfig& config) {
  return Nome::from_log(log_boltzmann_base(config));
}

double energy_quantum(const PhysicalConfig& config) {
  config.validate();
  return kPi * kPi / (2.0 * config.length * config.length);
}

std::int64_t well_scale(Well well) { return well == Well::Full ? 1 : 4; }

std::int64_t level_weight_exponent(Well well, std::int64_t n) {
  if (n < 1) throw InvalidArgument("level index must be >= 1");
  return well_scale(well) * n * n;
}

void ScenarioSpec::validate() const {
  if (n_particles < 2 || n_particles > kMaxParticles) {
    throw InvalidArgument("particle number must lie in [2, " +
                          std::to_string(kMaxParticles) + "]");
  }
  if (n_particles % 2 != 0) {
    throw InvalidArgument("particle number must be even (equal split between cells)");
  }
  if (labels == Labels::WithoutColors && statistics == Statistics::Distinguishable) {
    throw InvalidArgument(
        "distinguishable particles have no uncolored setup; use WithColors");
  }
}

std::string_view to_string(Statistics s) {
  switch (s) {
    case Statistics::Bose: return "bose";
    case Statistics::Fermi: return "fermi";
    case Statistics::Distinguishable: return "dist";
  }
  return "?";
}

std::string_view to_string(Labels l) {
  return l == Labels::WithColors ? "with" : "without";
}

std::string_view to_string(Stage s) {
  return s == Stage::Unmixed ? "unmixed" : "mixed";
}

std::string_view to_string(Well w) { return w == Well::Full ? "full" : "half"; }

std::string describe(const ScenarioSpec& s) {
  std::ostringstream os;
  os << "N=" << s.n_particles << " colors=" << to_string(s.labels)
     << " stage=" << to_string(s.stage) << " stat=" << to_string(s.statistics);
  return os.str();
}

std::optional<Statistics> parse_statistics(std::string_view text) {
  if (text == "bose") return Statistics::Bose;
  if (text == "fermi") return Statistics::Fermi;
  if (text == "dist") return Statistics::Distinguishable;
  return std::nullopt;
}

std::optional<Labels> parse_labels(std::string_view text) {
  if (text == "with") return Labels::WithColors;
  if (text == "without") return Labels::WithoutColors;
  return std::nullopt;
}

}  // namespace gibbs
