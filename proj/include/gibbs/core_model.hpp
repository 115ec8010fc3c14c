#pragma once

// Reduced units throughout: k_B = hbar = M = 1. Every single-particle level
// carries a Boltzmann weight q^e with an exact integer exponent e, where
// q = exp(-beta * pi^2 / (2 l^2)) is the nome of the full well.

#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>

namespace gibbs {

inline constexpr double kPi = std::numbers::pi;

/// Inverse temperature and full trap width.
struct PhysicalConfig {
  double beta = 1.0;
  double length = 1.0;

  /// Throws InvalidArgument unless both fields are finite and positive.
  void validate() const;

  friend bool operator==(const PhysicalConfig&, const PhysicalConfig&) = default;
};

/// A Boltzmann base in (0, 1), stored through its logarithm so that nomes
/// extremely close to 1 keep full relative precision in ln q.
class Nome {
 public:
  /// log_q must be negative (or -inf for q = 0).
  static Nome from_log(double log_q);
  /// q in [0, 1).
  static Nome from_value(double q);

  double value() const;
  double log() const { return log_; }
  bool is_zero() const;

  /// q^k for a positive integer k. Exact in the logarithm.
  Nome pow(std::int64_t k) const;

 private:
  explicit Nome(double log_q) : log_(log_q) {}
  double log_;
};

/// ln q = -beta pi^2 / (2 l^2), computed without forming q.
double log_boltzmann_base(const PhysicalConfig& config);
double boltzmann_base(const PhysicalConfig& config);
Nome nome(const PhysicalConfig& config);

/// Energy of one unit of Boltzmann exponent, pi^2 / (2 l^2).
double energy_quantum(const PhysicalConfig& config);

enum class Well { Full, Half };

/// Exponent e with weight q^e for level n >= 1: n^2 (Full) or 4 n^2 (Half).
std::int64_t level_weight_exponent(Well well, std::int64_t n);
/// Multiplier applied to q to obtain the single-particle nome of the well.
std::int64_t well_scale(Well well);

enum class Statistics { Bose, Fermi, Distinguishable };
enum class Labels { WithColors, WithoutColors };
enum class Stage { Unmixed, Mixed };

inline constexpr int kMaxParticles = 64;

/// Everything needed to pin down a partition function.
struct ScenarioSpec {
  int n_particles = 2;
  Labels labels = Labels::WithColors;
  Stage stage = Stage::Unmixed;
  Statistics statistics = Statistics::Bose;

  /// Throws InvalidArgument for odd or out-of-range particle numbers and for
  /// the undefined WithoutColors + Distinguishable combination.
  void validate() const;

  ScenarioSpec with_stage(Stage s) const {
    ScenarioSpec out = *this;
    out.stage = s;
    return out;
  }

  friend bool operator==(const ScenarioSpec&, const ScenarioSpec&) = default;
};

std::string_view to_string(Statistics s);
std::string_view to_string(Labels l);
std::string_view to_string(Stage s);
std::string_view to_string(Well w);
std::string describe(const ScenarioSpec& s);

std::optional<Statistics> parse_statistics(std::string_view text);
std::optional<Labels> parse_labels(std::string_view text);

}  // namespace gibbs
