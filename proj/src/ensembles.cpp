#include "gibbs/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gibbs/errors.hpp"

namespace gibbs {

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxLevels = 2'000'000;
}  // namespace

Jet Jet::monomial(std::int64_t ground, double log_q) {
  Jet j(1.0);
  j.ground = ground;
  j.log_q = log_q;
  return j;
}

double Jet::log_reduced() const {
  if (degeneracy > 0.0) return std::log(degeneracy) + std::log1p(excess / degeneracy);
  return std::log(reduced());
}

double Jet::log_value() const { return static_cast<double>(ground) * log_q + log_reduced(); }

double Jet::value() const { return std::exp(log_value()); }

double Jet::beta_log_deriv() const {
  return static_cast<double>(ground) * log_q + excess_deriv / reduced();
}

double Jet::beta_deriv() const { return value() * beta_log_deriv(); }

double Jet::value_err() const { return value() * excess_err / std::abs(reduced()); }

namespace {

struct Lifted {
  double degeneracy, excess, excess_deriv, excess_err, deriv_err;
};

// Expresses j relative to q^base, base <= j.ground.
Lifted lift(const Jet& j, std::int64_t base, double log_q) {
  if (j.ground == base) {
    return {j.degeneracy, j.excess, j.excess_deriv, j.excess_err, j.deriv_err};
  }
  const double shift = static_cast<double>(j.ground - base) * log_q;
  const double f = std::exp(shift);
  const double e = f * j.reduced();
  const double d = f * (shift * j.reduced() + j.excess_deriv);
  return {0.0, e, d, f * j.excess_err + kEps * std::abs(e),
          f * (std::abs(shift) * j.excess_err + j.deriv_err) + kEps * std::abs(d)};
}

void accumulate(Jet& a, const Jet& b, double sign) {
  if (b.is_zero()) return;
  if (a.is_zero()) {
    a = b;
    a.degeneracy *= sign;
    a.excess *= sign;
    a.excess_deriv *= sign;
    return;
  }
  const double lq = a.log_q != 0.0 ? a.log_q : b.log_q;
  const std::int64_t base = std::min(a.ground, b.ground);
  const Lifted x = lift(a, base, lq);
  const Lifted y = lift(b, base, lq);
  a.ground = base;
  a.log_q = lq;
  a.degeneracy = x.degeneracy + sign * y.degeneracy;
  a.excess = x.excess + sign * y.excess;
  a.excess_deriv = x.excess_deriv + sign * y.excess_deriv;
  a.excess_err = x.excess_err + y.excess_err +
                 kEps * (std::abs(x.excess) + std::abs(y.excess));
  a.deriv_err = x.deriv_err + y.deriv_err +
                kEps * (std::abs(x.excess_deriv) + std::abs(y.excess_deriv));
}

}  // namespace

Jet& Jet::operator+=(const Jet& o) {
  accumulate(*this, o, 1.0);
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  accumulate(*this, o, -1.0);
  return *this;
}

Jet& Jet::operator*=(const Jet& o) {
  if (is_zero() || o.is_zero()) {
    *this = Jet(0.0);
    return *this;
  }
  const double da = degeneracy, db = o.degeneracy;
  const double ea = excess, eb = o.excess;
  const double pa = excess_deriv, pb = o.excess_deriv;
  const double e = da * eb + ea * db + ea * eb;
  const double p = da * pb + pa * db + pa * eb + ea * pb;
  const double ee = std::abs(da) * o.excess_err + std::abs(db) * excess_err +
                    std::abs(ea) * o.excess_err + std::abs(eb) * excess_err +
                    kEps * (std::abs(da * eb) + std::abs(ea * db) + std::abs(ea * eb));
  const double pe = std::abs(da) * o.deriv_err + std::abs(db) * deriv_err +
                    std::abs(pa) * o.excess_err + std::abs(eb) * deriv_err +
                    std::abs(ea) * o.deriv_err + std::abs(pb) * excess_err +
                    kEps * (std::abs(da * pb) + std::abs(pa * db) + std::abs(pa * eb) +
                            std::abs(ea * pb));
  ground += o.ground;
  if (log_q == 0.0) log_q = o.log_q;
  degeneracy = da * db;
  excess = e;
  excess_deriv = p;
  excess_err = ee;
  deriv_err = pe;
  return *this;
}

Jet& Jet::operator/=(double s) {
  const double d = degeneracy / s;
  if (d * s != degeneracy) excess_err += kEps * std::abs(d);
  degeneracy = d;
  excess /= s;
  excess_deriv /= s;
  excess_err = excess_err / std::abs(s) + kEps * std::abs(excess);
  deriv_err = deriv_err / std::abs(s) + kEps * std::abs(excess_deriv);
  return *this;
}

Jet operator+(Jet a, const Jet& b) { return a += b; }
Jet operator-(Jet a, const Jet& b) { return a -= b; }
Jet operator*(Jet a, const Jet& b) { return a *= b; }
Jet operator/(Jet a, double s) { return a /= s; }

Jet z1_jet(Nome q, int scale, double rel_tol) {
  if (q.is_zero()) throw RangeError("single-particle series vanishes at q = 0");
  const double lt = scale * q.log();
  Jet j = Jet::monomial(scale, q.log());
  const double tau = std::exp(lt);
  if (tau <= kDualityThreshold) {
    // sum_{n>=2} tau^{n^2-1} and sum_{n>=2} (n^2-1) tau^{n^2-1}, summed directly.
    double e = 0.0;
    double w = 0.0;
    double tail_e = 0.0;
    double tail_w = 0.0;
    int n = 2;
    for (;; ++n) {
      const double nn = static_cast<double>(n) * n - 1.0;
      const double term = std::exp(nn * lt);
      e += term;
      w += nn * term;
      const double next = static_cast<double>(n + 1) * (n + 1);
      const double lead = std::exp((next - 1.0) * lt);
      const double gap = std::exp((2.0 * n + 3.0) * lt);
      const double ratio = (static_cast<double>(n + 2) * (n + 2) / next) * gap;
      if (ratio >= 1.0) continue;
      tail_e = lead / (1.0 - gap);
      tail_w = next * lead / (1.0 - ratio);
      if (tail_e <= rel_tol * e && tail_w <= rel_tol * w) break;
      if (n > 1'000'000) throw RangeError("excess series failed to converge");
    }
    j.excess = e;
    j.excess_deriv = lt * w;
    j.excess_err = tail_e + kEps * n * e;
    j.deriv_err = std::abs(lt) * (tail_w + kEps * n * w);
    return j;
  }
  // Above the threshold the excess is at least tau^3 > 0.027, so subtracting the
  // leading term from the transformed series costs only a few bits.
  const Nome t = q.pow(scale);
  const double abs_tol = rel_tol * std::pow(tau, 4);
  const SeriesValue z = z1(t, abs_tol);
  const SeriesValue s = weighted_series(t, 1, abs_tol);
  j.excess = z.value / tau - 1.0;
  j.excess_deriv = lt * (s.value - z.value) / tau;
  j.excess_err = z.error_bound / tau + 2.0 * kEps * z.value / tau;
  j.deriv_err = std::abs(lt) * ((s.error_bound + z.error_bound) / tau +
                                2.0 * kEps * s.value / tau);
  return j;
}

std::vector<Jet> fermi_level_sum(int n, Nome q, int scale, double rel_tol) {
  if (n < 0) throw InvalidArgument("particle number must be non-negative");
  std::vector<Jet> e(static_cast<std::size_t>(n) + 1, Jet(0.0));
  e[0] = Jet(1.0);
  if (n == 0) return e;
  if (q.is_zero()) throw RangeError("fermion partition function vanishes at q = 0");
  const double lt = scale * q.log();
  constexpr double kTiny = 1e-290;
  std::vector<double> omitted(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<double> omitted_d(static_cast<std::size_t>(n) + 1, 0.0);
  for (int m = 1; m <= kMaxLevels; ++m) {
    const Jet x = Jet::monomial(static_cast<std::int64_t>(scale) * m * m, q.log());
    for (int k = std::min(n, m); k >= 1; --k) e[k] += x * e[k - 1];
    if (m < n) continue;

    // Omitted k-subsets contain a level j > m, so relative to the ground of
    // e_k they are bounded by sum_{j>m} tau^{j^2-k^2} times the full e_{k-1}.
    const double next = static_cast<double>(m + 1) * (m + 1);
    const double gap = std::exp((2.0 * m + 3.0) * lt);
    const double ratio = (static_cast<double>(m + 2) * (m + 2) / next) * gap;
    if (ratio >= 1.0) continue;
    double full_prev = 1.0;
    double full_prev_d = 0.0;
    bool converged = true;
    for (int k = 1; k <= n; ++k) {
      const double lead = std::exp((next - static_cast<double>(k) * k) * lt);
      const double tail = lead / (1.0 - gap);
      const double wtail = next * lead / (1.0 - ratio);
      omitted[k] = tail * full_prev;
      omitted_d[k] = std::abs(lt) * wtail * full_prev + tail * full_prev_d;
      const Jet& ek = e[k];
      const double floor = kTiny * std::abs(ek.reduced());
      converged = converged && omitted[k] <= rel_tol * std::max(ek.excess, floor) &&
                  omitted_d[k] <= rel_tol * std::max(std::abs(ek.excess_deriv), floor);
      full_prev = ek.reduced() + omitted[k];
      full_prev_d = std::abs(ek.excess_deriv) + omitted_d[k];
    }
    if (converged) {
      for (int k = 1; k <= n; ++k) {
        e[k].excess_err += omitted[k];
        e[k].deriv_err += omitted_d[k];
      }
      return e;
    }
  }
  throw RangeError("fermion level sum did not converge within the level cap");
}

namespace {

// Recursion plus the worst condition number of its signed sums.
struct RecursionOutcome {
  std::vector<Jet> z;
  double worst_condition = 1.0;
};

RecursionOutcome run_recursion(std::span<const Jet> z1m, int n, int sign) {
  RecursionOutcome out;
  out.z = cycle_recursion<Jet>(z1m, n, sign);
  if (sign > 0) return out;
  // Every term of the m-th sum carries the same ground factor q^{m scale}.
  for (int m = 2; m <= n; ++m) {
    double abs_v = 0.0;
    double abs_d = 0.0;
    for (int k = 1; k <= m; ++k) {
      const Jet term = z1m[k - 1] * out.z[m - k];
      const double g = static_cast<double>(term.ground) * term.log_q;
      abs_v += std::abs(term.reduced());
      abs_d += std::abs(g * term.reduced() + term.excess_deriv);
    }
    const Jet& zm = out.z[m];
    const double g = static_cast<double>(zm.ground) * zm.log_q;
    const double v = std::abs(zm.reduced()) * m;
    const double d = std::abs(g * zm.reduced() + zm.excess_deriv) * m;
    const double inf = std::numeric_limits<double>::infinity();
    out.worst_condition = std::max({out.worst_condition, v > 0.0 ? abs_v / v : inf,
                                    d > 0.0 ? abs_d / d : inf});
  }
  return out;
}

}  // namespace

ZnTable zn_table(int n, Statistics stat, Well well, Nome q, double rel_tol) {
  if (n < 0 || n > kMaxParticles) {
    throw InvalidArgument("particle number must lie in [0, " +
                          std::to_string(kMaxParticles) + "]");
  }
  if (!(rel_tol > 0.0 && std::isfinite(rel_tol))) {
    throw InvalidArgument("tolerance must be finite and positive");
  }
  const int scale = static_cast<int>(well_scale(well));
  ZnTable out;
  if (n == 0) {
    out.z = {Jet(1.0)};
    return out;
  }

  const int n_multiples = stat == Statistics::Distinguishable ? 1 : n;
  std::vector<Jet> z1m;
  z1m.reserve(static_cast<std::size_t>(n_multiples));
  for (int k = 1; k <= n_multiples; ++k) z1m.push_back(z1_jet(q, scale * k, rel_tol));
  out.series_terms = n_multiples;

  switch (stat) {
    case Statistics::Distinguishable: {
      out.z.assign(static_cast<std::size_t>(n) + 1, Jet(1.0));
      for (int m = 1; m <= n; ++m) out.z[m] = out.z[m - 1] * z1m[0];
      break;
    }
    case Statistics::Bose:
      out.z = run_recursion(z1m, n, +1).z;
      break;
    case Statistics::Fermi: {
      RecursionOutcome rec = run_recursion(z1m, n, -1);
      if (rec.worst_condition > kFermiConditionLimit) {
        out.z = fermi_level_sum(n, q, scale, rel_tol);
        out.level_summed = true;
      } else {
        out.z = std::move(rec.z);
      }
      break;
    }
  }
  return out;
}

SeriesValue zn_ideal(int n, Statistics stat, Well well, Nome q, double rel_tol) {
  const ZnTable table = zn_table(n, stat, well, q, rel_tol);
  const Jet& z = table.z.back();
  return {z.value(), z.value_err(), std::max(1, table.series_terms)};
}

SeriesValue zn_ideal(int n, Statistics stat, Well well, double q, double rel_tol) {
  if (!(q > 0.0 && q < 1.0)) throw InvalidArgument("q must lie in (0,1)");
  return zn_ideal(n, stat, well, Nome::from_value(q), rel_tol);
}

PartitionResult scenario_partition(const ScenarioSpec& scenario,
                                   const PhysicalConfig& config, double rel_tol) {
  scenario.validate();
  const Nome q = nome(config);
  const int n = scenario.n_particles;
  const Well well = scenario.stage == Stage::Unmixed ? Well::Half : Well::Full;

  Jet z;
  if (scenario.labels == Labels::WithColors) {
    const ZnTable t = zn_table(n / 2, scenario.statistics, well, q, rel_tol);
    z = t.z.back() * t.z.back();
  } else if (scenario.stage == Stage::Unmixed) {
    const ZnTable t = zn_table(n, scenario.statistics, Well::Half, q, rel_tol);
    z = Jet(0.0);
    for (int k = 0; k <= n; ++k) z += t.z[k] * t.z[n - k];
  } else {
    z = zn_table(n, scenario.statistics, Well::Full, q, rel_tol).z.back();
  }

  if (!(z.reduced() > 0.0) || !std::isfinite(z.log_value()) ||
      !std::isfinite(z.beta_log_deriv())) {
    throw RangeError("partition function left the representable range for " +
                     describe(scenario));
  }
  PartitionResult r;
  r.scenario = scenario;
  r.config = config;
  r.q = q.value();
  r.jet = z;
  r.z = {z.value(), z.value_err(), 1};
  r.log_z = z.log_value();
  r.beta_dz = z.beta_deriv();
  const double ground_term = std::abs(static_cast<double>(z.ground) * z.log_q);
  r.beta_dz_err = r.z.value * (z.deriv_err / z.reduced() + ground_term * z.excess_err / z.reduced());
  return r;
}

}  // namespace gibbs
