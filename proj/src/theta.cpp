#include "gibbs/theta.hpp"

#include <cmath>
#include <limits>

#include "gibbs/errors.hpp"

namespace gibbs {
namespace {

constexpr long kMaxDirectTerms = 100'000'000;
const double kLogThreshold = std::log(kDualityThreshold);

void check_tolerance(double tol) {
  if (!(std::isfinite(tol) && tol > 0.0)) {
    throw InvalidArgument("tolerance must be finite and positive");
  }
}

// Neumaier-compensated running sum.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      carry += (sum - t) + x;
    } else {
      carry += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + carry; }
};

double tail_bound(double log_tau, int power, long n) {
  const double next = static_cast<double>(n + 1);
  if (power == 0) {
    const double head = std::exp(next * next * log_tau);
    if (head == 0.0) return 0.0;
    return head / -std::expm1((2.0 * next + 1.0) * log_tau);
  }
  const double head = next * next * std::exp(next * next * log_tau);
  if (head == 0.0) return 0.0;
  const double grow = (next + 1.0) / next;
  const double ratio = grow * grow * std::exp((2.0 * next + 1.0) * log_tau);
  if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
  return head / (1.0 - ratio);
}

// sum_{n>=1} n^(2 power) tau^{n^2}, stopping once the tail bound is < tol/2.
SeriesValue direct_sum(double log_tau, int power, double tol) {
  CompensatedSum acc;
  for (long n = 1; n <= kMaxDirectTerms; ++n) {
    const double nn = static_cast<double>(n) * static_cast<double>(n);
    const double term = std::exp(nn * log_tau);
    acc.add(power == 0 ? term : nn * term);
    const double bound = tail_bound(log_tau, power, n);
    if (bound < 0.5 * tol || bound == 0.0) {
      return {acc.value(), bound, static_cast<int>(n)};
    }
  }
  throw RangeError("direct theta series did not converge within the term cap");
}

struct DualParts {
  double prefactor;  // (-ln q / pi)^{-1/2}
  double log_dual;   // pi^2 / ln q
};

DualParts dual_parts(Nome q) {
  if (q.is_zero()) throw RangeError("duality transform undefined at q = 0");
  const double t = q.log();
  const double prefactor = std::sqrt(kPi / -t);
  if (!std::isfinite(prefactor)) {
    throw RangeError("nome too close to 1 for the duality prefactor");
  }
  return {prefactor, kPi * kPi / t};
}

void guard_dual(const DualParts& parts) {
  if (parts.log_dual > kLogThreshold) {
    throw RangeError("transformed nome exceeds the duality threshold");
  }
}

}  // namespace

bool uses_duality(Nome q) { return q.log() > kLogThreshold; }

Nome dual_nome(Nome q) { return Nome::from_log(dual_parts(q).log_dual); }

SeriesValue theta3_direct(Nome q, double tol) {
  check_tolerance(tol);
  const SeriesValue s = direct_sum(q.log(), 0, 0.5 * tol);
  return {1.0 + 2.0 * s.value, 2.0 * s.error_bound, s.terms_used};
}

SeriesValue theta3_dual(Nome q, double tol) {
  check_tolerance(tol);
  const DualParts p = dual_parts(q);
  const SeriesValue inner = direct_sum(p.log_dual, 0, tol / (2.0 * p.prefactor));
  return {p.prefactor * (1.0 + 2.0 * inner.value),
          2.0 * p.prefactor * inner.error_bound, inner.terms_used};
}

SeriesValue theta3(Nome q, double tol) {
  check_tolerance(tol);
  if (!uses_duality(q)) return theta3_direct(q, tol);
  guard_dual(dual_parts(q));
  return theta3_dual(q, tol);
}

SeriesValue theta3(double q, double tol) { return theta3(Nome::from_value(q), tol); }

SeriesValue z1(Nome tau, double tol) {
  check_tolerance(tol);
  if (!uses_duality(tau)) return direct_sum(tau.log(), 0, tol);
  const DualParts p = dual_parts(tau);
  guard_dual(p);
  // z1 = (A (1 + 2 z1') - 1) / 2 with A the duality prefactor.
  const SeriesValue inner = direct_sum(p.log_dual, 0, tol / p.prefactor);
  return {0.5 * (p.prefactor * (1.0 + 2.0 * inner.value) - 1.0),
          p.prefactor * inner.error_bound, inner.terms_used};
}

SeriesValue z1(double tau, double tol) { return z1(Nome::from_value(tau), tol); }

SeriesValue weighted_series(Nome tau, int power, double tol) {
  check_tolerance(tol);
  if (power != 1) throw InvalidArgument("weighted_series supports power 1 only");
  if (!uses_duality(tau)) return direct_sum(tau.log(), 1, tol);
  const DualParts p = dual_parts(tau);
  guard_dual(p);
  // d/dt of theta3(t) = A(t) theta3'(pi^2/t), halved:
  //   s1 = A [ -(1 + 2 z1') / (4 t) - pi^2 s1' / t^2 ],   t = ln tau.
  const double t = tau.log();
  const double c_z = p.prefactor / (2.0 * -t);
  const double c_s = p.prefactor * kPi * kPi / (t * t);
  const SeriesValue inner_z = direct_sum(p.log_dual, 0, tol / (2.0 * c_z));
  const SeriesValue inner_s = direct_sum(p.log_dual, 1, tol / (2.0 * c_s));
  const double value =
      p.prefactor * (1.0 + 2.0 * inner_z.value) / (4.0 * -t) - c_s * inner_s.value;
  return {value, c_z * inner_z.error_bound + c_s * inner_s.error_bound,
          inner_z.terms_used + inner_s.terms_used};
}

SeriesValue weighted_series(double tau, int power, double tol) {
  return weighted_series(Nome::from_value(tau), power, tol);
}

double z1_tail_bound(Nome tau, int n_terms) {
  if (n_terms < 1) throw InvalidArgument("need at least one term");
  return tail_bound(tau.log(), 0, n_terms);
}

double weighted_tail_bound(Nome tau, int n_terms) {
  if (n_terms < 1) throw InvalidArgument("need at least one term");
  return tail_bound(tau.log(), 1, n_terms);
}

SeriesValue z1_truncated(Nome tau, int n_terms) {
  if (n_terms < 1) throw InvalidArgument("need at least one term");
  CompensatedSum acc;
  for (long n = 1; n <= n_terms; ++n) {
    acc.add(std::exp(static_cast<double>(n) * static_cast<double>(n) * tau.log()));
  }
  return {acc.value(), tail_bound(tau.log(), 0, n_terms), n_terms};
}

}  // namespace gibbs
