#include "felog/euler_beta.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "felog/errors.hpp"
#include "felog/simd/kernels.hpp"
#include "felog/specfun.hpp"

namespace felog {

namespace {

using specfun::gamma_fn;
using specfun::ln_gamma;
using specfun::ln_gamma_diff;

constexpr double kEvenSnap = 1e-14;
constexpr double kTie = 1e-12;

void check_domain(double beta, double m) {
  if (!(beta > 0.0 && beta <= 1.0)) throw DomainError("beta must lie in (0,1]");
  if (!(m >= 1.0) || !std::isfinite(m)) throw DomainError("m must satisfy m >= 1");
}

// Gamma(n beta + 1)
double gn(double beta, int n) { return gamma_fn(n * beta + 1.0); }

}  // namespace

BetaEulerSequence::BetaEulerSequence(double beta, double m, std::vector<double> g)
    : beta_(beta), m_(m), g_(std::move(g)) {
  raw_.reserve(g_.size());
  const double log_m = std::log(m_);
  for (std::size_t k = 0; k < g_.size(); ++k) {
    const double v = g_[k];
    if (v == 0.0) {
      raw_.push_back({0, -std::numeric_limits<double>::infinity()});
    } else {
      const double kd = static_cast<double>(k);
      raw_.push_back({v > 0.0 ? 1 : -1, std::log(std::abs(v)) + kd * log_m + ln_gamma(beta_ * kd + 1.0)});
    }
  }
}

double BetaEulerSequence::raw_value(std::size_t k) const {
  const auto& r = raw_.at(k);
  if (r.sign == 0) return 0.0;
  return r.sign * std::exp(r.log_magnitude);
}

BetaEulerSequence build_sequence(double beta, double m, std::size_t n_terms, BuildOptions options) {
  check_domain(beta, m);
  if (n_terms < 2) throw DomainError("n_terms ≥ 2 required");
  if (n_terms > kMaxTerms) throw DomainError("n_terms exceeds " + std::to_string(kMaxTerms));

  std::vector<double> g(n_terms, 0.0);
  g[0] = 0.5;
  g[1] = 0.25 / (m * gamma_fn(beta + 1.0));
  const auto& kernels = simd::active_kernels();
  for (std::size_t k = 1; k + 1 < n_terms; ++k) {
    const double kd = static_cast<double>(k);
    const double conv = kernels.reverse_dot(g.data(), g.data(), k + 1);
    const double ratio = std::exp(ln_gamma_diff(beta * kd + 1.0, beta * (kd + 1.0) + 1.0));
    double next = ratio / m * (g[k] - conv);
    if (options.snap_even_terms && (k + 1) % 2 == 0 &&
        std::abs(next) <= kEvenSnap * std::max(1.0, std::abs(g[k]))) {
      next = 0.0;
    }
    g[k + 1] = next;
  }
  return BetaEulerSequence(beta, m, std::move(g));
}

BetaEulerSequence sequence_from_coefficients(double beta, double m, std::vector<double> g) {
  check_domain(beta, m);
  if (g.size() < 2) throw DomainError("n_terms ≥ 2 required");
  if (g[0] != 0.5) throw DomainError("g_0 must equal 1/2");
  return BetaEulerSequence(beta, m, std::move(g));
}

double closed_form_e(int k, double b) {
  const double c = 0.25 / gn(b, 1);  // E_1 / Gamma(b+1)
  switch (k) {
    case 1:
      return 0.25;
    case 3:
      return -gn(b, 2) * c * c;
    case 5:
      return 2.0 * gn(b, 4) * gn(b, 2) / gn(b, 3) * std::pow(c, 3);
    case 7: {
      const double p = gn(b, 4) * gn(b, 2) / (gn(b, 5) * gn(b, 3));
      const double q = std::pow(gn(b, 2) / gn(b, 3), 2);
      return -4.0 * gn(b, 6) * (p + 0.25 * q) * std::pow(c, 4);
    }
    case 9: {
      const double r23 = gn(b, 2) / gn(b, 3);
      const double t1 = gn(b, 6) * gn(b, 4) * gn(b, 2) / (gn(b, 7) * gn(b, 5) * gn(b, 3));
      const double t2 = 0.25 * gn(b, 6) / gn(b, 7) * r23 * r23;
      const double t3 = 0.5 * gn(b, 4) / gn(b, 5) * r23 * r23;
      return 8.0 * gn(b, 8) * (t1 + t2 + t3) * std::pow(c, 5);
    }
    default:
      throw DomainError("closed_form_e: k must be one of 1, 3, 5, 7, 9");
  }
}

double printed_closed_form_e(int k, double b) {
  const double c = 0.25 / gn(b, 1);
  switch (k) {
    case 7: {
      const double p = gn(b, 4) * gn(b, 2) / (gn(b, 5) * gn(b, 3));
      const double q = std::pow(gn(b, 2) / gn(b, 3), 2);
      return -4.0 * gn(b, 6) * (-p + 0.25 * q) * std::pow(c, 4);
    }
    case 9: {
      const double r23 = gn(b, 2) / gn(b, 3);
      const double t1 = gn(b, 6) * gn(b, 4) * gn(b, 2) / (gn(b, 7) * gn(b, 5) * gn(b, 3));
      const double t3 = 0.5 * gn(b, 4) / gn(b, 5) * r23 * r23;
      return 8.0 * gn(b, 8) * (t1 + t3) * std::pow(c, 5);
    }
    default:
      return closed_form_e(k, b);
  }
}

std::vector<ClosedFormEntry> closed_form_check(const BetaEulerSequence& seq) {
  if (seq.n_terms() < 10) throw DomainError("closed_form_check needs n_terms >= 10");
  std::vector<ClosedFormEntry> out;
  for (int k : {3, 5, 7, 9}) {
    ClosedFormEntry e;
    e.k = k;
    e.recurrence = seq.raw_value(static_cast<std::size_t>(k));
    e.closed_form = closed_form_e(k, seq.beta());
    e.printed_form = printed_closed_form_e(k, seq.beta());
    e.relative_residual = std::abs(e.recurrence - e.closed_form) / std::abs(e.closed_form);
    e.printed_residual = std::abs(e.recurrence - e.printed_form) / std::abs(e.printed_form);
    out.push_back(e);
  }
  return out;
}

double majorant_base(double beta) {
  // 2 * (1/4) / Gamma(b+1) * Gamma(2b+1) / Gamma(3b+1)
  return 0.5 * std::exp(ln_gamma_diff(2.0 * beta + 1.0, 3.0 * beta + 1.0) - ln_gamma(beta + 1.0));
}

double a_base(double b) {
  const double g = specfun::kEulerGamma;
  return std::pow(2.0, -b) * std::pow((2 * b + 1) / (3 * b + 1), 2 * b + 0.5) * std::exp(b) /
         std::pow(3 * b + 1, b + 0.5 - g);
}

double b_base(double b) {
  const double g = specfun::kEulerGamma;
  return 0.5 * std::pow((2 * b + 1) / (3 * b + 1), 2 * b + 0.5) * std::exp(2 * b) /
         std::pow(3 * b + 1, b + 0.5 - g) / std::pow(b + 1, b + 1 - g);
}

bool b_applicable(double beta) { return beta > specfun::kEulerGamma - 0.5; }

BoundSequences bound_sequences(const BetaEulerSequence& seq) {
  const double b = seq.beta();
  const double lead = 0.25 / gamma_fn(b + 1.0);
  const double la = std::log(a_base(b));
  const double lb = std::log(b_base(b));
  BoundSequences out;
  out.q_majorant = majorant_base(b);
  out.a.resize(seq.n_terms());
  out.b.resize(seq.n_terms());
  for (std::size_t n = 0; n < seq.n_terms(); ++n) {
    const double half = 0.5 * static_cast<double>(n);
    out.a[n] = lead * std::exp(half * la);
    out.b[n] = lead * std::exp(half * lb);
  }
  return out;
}

std::vector<BoundCheckRow> check_bounds(const BetaEulerSequence& seq, std::size_t n_max) {
  if (n_max + 1 >= seq.n_terms()) throw DomainError("check_bounds: n_max + 1 must be < n_terms");
  const double b = seq.beta();
  const double log_lead = std::log(0.25) - ln_gamma(b + 1.0);
  const double lq = std::log(majorant_base(b));
  const double la = std::log(a_base(b));
  const double lb = std::log(b_base(b));
  const bool with_b = b_applicable(b);
  const double log_m = std::log(seq.m());
  std::vector<BoundCheckRow> rows;
  for (std::size_t n = 0; n <= n_max; n += 2) {
    const auto& r = seq.raw()[n + 1];
    const double half = 0.5 * static_cast<double>(n);
    BoundCheckRow row;
    row.n = n;
    row.log_coeff = r.sign == 0 ? -std::numeric_limits<double>::infinity()
                                : std::log(std::abs(seq.g(n + 1))) + static_cast<double>(n + 1) * log_m;
    row.log_majorant = log_lead + half * lq;
    row.log_a = log_lead + half * la;
    row.log_b = log_lead + half * lb;
    // n = 0 is an identity (both sides equal E_1/Gamma(b+1)); kTie absorbs its rounding.
    row.majorant_ok = row.log_coeff <= row.log_majorant + kTie;
    row.a_ok = row.log_coeff <= row.log_a + kTie;
    if (with_b) row.b_ok = row.log_coeff <= row.log_b + kTie;
    rows.push_back(row);
  }
  return rows;
}

double gamma_ratio_a(double beta, std::size_t j) {
  const double jd = static_cast<double>(j);
  return std::exp(ln_gamma_diff(2.0 * jd * beta + 1.0, (2.0 * jd + 1.0) * beta + 1.0));
}

}  // namespace felog
