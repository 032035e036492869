#pragma once

// Evaluation of w(t) = sum_k g_k t^{beta k} and its domain of validity.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "felog/euler_beta.hpp"

namespace felog {

inline constexpr double kQuotedC1 = 3.074366;
inline constexpr double kQuotedC2 = 3.116623;

struct RadiusReport {
  double r_formula_i = 0.0;
  std::optional<double> r_formula_ii;
  double r_guaranteed = 0.0;
  std::optional<double> r_empirical;
  double c1_quoted = kQuotedC1;
  double c2_quoted = kQuotedC2;
  /// |r_formula_i(beta = 1) - c1 M| and the same for formula (ii).
  double discrepancy_i = 0.0;
  double discrepancy_ii = 0.0;
};

/// M 2^b e^{-b} ((3b+1)/(2b+1))^{2b+1/2} (3b+1)^{b+1/2-gamma}, as printed.
double radius_formula_i(double beta, double m);
/// M 2 e^{-2b} (b+1)^{-1/2} ((3b+1)/(2b+1))^{2b+1/2} (3b+1)^{-b+gamma-1/2};
/// absent unless beta > gamma - 1/2.
std::optional<double> radius_formula_ii(double beta, double m);
/// (M^2 / q_majorant)^{1/(2 beta)}
double guaranteed_radius(double beta, double m);
/// Ratio test on consecutive nonzero odd coefficients,
/// (|g_{2k+1}| / |g_{2k+3}|)^{1/(2 beta)}, extrapolated in 1/k over the last
/// five ratios. Absent when fewer than six nonzero odd terms exist.
std::optional<double> empirical_radius(const BetaEulerSequence& seq);

/// Needs n_terms >= 20.
RadiusReport radius_report(const BetaEulerSequence& seq);

struct EvalPoint {
  double t = 0.0;
  double w = 0.0;
  double tail_bound = 0.0;  // +inf when the majorant ratio is >= 1
  bool in_domain = true;
};

class SeriesSolution {
 public:
  explicit SeriesSolution(BetaEulerSequence seq);

  const BetaEulerSequence& seq() const { return seq_; }
  double beta() const { return seq_.beta(); }
  double m() const { return seq_.m(); }

  /// Computed on first use; shared between copies.
  const RadiusReport& radius() const;

  /// r_empirical when estimable, else r_guaranteed.
  double operating_radius() const;

  EvalPoint eval(double t) const;
  std::vector<EvalPoint> eval(std::span<const double> t) const;

  /// Plain values without tail/domain bookkeeping.
  std::vector<double> values(std::span<const double> t) const;

  /// dw/dt = sum_k g_k beta k t^{beta k - 1}; requires t > 0.
  double derivative(double t) const;

  /// S_N(t) for N = 1..n_terms.
  std::vector<double> partial_sums(double t) const;

 private:
  struct Cache;
  BetaEulerSequence seq_;
  std::vector<double> even_;  // g_0, g_2, g_4, ...
  std::vector<double> odd_;   // g_1, g_3, g_5, ...
  double q_majorant_;
  std::shared_ptr<Cache> cache_;
};

/// Same (beta, M) with enough terms that the series is converged to roughly
/// 1e-17 at t_max. Throws DomainError when t_max is not inside the
/// operating radius.
SeriesSolution extend_for(const SeriesSolution& sol, double t_max);

/// Radius of the majorant series in the remark bound, as printed:
/// 2^{2b-1} (1 + 2 b^2 / (2b+1)).
double remark_radius(double beta);
/// Where the remark bound's denominator vanishes:
/// 2^{2b-1} (1 + 2 b^2 / (3b+1)).
double remark_pole(double beta);
/// 1/2 + 1/(4 Gamma(b+1)) (1 - 2^{1-2b} (3b+1)/(3b+1+2b^2) t)^{-1}
/// for b in (1/2, 1], 0 <= t < min(remark_radius, remark_pole); M = 1.
double remark_bound(double beta, double t);

struct ClassicalComparison {
  std::vector<double> t;
  std::vector<double> deviation;
  double max_deviation = 0.0;
};

/// Deviation of a beta = 1 series from 1 / (1 + e^{-t/M}).
ClassicalComparison compare_classical(const SeriesSolution& sol, std::span<const double> t_grid);
ClassicalComparison compare_classical(double m, std::span<const double> t_grid,
                                      std::size_t n_terms = kDefaultTerms);

}  // namespace felog
