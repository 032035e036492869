#pragma once

// Euler beta-numbers: the coefficient sequence of the power series in t^beta
// that solves the fractional logistic equation
//   ^*D^beta w = (w - w^2) / M,   w(0) = 1/2.
//
// The recurrence runs on normalized coefficients
//   g_k = E_k / (M^k Gamma(beta k + 1)),
// which stay bounded inside the convergence disk. Raw E_k values are kept
// only as (sign, log-magnitude) pairs because Gamma(beta k + 1) overflows
// double range near k ~ 170 / beta.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace felog {

inline constexpr std::size_t kDefaultTerms = 64;
inline constexpr std::size_t kMaxTerms = 1u << 16;

struct SignedLog {
  int sign = 0;                // -1, 0, +1
  double log_magnitude = 0.0;  // natural log; -inf when sign == 0
};

struct BuildOptions {
  /// Even-index residues below 1e-14 * max(1, |g_{2k-1}|) become exact zeros.
  bool snap_even_terms = true;
};

class BetaEulerSequence {
 public:
  double beta() const { return beta_; }
  double m() const { return m_; }
  std::size_t n_terms() const { return g_.size(); }

  std::span<const double> g() const { return g_; }
  double g(std::size_t k) const { return g_.at(k); }
  std::span<const SignedLog> raw() const { return raw_; }

  /// sign * exp(log_magnitude); may overflow to +-inf for large k.
  double raw_value(std::size_t k) const;

  friend BetaEulerSequence build_sequence(double beta, double m, std::size_t n_terms,
                                          BuildOptions options);
  friend BetaEulerSequence sequence_from_coefficients(double beta, double m, std::vector<double> g);

 private:
  BetaEulerSequence(double beta, double m, std::vector<double> g);

  double beta_;
  double m_;
  std::vector<double> g_;
  std::vector<SignedLog> raw_;
};

/// g_0 = 1/2, g_1 = (1/4) / (M Gamma(beta+1)) and for k >= 1
///   g_{k+1} = Gamma(beta k+1)/Gamma(beta(k+1)+1) * (g_k - sum_{i+j=k} g_i g_j) / M
/// with the full Cauchy convolution (i, j >= 0).
BetaEulerSequence build_sequence(double beta, double m, std::size_t n_terms = kDefaultTerms,
                                 BuildOptions options = {});

/// Rebuilds a sequence from stored normalized coefficients (raw values are
/// recomputed). Used when re-ingesting serialized output.
BetaEulerSequence sequence_from_coefficients(double beta, double m, std::vector<double> g);

// ---------------------------------------------------------------------------
// Closed forms for E_3 .. E_9 obtained by unrolling the recurrence by hand.

/// Closed-form E_k for k in {1, 3, 5, 7, 9}, expanded from the recurrence.
double closed_form_e(int k, double beta);

/// The same closed forms exactly as they are commonly printed. The printed E_7
/// carries a flipped sign on its first bracket term and the printed E_9 omits
/// the (1/4) Gamma(6b+1)/Gamma(7b+1) (Gamma(2b+1)/Gamma(3b+1))^2 cross term;
/// both are kept for diagnostics.
double printed_closed_form_e(int k, double beta);

struct ClosedFormEntry {
  int k = 0;
  double recurrence = 0.0;
  double closed_form = 0.0;
  double relative_residual = 0.0;
  double printed_form = 0.0;
  double printed_residual = 0.0;
};

/// Compares recurrence output with the closed forms at k = 3, 5, 7, 9.
/// Requires n_terms >= 10.
std::vector<ClosedFormEntry> closed_form_check(const BetaEulerSequence& seq);

// ---------------------------------------------------------------------------
// Majorants for |E_{n+1} / Gamma((n+1) beta + 1)| (M = 1 normalization).

struct BoundSequences {
  std::vector<double> a;
  std::vector<double> b;
  double q_majorant = 0.0;
};

/// 2 (E_1/Gamma(b+1)) Gamma(2b+1)/Gamma(3b+1)
double majorant_base(double beta);
/// Base of a_n: 2^{-b} ((2b+1)/(3b+1))^{2b+1/2} e^b / (3b+1)^{b+1/2-gamma}
double a_base(double beta);
/// Base of b_n: (1/2) ((2b+1)/(3b+1))^{2b+1/2} e^{2b} / (3b+1)^{b+1/2-gamma} / (b+1)^{b+1-gamma}
double b_base(double beta);
/// True when the b_n majorant is claimed (beta > gamma - 1/2).
bool b_applicable(double beta);

/// a_n, b_n for n = 0..n_terms-1 and q_majorant. Depends only on beta; the
/// M powers of the sequence are not part of these bounds.
BoundSequences bound_sequences(const BetaEulerSequence& seq);

struct BoundCheckRow {
  std::size_t n = 0;         // even; the checked coefficient is index n + 1
  double log_coeff = 0.0;    // ln |E_{n+1} / Gamma((n+1)b+1)|
  double log_majorant = 0.0; // ln of (E_1/Gamma(b+1)) q^{n/2}
  double log_a = 0.0;
  double log_b = 0.0;
  bool majorant_ok = false;
  bool a_ok = false;
  std::optional<bool> b_ok;  // absent when beta <= gamma - 1/2
};

/// Log-space comparison for even n <= n_max (needs n_max + 1 < n_terms).
std::vector<BoundCheckRow> check_bounds(const BetaEulerSequence& seq, std::size_t n_max);

/// A_j = Gamma(2 j b + 1) / Gamma((2 j + 1) b + 1)
double gamma_ratio_a(double beta, std::size_t j);

}  // namespace felog
