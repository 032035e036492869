#include "felog/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "felog/errors.hpp"

namespace felog::io {

namespace {

using nlohmann::json;

// JSON has no infinities; they become null.
json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

json num(const std::optional<double>& x) { return x ? num(*x) : json(nullptr); }

std::string csv_opt(const std::optional<double>& x) { return x ? format_double(*x) : std::string(); }

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

json to_json(const BetaEulerSequence& seq) {
  json raw = json::array();
  for (const auto& r : seq.raw()) {
    raw.push_back({{"sign", r.sign}, {"log10_mag", num(r.log_magnitude / std::log(10.0))}});
  }
  return {{"beta", seq.beta()},
          {"m", seq.m()},
          {"g", std::vector<double>(seq.g().begin(), seq.g().end())},
          {"raw", raw}};
}

std::string to_csv(const BetaEulerSequence& seq) {
  std::ostringstream os;
  os << "k,g_k,sign,log10_abs_E,E_k\n";
  for (std::size_t k = 0; k < seq.n_terms(); ++k) {
    const auto& r = seq.raw()[k];
    const double e = seq.raw_value(k);
    os << k << ',' << format_double(seq.g(k)) << ',' << r.sign << ','
       << (r.sign == 0 ? std::string() : format_double(r.log_magnitude / std::log(10.0))) << ','
       << (std::isfinite(e) ? format_double(e) : std::string()) << '\n';
  }
  return os.str();
}

BetaEulerSequence sequence_from_json(const json& j) {
  try {
    return sequence_from_coefficients(j.at("beta").get<double>(), j.at("m").get<double>(),
                                      j.at("g").get<std::vector<double>>());
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed sequence JSON: ") + e.what());
  }
}

json to_json(const RadiusReport& rep, double beta, double m) {
  return {{"beta", beta},
          {"m", m},
          {"r_formula_i", num(rep.r_formula_i)},
          {"r_formula_ii", num(rep.r_formula_ii)},
          {"r_guaranteed", num(rep.r_guaranteed)},
          {"r_empirical", num(rep.r_empirical)},
          {"c1", rep.c1_quoted},
          {"c2", rep.c2_quoted},
          {"discrepancy_i", num(rep.discrepancy_i)},
          {"discrepancy_ii", num(rep.discrepancy_ii)}};
}

std::string to_csv(const RadiusReport& rep, double beta, double m) {
  std::ostringstream os;
  os << "beta,m,r_formula_i,r_formula_ii,r_guaranteed,r_empirical,c1,c2,discrepancy_i,discrepancy_ii\n";
  os << format_double(beta) << ',' << format_double(m) << ',' << format_double(rep.r_formula_i) << ','
     << csv_opt(rep.r_formula_ii) << ',' << format_double(rep.r_guaranteed) << ',' << csv_opt(rep.r_empirical)
     << ',' << format_double(rep.c1_quoted) << ',' << format_double(rep.c2_quoted) << ','
     << format_double(rep.discrepancy_i) << ',' << format_double(rep.discrepancy_ii) << '\n';
  return os.str();
}

json to_json(std::span<const EvalPoint> curve) {
  json t = json::array(), w = json::array(), tail = json::array(), dom = json::array();
  for (const auto& p : curve) {
    t.push_back(p.t);
    w.push_back(num(p.w));
    tail.push_back(num(p.tail_bound));
    dom.push_back(p.in_domain);
  }
  return {{"t", t}, {"w", w}, {"tail_bound", tail}, {"in_domain", dom}};
}

std::string to_csv(std::span<const EvalPoint> curve) {
  std::ostringstream os;
  os << "t,w,tail_bound,in_domain\n";
  for (const auto& p : curve) {
    os << format_double(p.t) << ',' << format_double(p.w) << ',' << format_double(p.tail_bound) << ','
       << (p.in_domain ? "true" : "false") << '\n';
  }
  return os.str();
}

json to_json(const ResidualReport& rep, double tolerance) {
  json res = json::array();
  for (double r : rep.residual) res.push_back(num(r));
  return {{"method", std::string(to_string(rep.method))},
          {"t", rep.t},
          {"residual", res},
          {"sup_norm", num(rep.sup_norm)},
          {"tolerance", tolerance},
          {"pass", rep.sup_norm <= tolerance}};
}

std::string to_csv(const ResidualReport& rep) {
  std::ostringstream os;
  os << "t,residual\n";
  for (std::size_t i = 0; i < rep.t.size(); ++i) {
    os << format_double(rep.t[i]) << ',' << format_double(rep.residual[i]) << '\n';
  }
  return os.str();
}

json to_json(const ClassicalComparison& cmp, double m) {
  return {{"m", m}, {"t", cmp.t}, {"deviation", cmp.deviation}, {"max_deviation", num(cmp.max_deviation)}};
}

std::string to_csv(const ClassicalComparison& cmp) {
  std::ostringstream os;
  os << "t,deviation\n";
  for (std::size_t i = 0; i < cmp.t.size(); ++i) {
    os << format_double(cmp.t[i]) << ',' << format_double(cmp.deviation[i]) << '\n';
  }
  return os.str();
}

}  // namespace felog::io
