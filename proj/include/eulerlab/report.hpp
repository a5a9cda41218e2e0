#pragma once

// CSV and JSON rendering for the computed reports, plus the "A:B:k"
// geometric grid parser the CLI uses. CSV doubles are printed with %.17g so
// files round-trip exactly; JSON goes through nlohmann::json, whose default
// double output is shortest-round-trip.

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "eulerlab/asymptotics.hpp"
#include "eulerlab/characters.hpp"
#include "eulerlab/chebyshev.hpp"

namespace eulerlab {

inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace detail {

inline nlohmann::json cpx(std::complex<double> z) {
  return {{"re", z.real()}, {"im", z.imag()}};
}

inline std::complex<double> cpx_from(const nlohmann::json& j) {
  return {j.at("re").get<double>(), j.at("im").get<double>()};
}

}  // namespace detail

inline nlohmann::json breakdown_to_json(const TermBreakdown& t) {
  nlohmann::json j;
  j["x"] = t.x;
  j["s"] = detail::cpx(t.s);
  j["chi"] = t.chi_label;
  j["case"] = t.case_tag;
  j["log_l"] = t.log_l_present ? detail::cpx(t.log_l) : nlohmann::json();
  j["li_theta"] = detail::cpx(t.li_theta_term);
  j["theta_degenerate"] = t.theta_degenerate;
  j["li_block_norm"] = t.li_block_norm;
  j["max_remainder"] = t.max_remainder;
  j["li_chain"] = nlohmann::json::array();
  for (const auto& [k, v] : t.li_chain) {
    nlohmann::json e = detail::cpx(v);
    e["k"] = k;
    j["li_chain"].push_back(e);
  }
  j["power_terms"] = nlohmann::json::array();
  for (const auto& pt : t.power_terms) {
    nlohmann::json e = detail::cpx(pt.value);
    e["name"] = pt.name;
    j["power_terms"].push_back(e);
  }
  j["sqrt2_applied"] = t.sqrt2_applied;
  j["zero_term"] =
      t.zero_term_present ? detail::cpx(t.zero_term) : nlohmann::json();
  j["zero_tail_bound"] = t.zero_tail_bound;
  j["total"] = detail::cpx(t.total_rhs_log);
  return j;
}

inline TermBreakdown breakdown_from_json(const nlohmann::json& j) {
  TermBreakdown t;
  t.x = j.at("x").get<double>();
  t.s = detail::cpx_from(j.at("s"));
  t.chi_label = j.at("chi").get<std::string>();
  t.case_tag = j.at("case").get<int>();
  if (!j.at("log_l").is_null()) {
    t.log_l = detail::cpx_from(j.at("log_l"));
    t.log_l_present = true;
  }
  t.li_theta_term = detail::cpx_from(j.at("li_theta"));
  t.theta_degenerate = j.at("theta_degenerate").get<bool>();
  t.li_block_norm = j.at("li_block_norm").get<double>();
  t.max_remainder = j.at("max_remainder").get<double>();
  for (const auto& e : j.at("li_chain")) {
    t.li_chain.emplace_back(e.at("k").get<std::uint64_t>(),
                            detail::cpx_from(e));
  }
  for (const auto& e : j.at("power_terms")) {
    t.power_terms.push_back(
        {e.at("name").get<std::string>(), detail::cpx_from(e)});
  }
  t.sqrt2_applied = j.at("sqrt2_applied").get<bool>();
  if (!j.at("zero_term").is_null()) {
    t.zero_term = detail::cpx_from(j.at("zero_term"));
    t.zero_term_present = true;
  }
  t.zero_tail_bound = j.at("zero_tail_bound").get<double>();
  t.total_rhs_log = detail::cpx_from(j.at("total"));
  return t;
}

inline std::string sweep_csv(const SweepReport& rep) {
  std::string out = "x,lhs_re,lhs_im,rhs_re,rhs_im,resid_abs,e_ratio,li_diag\n";
  for (const auto& r : rep.rows) {
    out += fmt17(r.x) + "," + fmt17(r.lhs_log.real()) + "," +
           fmt17(r.lhs_log.imag()) + "," + fmt17(r.rhs_log.real()) + "," +
           fmt17(r.rhs_log.imag()) + "," + fmt17(r.resid_abs) + "," +
           fmt17(r.e_ratio) + "," + fmt17(r.li_diag) + "\n";
  }
  return out;
}

inline nlohmann::json sweep_json(const SweepReport& rep) {
  nlohmann::json j;
  j["s"] = detail::cpx(rep.s);
  j["chi"] = rep.chi_label;
  j["on_critical_line"] = rep.on_critical_line;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rep.rows) {
    j["rows"].push_back({{"x", r.x},
                         {"lhs", detail::cpx(r.lhs_log)},
                         {"rhs", detail::cpx(r.rhs_log)},
                         {"resid_abs", r.resid_abs},
                         {"e_ratio", r.e_ratio},
                         {"li_diag", r.li_diag}});
  }
  return j;
}

struct CharacterRow {
  std::string label;
  std::uint32_t conductor = 1;
  std::uint64_t order = 1;
  int parity = 0;  // nu
  bool primitive = false;
  std::complex<double> tau{0.0, 0.0};
  std::complex<double> epsilon{0.0, 0.0};
};

inline CharacterRow character_row(const DirichletCharacter& chi) {
  CharacterRow r;
  r.label = chi.label();
  r.conductor = chi.conductor();
  r.order = chi.order();
  r.parity = chi.parity_nu();
  r.primitive = chi.is_primitive();
  RootNumber rn = gauss_and_epsilon(chi);
  r.tau = rn.tau;
  r.epsilon = rn.epsilon;
  return r;
}

inline std::string characters_csv(const std::vector<CharacterRow>& rows) {
  std::string out =
      "label,conductor,order,parity,primitive,tau_re,tau_im,abs_tau,"
      "eps_re,eps_im\n";
  for (const auto& r : rows) {
    out += r.label + "," + std::to_string(r.conductor) + "," +
           std::to_string(r.order) + "," + std::to_string(r.parity) + "," +
           (r.primitive ? "1" : "0") + "," + fmt17(r.tau.real()) + "," +
           fmt17(r.tau.imag()) + "," + fmt17(std::abs(r.tau)) + "," +
           fmt17(r.epsilon.real()) + "," + fmt17(r.epsilon.imag()) + "\n";
  }
  return out;
}

inline nlohmann::json characters_json(const std::vector<CharacterRow>& rows) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rows) {
    j.push_back({{"label", r.label},
                 {"conductor", r.conductor},
                 {"order", r.order},
                 {"parity", r.parity},
                 {"primitive", r.primitive},
                 {"tau", detail::cpx(r.tau)},
                 {"abs_tau", std::abs(r.tau)},
                 {"epsilon", detail::cpx(r.epsilon)}});
  }
  return j;
}

inline std::string prime_summary_csv(const PrimeSummary& s) {
  std::string out = "a,theta,psi,pi,remainder\n";
  for (std::size_t i = 0; i < s.residues.size(); ++i) {
    out += std::to_string(s.residues[i]) + "," + fmt17(s.theta[i]) + "," +
           fmt17(s.psi[i]) + "," + std::to_string(s.pi[i]) + "," +
           fmt17(s.remainder[i]) + "\n";
  }
  return out;
}

inline nlohmann::json prime_summary_json(const PrimeSummary& s) {
  nlohmann::json j;
  j["x"] = s.x;
  j["q"] = s.q;
  j["classes"] = nlohmann::json::array();
  for (std::size_t i = 0; i < s.residues.size(); ++i) {
    j["classes"].push_back({{"a", s.residues[i]},
                            {"theta", s.theta[i]},
                            {"psi", s.psi[i]},
                            {"pi", s.pi[i]},
                            {"remainder", s.remainder[i]}});
  }
  return j;
}

struct DrhRow {
  double x = 0.0;
  DrhResult result;
};

inline std::string drh_csv(const std::vector<DrhRow>& rows) {
  bool any_corrected = false;
  for (const auto& r : rows) any_corrected |= r.result.corrected.has_value();
  std::string out = "x,ratio_re,ratio_im,abs_ratio_minus_1,m,sqrt2";
  if (any_corrected) out += ",corrected_re,corrected_im,abs_corrected_minus_1";
  out += "\n";
  for (const auto& r : rows) {
    out += fmt17(r.x) + "," + fmt17(r.result.ratio.real()) + "," +
           fmt17(r.result.ratio.imag()) + "," +
           fmt17(std::abs(r.result.ratio - 1.0)) + "," +
           std::to_string(r.result.order_m) + "," +
           (r.result.sqrt2_applied ? "1" : "0");
    if (any_corrected) {
      if (r.result.corrected.has_value()) {
        std::complex<double> c = *r.result.corrected;
        out += "," + fmt17(c.real()) + "," + fmt17(c.imag()) + "," +
               fmt17(std::abs(c - 1.0));
      } else {
        out += ",,,";
      }
    }
    out += "\n";
  }
  return out;
}

inline nlohmann::json drh_json(const std::vector<DrhRow>& rows) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json e = {{"x", r.x},
                        {"ratio", detail::cpx(r.result.ratio)},
                        {"abs_ratio_minus_1", std::abs(r.result.ratio - 1.0)},
                        {"m", r.result.order_m},
                        {"sqrt2", r.result.sqrt2_applied},
                        {"limit", detail::cpx(r.result.limit_value)}};
    if (r.result.corrected.has_value()) {
      e["corrected"] = detail::cpx(*r.result.corrected);
    }
    j.push_back(e);
  }
  return j;
}

// "A:B:k" is a geometric grid from A to B with k points per decade
// (x_j = A 10^{j/k} while x_j <= B, with a relative 1e-12 slack at the top
// end). A bare number is a one-point grid.
inline std::vector<double> parse_grid(const std::string& text) {
  auto parse_num = [](const std::string& part) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("grid: cannot parse number: " + part);
    }
    if (used != part.size()) {
      throw std::invalid_argument("grid: trailing junk in: " + part);
    }
    return v;
  };
  std::size_t c1 = text.find(':');
  if (c1 == std::string::npos) {
    return {parse_num(text)};
  }
  std::size_t c2 = text.find(':', c1 + 1);
  if (c2 == std::string::npos || text.find(':', c2 + 1) != std::string::npos) {
    throw std::invalid_argument("grid: expected A:B:k or a single number");
  }
  double a = parse_num(text.substr(0, c1));
  double b = parse_num(text.substr(c1 + 1, c2 - c1 - 1));
  double kf = parse_num(text.substr(c2 + 1));
  if (!(a > 0.0) || !(b >= a)) {
    throw std::invalid_argument("grid: need 0 < A <= B");
  }
  if (!(kf >= 1.0) || kf != std::floor(kf)) {
    throw std::invalid_argument("grid: k must be a positive integer");
  }
  int k = static_cast<int>(kf);
  std::vector<double> xs;
  double cap = b * (1.0 + 1e-12);
  for (int j = 0;; ++j) {
    double x = a * std::pow(10.0, static_cast<double>(j) / k);
    if (x > cap) break;
    xs.push_back(x);
  }
  return xs;
}

}  // namespace eulerlab
