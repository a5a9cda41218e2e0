#pragma once

// Nontrivial-zero fixtures and the sums over zeros that the remainder
// formulas consume. Fixture files are plain text: three '#' header lines
// (label, source, complete_to), then one positive ordinate per line,
// strictly ascending. Ordinates are the imaginary parts of zeros on the
// critical line; conjugates are implied.

#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulerlab/characters.hpp"
#include "eulerlab/compensated.hpp"
#include "eulerlab/errors.hpp"

namespace eulerlab {

struct ZeroList {
  std::string label;        // character label ("4.1") or "zeta"
  std::string source;       // free-form provenance note
  double complete_to = 0.0; // every zero with ordinate <= this is present
  std::vector<double> ordinates;
};

using ZeroMap = std::map<std::string, ZeroList>;

namespace detail {

inline std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

inline ZeroList load_zeros(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw missing_fixture_error("cannot open zero file: " + path.string());
  }
  ZeroList list;
  bool have_label = false, have_source = false, have_complete = false;
  bool in_data = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = detail::strip(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      if (in_data) {
        throw zero_parse_error("header line after data began", lineno);
      }
      std::string kv = detail::strip(t.substr(1));
      std::size_t eq = kv.find('=');
      if (eq == std::string::npos) {
        throw zero_parse_error("header line is not key=value", lineno);
      }
      std::string key = detail::strip(kv.substr(0, eq));
      std::string val = detail::strip(kv.substr(eq + 1));
      if (key == "label") {
        list.label = val;
        have_label = true;
      } else if (key == "source") {
        list.source = val;
        have_source = true;
      } else if (key == "complete_to") {
        auto r = std::from_chars(val.data(), val.data() + val.size(),
                                 list.complete_to);
        if (r.ec != std::errc() || r.ptr != val.data() + val.size()) {
          throw zero_parse_error("complete_to is not a number", lineno);
        }
        have_complete = true;
      } else {
        throw zero_parse_error("unknown header key: " + key, lineno);
      }
      continue;
    }
    if (!in_data) {
      if (!have_label || !have_source || !have_complete) {
        throw zero_parse_error(
            "data before label/source/complete_to headers", lineno);
      }
      in_data = true;
    }
    double v = 0.0;
    auto r = std::from_chars(t.data(), t.data() + t.size(), v);
    if (r.ec != std::errc() || r.ptr != t.data() + t.size()) {
      throw zero_parse_error("bad ordinate: " + t, lineno);
    }
    if (!(v > 0.0)) {
      throw zero_parse_error("ordinates must be positive", lineno);
    }
    if (!list.ordinates.empty() && v <= list.ordinates.back()) {
      throw zero_parse_error("ordinates must be strictly ascending", lineno);
    }
    list.ordinates.push_back(v);
  }
  if (!in_data) {
    throw zero_parse_error("file has no ordinates", lineno);
  }
  return list;
}

// Loads every *.txt in dir, keyed by the label in each file's header.
inline ZeroMap load_zero_directory(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw missing_fixture_error("zero directory not found: " + dir.string());
  }
  ZeroMap map;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    if (entry.path().extension() != ".txt") continue;
    ZeroList list = load_zeros(entry.path());
    auto [it, inserted] = map.emplace(list.label, std::move(list));
    if (!inserted) {
      throw zero_parse_error(
          "duplicate zero list label: " + it->first + " in " +
              entry.path().string(),
          0);
    }
  }
  return map;
}

namespace detail {

inline const ZeroList& find_zero_list(const ZeroMap& zeros,
                                      const std::string& label,
                                      std::uint32_t q) {
  auto it = zeros.find(label);
  if (it == zeros.end() && q == 1) it = zeros.find("zeta");
  if (it == zeros.end()) {
    throw missing_fixture_error("no zero list for character " + label +
                                (q == 1 ? " (or \"zeta\")" : ""));
  }
  return it->second;
}

}  // namespace detail

struct ZeroSum {
  std::complex<double> value{0.0, 0.0};
  double tail_bound = 0.0;  // heuristic bound on the truncated remainder
};

// S_s(x, chi) = -(s/phi(q)) sum_a chi(a) sum_psi conj(psi(a)) sum_rho
// x^{rho-s}/(rho (rho-s)). The inner a-sum is phi(q) when psi = chi and 0
// otherwise, so only characters with a nonvanishing weight need fixtures;
// the weight is still computed rather than assumed, which the tests exploit.
inline ZeroSum zero_sum_S(std::complex<double> s, double x,
                          const DirichletCharacter& chi,
                          const ZeroMap& zeros) {
  if (!(x > 1.0)) throw std::domain_error("zero_sum_S: need x > 1");
  std::uint32_t q = chi.modulus();
  double phi = static_cast<double>(chi.phi());
  double lx = std::log(x);
  KahanComplexSum outer;
  double tail = 0.0;
  for (const auto& psi : characters_mod(q)) {
    // w = sum over units a of chi(a) conj(psi(a)).
    KahanComplexSum wsum;
    for (std::uint32_t a = 0; a < q; ++a) {
      CharValue vc = chi.value(a);
      if (vc.is_zero) continue;
      CharValue vp = psi.value(a);
      wsum.add((vc.rot * vp.rot.conj()).to_complex());
    }
    std::complex<double> w = wsum.value();
    if (std::abs(w) < 1e-9 * phi) continue;  // orthogonality: exact zero
    const ZeroList& list = detail::find_zero_list(zeros, psi.label(), q);
    KahanComplexSum inner;
    for (double g : list.ordinates) {
      for (double sgn : {1.0, -1.0}) {
        std::complex<double> rho{0.5, sgn * g};
        std::complex<double> dr = rho - s;
        if (std::abs(dr) < 1e-9) {
          throw std::domain_error("zero_sum_S: s collides with a zero");
        }
        inner.add(std::exp(dr * lx) / (rho * dr));
      }
    }
    outer.add(w * inner.value());
    // Zeros beyond T contribute at most ~ x^{1/2-sigma}/gamma^2 each; the
    // counting function has density ~ (1/pi) log(qT/2pi), so the tail of
    // sum 1/gamma^2 integrates to roughly (1/pi)(log(qT/2pi) + 1)/T per
    // conjugate half.
    double t_cap = list.complete_to;
    if (t_cap > 0.0) {
      constexpr double kPi = 3.14159265358979323846264338328;
      tail += std::abs(w) * std::pow(x, 0.5 - s.real()) * (2.0 / kPi) *
              (std::log(static_cast<double>(q) * t_cap / (2.0 * kPi)) + 1.0) /
              t_cap;
    }
  }
  ZeroSum out;
  out.value = -s / phi * outer.value();
  out.tail_bound = std::abs(s) / phi * tail;
  return out;
}

// Reconstruction of phi(q) E(x; q, a) from the explicit formula truncated at
// ordinate T: delta_2 sqrt(x) + delta_3 x^{1/3}
// + Re sum_psi conj(psi(a)) sum_{|gamma|<=T} x^rho/rho
// - Re sum_psi conj(psi(a)) sum_{|gamma|<=T} x^{rho/2}/rho.
// Every character mod q must have a fixture complete to T. If imag_out is
// given it receives the imaginary part left over by the truncation, a
// diagnostic that should be near zero.
inline double explicit_psi_rhs(double x, std::uint32_t q, std::uint32_t a,
                               const ZeroMap& zeros, double t_max,
                               double* imag_out = nullptr) {
  if (q == 0) throw std::invalid_argument("explicit_psi_rhs: q must be >= 1");
  if (q > 1 && std::gcd(a, q) != 1) {
    throw std::invalid_argument("explicit_psi_rhs: need gcd(a, q) = 1");
  }
  if (!(x > 1.0)) throw std::domain_error("explicit_psi_rhs: need x > 1");
  double lx = std::log(x);
  KahanComplexSum total;
  for (const auto& psi : characters_mod(q)) {
    const ZeroList& list = detail::find_zero_list(zeros, psi.label(), q);
    if (list.complete_to < t_max) {
      throw missing_fixture_error("zero list " + list.label +
                                  " only complete to " +
                                  std::to_string(list.complete_to));
    }
    std::complex<double> wa = psi.value(a).to_complex();
    wa = std::conj(wa);
    KahanComplexSum inner;
    for (double g : list.ordinates) {
      if (g > t_max) break;
      for (double sgn : {1.0, -1.0}) {
        std::complex<double> rho{0.5, sgn * g};
        inner.add(std::exp(rho * lx) / rho);
        inner.add(-std::exp(0.5 * rho * lx) / rho);
      }
    }
    total.add(wa * inner.value());
  }
  double d2 = static_cast<double>(delta_m(q, a, 2));
  double d3 = static_cast<double>(delta_m(q, a, 3));
  std::complex<double> z = total.value();
  if (imag_out != nullptr) *imag_out = z.imag();
  return d2 * std::sqrt(x) + d3 * std::cbrt(x) + z.real();
}

// sum over listed zeros with ordinate <= T of 1/|rho|, positive ordinates
// only (the conjugate pair would simply double it).
inline double zero_reciprocal_sum(const ZeroList& list, double t_max) {
  if (t_max > list.complete_to) {
    throw std::invalid_argument(
        "zero_reciprocal_sum: T exceeds the list's complete_to");
  }
  KahanSum acc;
  for (double g : list.ordinates) {
    if (g > t_max) break;
    acc.add(1.0 / std::hypot(0.5, g));
  }
  return acc.value();
}

}  // namespace eulerlab
