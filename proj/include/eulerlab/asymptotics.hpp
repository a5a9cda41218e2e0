#pragma once

// Truncated Euler products over p <= x against the asymptotic formulas that
// predict them: the general Dirichlet form (three cases by Re s against the
// critical line), the classical zeta form for real s, the smoothed-limit
// ratios on the critical line, and the appendix-style diagnostic sums.
//
// Every right-hand side is returned as a TermBreakdown whose total is, by
// construction, the exact sum of the parts it lists; reports and tests rely
// on that additivity.

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eulerlab/characters.hpp"
#include "eulerlab/chebyshev.hpp"
#include "eulerlab/compensated.hpp"
#include "eulerlab/hurwitz.hpp"
#include "eulerlab/l_functions.hpp"
#include "eulerlab/sieve.hpp"
#include "eulerlab/special_functions.hpp"
#include "eulerlab/zero_data.hpp"

namespace eulerlab {

inline constexpr double kLogSqrt2 = 0.34657359027997264;  // log(2)/2

struct PartialProduct {
  std::complex<double> log{0.0, 0.0};  // sum of -log(1 - chi(p) p^{-s})
  std::complex<double> value{1.0, 0.0};
  std::uint64_t primes_used = 0;
};

// prod_{p <= x} (1 - chi(p) p^{-s})^{-1}, accumulated in log space so the
// logarithm is the continuous branch built term by term.
inline PartialProduct partial_product(std::complex<double> s,
                                      const DirichletCharacter& chi,
                                      double x) {
  if (!(x >= 2.0)) throw std::domain_error("partial_product: need x >= 2");
  PartialProduct out;
  KahanComplexSum acc;
  for_each_prime(static_cast<std::uint64_t>(x), [&](std::uint64_t p) {
    CharValue v = chi.value(static_cast<std::int64_t>(p % chi.modulus()));
    if (v.is_zero) return;
    std::complex<double> factor =
        1.0 - v.to_complex() *
                  std::exp(-s * std::log(static_cast<double>(p)));
    if (std::abs(factor) < 1e-300) {
      throw std::domain_error("partial_product: Euler factor vanishes");
    }
    acc.add(-std::log(factor));
    out.primes_used += 1;
  });
  out.log = acc.value();
  out.value = std::exp(out.log);
  return out;
}

struct PowerTerm {
  std::string name;
  std::complex<double> value{0.0, 0.0};
};

struct TermBreakdown {
  double x = 0.0;
  std::complex<double> s{0.0, 0.0};
  std::string chi_label;
  int case_tag = 0;  // 1: left of the critical line, 2: on it, 3: right

  bool log_l_present = false;
  std::complex<double> log_l{0.0, 0.0};

  std::complex<double> li_theta_term{0.0, 0.0};
  bool theta_degenerate = false;  // some residue class had no usable theta
  double li_block_norm = 0.0;     // |sum_a chi(a) Li(...)| before 1/phi
  double max_remainder = 0.0;     // max_a |x/phi - theta(x; q, a)|

  // (k, -(1/k) Li(x^{1-ks})) entries, k stepping by phi(q).
  std::vector<std::pair<std::uint64_t, std::complex<double>>> li_chain;

  std::vector<PowerTerm> power_terms;

  bool sqrt2_applied = false;

  bool zero_term_present = false;
  std::complex<double> zero_term{0.0, 0.0};
  double zero_tail_bound = 0.0;

  std::complex<double> total_rhs_log{0.0, 0.0};
};

namespace detail {

inline std::complex<double> breakdown_total(const TermBreakdown& t) {
  std::complex<double> total = t.li_theta_term;
  if (t.log_l_present) total += t.log_l;
  for (const auto& [k, v] : t.li_chain) {
    (void)k;
    total += v;
  }
  for (const auto& pt : t.power_terms) total += pt.value;
  if (t.zero_term_present) total += t.zero_term;
  if (t.sqrt2_applied) total += kLogSqrt2;
  return total;
}

}  // namespace detail

// Predicted log of the partial product for a character mod q. Case is
// chosen by Re s against 1/2; exactly on the line the caller must say so
// via on_critical_line (the two formulas genuinely differ there), and the
// flag is rejected off the line. Passing zeros = nullptr omits the
// zero-sum term, leaving a right-hand side accurate only to O(1/log x).
// chain_variant_n extends the Li chain by one extra step, an alternative
// truncation depth that changes the total only below the error term.
inline TermBreakdown rhs_aim(std::complex<double> s,
                             const DirichletCharacter& chi, double x,
                             const ZeroMap* zeros, bool on_critical_line,
                             bool chain_variant_n = false) {
  if (!(x > 2.0)) throw std::domain_error("rhs_aim: need x > 2");
  double sigma = s.real();
  if (!(sigma > 0.0)) throw std::invalid_argument("rhs_aim: need Re s > 0");
  if (std::abs(s - std::complex<double>(1.0, 0.0)) < 1e-9) {
    throw std::domain_error("rhs_aim: formulas degenerate at s = 1");
  }
  if (on_critical_line && sigma != 0.5) {
    throw std::invalid_argument(
        "rhs_aim: on_critical_line requires Re s = 1/2");
  }
  if (!on_critical_line && sigma == 0.5) {
    throw std::invalid_argument(
        "rhs_aim: Re s = 1/2 is ambiguous; pass on_critical_line");
  }

  TermBreakdown t;
  t.x = x;
  t.s = s;
  t.chi_label = chi.label();
  t.case_tag = on_critical_line ? 2 : (sigma < 0.5 ? 1 : 3);

  std::uint32_t q = chi.modulus();
  double phi = static_cast<double>(chi.phi());
  double lx = std::log(x);
  double eta2 = static_cast<double>(eta(chi, 2));

  // Li block over residue classes: (1/phi) sum_a chi(a) Li((phi theta_a)^{1-s}).
  PrimeSummary ps = chebyshev_ap(static_cast<std::uint64_t>(x), q);
  KahanComplexSum block;
  for (std::size_t i = 0; i < ps.residues.size(); ++i) {
    CharValue v = chi.value(ps.residues[i]);
    if (v.is_zero) continue;
    double u = phi * ps.theta[i];
    if (!(u > 0.0) || u == 1.0) {
      t.theta_degenerate = true;
      continue;
    }
    block.add(v.to_complex() * ei((1.0 - s) * std::log(u)));
  }
  for (double r : ps.remainder) {
    t.max_remainder = std::max(t.max_remainder, std::abs(r));
  }
  t.li_block_norm = std::abs(block.value());
  t.li_theta_term = block.value() / phi;

  if (t.case_tag == 1) {
    // Li chain: k runs over multiples of phi(q) (consecutive integers when
    // phi = 1, starting at 2 so the block term is not double counted) up to
    // the truncation depth.
    std::uint64_t phi_int = chi.phi();
    double depth = chain_variant_n ? std::floor(2.0 + 1.0 / (2.0 * sigma))
                                   : std::floor(1.0 + 1.0 / (2.0 * sigma));
    std::uint64_t n = static_cast<std::uint64_t>(depth);
    std::uint64_t first = phi_int >= 2 ? phi_int : 2;
    std::uint64_t step = phi_int >= 2 ? phi_int : 1;
    for (std::uint64_t k = first; k <= n; k += step) {
      std::complex<double> w = 1.0 - static_cast<double>(k) * s;
      if (std::abs(w) * lx < 1e-14) {
        throw std::domain_error(
            "rhs_aim: chain term hits the Li singularity (s = 1/k)");
      }
      t.li_chain.emplace_back(
          k, -ei(w * lx) / static_cast<double>(k));
    }
    t.power_terms.push_back(
        {"half_power", (2.0 * s - 1.0 + eta2) *
                           std::exp((0.5 - s) * lx) /
                           ((1.0 - 2.0 * s) * lx)});
  } else if (t.case_tag == 2) {
    LValue lv = l_value(s, chi);
    if (std::abs(lv.value) < 1e-12) {
      throw std::domain_error(
          "rhs_aim: L vanishes here; the logarithmic form does not apply");
    }
    t.log_l = std::log(lv.value);
    t.log_l_present = true;
    t.power_terms.push_back(
        {"half_power", std::exp((0.5 - s) * lx) / lx});
    if (s.imag() == 0.0 && eta2 == 1.0) {
      t.sqrt2_applied = true;
    } else if (eta2 != 0.0) {
      std::complex<double> corr =
          eta2 * std::exp((1.0 - 2.0 * s) * lx) *
          (2.0 * std::exp((s - 0.5) * lx) - 1.0) /
          (2.0 * (2.0 * s - 1.0) * lx);
      t.power_terms.push_back({"eta2_power", corr});
    }
  } else {
    LValue lv = l_value(s, chi);
    if (std::abs(lv.value) < 1e-12) {
      throw std::domain_error(
          "rhs_aim: L vanishes here; the logarithmic form does not apply");
    }
    t.log_l = std::log(lv.value);
    t.log_l_present = true;
    t.power_terms.push_back(
        {"half_power", (2.0 * s - 1.0 + eta2) *
                           std::exp((0.5 - s) * lx) /
                           ((2.0 * s - 1.0) * lx)});
  }

  if (zeros != nullptr) {
    ZeroSum zs = zero_sum_S(s, x, chi, *zeros);
    t.zero_term = (t.case_tag == 1 ? -1.0 : 1.0) * zs.value / lx;
    t.zero_term_present = true;
    t.zero_tail_bound = zs.tail_bound / lx;
  }

  t.total_rhs_log = detail::breakdown_total(t);
  return t;
}

// Classical form for the zeta product at real s > 0. Matches rhs_aim with
// the trivial character for Re s > 1/2 up to the stated error term, but the
// two are kept separate because their printed shapes differ on the left of
// the critical line.
inline TermBreakdown rhs_ramanujan(double s, double x, const ZeroMap* zeros) {
  if (!(s > 0.0)) throw std::invalid_argument("rhs_ramanujan: need s > 0");
  if (!(x > 2.0)) throw std::domain_error("rhs_ramanujan: need x > 2");
  if (s == 1.0) {
    throw std::domain_error("rhs_ramanujan: formulas degenerate at s = 1");
  }

  auto chi = character_by_index(1, 0);
  TermBreakdown t;
  t.x = x;
  t.s = {s, 0.0};
  t.chi_label = chi.label();
  t.case_tag = s < 0.5 ? 1 : (s == 0.5 ? 2 : 3);

  double lx = std::log(x);
  PrimeSummary ps = chebyshev_ap(static_cast<std::uint64_t>(x), 1);
  double theta = ps.theta[0];
  t.max_remainder = std::abs(ps.remainder[0]);
  if (!(theta > 0.0) || theta == 1.0) {
    throw std::domain_error("rhs_ramanujan: theta(x) degenerate");
  }

  if (t.case_tag == 1) {
    t.li_theta_term = -ei((1.0 - s) * std::log(theta));
    t.li_block_norm = std::abs(t.li_theta_term);
    std::uint64_t n =
        static_cast<std::uint64_t>(std::floor(1.0 + 1.0 / (2.0 * s)));
    for (std::uint64_t k = 2; k <= n; ++k) {
      std::complex<double> w{1.0 - static_cast<double>(k) * s, 0.0};
      if (std::abs(w) * lx < 1e-14) {
        throw std::domain_error(
            "rhs_ramanujan: chain term hits the Li singularity (s = 1/k)");
      }
      t.li_chain.emplace_back(k, -ei(w * lx) / static_cast<double>(k));
    }
    t.power_terms.push_back(
        {"half_power",
         -2.0 * s * std::pow(x, 0.5 - s) / ((1.0 - 2.0 * s) * lx)});
  } else if (t.case_tag == 2) {
    double zeta_half = hurwitz_zeta({0.5, 0.0}, 1.0).real();
    t.log_l = std::log(-zeta_half);
    t.log_l_present = true;
    t.sqrt2_applied = true;
    t.li_theta_term = ei(std::complex<double>(0.5 * std::log(theta), 0.0));
    t.li_block_norm = std::abs(t.li_theta_term);
    t.power_terms.push_back({"half_power", 1.0 / lx});
  } else {
    std::complex<double> zeta = hurwitz_zeta({s, 0.0}, 1.0);
    if (std::abs(zeta) < 1e-12) {
      throw std::domain_error("rhs_ramanujan: zeta vanishes here");
    }
    t.log_l = std::log(std::abs(zeta));
    t.log_l_present = true;
    t.li_theta_term = ei((1.0 - s) * std::log(theta));
    t.li_block_norm = std::abs(t.li_theta_term);
    t.power_terms.push_back(
        {"half_power",
         2.0 * s * std::pow(x, 0.5 - s) / ((2.0 * s - 1.0) * lx)});
  }

  if (zeros != nullptr) {
    ZeroSum zs = zero_sum_S({s, 0.0}, x, chi, *zeros);
    t.zero_term = (t.case_tag == 1 ? -1.0 : 1.0) * zs.value / lx;
    t.zero_term_present = true;
    t.zero_tail_bound = zs.tail_bound / lx;
  }

  t.total_rhs_log = detail::breakdown_total(t);
  return t;
}

struct DrhResult {
  std::complex<double> ratio{0.0, 0.0};  // observed / predicted limit
  int order_m = 0;                       // order of vanishing at s0
  bool sqrt2_applied = false;
  std::complex<double> limit_value{0.0, 0.0};  // predicted limit of
                                               // (log x)^m * product
  // With zeros available and m = 0, the ratio after dividing out the
  // finite-x exponential correction as well.
  std::optional<std::complex<double>> corrected;
};

// (log x)^m prod_{p <= x}(1 - chi(p) p^{-s0})^{-1} against its predicted
// limit c_m e^{-m gamma} (times sqrt 2 when s0 = 1/2 and chi^2 is
// principal), where c_m is the leading Taylor coefficient of L at
// s0 = 1/2 + it.
inline DrhResult drh_ratio(const DirichletCharacter& chi, double t, double x,
                           const ZeroMap* zeros = nullptr) {
  DrhResult r;
  VanishingOrder vo = vanishing_order(chi, t);
  if (vo.order < 0) {
    throw std::runtime_error(
        "drh_ratio: vanishing order undetermined (all coefficients tiny)");
  }
  r.order_m = vo.order;
  std::complex<double> s0{0.5, t};
  r.sqrt2_applied = (t == 0.0) && eta(chi, 2) == 1;
  std::complex<double> cm = vo.taylor.coeffs[vo.order];
  r.limit_value = cm * std::exp(-static_cast<double>(r.order_m) *
                                kEulerGamma);
  if (r.sqrt2_applied) r.limit_value *= std::sqrt(2.0);
  PartialProduct pp = partial_product(s0, chi, x);
  double lx_pow = std::pow(std::log(x), r.order_m);
  r.ratio = lx_pow * pp.value / r.limit_value;
  if (zeros != nullptr && r.order_m == 0) {
    TermBreakdown tb = rhs_aim(s0, chi, x, zeros, true);
    r.corrected = std::exp(pp.log - tb.total_rhs_log);
  }
  return r;
}

// Same limit written the other way: the product against
// B e^{-m gamma} / (log x)^m with B the leading coefficient (and the
// sqrt 2 factor where it applies). Returns the magnitude of the ratio;
// agrees with |drh_ratio| identically.
inline double conrad_limit_check(const DirichletCharacter& chi, double t,
                                 double x) {
  VanishingOrder vo = vanishing_order(chi, t);
  if (vo.order < 0) {
    throw std::runtime_error("conrad_limit_check: vanishing order undetermined");
  }
  std::complex<double> b = vo.taylor.coeffs[vo.order];
  if (t == 0.0 && eta(chi, 2) == 1) b *= std::sqrt(2.0);
  std::complex<double> predicted =
      b * std::exp(-static_cast<double>(vo.order) * kEulerGamma) /
      std::pow(std::log(x), vo.order);
  PartialProduct pp = partial_product({0.5, t}, chi, x);
  return std::abs(pp.value / predicted);
}

// exp(sum over prime powers p^k <= x of 1/(k p^{ks})): the prime-power
// truncation of the Euler product, which tends to zeta(s) for Re s > 1.
inline std::complex<double> p_x(std::complex<double> s, double x) {
  if (!(x >= 2.0)) throw std::domain_error("p_x: need x >= 2");
  KahanComplexSum acc;
  for_each_prime(static_cast<std::uint64_t>(x), [&](std::uint64_t p) {
    double lp = std::log(static_cast<double>(p));
    std::uint64_t pk = p;
    for (int k = 1;; ++k) {
      acc.add(std::exp(-s * (static_cast<double>(k) * lp)) /
              static_cast<double>(k));
      if (pk > static_cast<std::uint64_t>(x) / p) break;
      pk *= p;
    }
  });
  return std::exp(acc.value());
}

// sum_{p <= x} sum_{k > K_x(p)} 1/(k p^{k/2}) - log sqrt 2, where K_x(p) is
// the largest k with p^k <= x: the prime-power tail that the critical-line
// square root phenomenon distills to. Tends to 0 as x grows. Inner tails
// are cut once p^{k/2} > 1e16, far below double rounding of the total.
inline double sqrt2_log_residual(double x) {
  if (!(x >= 2.0)) throw std::domain_error("sqrt2_log_residual: need x >= 2");
  KahanSum acc;
  std::uint64_t xi = static_cast<std::uint64_t>(x);
  for_each_prime(xi, [&](std::uint64_t p) {
    int k_max = 1;
    for (std::uint64_t pk = p; pk <= xi / p; pk *= p) ++k_max;
    double sp = std::sqrt(static_cast<double>(p));
    double pk_half = std::pow(sp, static_cast<double>(k_max + 1));
    for (int k = k_max + 1; pk_half <= 1e16; ++k, pk_half *= sp) {
      acc.add(1.0 / (static_cast<double>(k) * pk_half));
    }
  });
  return acc.value() - kLogSqrt2;
}

struct SweepRow {
  double x = 0.0;
  std::complex<double> lhs_log{0.0, 0.0};
  std::complex<double> rhs_log{0.0, 0.0};
  double resid_abs = 0.0;
  double e_ratio = 0.0;   // max_a |x/phi - theta| / (sqrt x log x)
  double li_diag = 0.0;   // |sum_a chi(a) Li(...)| without the 1/phi
};

struct SweepReport {
  std::complex<double> s{0.0, 0.0};
  std::string chi_label;
  bool on_critical_line = false;
  std::vector<SweepRow> rows;
};

inline SweepReport sweep(std::complex<double> s,
                         const DirichletCharacter& chi,
                         const std::vector<double>& xs, const ZeroMap* zeros,
                         bool on_critical_line,
                         bool chain_variant_n = false) {
  SweepReport rep;
  rep.s = s;
  rep.chi_label = chi.label();
  rep.on_critical_line = on_critical_line;
  for (double x : xs) {
    PartialProduct pp = partial_product(s, chi, x);
    TermBreakdown tb =
        rhs_aim(s, chi, x, zeros, on_critical_line, chain_variant_n);
    SweepRow row;
    row.x = x;
    row.lhs_log = pp.log;
    row.rhs_log = tb.total_rhs_log;
    row.resid_abs = std::abs(pp.log - tb.total_rhs_log);
    row.e_ratio = tb.max_remainder / (std::sqrt(x) * std::log(x));
    row.li_diag = tb.li_block_norm;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace eulerlab
