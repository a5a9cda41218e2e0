#pragma once

// Chebyshev prime sums in arithmetic progressions: theta(x; q, a),
// psi(x; q, a), pi(x; q, a), the remainder x/phi(q) - theta(x; q, a), the
// character-twisted psi, and a Bombieri-Vinogradov style aggregate of
// worst-case remainders over moduli.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "eulerlab/arith_tables.hpp"
#include "eulerlab/characters.hpp"
#include "eulerlab/compensated.hpp"
#include "eulerlab/sieve.hpp"

namespace eulerlab {

struct PrimeSummary {
  std::uint64_t x = 0;
  std::uint32_t q = 1;
  // Residues coprime to q in ascending order; for q = 1 the single class is
  // listed as 0. Parallel arrays below are indexed by position here.
  std::vector<std::uint32_t> residues;
  std::vector<double> theta;      // sum of log p over p <= x, p = a mod q
  std::vector<double> psi;        // same over prime powers p^k <= x
  std::vector<std::uint64_t> pi;  // prime counts
  std::vector<double> remainder;  // x/phi(q) - theta per class
};

namespace detail {

// class_of[r] = index into the coprime-residue list, or -1.
inline std::vector<std::int32_t> residue_classes(
    std::uint32_t q, std::vector<std::uint32_t>& residues) {
  residues.clear();
  std::vector<std::int32_t> class_of(q == 0 ? 1 : q, -1);
  if (q == 1) {
    residues.push_back(0);
    class_of[0] = 0;
    return class_of;
  }
  for (std::uint32_t r = 0; r < q; ++r) {
    if (std::gcd(r, q) == 1) {
      class_of[r] = static_cast<std::int32_t>(residues.size());
      residues.push_back(r);
    }
  }
  return class_of;
}

}  // namespace detail

inline PrimeSummary chebyshev_ap(std::uint64_t x, std::uint32_t q) {
  if (q == 0) throw std::invalid_argument("chebyshev_ap: q must be >= 1");
  PrimeSummary s;
  s.x = x;
  s.q = q;
  auto class_of = detail::residue_classes(q, s.residues);
  std::size_t k = s.residues.size();
  std::vector<KahanSum> theta(k), psi(k);
  s.pi.assign(k, 0);
  for_each_prime(x, [&](std::uint64_t p) {
    std::int32_t c = class_of[p % q];
    if (c < 0) return;  // p divides q, so every power lands off the units
    double lp = std::log(static_cast<double>(p));
    theta[c].add(lp);
    psi[c].add(lp);
    s.pi[c] += 1;
    // Higher powers p^k <= x contribute log p to the class of p^k.
    for (std::uint64_t pk = p; pk <= x / p;) {
      pk *= p;
      psi[class_of[pk % q]].add(lp);
    }
  });
  s.theta.resize(k);
  s.psi.resize(k);
  s.remainder.resize(k);
  double phi = static_cast<double>(k);  // one residue class per unit
  for (std::size_t i = 0; i < k; ++i) {
    s.theta[i] = theta[i].value();
    s.psi[i] = psi[i].value();
    s.remainder[i] = static_cast<double>(x) / phi - s.theta[i];
  }
  return s;
}

// psi(x, chi) = sum over prime powers p^k <= x of chi(p)^k log p.
inline std::complex<double> psi_twisted(std::uint64_t x,
                                        const DirichletCharacter& chi) {
  KahanComplexSum acc;
  for_each_prime(x, [&](std::uint64_t p) {
    CharValue v = chi.value(static_cast<std::int64_t>(p % chi.modulus()));
    if (v.is_zero) return;
    double lp = std::log(static_cast<double>(p));
    std::uint64_t pk = p;
    for (std::int64_t k = 1;; ++k) {
      acc.add(v.rot.pow(k).to_complex() * lp);
      if (pk > x / p) break;
      pk *= p;
    }
  });
  return acc.value();
}

// sum over q <= Q of the worst remainder sup_{a, t <= x} |t/phi(q) -
// theta(t; q, a)|. The remainder is piecewise linear in t with drops exactly
// at primes in the class, so the supremum is attained at a one-sided limit
// of some jump or at t = x; a single ascending prime pass visits all of
// them.
inline double bv_sum(std::uint64_t x, std::uint32_t big_q) {
  if (big_q < 1 || big_q > x) {
    throw std::invalid_argument("bv_sum: need 1 <= Q <= x");
  }
  std::vector<double> phi(big_q + 1, 0.0);
  std::vector<std::vector<std::int32_t>> class_of(big_q + 1);
  std::vector<std::vector<double>> theta(big_q + 1);
  std::vector<double> worst(big_q + 1, 0.0);
  for (std::uint32_t q = 1; q <= big_q; ++q) {
    std::vector<std::uint32_t> residues;
    class_of[q] = detail::residue_classes(q, residues);
    theta[q].assign(residues.size(), 0.0);
    phi[q] = static_cast<double>(residues.size());
  }
  for_each_prime(x, [&](std::uint64_t p) {
    double lp = std::log(static_cast<double>(p));
    for (std::uint32_t q = 1; q <= big_q; ++q) {
      std::int32_t c = class_of[q][p % q];
      if (c < 0) continue;
      double drift = static_cast<double>(p) / phi[q];
      double before = std::abs(drift - theta[q][c]);
      theta[q][c] += lp;
      double after = std::abs(drift - theta[q][c]);
      worst[q] = std::max({worst[q], before, after});
    }
  });
  KahanSum total;
  for (std::uint32_t q = 1; q <= big_q; ++q) {
    for (double t : theta[q]) {
      worst[q] =
          std::max(worst[q], std::abs(static_cast<double>(x) / phi[q] - t));
    }
    total.add(worst[q]);
  }
  return total.value();
}

// sum_{n <= x} mu(n) chi(n).
inline std::complex<double> mertens_twisted(const ArithTables& tables,
                                            const DirichletCharacter& chi,
                                            std::uint64_t x) {
  if (x >= tables.mu.size()) {
    throw std::invalid_argument("mertens_twisted: x beyond table limit");
  }
  KahanComplexSum acc;
  for (std::uint64_t n = 1; n <= x; ++n) {
    if (tables.mu[n] == 0) continue;
    CharValue v = chi.value(static_cast<std::int64_t>(n % chi.modulus()));
    if (v.is_zero) continue;
    acc.add(v.to_complex() * static_cast<double>(tables.mu[n]));
  }
  return acc.value();
}

}  // namespace eulerlab
