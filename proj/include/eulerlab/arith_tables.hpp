#pragma once

// Tables of the elementary arithmetic functions mu, omega, Omega, smallest
// prime factor (and through them lambda and von Mangoldt Lambda) for all
// n <= limit, built with one linear sieve pass.

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "eulerlab/compensated.hpp"
#include "eulerlab/errors.hpp"

namespace eulerlab {

struct ArithTables {
  std::uint64_t limit = 0;
  std::vector<std::int8_t> mu;          // mu[0] = 0
  std::vector<std::uint8_t> omega;      // distinct prime factors
  std::vector<std::uint8_t> big_omega;  // prime factors with multiplicity
  std::vector<std::uint32_t> spf;       // smallest prime factor, spf[1] = 1

  // lambda(n) = (-1)^Omega(n)
  int lambda(std::uint64_t n) const { return (big_omega[n] & 1) ? -1 : 1; }

  bool is_prime(std::uint64_t n) const { return n >= 2 && spf[n] == n; }

  // Lambda(n) = log p when n = p^k, else 0.
  double von_mangoldt(std::uint64_t n) const {
    if (n < 2) return 0.0;
    std::uint64_t p = spf[n];
    std::uint64_t m = n;
    while (m % p == 0) m /= p;
    return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
  }
};

inline ArithTables arith_tables(std::uint64_t limit) {
  constexpr std::uint64_t kTableCap = 200'000'000ull;
  if (limit > kTableCap) {
    throw resource_error("arith_tables: capped at 2e8 (about 7 bytes per n)");
  }
  ArithTables t;
  t.limit = limit;
  std::size_t n = static_cast<std::size_t>(limit) + 1;
  t.mu.assign(n, 0);
  t.omega.assign(n, 0);
  t.big_omega.assign(n, 0);
  t.spf.assign(n, 0);
  if (limit >= 1) {
    t.mu[1] = 1;
    t.spf[1] = 1;
  }

  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (t.spf[i] == 0) {
      t.spf[i] = static_cast<std::uint32_t>(i);
      t.mu[i] = -1;
      t.omega[i] = 1;
      t.big_omega[i] = 1;
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      if (p > t.spf[i] || i * p > limit) break;
      std::uint64_t ip = i * p;
      t.spf[ip] = p;
      t.big_omega[ip] = static_cast<std::uint8_t>(t.big_omega[i] + 1);
      if (i % p == 0) {
        t.mu[ip] = 0;
        t.omega[ip] = t.omega[i];
      } else {
        t.mu[ip] = static_cast<std::int8_t>(-t.mu[i]);
        t.omega[ip] = static_cast<std::uint8_t>(t.omega[i] + 1);
      }
    }
  }
  return t;
}

// Mertens function M(x) = sum_{n<=x} mu(n).
inline std::int64_t mertens(const ArithTables& t, std::uint64_t x) {
  std::int64_t m = 0;
  for (std::uint64_t n = 1; n <= x && n <= t.limit; ++n) m += t.mu[n];
  return m;
}

// L(x) = sum_{n<=x} lambda(n).
inline std::int64_t liouville_sum(const ArithTables& t, std::uint64_t x) {
  std::int64_t m = 0;
  for (std::uint64_t n = 1; n <= x && n <= t.limit; ++n) m += t.lambda(n);
  return m;
}

// sum_{d|n} d^{-s}, by trial-division divisor enumeration.
inline std::complex<double> divisor_sigma(std::uint64_t n,
                                          std::complex<double> s) {
  if (n == 0) throw std::invalid_argument("divisor_sigma: n must be positive");
  KahanComplexSum acc;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    acc.add(std::exp(-s * std::log(static_cast<double>(d))));
    std::uint64_t e = n / d;
    if (e != d) acc.add(std::exp(-s * std::log(static_cast<double>(e))));
  }
  return acc.value();
}

}  // namespace eulerlab
