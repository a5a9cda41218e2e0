#pragma once

// Deliberately naive reference implementations for the acceptance checks:
// trial-division primality, per-class loops, long double accumulation.
// Slow and obvious on purpose; they share no code with the sieve path.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

namespace eulerlab::oracle {

inline bool trial_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

struct NaiveSummary {
  std::vector<std::uint32_t> residues;
  std::vector<double> theta;
  std::vector<double> psi;
  std::vector<std::uint64_t> pi;
};

inline NaiveSummary naive_chebyshev(std::uint64_t x, std::uint32_t q) {
  NaiveSummary s;
  std::vector<std::int32_t> class_of(q, -1);
  if (q == 1) {
    s.residues.push_back(0);
    class_of[0] = 0;
  } else {
    for (std::uint32_t a = 0; a < q; ++a) {
      if (std::gcd(a, q) == 1) {
        class_of[a] = static_cast<std::int32_t>(s.residues.size());
        s.residues.push_back(a);
      }
    }
  }
  std::vector<long double> theta(s.residues.size(), 0.0L);
  std::vector<long double> psi(s.residues.size(), 0.0L);
  s.pi.assign(s.residues.size(), 0);
  for (std::uint64_t n = 2; n <= x; ++n) {
    if (!trial_is_prime(n)) continue;
    if (class_of[n % q] < 0) continue;
    long double lp = std::log(static_cast<long double>(n));
    theta[class_of[n % q]] += lp;
    s.pi[class_of[n % q]] += 1;
    for (std::uint64_t pk = n; pk <= x; pk *= n) {
      if (class_of[pk % q] >= 0) psi[class_of[pk % q]] += lp;
      if (pk > x / n) break;
    }
  }
  s.theta.assign(theta.begin(), theta.end());
  s.psi.assign(psi.begin(), psi.end());
  return s;
}

// Independent version of the worst-remainder aggregate: per modulus and per
// class, walk that class's primes in order and track both one-sided values
// at every jump plus the endpoint.
inline double naive_bv(std::uint64_t x, std::uint32_t big_q) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t n = 2; n <= x; ++n) {
    if (trial_is_prime(n)) primes.push_back(n);
  }
  long double total = 0.0L;
  for (std::uint32_t q = 1; q <= big_q; ++q) {
    std::uint64_t phi = 0;
    if (q == 1) {
      phi = 1;
    } else {
      for (std::uint32_t a = 0; a < q; ++a) {
        if (std::gcd(a, q) == 1) ++phi;
      }
    }
    long double worst = 0.0L;
    auto consider = [&](long double v) {
      if (std::abs(v) > worst) worst = std::abs(v);
    };
    for (std::uint32_t a = 0; a < q; ++a) {
      if (q > 1 && std::gcd(a, q) != 1) continue;
      if (q == 1 && a > 0) break;
      long double th = 0.0L;
      for (std::uint64_t p : primes) {
        if (p % q != a % q) continue;
        long double drift =
            static_cast<long double>(p) / static_cast<long double>(phi);
        consider(drift - th);
        th += std::log(static_cast<long double>(p));
        consider(drift - th);
      }
      consider(static_cast<long double>(x) / static_cast<long double>(phi) -
               th);
    }
    total += worst;
  }
  return static_cast<double>(total);
}

}  // namespace eulerlab::oracle
