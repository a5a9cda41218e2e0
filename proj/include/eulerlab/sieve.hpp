#pragma once

// Prime generation. simple_sieve returns all primes up to a 32-bit limit;
// for_each_prime streams primes up to a 64-bit limit through fixed-width
// segments so memory stays at the segment size regardless of the limit.
// Primes are always visited in ascending order, which pins the floating
// summation order everywhere downstream.

#include <cstdint>
#include <vector>

#include "eulerlab/errors.hpp"

namespace eulerlab {

inline constexpr std::uint64_t kSegmentWidth = 1ull << 20;

// All primes p <= limit.
inline std::vector<std::uint32_t> simple_sieve(std::uint32_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> comp(static_cast<std::size_t>(limit) + 1, false);
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (comp[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) comp[j] = true;
  }
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (!comp[i]) primes.push_back(static_cast<std::uint32_t>(i));
  }
  return primes;
}

// Calls fn(p) for every prime p <= limit, ascending.
template <class Fn>
void for_each_prime(std::uint64_t limit, Fn&& fn) {
  if (limit < 2) return;
  std::uint64_t root = 1;
  while ((root + 1) * (root + 1) <= limit) ++root;
  std::vector<std::uint32_t> base =
      simple_sieve(static_cast<std::uint32_t>(root));
  for (std::uint32_t p : base) fn(static_cast<std::uint64_t>(p));

  std::vector<bool> seg;
  for (std::uint64_t low = root + 1; low <= limit; low += kSegmentWidth) {
    std::uint64_t high = low + kSegmentWidth - 1;
    if (high > limit || high < low) high = limit;
    seg.assign(static_cast<std::size_t>(high - low + 1), false);
    for (std::uint32_t p : base) {
      std::uint64_t pp = p;
      std::uint64_t start = (low + pp - 1) / pp * pp;
      if (start < pp * pp) start = pp * pp;
      for (std::uint64_t j = start; j <= high; j += pp) {
        seg[static_cast<std::size_t>(j - low)] = true;
      }
    }
    for (std::uint64_t i = low; i <= high; ++i) {
      if (!seg[static_cast<std::size_t>(i - low)]) fn(i);
    }
  }
}

struct PrimeTable {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> primes;
};

// Materialized prime list. Capped at 1e8 (about 46 MB of primes); use
// for_each_prime beyond that, which streams up to 1e9 and past it.
inline PrimeTable sieve(std::uint64_t limit) {
  constexpr std::uint64_t kMaterializeCap = 100'000'000ull;
  if (limit > kMaterializeCap) {
    throw resource_error(
        "sieve: materialized table capped at 1e8; use for_each_prime");
  }
  PrimeTable t;
  t.limit = limit;
  for_each_prime(limit, [&](std::uint64_t p) { t.primes.push_back(p); });
  return t;
}

}  // namespace eulerlab
