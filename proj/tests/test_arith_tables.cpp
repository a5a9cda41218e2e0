#include <catch2/catch_amalgamated.hpp>

#include <cstdint>

#include "eulerlab/arith_tables.hpp"

using eulerlab::arith_tables;
using eulerlab::ArithTables;

namespace {

// Independent trial-division factorization for cross-checking the linear
// sieve tables on a small range.
struct Factored {
  int mu = 1;
  unsigned omega = 0;
  unsigned big_omega = 0;
  std::uint32_t spf = 0;
};

Factored slow_factor(std::uint64_t n) {
  Factored f;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    if (f.spf == 0) f.spf = static_cast<std::uint32_t>(p);
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.omega += 1;
    f.big_omega += e;
    f.mu = (e > 1) ? 0 : -f.mu;
  }
  if (n > 1) {
    if (f.spf == 0) f.spf = static_cast<std::uint32_t>(n);
    f.omega += 1;
    f.big_omega += 1;
    f.mu = -f.mu;
  }
  return f;
}

}  // namespace

TEST_CASE("linear sieve tables match trial division", "[arith]") {
  ArithTables t = arith_tables(500);
  for (std::uint64_t n = 2; n <= 500; ++n) {
    Factored f = slow_factor(n);
    INFO("n = " << n);
    CHECK(int(t.mu[n]) == f.mu);
    CHECK(unsigned(t.omega[n]) == f.omega);
    CHECK(unsigned(t.big_omega[n]) == f.big_omega);
    CHECK(t.spf[n] == f.spf);
    CHECK(t.lambda(n) == ((f.big_omega % 2) ? -1 : 1));
    CHECK(t.is_prime(n) == (f.omega == 1 && f.big_omega == 1));
  }
  CHECK(t.mu[1] == 1);
  CHECK(t.lambda(1) == 1);
}

TEST_CASE("von Mangoldt picks out prime powers", "[arith]") {
  ArithTables t = arith_tables(100);
  CHECK(t.von_mangoldt(2) == Catch::Approx(std::log(2.0)));
  CHECK(t.von_mangoldt(8) == Catch::Approx(std::log(2.0)));
  CHECK(t.von_mangoldt(81) == Catch::Approx(std::log(3.0)));
  CHECK(t.von_mangoldt(1) == 0.0);
  CHECK(t.von_mangoldt(12) == 0.0);
  CHECK(t.von_mangoldt(97) == Catch::Approx(std::log(97.0)));
}

TEST_CASE("mertens and liouville partial sums", "[arith]") {
  ArithTables t = arith_tables(1000);
  // Direct accumulation against the table-driven helpers.
  std::int64_t m = 0, l = 0;
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    m += t.mu[n];
    l += t.lambda(n);
    if (n == 10) {
      CHECK(eulerlab::mertens(t, n) == -1);
      CHECK(eulerlab::liouville_sum(t, n) == 0);
    }
    if (n == 97 || n == 1000) {
      CHECK(eulerlab::mertens(t, n) == m);
      CHECK(eulerlab::liouville_sum(t, n) == l);
    }
  }
}

TEST_CASE("moebius sums telescope to the unit indicator", "[arith]") {
  ArithTables t = arith_tables(1000);
  for (std::uint64_t n = 1; n <= 1000; n += 37) {
    std::int64_t s = 0;
    for (std::uint64_t d = 1; d <= n; ++d) {
      if (n % d == 0) s += t.mu[d];
    }
    CHECK(s == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("divisor sigma enumerates divisors", "[arith]") {
  CHECK(eulerlab::divisor_sigma(12, {0.0, 0.0}).real() == Catch::Approx(6.0));
  CHECK(eulerlab::divisor_sigma(12, {-1.0, 0.0}).real() ==
        Catch::Approx(28.0));
  CHECK(eulerlab::divisor_sigma(1, {2.0, 0.0}).real() == Catch::Approx(1.0));
  CHECK_THROWS_AS(eulerlab::divisor_sigma(0, {1.0, 0.0}),
                  std::invalid_argument);
}

TEST_CASE("table budget guard", "[arith]") {
  CHECK_THROWS_AS(arith_tables(300'000'000ull), eulerlab::resource_error);
}
