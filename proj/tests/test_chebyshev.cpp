#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>

#include "eulerlab/arith_tables.hpp"
#include "eulerlab/chebyshev.hpp"
#include "eulerlab/sieve.hpp"

using eulerlab::characters_mod;
using eulerlab::chebyshev_ap;
using eulerlab::PrimeSummary;
using eulerlab::psi_twisted;

TEST_CASE("classwise prime counts add up to pi(x)", "[chebyshev]") {
  // pi(1e4) = 1229; classes coprime to q miss exactly the primes dividing q.
  for (std::uint32_t q : {1u, 4u, 7u, 30u}) {
    PrimeSummary s = chebyshev_ap(10'000, q);
    std::uint64_t sum = 0;
    for (std::uint64_t c : s.pi) sum += c;
    std::uint64_t missing = 0;
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
      if (q % p == 0) ++missing;
    }
    CHECK(sum == 1229 - missing);
  }
}

TEST_CASE("theta stays below psi and remainders are consistent",
          "[chebyshev]") {
  PrimeSummary s = chebyshev_ap(100'000, 12);
  REQUIRE(s.residues.size() == 4);
  double phi = 4.0;
  for (std::size_t i = 0; i < s.residues.size(); ++i) {
    CHECK(s.theta[i] <= s.psi[i]);
    CHECK(s.remainder[i] ==
          Catch::Approx(100'000.0 / phi - s.theta[i]).margin(1e-9));
  }
}

TEST_CASE("psi in progressions recombines from twisted psi", "[chebyshev]") {
  // psi(x; q, a) = (1/phi) sum_chi conj(chi(a)) psi(x, chi).
  std::uint64_t x = 10'000;
  for (std::uint32_t q : {3u, 4u, 5u, 8u, 12u}) {
    auto chars = characters_mod(q);
    double phi = static_cast<double>(chars.front().phi());
    std::vector<std::complex<double>> twisted;
    twisted.reserve(chars.size());
    for (const auto& chi : chars) twisted.push_back(psi_twisted(x, chi));

    PrimeSummary s = chebyshev_ap(x, q);
    for (std::size_t i = 0; i < s.residues.size(); ++i) {
      std::complex<double> acc{0.0, 0.0};
      for (std::size_t c = 0; c < chars.size(); ++c) {
        acc += std::conj(chars[c].value(s.residues[i]).to_complex()) *
               twisted[c];
      }
      acc /= phi;
      INFO("q = " << q << ", a = " << s.residues[i]);
      CHECK(std::abs(acc.imag()) < 1e-9);
      CHECK(acc.real() == Catch::Approx(s.psi[i]).margin(1e-8));
    }
  }
}

TEST_CASE("twisted psi with the principal character drops the bad primes",
          "[chebyshev]") {
  // psi(x, chi_0 mod q) = psi(x) - contributions of prime powers p | q.
  std::uint64_t x = 2000;
  eulerlab::ArithTables t = eulerlab::arith_tables(x);
  double psi_all = 0.0;
  double psi_bad = 0.0;
  for (std::uint64_t n = 2; n <= x; ++n) {
    double w = t.von_mangoldt(n);
    psi_all += w;
    if (n % 2 == 0 || n % 5 == 0) psi_bad += w;
  }
  std::complex<double> tw =
      psi_twisted(x, eulerlab::character_by_index(10, 0));
  CHECK(tw.imag() == Catch::Approx(0.0).margin(1e-12));
  CHECK(tw.real() == Catch::Approx(psi_all - psi_bad).margin(1e-8));
}

TEST_CASE("worst remainder aggregate is bounded below by the endpoint",
          "[chebyshev]") {
  std::uint64_t x = 50'000;
  double total = eulerlab::bv_sum(x, 6);
  double floor_sum = 0.0;
  for (std::uint32_t q = 1; q <= 6; ++q) {
    PrimeSummary s = chebyshev_ap(x, q);
    double worst_endpoint = 0.0;
    for (double r : s.remainder) {
      worst_endpoint = std::max(worst_endpoint, std::abs(r));
    }
    floor_sum += worst_endpoint;
  }
  CHECK(total >= floor_sum - 1e-9);
  CHECK_THROWS_AS(eulerlab::bv_sum(10, 20), std::invalid_argument);
  CHECK_THROWS_AS(eulerlab::bv_sum(10, 0), std::invalid_argument);
}

TEST_CASE("twisted mertens matches the table sum", "[chebyshev]") {
  eulerlab::ArithTables t = eulerlab::arith_tables(3000);
  auto chi = eulerlab::character_by_label("4.1");
  std::complex<double> direct{0.0, 0.0};
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    if (t.mu[n] == 0) continue;
    direct += chi.value(static_cast<std::int64_t>(n)).to_complex() *
              static_cast<double>(t.mu[n]);
  }
  std::complex<double> viaf = eulerlab::mertens_twisted(t, chi, 3000);
  CHECK(std::abs(viaf - direct) < 1e-10);

  // Trivial character mod 1 reduces to plain Mertens.
  auto triv = eulerlab::character_by_index(1, 0);
  CHECK(eulerlab::mertens_twisted(t, triv, 1000).real() ==
        Catch::Approx(double(eulerlab::mertens(t, 1000))).margin(1e-12));
  CHECK_THROWS_AS(eulerlab::mertens_twisted(t, chi, 5000),
                  std::invalid_argument);
}
