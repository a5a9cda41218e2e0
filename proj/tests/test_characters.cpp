#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "eulerlab/characters.hpp"

using eulerlab::character_by_index;
using eulerlab::character_by_label;
using eulerlab::characters_mod;
using eulerlab::CharValue;
using eulerlab::DirichletCharacter;
using eulerlab::DirichletGroup;

namespace {

std::uint64_t slow_phi(std::uint32_t q) {
  std::uint64_t c = 0;
  for (std::uint32_t a = 1; a <= q; ++a) {
    if (std::gcd(a, q) == 1) ++c;
  }
  return q == 1 ? 1 : c;
}

}  // namespace

TEST_CASE("group sizes follow Euler phi", "[characters]") {
  for (std::uint32_t q = 1; q <= 100; ++q) {
    auto g = DirichletGroup::make(q);
    INFO("q = " << q);
    CHECK(g->phi() == slow_phi(q));
    CHECK(characters_mod(q).size() == g->phi());
  }
  CHECK_THROWS_AS(DirichletGroup::make(0), std::invalid_argument);
}

TEST_CASE("character values are completely multiplicative", "[characters]") {
  for (std::uint32_t q : {3u, 4u, 8u, 9u, 12u, 16u, 24u, 35u, 45u, 72u}) {
    for (const auto& chi : characters_mod(q)) {
      for (std::int64_t m = 1; m <= 40; m += 3) {
        for (std::int64_t n = 2; n <= 40; n += 5) {
          CharValue vm = chi.value(m);
          CharValue vn = chi.value(n);
          CharValue vmn = chi.value(m * n);
          if (vm.is_zero || vn.is_zero) {
            CHECK(vmn.is_zero);
          } else {
            REQUIRE_FALSE(vmn.is_zero);
            CHECK(vmn.rot == vm.rot * vn.rot);
          }
        }
      }
    }
  }
}

TEST_CASE("characters are periodic and vanish off the units", "[characters]") {
  for (std::uint32_t q : {5u, 8u, 12u}) {
    for (const auto& chi : characters_mod(q)) {
      for (std::int64_t n = 0; n < 2 * q; ++n) {
        CharValue a = chi.value(n);
        CharValue b = chi.value(n + q);
        CHECK(a.is_zero == b.is_zero);
        if (!a.is_zero) CHECK(a.rot == b.rot);
        bool unit = std::gcd(((n % q) + q) % q, static_cast<std::int64_t>(q)) == 1;
        CHECK(a.is_zero == !unit);
      }
    }
  }
}

TEST_CASE("row and column orthogonality", "[characters]") {
  for (std::uint32_t q : {5u, 8u, 9u, 12u, 15u}) {
    auto chars = characters_mod(q);
    double phi = static_cast<double>(chars.front().phi());
    // Sum over a of chi(a): phi for the principal character, else 0.
    for (const auto& chi : chars) {
      std::complex<double> s{0.0, 0.0};
      for (std::uint32_t a = 0; a < q; ++a) s += chi.value(a).to_complex();
      double expect = chi.is_principal() ? phi : 0.0;
      CHECK(std::abs(s - expect) < 1e-12);
    }
    // Sum over chi of chi(a) conj(chi(b)) for units a, b.
    for (std::uint32_t a : {1u, 2u, 7u}) {
      if (std::gcd(a, q) != 1) continue;
      for (std::uint32_t b : {1u, 3u}) {
        if (std::gcd(b, q) != 1) continue;
        std::complex<double> s{0.0, 0.0};
        for (const auto& chi : chars) {
          s += chi.value(a).to_complex() *
               std::conj(chi.value(b).to_complex());
        }
        double expect = (a % q) == (b % q) ? phi : 0.0;
        CHECK(std::abs(s - expect) < 1e-12);
      }
    }
  }
}

TEST_CASE("index and label round trip", "[characters]") {
  for (std::uint32_t q : {1u, 2u, 7u, 8u, 12u, 40u}) {
    auto chars = characters_mod(q);
    for (std::uint64_t i = 0; i < chars.size(); ++i) {
      CHECK(chars[i].index() == i);
      CHECK(character_by_label(chars[i].label()) == chars[i]);
    }
  }
  CHECK_THROWS_AS(character_by_label("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(character_by_label("12."), std::invalid_argument);
  CHECK_THROWS_AS(character_by_label(".3"), std::invalid_argument);
  CHECK_THROWS_AS(character_by_index(4, 2), std::invalid_argument);
}

TEST_CASE("two-power moduli split into the minus-one and five parts",
          "[characters]") {
  auto chars = characters_mod(8);
  REQUIRE(chars.size() == 4);
  // Index 1 flips the first component, generated by -1 = 7 mod 8.
  CHECK(chars[1].value(7).to_complex() == std::complex<double>(-1.0, 0.0));
  CHECK(chars[1].value(5).to_complex() == std::complex<double>(1.0, 0.0));
  // Index 2 flips the second component, generated by 5.
  CHECK(chars[2].value(5).to_complex() == std::complex<double>(-1.0, 0.0));
  CHECK(chars[2].value(7).to_complex() == std::complex<double>(1.0, 0.0));
}

TEST_CASE("conductors, parity, and primitivity on known moduli",
          "[characters]") {
  auto sorted_conductors = [](std::uint32_t q) {
    std::vector<std::uint32_t> f;
    for (const auto& chi : characters_mod(q)) f.push_back(chi.conductor());
    std::sort(f.begin(), f.end());
    return f;
  };
  CHECK(sorted_conductors(8) == std::vector<std::uint32_t>{1, 4, 8, 8});
  CHECK(sorted_conductors(12) == std::vector<std::uint32_t>{1, 3, 4, 12});
  CHECK(sorted_conductors(9) == std::vector<std::uint32_t>{1, 3, 9, 9, 9, 9});

  DirichletCharacter chi4 = character_by_label("4.1");
  CHECK(chi4.parity_nu() == 1);
  CHECK(chi4.order() == 2);
  CHECK(chi4.is_primitive());

  DirichletCharacter chi3 = character_by_label("3.1");
  CHECK(chi3.parity_nu() == 1);

  // The principal character mod q > 1 is never primitive.
  CHECK(character_by_index(12, 0).conductor() == 1);
  CHECK_FALSE(character_by_index(12, 0).is_primitive());
  // Mod 1 the empty character counts as primitive.
  CHECK(character_by_index(1, 0).is_primitive());

  for (std::uint32_t q = 1; q <= 100; ++q) {
    std::uint64_t direct = 0;
    for (const auto& chi : characters_mod(q)) {
      if (chi.is_primitive()) ++direct;
    }
    INFO("q = " << q);
    CHECK(direct == eulerlab::primitive_count(q));
  }
}

TEST_CASE("conjugation, products, and powers act on exponents",
          "[characters]") {
  auto chars = characters_mod(5);
  for (const auto& chi : chars) {
    for (std::uint32_t a = 1; a < 5; ++a) {
      CHECK(std::abs(chi.conj().value(a).to_complex() -
                     std::conj(chi.value(a).to_complex())) < 1e-15);
      CHECK(std::abs(chi.power(2).value(a).to_complex() -
                     chi.value(a).to_complex() * chi.value(a).to_complex()) <
            1e-15);
    }
    CHECK(chi.times(chi.conj()).is_principal());
  }
  // Orders mod 5: the group is cyclic of order 4.
  std::vector<std::uint64_t> orders;
  for (const auto& chi : chars) orders.push_back(chi.order());
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<std::uint64_t>{1, 2, 4, 4});
}

TEST_CASE("gauss sums and root numbers for small primitive characters",
          "[characters]") {
  DirichletCharacter chi4 = character_by_label("4.1");
  auto r4 = eulerlab::gauss_and_epsilon(chi4);
  CHECK(std::abs(r4.tau - std::complex<double>(0.0, 2.0)) < 1e-13);
  CHECK(std::abs(r4.epsilon - 1.0) < 1e-13);
  CHECK(r4.nu == 1);

  // Quadratic character mod 5: tau = sqrt(5), even, epsilon = 1.
  for (const auto& chi : characters_mod(5)) {
    if (chi.order() != 2) continue;
    auto r5 = eulerlab::gauss_and_epsilon(chi);
    CHECK(std::abs(r5.tau - std::sqrt(5.0)) < 1e-12);
    CHECK(std::abs(r5.epsilon - 1.0) < 1e-12);
    CHECK(r5.nu == 0);
  }

  // Primitive characters have |tau| = sqrt(q) on the nose.
  for (std::uint32_t q : {3u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    for (const auto& chi : characters_mod(q)) {
      if (!chi.is_primitive()) continue;
      auto r = eulerlab::gauss_and_epsilon(chi);
      INFO("chi = " << chi.label());
      CHECK(std::abs(std::abs(r.tau) - std::sqrt(double(q))) < 1e-12);
      CHECK(std::abs(std::abs(r.epsilon) - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("power counts delta_m and the orthogonality collapse",
          "[characters]") {
  // Sum over residues of delta_m covers every residue exactly once.
  for (std::uint32_t q : {4u, 9u, 15u, 24u}) {
    for (unsigned m : {2u, 3u}) {
      std::uint64_t total = 0;
      for (std::uint32_t a = 0; a < q; ++a) total += eulerlab::delta_m(q, a, m);
      CHECK(total == q);
    }
  }
  // delta_2 is multiplicative across coprime moduli (CRT).
  for (std::uint64_t a : {1ull, 2ull, 4ull}) {
    CHECK(eulerlab::delta_m(45, a, 2) ==
          eulerlab::delta_m(9, a % 9, 2) * eulerlab::delta_m(5, a % 5, 2));
  }

  // The character sum over delta_m collapses to phi or 0 by eta.
  for (std::uint32_t q : {5u, 8u, 12u, 21u}) {
    for (const auto& chi : characters_mod(q)) {
      for (unsigned m : {2u, 3u, 4u}) {
        std::complex<double> s = eulerlab::orthogonality_sum(chi, m);
        double expect = eulerlab::eta(chi, m) ? double(chi.phi()) : 0.0;
        INFO("chi = " << chi.label() << ", m = " << m);
        CHECK(std::abs(s - expect) < 1e-10);
      }
    }
  }

  // eta detects quadratic characters being squared away.
  DirichletCharacter chi4 = character_by_label("4.1");
  CHECK(eulerlab::eta(chi4, 2) == 1);
  DirichletCharacter chi5 = character_by_label("5.1");
  CHECK(chi5.order() == 4);
  CHECK(eulerlab::eta(chi5, 2) == 0);
  CHECK(eulerlab::eta(chi5, 4) == 1);
}
