#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "eulerlab/l_functions.hpp"
#include "oracles.hpp"

using eulerlab::character_by_index;
using eulerlab::character_by_label;
using eulerlab::characters_mod;
using eulerlab::l_value;
using std::complex;

TEST_CASE("dirichlet series agreement in the easy half plane",
          "[lfunctions]") {
  // At sigma = 3 the defining series itself is a comfortable oracle: the
  // tail beyond 3e5 terms is below 1e-11.
  complex<double> s{3.0, 0.0};
  for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u, 12u}) {
    for (const auto& chi : characters_mod(q)) {
      complex<double> direct{0.0, 0.0};
      for (std::uint64_t n = 1; n <= 300'000; ++n) {
        auto v = chi.value(static_cast<std::int64_t>(n));
        if (v.is_zero) continue;
        direct += v.to_complex() / (double(n) * double(n) * double(n));
      }
      auto lv = l_value(s, chi);
      INFO("chi = " << chi.label());
      CHECK(std::abs(lv.value - direct) < 1e-9);
      CHECK(lv.method == "hurwitz");
    }
  }
}

TEST_CASE("closed forms at s = 1 and s = 2", "[lfunctions]") {
  constexpr double kPi = 3.14159265358979323846264338328;
  auto chi4 = character_by_label("4.1");
  auto l1 = l_value({1.0, 0.0}, chi4);
  CHECK(l1.method == "series");
  CHECK(std::abs(l1.value - kPi / 4.0) < 1e-12);

  auto chi3 = character_by_label("3.1");
  CHECK(std::abs(l_value({1.0, 0.0}, chi3).value -
                 kPi / (3.0 * std::sqrt(3.0))) < 1e-12);

  // beta(2) is Catalan's constant; cross-checked against the accelerated
  // alternating series, not a frozen digit string.
  CHECK(std::abs(l_value({2.0, 0.0}, chi4).value - oracle::beta_function(2.0)) <
        1e-12);
  CHECK(std::abs(l_value({0.5, 0.0}, chi4).value -
                 oracle::beta_function(0.5)) < 1e-12);

  CHECK_THROWS_AS(l_value({1.0, 0.0}, character_by_index(4, 0)),
                  std::domain_error);
}

TEST_CASE("conjugation symmetry", "[lfunctions]") {
  for (const auto& chi : characters_mod(5)) {
    for (complex<double> s : {complex<double>{0.7, 3.0},
                              complex<double>{0.5, -11.0},
                              complex<double>{2.0, 40.0}}) {
      if (chi.is_principal() && std::abs(s - 1.0) < 1e-9) continue;
      complex<double> a = l_value(std::conj(s), chi.conj()).value;
      complex<double> b = std::conj(l_value(s, chi).value);
      INFO("chi = " << chi.label());
      CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)));
    }
  }
}

TEST_CASE("contour coefficients recover a polynomial exactly",
          "[lfunctions]") {
  auto f = [](complex<double> s) {
    complex<double> w = s - 2.0;
    return (w * w) + 3.0 * w + 5.0;
  };
  auto t = eulerlab::detail::contour_coeffs(f, {2.0, 0.0}, 0.05, 6);
  REQUIRE(t.coeffs.size() == 7);
  CHECK(std::abs(t.coeffs[0] - 5.0) < 1e-12);
  CHECK(std::abs(t.coeffs[1] - 3.0) < 1e-10);
  CHECK(std::abs(t.coeffs[2] - 1.0) < 1e-9);
  for (int j = 3; j <= 6; ++j) {
    CHECK(std::abs(t.coeffs[j]) < 1e-7);
  }
}

TEST_CASE("derivative coefficients against a finite difference",
          "[lfunctions]") {
  auto chi4 = character_by_label("4.1");
  complex<double> s0{0.75, 0.0};
  auto t = eulerlab::l_derivative(s0, chi4, 2);
  REQUIRE(t.coeffs.size() == 3);
  CHECK(std::abs(t.coeffs[0] - l_value(s0, chi4).value) < 1e-11);
  double h = 1e-5;
  complex<double> fd =
      (l_value(s0 + h, chi4).value - l_value(s0 - h, chi4).value) / (2.0 * h);
  CHECK(std::abs(t.coeffs[1] - fd) < 1e-8);
  CHECK_THROWS_AS(eulerlab::l_derivative(s0, chi4, 7), std::invalid_argument);
}

TEST_CASE("functional equation residuals for primitive characters",
          "[lfunctions]") {
  auto chi4 = character_by_label("4.1");
  CHECK(eulerlab::functional_residual({0.3, 2.0}, chi4) < 1e-9);
  CHECK(eulerlab::functional_residual({0.7, -1.5}, character_by_label("5.1")) <
        1e-9);
  CHECK(eulerlab::functional_residual({0.5, 6.5}, character_by_label("3.1")) <
        1e-9);
  // Imprimitive input is rejected: index 1 mod 8 has conductor 4.
  CHECK_THROWS_AS(
      eulerlab::functional_residual({0.5, 1.0}, character_by_index(8, 1)),
      std::invalid_argument);
}

TEST_CASE("vanishing order at and off a zero", "[lfunctions]") {
  auto chi4 = character_by_label("4.1");
  auto at_center = eulerlab::vanishing_order(chi4, 0.0);
  CHECK(at_center.order == 0);

  // First zero ordinate of this L-function, frozen from a bisection run of
  // the completed function; L itself drops below the order threshold there.
  auto at_zero = eulerlab::vanishing_order(chi4, 6.0209489046975965);
  CHECK(at_zero.order == 1);
}
