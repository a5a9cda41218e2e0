#pragma once

// Dirichlet L-functions: values via Hurwitz zeta, L(1, chi) via digamma,
// Taylor coefficients around a point by contour quadrature, the completed
// functional equation residual, and order of vanishing on the critical
// line.

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "eulerlab/characters.hpp"
#include "eulerlab/compensated.hpp"
#include "eulerlab/hurwitz.hpp"
#include "eulerlab/special_functions.hpp"

namespace eulerlab {

struct LValue {
  std::complex<double> value{0.0, 0.0};
  double est_error = 0.0;
  const char* method = "";
};

// L(s, chi). At s = 1 (within 1e-12) a principal character is a pole; a
// non-principal one is evaluated by the digamma closed form
// -(1/q) sum_a chi(a) psi(a/q). Elsewhere q^{-s} sum_a chi(a) zeta(s, a/q),
// which covers principal characters and q = 1 alike.
inline LValue l_value(std::complex<double> s, const DirichletCharacter& chi) {
  std::uint32_t q = chi.modulus();
  LValue out;
  if (std::abs(s - std::complex<double>(1.0, 0.0)) < 1e-12) {
    if (chi.is_principal()) {
      throw std::domain_error("l_value: pole of principal character at s=1");
    }
    KahanComplexSum acc;
    for (std::uint32_t a = 1; a < q; ++a) {
      CharValue v = chi.value(a);
      if (v.is_zero) continue;
      acc.add(v.to_complex() *
              digamma(static_cast<double>(a) / static_cast<double>(q)));
    }
    out.value = -acc.value() / static_cast<double>(q);
    out.est_error = 1e-14 * static_cast<double>(q) *
                    std::max(1.0, std::abs(out.value));
    out.method = "series";
    return out;
  }
  KahanComplexSum acc;
  double est = 0.0;
  for (std::uint32_t a = 1; a <= q; ++a) {
    CharValue v = chi.value(a);
    if (v.is_zero) continue;
    HurwitzResult h = hurwitz_zeta_full(
        s, static_cast<double>(a) / static_cast<double>(q));
    acc.add(v.to_complex() * h.value);
    est += h.est_error;
  }
  std::complex<double> scale =
      std::exp(-s * std::log(static_cast<double>(q)));
  out.value = scale * acc.value();
  out.est_error = std::abs(scale) * est;
  out.method = "hurwitz";
  return out;
}

struct TaylorData {
  std::complex<double> s0{0.0, 0.0};
  double radius = 0.0;
  std::vector<std::complex<double>> coeffs;     // c_0 .. c_m
  std::vector<double> est_error;                // per coefficient
};

namespace detail {

// Taylor coefficients of F around s0 by the trapezoid rule on a circle:
// c_j = (1/(N r^j)) sum_k F(s0 + r w^k) w^{-jk}. The error estimate per
// coefficient compares against the same rule on the 32 even-index nodes.
template <typename F>
TaylorData contour_coeffs(F&& f, std::complex<double> s0, double radius,
                          int jmax) {
  constexpr int kNodes = 64;
  constexpr double kTwoPi = 6.28318530717958647692528676656;
  TaylorData t;
  t.s0 = s0;
  t.radius = radius;
  std::vector<std::complex<double>> fv(kNodes);
  for (int k = 0; k < kNodes; ++k) {
    double ang = kTwoPi * static_cast<double>(k) / kNodes;
    fv[k] = f(s0 + radius * std::complex<double>(std::cos(ang),
                                                 std::sin(ang)));
  }
  for (int j = 0; j <= jmax; ++j) {
    KahanComplexSum full, half;
    for (int k = 0; k < kNodes; ++k) {
      double ang = -kTwoPi * static_cast<double>(j * k) / kNodes;
      std::complex<double> w{std::cos(ang), std::sin(ang)};
      full.add(fv[k] * w);
      if (k % 2 == 0) half.add(fv[k] * w);
    }
    double rj = std::pow(radius, j);
    std::complex<double> cj = full.value() / (static_cast<double>(kNodes) * rj);
    std::complex<double> cj_half =
        half.value() / (static_cast<double>(kNodes / 2) * rj);
    t.coeffs.push_back(cj);
    t.est_error.push_back(std::abs(cj - cj_half));
  }
  return t;
}

}  // namespace detail

// Taylor coefficients c_0..c_m of L(s, chi) around s0; the m-th derivative
// is m! c_m.
inline TaylorData l_derivative(std::complex<double> s0,
                               const DirichletCharacter& chi, int m_max) {
  if (m_max < 0 || m_max > 6) {
    throw std::invalid_argument("l_derivative: m_max must be in 0..6");
  }
  return detail::contour_coeffs(
      [&chi](std::complex<double> s) { return l_value(s, chi).value; }, s0,
      0.05, m_max);
}

// Relative defect of Lambda(s, chi) = eps(chi) Lambda(1-s, conj chi) where
// Lambda(s, chi) = (q/pi)^{s/2} Gamma((s+nu)/2) L(s, chi). Only meaningful
// for primitive characters.
inline double functional_residual(std::complex<double> s,
                                  const DirichletCharacter& chi) {
  if (!chi.is_primitive()) {
    throw std::invalid_argument(
        "functional_residual: character must be primitive");
  }
  constexpr double kPi = 3.14159265358979323846264338328;
  RootNumber rn = gauss_and_epsilon(chi);
  double nu = static_cast<double>(rn.nu);
  double qpi = static_cast<double>(chi.modulus()) / kPi;
  auto lambda = [&](std::complex<double> z, const DirichletCharacter& c) {
    return std::exp(0.5 * z * std::log(qpi)) * gamma(0.5 * (z + nu)) *
           l_value(z, c).value;
  };
  std::complex<double> lhs = lambda(s, chi);
  std::complex<double> rhs = rn.epsilon * lambda(1.0 - s, chi.conj());
  double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  return std::abs(lhs - rhs) / scale;
}

struct VanishingOrder {
  int order = -1;  // -1 when every examined coefficient is below threshold
  TaylorData taylor;
};

// Order of vanishing of L at s = 1/2 + it: the first Taylor coefficient
// whose magnitude clears 1e-6. Coefficients decay with the contour radius,
// so a genuinely nonzero c_j sits orders of magnitude above quadrature
// noise.
inline VanishingOrder vanishing_order(const DirichletCharacter& chi,
                                      double t) {
  VanishingOrder v;
  v.taylor = l_derivative({0.5, t}, chi, 6);
  for (std::size_t j = 0; j < v.taylor.coeffs.size(); ++j) {
    if (std::abs(v.taylor.coeffs[j]) > 1e-6) {
      v.order = static_cast<int>(j);
      break;
    }
  }
  return v;
}

}  // namespace eulerlab
