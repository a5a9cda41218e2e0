#pragma once

// Hurwitz zeta(s, a) for complex s and real a > 0 by Euler-Maclaurin:
// truncate the Dirichlet series at N, then integral, half-term and Bernoulli
// corrections at the boundary. N grows with |Im s| so the correction series
// stays in its asymptotic regime on the strips we evaluate.

#include <cmath>
#include <complex>
#include <stdexcept>

#include "eulerlab/compensated.hpp"

namespace eulerlab {

struct HurwitzResult {
  std::complex<double> value{0.0, 0.0};
  double est_error = 0.0;
};

inline HurwitzResult hurwitz_zeta_full(std::complex<double> s, double a) {
  if (!(a > 0.0)) throw std::domain_error("hurwitz_zeta: need a > 0");
  if (std::abs(s - std::complex<double>(1.0, 0.0)) < 1e-12) {
    throw std::domain_error("hurwitz_zeta: pole at s = 1");
  }
  // B_{2j} / (2j)! for j = 1..13.
  static const double kBernFac[13] = {
      1.0 / 6.0 / 2.0,
      -1.0 / 30.0 / 24.0,
      1.0 / 42.0 / 720.0,
      -1.0 / 30.0 / 40320.0,
      5.0 / 66.0 / 3628800.0,
      -691.0 / 2730.0 / 479001600.0,
      7.0 / 6.0 / 87178291200.0,
      -3617.0 / 510.0 / 20922789888000.0,
      43867.0 / 798.0 / 6402373705728000.0,
      -174611.0 / 330.0 / 2432902008176640000.0,
      854513.0 / 138.0 / 1.1240007277776077e21,
      -236364091.0 / 2730.0 / 6.204484017332394e23,
      8553103.0 / 6.0 / 4.0329146112660565e26,
  };

  int n_terms = 25 + static_cast<int>(std::ceil(0.6 * std::abs(s.imag())));
  KahanComplexSum head;
  for (int n = 0; n < n_terms; ++n) {
    head.add(std::exp(-s * std::log(static_cast<double>(n) + a)));
  }
  double w = static_cast<double>(n_terms) + a;
  std::complex<double> lw = std::log(w);
  std::complex<double> tail = std::exp((1.0 - s) * lw) / (s - 1.0);
  std::complex<double> half = 0.5 * std::exp(-s * lw);

  // Bernoulli corrections: B_{2j}/(2j)! * (s)_{2j-1} * w^{-s-2j+1}.
  std::complex<double> poch = s;                      // (s)_1
  std::complex<double> wpow = std::exp(-s * lw) / w;  // w^{-s-1}
  double winv2 = 1.0 / (w * w);
  KahanComplexSum corr;
  double last_mag = 0.0;
  double trunc = 0.0;
  for (int j = 1; j <= 13; ++j) {
    std::complex<double> t = kBernFac[j - 1] * poch * wpow;
    double mag = std::abs(t);
    if (j > 1 && mag > last_mag) {
      // Asymptotic series started to grow; stop before it, bound by the
      // first omitted term.
      trunc = mag;
      break;
    }
    corr.add(t);
    last_mag = mag;
    trunc = mag;
    if (mag < 1e-18) break;
    poch *= (s + static_cast<double>(2 * j - 1)) *
            (s + static_cast<double>(2 * j));
    wpow *= winv2;
  }

  HurwitzResult r;
  r.value = head.value() + tail + half + corr.value();
  r.est_error = trunc + 1e-15 * static_cast<double>(n_terms) *
                            std::max(1.0, std::abs(r.value));
  return r;
}

inline std::complex<double> hurwitz_zeta(std::complex<double> s, double a) {
  return hurwitz_zeta_full(s, a).value;
}

}  // namespace eulerlab
