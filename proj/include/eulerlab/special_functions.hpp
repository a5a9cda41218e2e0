#pragma once

// Complex exponential integral Ei, the logarithmic integral in the forms the
// asymptotic formulas need, and Lanczos gamma / log-gamma / digamma.
//
// Ei dominates the error budget here. The Taylor series suffers catastrophic
// cancellation once |z| is tens (terms peak near e^|z| while the result is
// O(1) off the positive axis), so the series regime runs in double-double
// arithmetic and hands off to a continued fraction on the left half plane
// and to the divergent asymptotic series beyond |z| = 40.

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

#include "eulerlab/compensated.hpp"

namespace eulerlab {

inline constexpr double kEulerGamma =
    0.57721566490153286060651209008240243104;

namespace detail {

// Double-double: value = hi + lo with |lo| <= ulp(hi)/2, giving ~32
// significant digits. Only the handful of operations the Ei series needs.
struct dd {
  double hi = 0.0;
  double lo = 0.0;
};

inline dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline dd quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline dd dd_add(dd a, dd b) {
  dd s = two_sum(a.hi, b.hi);
  return quick_two_sum(s.hi, s.lo + a.lo + b.lo);
}

inline dd dd_neg(dd a) { return {-a.hi, -a.lo}; }

inline dd dd_mul_d(dd a, double b) {
  dd p = two_prod(a.hi, b);
  return quick_two_sum(p.hi, p.lo + a.lo * b);
}

inline dd dd_div_d(dd a, double b) {
  double q1 = a.hi / b;
  dd p = two_prod(q1, b);
  double q2 = (a.hi - p.hi - p.lo + a.lo) / b;
  return quick_two_sum(q1, q2);
}

struct cdd {
  dd re, im;
};

inline cdd cdd_add(cdd a, cdd b) {
  return {dd_add(a.re, b.re), dd_add(a.im, b.im)};
}

inline cdd cdd_mul(cdd a, std::complex<double> c) {
  dd re = dd_add(dd_mul_d(a.re, c.real()), dd_neg(dd_mul_d(a.im, c.imag())));
  dd im = dd_add(dd_mul_d(a.re, c.imag()), dd_mul_d(a.im, c.real()));
  return {re, im};
}

inline cdd cdd_div_d(cdd a, double b) {
  return {dd_div_d(a.re, b), dd_div_d(a.im, b)};
}

inline double cdd_abs(cdd a) { return std::hypot(a.re.hi, a.im.hi); }

}  // namespace detail

// Exponential integral Ei(z), principal value on the real axis and the
// continuation Ei(z) = gamma + log|z| + i arg(z) + sum z^k/(k k!) off it.
// Throws std::domain_error at z = 0.
inline std::complex<double> ei(std::complex<double> z) {
  if (z == std::complex<double>(0.0, 0.0)) {
    throw std::domain_error("ei: logarithmic singularity at 0");
  }
  double az = std::abs(z);
  double half_sign = (z.imag() > 0.0) ? 1.0 : (z.imag() < 0.0 ? -1.0 : 0.0);
  constexpr double kPi = 3.14159265358979323846264338328;

  if (az > 40.0) {
    // Ei(z) ~ e^z/z sum k!/z^k, truncated at the smallest term.
    std::complex<double> term{1.0, 0.0};
    std::complex<double> sum{1.0, 0.0};
    double prev = 1.0;
    int kmax = static_cast<int>(az);
    for (int k = 1; k <= kmax; ++k) {
      term *= static_cast<double>(k) / z;
      double at = std::abs(term);
      if (at >= prev) break;  // divergence sets in
      sum += term;
      prev = at;
      if (at < 1e-18) break;
    }
    return std::complex<double>(0.0, kPi * half_sign) + std::exp(z) / z * sum;
  }

  if (z.real() < 0.0 && az >= 6.0) {
    // E1(w) for w = -z via the modified Lentz continued fraction, then
    // Ei(z) = -E1(-z) + i pi sign(Im z).
    std::complex<double> w = -z;
    std::complex<double> b = w + 1.0;
    std::complex<double> c = 1.0 / 1e-300;
    std::complex<double> d = 1.0 / b;
    std::complex<double> h = d;
    for (int i = 1; i <= 500; ++i) {
      double a = -static_cast<double>(i) * static_cast<double>(i);
      b += 2.0;
      d = 1.0 / (a * d + b);
      c = b + a / c;
      std::complex<double> del = c * d;
      h *= del;
      if (std::abs(del - 1.0) < 1e-16) break;
    }
    std::complex<double> e1 = std::exp(-w) * h;
    return -e1 + std::complex<double>(0.0, kPi * half_sign);
  }

  // Series regime in double-double.
  detail::cdd u{{1.0, 0.0}, {0.0, 0.0}};  // z^k / k!
  detail::cdd sum{{0.0, 0.0}, {0.0, 0.0}};
  for (int k = 1; k <= 500; ++k) {
    u = detail::cdd_div_d(detail::cdd_mul(u, z), static_cast<double>(k));
    detail::cdd term = detail::cdd_div_d(u, static_cast<double>(k));
    sum = detail::cdd_add(sum, term);
    if (detail::cdd_abs(term) <=
        1e-35 * std::max(1e-300, detail::cdd_abs(sum))) {
      break;
    }
  }
  double arg_pv = (z.imag() != 0.0) ? std::arg(z) : 0.0;
  return {kEulerGamma + std::log(az) + sum.re.hi + sum.re.lo,
          arg_pv + sum.im.hi + sum.im.lo};
}

// Li(x^w) written as ei(w log x), the shape the remainder formulas use.
// Requires x > 0, x != 1 and w != 0.
inline std::complex<double> li_power(double x, std::complex<double> w) {
  if (!(x > 0.0) || x == 1.0) {
    throw std::domain_error("li_power: need x > 0, x != 1");
  }
  if (w == std::complex<double>(0.0, 0.0)) {
    throw std::domain_error("li_power: exponent must be nonzero");
  }
  return ei(w * std::log(x));
}

inline double li_real(double x) {
  if (!(x > 0.0) || x == 1.0) {
    throw std::domain_error("li_real: need x > 0, x != 1");
  }
  return ei(std::complex<double>(std::log(x), 0.0)).real();
}

// li(1 + h) - gamma - log|h|, the part of li that stays bounded as h -> 0.
// Computed directly from the series in u = log(1 + h) to avoid cancelling
// the log singularity numerically.
inline double li_gamma_residual(double h) {
  if (h == 0.0 || 1.0 + h <= 0.0) {
    throw std::domain_error("li_gamma_residual: need 1 + h > 0, h != 0");
  }
  double u = std::log1p(h);
  KahanSum acc;
  acc.add(std::log(std::abs(u / h)));
  double pow_term = 1.0;  // u^k / k!
  for (int k = 1; k <= 60; ++k) {
    pow_term *= u / static_cast<double>(k);
    double t = pow_term / static_cast<double>(k);
    acc.add(t);
    if (std::abs(t) < 1e-20) break;
  }
  return acc.value();
}

namespace detail {

// Rational Lanczos approximation, N = 13, g = 6.0246800407767295837...
// sqrt(2 pi) is folded into the numerator; the denominator is
// z (z+1) ... (z+11) expanded. Accurate to ~1 ulp shy of full double
// precision for Re z >= 0.5.
inline constexpr double kLanczosG = 6.024680040776729583740234375;

inline std::complex<double> lanczos_sum(std::complex<double> z) {
  static const double num[13] = {
      23531376880.41075968857200767445163675473,
      42919803642.64909876895789904700198885093,
      35711959237.35566804944018545154716670596,
      17921034426.03720969991975575445893111267,
      6039542586.35202800506429164430729792107,
      1439720407.311721673663223072794912393972,
      248874557.8620541565114603864132294232163,
      31426415.58540019438061423162831820536287,
      2876370.628935372441225409051620849613599,
      186056.2653952234950402949897160456992822,
      8071.672002365816210638002902272250613822,
      210.8242777515793458725097339207133627117,
      2.506628274631000270164908177133837338626,
  };
  static const double den[13] = {
      0, 39916800, 120543840, 150917976, 105258076, 45995730, 13339535,
      2637558, 357423, 32670, 1925, 66, 1,
  };
  std::complex<double> n{0.0, 0.0}, d{0.0, 0.0};
  for (int i = 12; i >= 0; --i) {
    n = n * z + num[i];
    d = d * z + den[i];
  }
  return n / d;
}

}  // namespace detail

// Gamma function for complex z, reflection formula on Re z < 0.5. Throws
// std::domain_error at the poles.
inline std::complex<double> gamma(std::complex<double> z) {
  constexpr double kPi = 3.14159265358979323846264338328;
  if (z.real() < 0.5) {
    if (z.imag() == 0.0 && z.real() == std::floor(z.real())) {
      throw std::domain_error("gamma: pole at nonpositive integer");
    }
    return kPi / (std::sin(kPi * z) * gamma(1.0 - z));
  }
  std::complex<double> zgh = z + (detail::kLanczosG - 0.5);
  return detail::lanczos_sum(z) * std::exp((z - 0.5) * std::log(zgh) - zgh);
}

// log Gamma(z) via the recurrence lgamma(z) = lgamma(z+1) - log z until
// Re z >= 0.5, then the Lanczos form in log space. Continuous on the right
// half plane; avoids the overflow/underflow of exponentiating first.
inline std::complex<double> lgamma(std::complex<double> z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 &&
      z.real() == std::floor(z.real())) {
    throw std::domain_error("lgamma: pole at nonpositive integer");
  }
  std::complex<double> shift{0.0, 0.0};
  while (z.real() < 0.5) {
    shift -= std::log(z);
    z += 1.0;
  }
  std::complex<double> zgh = z + (detail::kLanczosG - 0.5);
  return shift + std::log(detail::lanczos_sum(z)) +
         (z - 0.5) * std::log(zgh) - zgh;
}

// Digamma for real x > 0: shift to x >= 10, then the asymptotic series with
// Bernoulli coefficients B_2 .. B_14.
inline double digamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("digamma: need x > 0");
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  double w = 1.0 / (x * x);
  double series =
      w * (1.0 / 12.0 +
           w * (-1.0 / 120.0 +
                w * (1.0 / 252.0 +
                     w * (-1.0 / 240.0 +
                          w * (1.0 / 132.0 +
                               w * (-691.0 / 32760.0 + w * (1.0 / 12.0)))))));
  return acc + std::log(x) - 0.5 / x - series;
}

}  // namespace eulerlab
