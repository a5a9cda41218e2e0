#pragma once

// Exact arithmetic on roots of unity e(k/n) = exp(2 pi i k/n). Dirichlet
// character values always have this form, and carrying the rational angle
// keeps group identities (multiplicativity, orthogonality, conjugation)
// exact until the final conversion to complex.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace eulerlab {

class Rotation {
 public:
  Rotation() = default;

  // e(num/den); the angle is reduced mod 1 and the fraction to lowest terms.
  static Rotation of(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw std::invalid_argument("Rotation: denominator must be positive");
    num %= den;
    if (num < 0) num += den;
    std::int64_t g = std::gcd(num, den);
    Rotation r;
    r.num_ = num / g;
    r.den_ = den / g;
    return r;
  }

  Rotation operator*(const Rotation& o) const {
    // e(a/b) e(c/d) = e((ad+cb)/bd); lcm first to keep intermediates small.
    std::int64_t g = std::gcd(den_, o.den_);
    std::int64_t l = den_ / g * o.den_;
    return of(num_ * (l / den_) + o.num_ * (l / o.den_), l);
  }

  Rotation pow(std::int64_t e) const {
    std::int64_t m = e % den_;
    if (m < 0) m += den_;
    return of(num_ * m, den_);
  }

  Rotation conj() const { return of(den_ - num_, den_); }

  bool is_one() const { return num_ == 0; }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  // Multiplicative order of e(num/den), i.e. den of the reduced fraction.
  std::int64_t order() const { return den_; }

  std::complex<double> to_complex() const {
    // Quarter turns are exact; everything else goes through cos/sin.
    if (den_ == 1) return {1.0, 0.0};
    if (den_ == 2) return {-1.0, 0.0};
    if (den_ == 4) return num_ == 1 ? std::complex<double>{0.0, 1.0}
                                    : std::complex<double>{0.0, -1.0};
    double ang = 2.0 * std::numbers::pi * static_cast<double>(num_) /
                 static_cast<double>(den_);
    return {std::cos(ang), std::sin(ang)};
  }

  bool operator==(const Rotation&) const = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// A Dirichlet character value: zero (non-coprime argument) or a root of unity.
struct CharValue {
  bool is_zero = true;
  Rotation rot;

  static CharValue zero() { return {}; }
  static CharValue unit(Rotation r) { return {false, r}; }

  std::complex<double> to_complex() const {
    return is_zero ? std::complex<double>{0.0, 0.0} : rot.to_complex();
  }
};

}  // namespace eulerlab
