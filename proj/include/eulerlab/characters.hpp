#pragma once

// Dirichlet characters mod q with exact root-of-unity values.
//
// (Z/q)^* is decomposed by CRT into cyclic components: one per odd prime
// power p^e (generated by a primitive root), none for 2, one of order 2 for
// 4, and for 2^e with e >= 3 the pair <-1> x <5>. A character is an exponent
// vector against those generators; its value at n comes from per-component
// discrete-log tables built once per modulus and shared.
//
// Canonical labels are "q.index" where index is the mixed-radix encoding of
// the exponent vector, first component least significant. Index 0 is the
// principal character.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulerlab/compensated.hpp"
#include "eulerlab/rotation.hpp"

namespace eulerlab {

namespace detail {

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e,
                             std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = (r * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return r;
}

inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(
    std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> f;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.emplace_back(p, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

// Smallest primitive root mod p^e for odd prime p.
inline std::uint64_t primitive_root(std::uint64_t p, unsigned e) {
  std::uint64_t phi_p = p - 1;
  auto fac = factorize(phi_p);
  std::uint64_t g = 2;
  for (;; ++g) {
    bool ok = true;
    for (auto& [q, _] : fac) {
      if (pow_mod(g, phi_p / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) break;
  }
  if (e == 1) return g;
  // Lift to p^e: g works unless g^(p-1) = 1 mod p^2, in which case g+p does.
  std::uint64_t p2 = p * p;
  if (pow_mod(g, p - 1, p2) == 1) g += p;
  return g;
}

}  // namespace detail

class DirichletGroup {
 public:
  struct Component {
    std::uint64_t modulus;  // prime power it lives in
    std::uint64_t generator;
    std::uint64_t order;
    // dlog[r % modulus] = exponent of generator, only meaningful for residues
    // that the generator's cyclic part reaches; kNoLog elsewhere.
    std::vector<std::uint32_t> dlog;
  };

  static constexpr std::uint32_t kNoLog = 0xffffffffu;

  static std::shared_ptr<const DirichletGroup> make(std::uint32_t q) {
    if (q == 0) throw std::invalid_argument("DirichletGroup: q must be >= 1");
    if (q > 10'000'000u) {
      throw std::invalid_argument("DirichletGroup: q above 1e7 not supported");
    }
    auto g = std::shared_ptr<DirichletGroup>(new DirichletGroup);
    g->q_ = q;
    g->phi_ = 1;
    for (auto& [p, e] : detail::factorize(q)) {
      std::uint64_t pe = 1;
      for (unsigned i = 0; i < e; ++i) pe *= p;
      if (p == 2) {
        if (e == 1) continue;  // (Z/2)^* trivial
        if (e == 2) {
          Component c{pe, pe - 1, 2, {}};
          c.dlog.assign(pe, kNoLog);
          c.dlog[1] = 0;
          c.dlog[3] = 1;
          g->comps_.push_back(std::move(c));
          g->phi_ *= 2;
        } else {
          // <-1> of order 2 and <5> of order 2^(e-2); joint enumeration
          // fills both tables.
          Component cm{pe, pe - 1, 2, {}};
          Component c5{pe, 5, pe / 4, {}};
          cm.dlog.assign(pe, kNoLog);
          c5.dlog.assign(pe, kNoLog);
          for (std::uint64_t i = 0; i < 2; ++i) {
            std::uint64_t base = (i == 0) ? 1 : pe - 1;
            std::uint64_t r = base;
            for (std::uint64_t j = 0; j < pe / 4; ++j) {
              cm.dlog[r] = static_cast<std::uint32_t>(i);
              c5.dlog[r] = static_cast<std::uint32_t>(j);
              r = (r * 5) % pe;
            }
          }
          g->comps_.push_back(std::move(cm));
          g->comps_.push_back(std::move(c5));
          g->phi_ *= pe / 2;
        }
      } else {
        std::uint64_t ord = pe / p * (p - 1);
        Component c{pe, detail::primitive_root(p, e), ord, {}};
        c.dlog.assign(pe, kNoLog);
        std::uint64_t r = 1;
        for (std::uint64_t j = 0; j < ord; ++j) {
          c.dlog[r] = static_cast<std::uint32_t>(j);
          r = (r * c.generator) % pe;
        }
        g->comps_.push_back(std::move(c));
        g->phi_ *= ord;
      }
    }
    return g;
  }

  std::uint32_t modulus() const { return q_; }
  std::uint64_t phi() const { return phi_; }
  const std::vector<Component>& components() const { return comps_; }

  // Exponent vector of n against the component generators, or false when
  // gcd(n, q) > 1.
  bool log(std::int64_t n, std::vector<std::uint64_t>& out) const {
    std::int64_t r = n % static_cast<std::int64_t>(q_);
    if (r < 0) r += q_;
    std::uint64_t u = static_cast<std::uint64_t>(r);
    if (std::gcd(u, static_cast<std::uint64_t>(q_)) != 1) return false;
    out.resize(comps_.size());
    for (std::size_t i = 0; i < comps_.size(); ++i) {
      std::uint32_t d = comps_[i].dlog[u % comps_[i].modulus];
      if (d == kNoLog) return false;
      out[i] = d;
    }
    return true;
  }

 private:
  DirichletGroup() = default;
  std::uint32_t q_ = 1;
  std::uint64_t phi_ = 1;
  std::vector<Component> comps_;
};

class DirichletCharacter {
 public:
  DirichletCharacter(std::shared_ptr<const DirichletGroup> group,
                     std::vector<std::uint64_t> exps)
      : group_(std::move(group)), exps_(std::move(exps)) {
    if (exps_.size() != group_->components().size()) {
      throw std::invalid_argument("DirichletCharacter: exponent arity");
    }
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      exps_[i] %= group_->components()[i].order;
    }
  }

  std::uint32_t modulus() const { return group_->modulus(); }
  std::uint64_t phi() const { return group_->phi(); }
  const std::shared_ptr<const DirichletGroup>& group() const { return group_; }

  std::uint64_t index() const {
    std::uint64_t idx = 0;
    std::uint64_t radix = 1;
    const auto& comps = group_->components();
    for (std::size_t i = 0; i < comps.size(); ++i) {
      idx += exps_[i] * radix;
      radix *= comps[i].order;
    }
    return idx;
  }

  std::string label() const {
    return std::to_string(modulus()) + "." + std::to_string(index());
  }

  CharValue value(std::int64_t n) const {
    std::vector<std::uint64_t> lg;
    if (!group_->log(n, lg)) return CharValue::zero();
    Rotation r;  // e(0) = 1
    const auto& comps = group_->components();
    for (std::size_t i = 0; i < comps.size(); ++i) {
      r = r * Rotation::of(
                  static_cast<std::int64_t>(exps_[i] * lg[i]),
                  static_cast<std::int64_t>(comps[i].order));
    }
    return CharValue::unit(r);
  }

  bool is_principal() const {
    return std::all_of(exps_.begin(), exps_.end(),
                       [](std::uint64_t e) { return e == 0; });
  }

  // Order of chi in the character group.
  std::uint64_t order() const {
    std::uint64_t ord = 1;
    const auto& comps = group_->components();
    for (std::size_t i = 0; i < comps.size(); ++i) {
      std::uint64_t d = comps[i].order / std::gcd(comps[i].order, exps_[i]);
      ord = std::lcm(ord, d);
    }
    return ord;
  }

  // nu = 0 for even characters (chi(-1) = 1), 1 for odd.
  int parity_nu() const {
    CharValue v = value(-1);
    return v.rot.is_one() ? 0 : 1;
  }

  // Smallest f | q such that chi is trivial on units congruent to 1 mod f.
  std::uint32_t conductor() const {
    std::uint32_t q = modulus();
    for (std::uint32_t f = 1; f <= q; ++f) {
      if (q % f != 0) continue;
      bool ok = true;
      for (std::uint64_t a = 1 + f; a <= q; a += f) {
        if (std::gcd(a, static_cast<std::uint64_t>(q)) != 1) continue;
        CharValue v = value(static_cast<std::int64_t>(a));
        if (v.is_zero || !v.rot.is_one()) {
          ok = false;
          break;
        }
      }
      if (ok) return f;
    }
    return q;
  }

  bool is_primitive() const { return conductor() == modulus(); }

  DirichletCharacter times(const DirichletCharacter& o) const {
    require_same_group(o);
    std::vector<std::uint64_t> e(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) e[i] = exps_[i] + o.exps_[i];
    return DirichletCharacter(group_, std::move(e));
  }

  DirichletCharacter conj() const {
    std::vector<std::uint64_t> e(exps_.size());
    const auto& comps = group_->components();
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      e[i] = (comps[i].order - exps_[i]) % comps[i].order;
    }
    return DirichletCharacter(group_, std::move(e));
  }

  DirichletCharacter power(std::uint64_t m) const {
    std::vector<std::uint64_t> e(exps_.size());
    const auto& comps = group_->components();
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      e[i] = (exps_[i] % comps[i].order) * (m % comps[i].order) %
             comps[i].order;
    }
    return DirichletCharacter(group_, std::move(e));
  }

  bool operator==(const DirichletCharacter& o) const {
    return modulus() == o.modulus() && exps_ == o.exps_;
  }

 private:
  void require_same_group(const DirichletCharacter& o) const {
    if (modulus() != o.modulus()) {
      throw std::invalid_argument("characters live mod different q");
    }
  }

  std::shared_ptr<const DirichletGroup> group_;
  std::vector<std::uint64_t> exps_;
};

// All phi(q) characters mod q, ordered by canonical index.
inline std::vector<DirichletCharacter> characters_mod(std::uint32_t q) {
  auto group = DirichletGroup::make(q);
  const auto& comps = group->components();
  std::vector<DirichletCharacter> out;
  out.reserve(group->phi());
  for (std::uint64_t idx = 0; idx < group->phi(); ++idx) {
    std::uint64_t rest = idx;
    std::vector<std::uint64_t> e(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
      e[i] = rest % comps[i].order;
      rest /= comps[i].order;
    }
    out.emplace_back(group, std::move(e));
  }
  return out;
}

inline DirichletCharacter character_by_index(std::uint32_t q,
                                             std::uint64_t index) {
  auto group = DirichletGroup::make(q);
  if (index >= group->phi()) {
    throw std::invalid_argument("character index out of range for modulus");
  }
  const auto& comps = group->components();
  std::vector<std::uint64_t> e(comps.size());
  std::uint64_t rest = index;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    e[i] = rest % comps[i].order;
    rest /= comps[i].order;
  }
  return DirichletCharacter(group, std::move(e));
}

// Parses a "q.index" label.
inline DirichletCharacter character_by_label(const std::string& label) {
  auto dot = label.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 >= label.size()) {
    throw std::invalid_argument("character label must look like \"q.index\"");
  }
  std::uint32_t q = 0;
  std::uint64_t idx = 0;
  try {
    q = static_cast<std::uint32_t>(std::stoul(label.substr(0, dot)));
    idx = std::stoull(label.substr(dot + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("character label must look like \"q.index\"");
  }
  return character_by_index(q, idx);
}

// Gauss sum tau(chi) = sum_a chi(a) e(a/q) and the root number
// epsilon(chi) = i^{-nu} tau(chi)/sqrt(q).
struct RootNumber {
  std::complex<double> tau;
  std::complex<double> epsilon;
  int nu = 0;
};

inline RootNumber gauss_and_epsilon(const DirichletCharacter& chi) {
  std::uint32_t q = chi.modulus();
  KahanComplexSum acc;
  for (std::uint32_t a = 1; a <= q; ++a) {
    CharValue v = chi.value(a);
    if (v.is_zero) continue;
    acc.add((v.rot * Rotation::of(a, q)).to_complex());
  }
  RootNumber r;
  r.tau = acc.value();
  if (q == 1) r.tau = {1.0, 0.0};  // empty-modulus convention: tau = 1
  r.nu = chi.parity_nu();
  std::complex<double> i_pow =
      r.nu == 0 ? std::complex<double>{1.0, 0.0} : std::complex<double>{0.0, -1.0};
  r.epsilon = i_pow * r.tau / std::sqrt(static_cast<double>(q));
  return r;
}

// delta_m(q, a) = #{x mod q : x^m = a mod q}.
inline std::uint32_t delta_m(std::uint32_t q, std::uint64_t a, unsigned m) {
  if (q == 0) throw std::invalid_argument("delta_m: q must be >= 1");
  std::uint64_t target = a % q;
  std::uint32_t count = 0;
  for (std::uint64_t x = 0; x < q; ++x) {
    if (detail::pow_mod(x, m, q) == target) ++count;
  }
  return count;
}

// eta_m = 1 iff chi^m is principal, i.e. order(chi) | m.
inline int eta(const DirichletCharacter& chi, std::uint64_t m) {
  return chi.power(m).is_principal() ? 1 : 0;
}

// sum over units a of chi(a) delta_m(q, a); equals phi(q) when chi^m is
// principal and 0 otherwise.
inline std::complex<double> orthogonality_sum(const DirichletCharacter& chi,
                                              unsigned m) {
  std::uint32_t q = chi.modulus();
  std::vector<std::uint32_t> delta(q, 0);
  for (std::uint64_t x = 0; x < q; ++x) {
    std::uint64_t t = detail::pow_mod(x, m, q);
    ++delta[t];
  }
  KahanComplexSum acc;
  for (std::uint32_t a = 0; a < q; ++a) {
    CharValue v = chi.value(a);
    if (v.is_zero) continue;  // non-units contribute nothing
    acc.add(v.to_complex() * static_cast<double>(delta[a]));
  }
  return acc.value();
}

// Number of primitive characters mod q: sum over dr = q of mu(d) phi(r).
inline std::uint64_t primitive_count(std::uint32_t q) {
  auto mu_of = [](std::uint64_t n) -> int {
    int m = 1;
    for (auto& [p, e] : detail::factorize(n)) {
      if (e > 1) return 0;
      (void)p;
      m = -m;
    }
    return m;
  };
  auto phi_of = [](std::uint64_t n) -> std::uint64_t {
    std::uint64_t r = n;
    for (auto& [p, e] : detail::factorize(n)) {
      (void)e;
      r -= r / p;
    }
    return r;
  };
  std::int64_t total = 0;
  for (std::uint64_t d = 1; d <= q; ++d) {
    if (q % d != 0) continue;
    total += mu_of(d) * static_cast<std::int64_t>(phi_of(q / d));
  }
  return static_cast<std::uint64_t>(total);
}

}  // namespace eulerlab
