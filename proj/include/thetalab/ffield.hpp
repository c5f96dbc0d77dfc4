#pragma once

// Exact arithmetic in GF(p^alpha) using the polynomial basis over GF(p).
// Elements are coefficient vectors, low degree first. The modulus is the
// lexicographically smallest monic irreducible polynomial of degree alpha.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "thetalab/error.hpp"

namespace thetalab {

struct FieldElement {
  std::vector<std::uint32_t> coeffs;  // alpha coefficients in [0, p), low degree first

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

namespace detail {

using Poly = std::vector<std::uint32_t>;  // low degree first, no trailing zeros

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // extended Euclid over the integers
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t quot = r / new_r;
    t -= quot * new_t;
    std::swap(t, new_t);
    r -= quot * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw Error(ErrorKind::kDivisionByZero, "residue has no inverse");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

// Remainder of a modulo the monic-or-not nonzero polynomial b over GF(p).
inline Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = mod_inverse(b.back(), p);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint64_t factor = a.back() * lead_inv % p;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

inline std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  Poly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const std::uint64_t lead_inv = mod_inverse(b.back(), p);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint64_t factor = a.back() * lead_inv % p;
    quot[shift] = static_cast<std::uint32_t>(factor);
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
    }
    trim(a);
  }
  trim(quot);
  return {quot, a};
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>(
          (out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  trim(out);
  return out;
}

inline Poly poly_sub(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint32_t x = i < a.size() ? a[i] : 0;
    const std::uint32_t y = i < b.size() ? b[i] : 0;
    out[i] = (x + p - y) % p;
  }
  trim(out);
  return out;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Exhaustive check: no monic polynomial of degree 1..deg/2 divides f.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    Poly g(d + 1, 0);
    g[d] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

class FieldSpec {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;

  /// Builds GF(p^alpha); throws NotPrime or Overflow.
  static FieldSpec create(std::uint64_t p, std::uint32_t alpha) {
    if (!detail::is_prime(p)) {
      throw Error(ErrorKind::kNotPrime, std::to_string(p) + " is not prime");
    }
    if (alpha < 1) throw Error(ErrorKind::kPreconditionViolated, "alpha must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < alpha; ++i) {
      q *= p;
      if (q > kMaxOrder) {
        throw Error(ErrorKind::kOverflow, "p^alpha exceeds 2^31");
      }
    }
    FieldSpec spec;
    spec.p_ = static_cast<std::uint32_t>(p);
    spec.alpha_ = alpha;
    spec.q_ = q;
    if (alpha > 1) spec.modulus_ = smallest_irreducible(spec.p_, alpha);
    return spec;
  }

  /// Accepts any prime power q; throws NotPrime when q is not one.
  static FieldSpec from_order(std::uint64_t q) {
    if (q < 2) throw Error(ErrorKind::kNotPrime, std::to_string(q) + " is not a prime power");
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t alpha = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++alpha;
    }
    if (rest != 1) throw Error(ErrorKind::kNotPrime, std::to_string(q) + " is not a prime power");
    return create(p, alpha);
  }

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t alpha() const noexcept { return alpha_; }
  std::uint64_t q() const noexcept { return q_; }
  /// alpha + 1 coefficients, monic; empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  FieldElement zero() const { return FieldElement{std::vector<std::uint32_t>(alpha_, 0)}; }
  FieldElement one() const {
    FieldElement e = zero();
    e.coeffs[0] = 1;
    return e;
  }

  // Canonical enumeration: coefficients read as base-p digits.
  FieldElement element(std::uint64_t index) const {
    if (index >= q_) throw Error(ErrorKind::kIndexOutOfRange, "element index out of range");
    FieldElement e = zero();
    for (std::uint32_t i = 0; i < alpha_; ++i) {
      e.coeffs[i] = static_cast<std::uint32_t>(index % p_);
      index /= p_;
    }
    return e;
  }
  std::uint64_t index(const FieldElement& a) const {
    std::uint64_t idx = 0;
    for (std::uint32_t i = alpha_; i-- > 0;) idx = idx * p_ + a.coeffs[i];
    return idx;
  }
  std::vector<FieldElement> elements() const {
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (std::uint64_t i = 0; i < q_; ++i) out.push_back(element(i));
    return out;
  }

  bool is_zero(const FieldElement& a) const {
    for (auto c : a.coeffs) {
      if (c != 0) return false;
    }
    return true;
  }

  FieldElement add(const FieldElement& a, const FieldElement& b) const {
    FieldElement out = zero();
    for (std::uint32_t i = 0; i < alpha_; ++i) out.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % p_;
    return out;
  }
  FieldElement neg(const FieldElement& a) const {
    FieldElement out = zero();
    for (std::uint32_t i = 0; i < alpha_; ++i) out.coeffs[i] = (p_ - a.coeffs[i]) % p_;
    return out;
  }
  FieldElement sub(const FieldElement& a, const FieldElement& b) const { return add(a, neg(b)); }

  FieldElement mul(const FieldElement& a, const FieldElement& b) const {
    if (alpha_ == 1) {
      return FieldElement{
          {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.coeffs[0]) * b.coeffs[0] % p_)}};
    }
    detail::Poly prod = detail::poly_mul(as_poly(a), as_poly(b), p_);
    return from_poly(detail::poly_rem(std::move(prod), modulus_, p_));
  }

  FieldElement inv(const FieldElement& a) const {
    if (is_zero(a)) throw Error(ErrorKind::kDivisionByZero, "inverse of zero");
    if (alpha_ == 1) return FieldElement{{detail::mod_inverse(a.coeffs[0], p_)}};
    // extended Euclid: track s with s * a == r (mod modulus)
    detail::Poly r0 = modulus_, r1 = as_poly(a);
    detail::Poly s0, s1 = {1};
    while (!r1.empty()) {
      auto [quot, rem] = detail::poly_divmod(r0, r1, p_);
      detail::Poly s2 = detail::poly_sub(s0, detail::poly_mul(quot, s1, p_), p_);
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    // r0 is a nonzero constant since the modulus is irreducible
    const std::uint64_t scale = detail::mod_inverse(r0[0], p_);
    for (auto& c : s0) c = static_cast<std::uint32_t>(c * scale % p_);
    return from_poly(detail::poly_rem(std::move(s0), modulus_, p_));
  }

  FieldElement pow(const FieldElement& a, std::uint64_t e) const {
    FieldElement result = one();
    FieldElement base = a;
    while (e > 0) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

  /// Multiplicative order of a nonzero element.
  std::uint64_t order(const FieldElement& a) const {
    if (is_zero(a)) throw Error(ErrorKind::kDivisionByZero, "zero has no multiplicative order");
    const std::uint64_t group = q_ - 1;
    std::uint64_t ord = group;
    std::uint64_t rest = group;
    auto strip = [&](std::uint64_t f) {
      while (ord % f == 0 && pow(a, ord / f) == one()) ord /= f;
    };
    for (std::uint64_t f = 2; f * f <= rest; ++f) {
      if (rest % f != 0) continue;
      while (rest % f == 0) rest /= f;
      strip(f);
    }
    if (rest > 1) strip(rest);
    return ord;
  }

  /// First nonzero element (canonical order) whose multiplicative order is exactly t.
  FieldElement element_of_order(std::uint64_t t) const {
    if (t == 0 || (q_ - 1) % t != 0) {
      throw Error(ErrorKind::kOrderUnavailable,
                  std::to_string(t) + " does not divide q-1 = " + std::to_string(q_ - 1));
    }
    for (std::uint64_t i = 1; i < q_; ++i) {
      FieldElement a = element(i);
      if (pow(a, t) == one() && order(a) == t) return a;
    }
    throw Error(ErrorKind::kOrderUnavailable, "no element of order " + std::to_string(t));
  }

  /// H = {1, h, ..., h^(t-1)} for the canonical element h of order t.
  std::vector<FieldElement> subgroup(std::uint64_t t) const {
    const FieldElement h = element_of_order(t);
    std::vector<FieldElement> out;
    out.reserve(t);
    FieldElement cur = one();
    for (std::uint64_t i = 0; i < t; ++i) {
      out.push_back(cur);
      cur = mul(cur, h);
    }
    return out;
  }

 private:
  FieldSpec() = default;

  static std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t alpha) {
    // Lexicographic order on (c_0, c_1, ..., c_{alpha-1}) with c_0 most significant.
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < alpha; ++i) count *= p;
    detail::Poly f(alpha + 1, 0);
    f[alpha] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t rest = idx;
      for (std::uint32_t i = alpha; i-- > 0;) {
        f[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      if (f[0] == 0) continue;  // divisible by x
      if (detail::is_irreducible(f, p)) return f;
    }
    throw Error(ErrorKind::kPreconditionViolated, "no irreducible polynomial found");
  }

  static detail::Poly as_poly(const FieldElement& a) {
    detail::Poly out = a.coeffs;
    detail::trim(out);
    return out;
  }
  FieldElement from_poly(const detail::Poly& poly) const {
    FieldElement out = zero();
    for (std::size_t i = 0; i < poly.size() && i < alpha_; ++i) out.coeffs[i] = poly[i];
    return out;
  }

  std::uint32_t p_ = 2;
  std::uint32_t alpha_ = 1;
  std::uint64_t q_ = 2;
  std::vector<std::uint32_t> modulus_;
};

}  // namespace thetalab
