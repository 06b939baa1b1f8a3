#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathlab/bounds.hpp"

namespace pathlab {

struct NotPrimePower : std::domain_error {
  explicit NotPrimePower(std::uint64_t v)
      : std::domain_error("not a prime power: " + std::to_string(v)), q(v) {}
  std::uint64_t q;
};

namespace detail {

// Coefficient vectors over GF(p), low degree first, normalized (no trailing zeros).
inline std::vector<int> poly_trim(std::vector<int> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b, int p) {
  // b monic
  while (a.size() >= b.size() && !a.empty()) {
    int c = a.back();
    if (c != 0) {
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        a[shift + i] = ((a[shift + i] - c * b[i]) % p + p * p) % p;
      }
    }
    a.pop_back();
    a = poly_trim(std::move(a));
    if (a.size() < b.size()) break;
  }
  return poly_trim(std::move(a));
}

// Monic polynomial of degree d whose lower coefficients encode `code` base p.
inline std::vector<int> poly_decode(std::uint64_t code, int d, int p) {
  std::vector<int> poly(static_cast<std::size_t>(d) + 1, 0);
  for (int i = 0; i < d; ++i) {
    poly[static_cast<std::size_t>(i)] = static_cast<int>(code % static_cast<std::uint64_t>(p));
    code /= static_cast<std::uint64_t>(p);
  }
  poly[static_cast<std::size_t>(d)] = 1;
  return poly;
}

inline bool poly_irreducible(const std::vector<int>& f, int p) {
  const int d = static_cast<int>(f.size()) - 1;
  std::uint64_t pk = 1;
  for (int deg = 1; 2 * deg <= d; ++deg) {
    pk *= static_cast<std::uint64_t>(p);
    for (std::uint64_t code = 0; code < pk; ++code) {
      if (poly_rem(f, poly_decode(code, deg, p), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

// GF(p^e) for small orders (e <= 4 is enough here). Elements are integers in
// [0, q) whose base-p digits are polynomial coefficients; the modulus is the
// first irreducible monic polynomial of degree e in that encoding.
class GaloisField {
 public:
  explicit GaloisField(std::uint32_t q) : q_(q) {
    std::uint32_t p = 0, e = 0;
    if (!is_prime_power(q, &p, &e)) throw NotPrimePower(q);
    p_ = p;
    e_ = e;
    if (e_ == 1) {
      modulus_ = {0, 1};  // plain Z/p, any linear modulus works
    } else {
      std::uint64_t space = 1;
      for (std::uint32_t i = 0; i < e_; ++i) space *= p_;
      for (std::uint64_t code = 0;; ++code) {
        if (code >= space) throw std::logic_error("GaloisField: no irreducible polynomial found");
        auto f = detail::poly_decode(code, static_cast<int>(e_), static_cast<int>(p_));
        if (detail::poly_irreducible(f, static_cast<int>(p_))) {
          modulus_ = f;
          break;
        }
      }
    }
    mul_.assign(static_cast<std::size_t>(q_) * q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b) mul_[static_cast<std::size_t>(a) * q_ + b] = mul_slow(a, b);
    inv_.assign(q_, 0);
    for (std::uint32_t a = 1; a < q_; ++a)
      for (std::uint32_t b = 1; b < q_; ++b)
        if (mul(a, b) == 1) inv_[a] = b;
  }

  std::uint32_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return e_; }
  const std::vector<int>& modulus() const { return modulus_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t out = 0, place = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
      out += ((a % p_ + b % p_) % p_) * place;
      a /= p_;
      b /= p_;
      place *= p_;
    }
    return out;
  }

  std::uint32_t neg(std::uint32_t a) const {
    std::uint32_t out = 0, place = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
      out += ((p_ - a % p_) % p_) * place;
      a /= p_;
      place *= p_;
    }
    return out;
  }

  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return mul_[static_cast<std::size_t>(a) * q_ + b];
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("GaloisField: inverse of zero");
    return inv_[a];
  }
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

 private:
  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const {
    std::vector<int> da(e_, 0), db(e_, 0);
    for (std::uint32_t i = 0; i < e_; ++i) {
      da[i] = static_cast<int>(a % p_);
      a /= p_;
      db[i] = static_cast<int>(b % p_);
      b /= p_;
    }
    std::vector<int> prod(2 * e_ - 1, 0);
    for (std::uint32_t i = 0; i < e_; ++i)
      for (std::uint32_t j = 0; j < e_; ++j)
        prod[i + j] = (prod[i + j] + da[i] * db[j]) % static_cast<int>(p_);
    auto rem = detail::poly_rem(std::move(prod), modulus_, static_cast<int>(p_));
    std::uint32_t out = 0, place = 1;
    for (std::size_t i = 0; i < rem.size(); ++i) {
      out += static_cast<std::uint32_t>(rem[i]) * place;
      place *= p_;
    }
    return out;
  }

  std::uint32_t q_, p_ = 0, e_ = 0;
  std::vector<int> modulus_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> inv_;
};

}  // namespace pathlab
