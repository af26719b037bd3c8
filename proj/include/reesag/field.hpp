#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "reesag/errors.hpp"

namespace reesag {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Integer& n) { return n.str(); }

inline std::string to_string(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1)
    return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

// Deterministic Miller-Rabin, exact for all 64-bit inputs with this witness set.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % n);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) -> std::uint64_t {
    std::uint64_t r = 1;
    a %= n;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Prime-field scalar.  A default-constructed value is the "untyped" zero: it
// has p == 0 and combines with any modulus, so zero-filled vectors are safe.
class GFp {
 public:
  GFp() = default;

  GFp(const Integer& value, std::uint64_t p) : p_(p) {
    Integer r = value % Integer(p);
    if (r < 0) r += Integer(p);
    v_ = static_cast<std::uint64_t>(r);
    if (v_ == 0) p_ = 0;
  }

  GFp(std::int64_t value, std::uint64_t p) : GFp(Integer(value), p) {}

  std::uint64_t value() const noexcept { return v_; }
  std::uint64_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return v_ == 0; }

  friend bool operator==(const GFp& a, const GFp& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.p_ == b.p_ && a.v_ == b.v_;
  }
  friend bool operator!=(const GFp& a, const GFp& b) { return !(a == b); }

  GFp operator-() const {
    if (is_zero()) return GFp{};
    return raw(p_ - v_, p_);
  }

  friend GFp operator+(const GFp& a, const GFp& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::uint64_t s = a.v_ + b.v_;  // p < 2^63 enforced at ring construction
    if (s >= a.p_) s -= a.p_;
    return s == 0 ? GFp{} : raw(s, a.p_);
  }
  friend GFp operator-(const GFp& a, const GFp& b) { return a + (-b); }
  friend GFp operator*(const GFp& a, const GFp& b) {
    if (a.is_zero() || b.is_zero()) return GFp{};
    std::uint64_t m = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a.v_) * b.v_) % a.p_);
    return m == 0 ? GFp{} : raw(m, a.p_);
  }
  friend GFp operator/(const GFp& a, const GFp& b) { return a * b.inverse(); }

  GFp& operator+=(const GFp& o) { return *this = *this + o; }
  GFp& operator-=(const GFp& o) { return *this = *this - o; }
  GFp& operator*=(const GFp& o) { return *this = *this * o; }

  GFp inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in F_p");
    // extended Euclid on (v, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_),
                 new_r = static_cast<std::int64_t>(v_);
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t -= q * new_t;
      std::swap(t, new_t);
      r -= q * new_r;
      std::swap(r, new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return raw(static_cast<std::uint64_t>(t), p_);
  }

 private:
  static GFp raw(std::uint64_t v, std::uint64_t p) {
    GFp g;
    g.v_ = v;
    g.p_ = p;
    return g;
  }

  std::uint64_t v_{0};
  std::uint64_t p_{0};
};

inline std::string to_string(const GFp& a) { return std::to_string(a.value()); }

inline bool is_zero(const Rational& q) { return q == 0; }
inline bool is_zero(const Integer& n) { return n == 0; }
inline bool is_zero(const GFp& a) { return a.is_zero(); }

}  // namespace reesag
