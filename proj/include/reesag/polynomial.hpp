#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "reesag/errors.hpp"
#include "reesag/field.hpp"
#include "reesag/monomial.hpp"
#include "reesag/ring.hpp"

namespace reesag {

// Sparse polynomial with terms kept in descending graded-lex order, so
// begin() is the leading term.  Zero coefficients are never stored.
template <class K>
class Polynomial {
 public:
  using TermMap = std::map<Monomial, K, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(RingPtr<K> ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr<K> ring) { return Polynomial(std::move(ring)); }

  static Polynomial constant(RingPtr<K> ring, const K& c) {
    Polynomial p(std::move(ring));
    p.add_term(Monomial::one(p.ring_->dimension()), c);
    return p;
  }

  static Polynomial constant(RingPtr<K> ring, const Integer& n) {
    K c = ring->from_integer(n);
    return constant(std::move(ring), c);
  }

  static Polynomial variable(RingPtr<K> ring, std::size_t idx) {
    Polynomial p(ring);
    p.add_term(Monomial::variable(ring->dimension(), idx), ring->one());
    return p;
  }

  static Polynomial from_monomial(RingPtr<K> ring, const Monomial& m,
                                  const K& c) {
    Polynomial p(std::move(ring));
    p.add_term(m, c);
    return p;
  }

  const RingPtr<K>& ring() const noexcept { return ring_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  void add_term(const Monomial& m, const K& c) {
    if (reesag::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (reesag::is_zero(it->second)) terms_.erase(it);
    }
  }

  K coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K{} : it->second;
  }

  K constant_term() const {
    return coefficient(Monomial::one(ring_->dimension()));
  }

  // Degree of the leading (largest) term; nullopt on the zero polynomial.
  std::optional<std::uint64_t> total_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.total_degree();
  }

  std::optional<std::uint64_t> min_total_degree() const {
    if (terms_.empty()) return std::nullopt;
    std::uint64_t m = terms_.begin()->first.total_degree();
    for (const auto& [mono, c] : terms_) m = std::min(m, mono.total_degree());
    return m;
  }

  // Largest degree in the variable index range [lo, hi); nullopt when zero.
  std::optional<std::uint64_t> degree_in(std::size_t lo, std::size_t hi) const {
    if (terms_.empty()) return std::nullopt;
    std::uint64_t m = 0;
    for (const auto& [mono, c] : terms_) m = std::max(m, mono.degree_in(lo, hi));
    return m;
  }

  bool is_homogeneous_in(std::size_t lo, std::size_t hi) const {
    if (terms_.empty()) return true;
    auto d0 = terms_.begin()->first.degree_in(lo, hi);
    for (const auto& [mono, c] : terms_)
      if (mono.degree_in(lo, hi) != d0) return false;
    return true;
  }

  // Drops every term of total degree >= bound.
  Polynomial truncate_below(std::uint64_t bound) const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_)
      if (m.total_degree() < bound) r.terms_.emplace(m, c);
    return r;
  }

  Polynomial operator-() const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b);
    Polynomial r = a.terms_.size() >= b.terms_.size() ? a : b;
    const Polynomial& s = a.terms_.size() >= b.terms_.size() ? b : a;
    if (r.ring_ == nullptr) r.ring_ = s.ring_;
    for (const auto& [m, c] : s.terms_) r.add_term(m, c);
    return r;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b);
    Polynomial r(a.ring_ ? a.ring_ : b.ring_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const K& c) const {
    Polynomial r(ring_);
    if (reesag::is_zero(c)) return r;
    for (const auto& [m, k] : terms_) r.add_term(m, k * c);
    return r;
  }

  Polynomial pow(std::uint32_t e) const {
    Polynomial r = constant(ring_, Integer(1));
    Polynomial base = *this;
    while (e) {
      if (e & 1) r = r * base;
      if (e > 1) base = base * base;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_)) return false;
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  // Replaces each variable by the given image polynomial; images must share
  // one ring, which becomes the result's ring.  Used to push polynomials into
  // a larger ring or to specialize variables.
  Polynomial substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != ring_->dimension())
      throw InputError("substitute: need one image per variable");
    RingPtr<K> target = images.empty() ? ring_ : images.front().ring();
    Polynomial r = zero(target);
    for (const auto& [m, c] : terms_) {
      Polynomial t = constant(target, K(c));
      for (std::size_t i = 0; i < images.size(); ++i) {
        if (m.exponent(i) == 0) continue;
        t = t * images[i].pow(m.exponent(i));
      }
      r += t;
    }
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      write_term(os, m, c, first);
      first = false;
    }
    return os.str();
  }

 private:
  static void check_same_ring(const Polynomial& a, const Polynomial& b) {
    if (a.ring_ && b.ring_ && !same_ring(a.ring_, b.ring_))
      throw InputError("polynomial arithmetic across different rings");
  }

  void write_monomial(std::ostringstream& os, const Monomial& m) const {
    bool first = true;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      auto e = m.exponent(i);
      if (e == 0) continue;
      if (!first) os << "*";
      os << ring_->variable_name(i);
      if (e > 1) os << "^" << e;
      first = false;
    }
  }

  // Rational coefficients print with an absorbed sign; F_p coefficients print
  // as canonical representatives 0..p-1, so the minus branch never triggers.
  void write_term(std::ostringstream& os, const Monomial& m, const K& c,
                  bool first) const {
    bool negative = false;
    K abs = c;
    if constexpr (std::is_same_v<K, Rational>) {
      if (c < 0) {
        negative = true;
        abs = -c;
      }
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    bool unit_coeff = (abs == ring_->one());
    if (m.is_one()) {
      os << to_string(abs);
    } else if (unit_coeff) {
      write_monomial(os, m);
    } else {
      os << to_string(abs) << "*";
      write_monomial(os, m);
    }
  }

  RingPtr<K> ring_;
  TermMap terms_;
};

template <class K>
using PolyMatrix = std::vector<std::vector<Polynomial<K>>>;

// Exact determinant by cofactor expansion along the first row.  Intended for
// desk-scale matrices (the construction sites cap out well below 6x6).
template <class K>
Polynomial<K> det_exact(const PolyMatrix<K>& m, RingPtr<K> ring) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw InputError("det_exact: matrix is not square");
  if (n == 0) return Polynomial<K>::constant(ring, Integer(1));
  if (n == 1) return m[0][0];
  Polynomial<K> acc = Polynomial<K>::zero(ring);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    PolyMatrix<K> minor;
    minor.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Polynomial<K>> row;
      row.reserve(n - 1);
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    Polynomial<K> term = m[0][j] * det_exact(minor, ring);
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

// Content-normalized copy over Q: integer coefficients, gcd 1, positive
// leading coefficient.  Identity on the zero polynomial.
inline Polynomial<Rational> primitive_part(const Polynomial<Rational>& f) {
  if (f.is_zero()) return f;
  Integer den_lcm = 1;
  for (const auto& [m, c] : f.terms())
    den_lcm = boost::multiprecision::lcm(den_lcm,
                                         boost::multiprecision::denominator(c));
  Integer num_gcd = 0;
  for (const auto& [m, c] : f.terms()) {
    Integer n = boost::multiprecision::numerator(c * Rational(den_lcm));
    num_gcd = boost::multiprecision::gcd(num_gcd, n);
  }
  Rational scale(den_lcm, num_gcd);
  if (f.terms().begin()->second * scale < 0) scale = -scale;
  return f.scaled(scale);
}

inline Polynomial<GFp> primitive_part(const Polynomial<GFp>& f) {
  if (f.is_zero()) return f;
  return f.scaled(f.terms().begin()->second.inverse());  // monic
}

}  // namespace reesag
