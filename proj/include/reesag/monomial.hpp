#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace reesag {

// Exponent vector over a fixed variable list.  The variable order is the one
// the ring was created with; comparators below read index 0 as the largest
// variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}

  static Monomial one(std::size_t nvars) { return Monomial(nvars); }

  static Monomial variable(std::size_t nvars, std::size_t idx) {
    Monomial m(nvars);
    m.e_[idx] = 1;
    return m;
  }

  std::size_t nvars() const noexcept { return e_.size(); }
  std::uint32_t exponent(std::size_t i) const { return e_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return e_; }

  std::uint64_t total_degree() const {
    return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
  }

  // Total degree within the half-open variable index range [lo, hi).
  std::uint64_t degree_in(std::size_t lo, std::size_t hi) const {
    std::uint64_t s = 0;
    for (std::size_t i = lo; i < hi && i < e_.size(); ++i) s += e_[i];
    return s;
  }

  bool is_one() const {
    for (auto x : e_)
      if (x != 0) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  // Quotient of o by *this; only valid when divides(o).
  Monomial divide_into(const Monomial& o) const {
    Monomial r = o;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= e_[i];
    return r;
  }

  Monomial pow(std::uint32_t k) const {
    Monomial r = *this;
    for (auto& x : r.e_) x *= k;
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.e_ == b.e_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }

 private:
  std::vector<std::uint32_t> e_;
};

// Graded lexicographic order: higher total degree first, ties broken by the
// exponent of the earliest variable (index 0 is the top of the order).
inline int grlex_compare(const Monomial& a, const Monomial& b) {
  auto da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db ? 1 : -1;
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i] != eb[i]) return ea[i] > eb[i] ? 1 : -1;
  }
  return 0;
}

// "Greater first" comparator: polynomial term maps iterate leading term first.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_compare(a, b) > 0;
  }
};

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_compare(a, b) < 0;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : m.exponents()) {
      h ^= x + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// All monomials in nvars variables with total degree <= bound, in no
// particular order.  Count is binom(bound + nvars, nvars).
inline void enumerate_monomials_up_to(std::size_t nvars, std::uint32_t bound,
                                      std::vector<Monomial>& out) {
  std::vector<std::uint32_t> e(nvars, 0);
  std::function<void(std::size_t, std::uint32_t)> rec =
      [&](std::size_t pos, std::uint32_t left) {
        if (pos == nvars) {
          out.emplace_back(e);
          return;
        }
        for (std::uint32_t k = 0; k <= left; ++k) {
          e[pos] = k;
          rec(pos + 1, left - k);
        }
        e[pos] = 0;
      };
  rec(0, bound);
}

inline std::vector<Monomial> monomials_up_to(std::size_t nvars,
                                             std::uint32_t bound) {
  std::vector<Monomial> out;
  enumerate_monomials_up_to(nvars, bound, out);
  return out;
}

}  // namespace reesag
