#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "reesag/errors.hpp"
#include "reesag/linalg.hpp"
#include "reesag/local_ideal.hpp"
#include "reesag/monomial.hpp"
#include "reesag/polynomial.hpp"

namespace reesag {

inline constexpr int kDefaultNmax = 40;

// Finite-dimensional model of R/(I + m^N): a Macaulay matrix of the shifted
// generators, row-reduced once, with normal forms read off the reduced rows.
// Standard monomials are the non-pivot columns.
//
// Exact membership in I itself (not just I + m^N) is valid once the level is
// stabilized: dim at N equals dim at N+1 forces I + m^N = I + m^(N+1), so
// m^N <= I by Nakayama and truncation loses nothing.
template <class K>
class ArtinianQuotient {
 public:
  using Echelon = std::conditional_t<std::is_same_v<K, Rational>,
                                     IntegerEchelon, FieldEchelon<K>>;

  ArtinianQuotient(LocalIdeal<K> ideal, int level)
      : ideal_(std::move(ideal)), ring_(ideal_.ring()), level_(level) {
    build();
  }

  const LocalIdeal<K>& ideal() const noexcept { return ideal_; }
  const RingPtr<K>& ring() const noexcept { return ring_; }
  int level() const noexcept { return level_; }
  std::size_t length() const noexcept { return std_cols_.size(); }

  // Standard monomial basis in internal order (graded-lex descending).
  const std::vector<Monomial>& standard_monomials() const noexcept {
    return basis_;
  }

  // Coordinates of f modulo the ideal over the standard monomial basis.
  std::vector<K> normal_form(const Polynomial<K>& f) const {
    std::vector<K> acc(length(), K{});
    for (const auto& [m, c] : f.terms()) {
      if (m.total_degree() >= static_cast<std::uint64_t>(level_)) continue;
      auto it = col_index_.find(m);
      std::int32_t col = it->second;
      auto nf_it = nf_.find(col);
      if (nf_it == nf_.end()) {
        acc[std_pos_.at(col)] += c;
      } else {
        const std::vector<K>& row = nf_it->second;
        for (std::size_t s = 0; s < row.size(); ++s)
          if (!is_zero(row[s])) acc[s] += c * row[s];
      }
    }
    return acc;
  }

  bool contains(const Polynomial<K>& f) const {
    for (const auto& v : normal_form(f))
      if (!is_zero(v)) return false;
    return true;
  }

  // Lifted basis of { v in R/I : v*g = 0 for all given multipliers }.
  // Returned polynomials are nonzero residues, so none lies in the ideal.
  std::vector<Polynomial<K>> multiplication_kernel(
      const std::vector<Polynomial<K>>& multipliers) const {
    const std::size_t ell = length();
    std::vector<std::vector<K>> columns;  // columns[s] = nf(m_s * g), stacked
    columns.assign(ell, {});
    std::vector<std::vector<K>> basis_vectors;

    if constexpr (std::is_same_v<K, Rational>) {
      IntegerEchelon ech;
      for (const auto& g : multipliers) {
        if (g.is_zero()) continue;
        std::vector<std::vector<K>> image(ell);
        for (std::size_t s = 0; s < ell; ++s)
          image[s] = normal_form(
              Polynomial<K>::from_monomial(ring_, basis_[s], ring_->one()) * g);
        for (std::size_t t = 0; t < ell; ++t) {
          SparseRow<Rational> row;
          for (std::size_t s = 0; s < ell; ++s)
            if (!is_zero(image[s][t]))
              row.emplace_back(static_cast<std::int32_t>(s), image[s][t]);
          if (!row.empty()) ech.insert(integer_row(row));
        }
      }
      ech.finalize();
      for (auto& v : ech.kernel_basis(static_cast<std::int32_t>(ell))) {
        std::vector<K> kv(ell);
        for (std::size_t s = 0; s < ell; ++s) kv[s] = Rational(v[s]);
        basis_vectors.push_back(std::move(kv));
      }
    } else {
      FieldEchelon<K> ech;
      for (const auto& g : multipliers) {
        if (g.is_zero()) continue;
        std::vector<std::vector<K>> image(ell);
        for (std::size_t s = 0; s < ell; ++s)
          image[s] = normal_form(
              Polynomial<K>::from_monomial(ring_, basis_[s], ring_->one()) * g);
        for (std::size_t t = 0; t < ell; ++t) {
          SparseRow<K> row;
          for (std::size_t s = 0; s < ell; ++s)
            if (!is_zero(image[s][t]))
              row.emplace_back(static_cast<std::int32_t>(s), image[s][t]);
          if (!row.empty()) ech.insert(std::move(row));
        }
      }
      ech.finalize();
      basis_vectors =
          ech.kernel_basis(static_cast<std::int32_t>(ell), ring_->one());
    }

    std::vector<Polynomial<K>> lifts;
    for (const auto& v : basis_vectors) {
      Polynomial<K> f = Polynomial<K>::zero(ring_);
      for (std::size_t s = 0; s < ell; ++s)
        if (!is_zero(v[s])) f.add_term(basis_[s], v[s]);
      lifts.push_back(std::move(f));
    }
    return lifts;
  }

 private:
  void build() {
    if (level_ < 1) throw InputError("truncation level must be >= 1");
    const std::size_t d = ring_->dimension();
    cols_ = monomials_up_to(d, static_cast<std::uint32_t>(level_ - 1));
    std::sort(cols_.begin(), cols_.end(), GrlexGreater{});
    col_index_.reserve(cols_.size());
    for (std::size_t i = 0; i < cols_.size(); ++i)
      col_index_.emplace(cols_[i], static_cast<std::int32_t>(i));

    Echelon ech;
    for (const auto& g : ideal_.generators()) {
      auto mind = g.min_total_degree();
      if (!mind || *mind >= static_cast<std::uint64_t>(level_)) continue;
      auto shift_bound =
          static_cast<std::uint32_t>(level_ - 1 - static_cast<int>(*mind));
      for (const auto& u : monomials_up_to(d, shift_bound)) {
        SparseRow<K> row;
        for (const auto& [m, c] : g.terms()) {
          Monomial shifted = m * u;
          if (shifted.total_degree() >= static_cast<std::uint64_t>(level_))
            continue;
          row.emplace_back(col_index_.at(shifted), c);
        }
        if (row.empty()) continue;
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        if constexpr (std::is_same_v<K, Rational>) {
          ech.insert(integer_row(row));
        } else {
          ech.insert(std::move(row));
        }
      }
    }
    ech.finalize();

    for (std::int32_t c = 0; c < static_cast<std::int32_t>(cols_.size()); ++c) {
      if (ech.is_pivot(c)) continue;
      std_pos_.emplace(c, std_cols_.size());
      std_cols_.push_back(c);
      basis_.push_back(cols_[static_cast<std::size_t>(c)]);
    }

    for (const auto& [c, row] : ech.rows()) {
      std::vector<K> dense(std_cols_.size(), K{});
      if constexpr (std::is_same_v<K, Rational>) {
        const Integer& pivot = row.front().second;
        for (const auto& [col, val] : row) {
          auto it = std_pos_.find(col);
          if (it != std_pos_.end()) dense[it->second] = Rational(-val, pivot);
        }
      } else {
        for (const auto& [col, val] : row) {
          auto it = std_pos_.find(col);
          if (it != std_pos_.end()) dense[it->second] = -val;
        }
      }
      nf_.emplace(c, std::move(dense));
    }
  }

  static SparseRow<Integer> integer_row(const SparseRow<Rational>& row) {
    Integer den = 1;
    for (const auto& [c, v] : row)
      den = boost::multiprecision::lcm(den,
                                       boost::multiprecision::denominator(v));
    SparseRow<Integer> out;
    out.reserve(row.size());
    for (const auto& [c, v] : row)
      out.emplace_back(c, boost::multiprecision::numerator(v * Rational(den)));
    return out;
  }

  LocalIdeal<K> ideal_;
  RingPtr<K> ring_;
  int level_;
  std::vector<Monomial> cols_;
  std::unordered_map<Monomial, std::int32_t, MonomialHash> col_index_;
  std::vector<std::int32_t> std_cols_;
  std::unordered_map<std::int32_t, std::size_t> std_pos_;
  std::vector<Monomial> basis_;
  std::unordered_map<std::int32_t, std::vector<K>> nf_;
};

template <class K>
ArtinianQuotient<K> quotient_at_level(const LocalIdeal<K>& ideal, int level) {
  return ArtinianQuotient<K>(ideal, level);
}

// Smallest N with dim R/(I + m^N) = dim R/(I + m^(N+1)); the returned
// quotient is exact for membership in I.  Generators must sit inside the
// maximal ideal, and the ideal must be m-primary for stabilization to occur
// within the cap.
template <class K>
ArtinianQuotient<K> stabilized_quotient(const LocalIdeal<K>& ideal,
                                        int nmax = kDefaultNmax) {
  if (ideal.contains_unit_generator())
    throw HypothesisError(
        "ideal has a generator with nonzero constant term; quotient "
        "operations need generators inside the maximal ideal");
  if (nmax < 2) throw InputError("nmax must be at least 2");
  ArtinianQuotient<K> prev = quotient_at_level(ideal, 1);
  for (int n = 2; n <= nmax; ++n) {
    ArtinianQuotient<K> cur = quotient_at_level(ideal, n);
    if (cur.length() == prev.length()) return prev;
    prev = std::move(cur);
  }
  throw HypothesisError(
      "ideal not m-primary or truncation cap too small (nmax = " +
      std::to_string(nmax) + ")");
}

template <class K>
std::size_t local_length(const LocalIdeal<K>& ideal, int nmax = kDefaultNmax) {
  return stabilized_quotient(ideal, nmax).length();
}

template <class K>
bool membership(const Polynomial<K>& f, const LocalIdeal<K>& ideal,
                int nmax = kDefaultNmax) {
  return stabilized_quotient(ideal, nmax).contains(f);
}

// A : B via the multiplication kernel in R/A.  Generators of the result are
// A's generators followed by lifted kernel elements.
template <class K>
LocalIdeal<K> colon(const LocalIdeal<K>& a, const LocalIdeal<K>& b,
                    int nmax = kDefaultNmax) {
  if (!same_ring(a.ring(), b.ring()))
    throw InputError("colon: operands live in different rings");
  ArtinianQuotient<K> q = stabilized_quotient(a, nmax);
  std::vector<Polynomial<K>> gens = a.generators();
  for (auto& lift : q.multiplication_kernel(b.generators()))
    gens.push_back(std::move(lift));
  return LocalIdeal<K>(a.ring(), std::move(gens));
}

// Q : m for an m-primary Q strictly below m.  When Q = m the colon is the
// unit ideal and the notion degenerates, so that input is rejected.
template <class K>
LocalIdeal<K> socle_ideal(const LocalIdeal<K>& q, int nmax = kDefaultNmax) {
  ArtinianQuotient<K> quo = stabilized_quotient(q, nmax);
  if (quo.length() == 1)
    throw HypothesisError(
        "socle ideal of the maximal ideal is the unit ideal; Q = m is not "
        "admissible");
  LocalIdeal<K> m = maximal_ideal(q.ring());
  std::vector<Polynomial<K>> lifts =
      quo.multiplication_kernel(m.generators());
  std::vector<Polynomial<K>> gens = q.generators();
  const std::size_t socle_dim = lifts.size();
  for (auto& lift : lifts) gens.push_back(std::move(lift));
  LocalIdeal<K> result(q.ring(), std::move(gens));
  if (local_length(result, nmax) + socle_dim != quo.length())
    throw std::logic_error("socle computation is internally inconsistent");
  return result;
}

// Minimal number of generators via mu(I) = dim I/mI = len R/mI - len R/I.
template <class K>
std::size_t ideal_mu(const LocalIdeal<K>& ideal, int nmax = kDefaultNmax) {
  LocalIdeal<K> m = maximal_ideal(ideal.ring());
  std::size_t lm = local_length(ideal_product(m, ideal), nmax);
  std::size_t li = local_length(ideal, nmax);
  return lm - li;
}

// mu(J/I) = dim J/(I + mJ) for I <= J, both m-primary.  The containment is
// checked generator by generator so a violation names the offender.
template <class K>
std::size_t mu_subquotient(const LocalIdeal<K>& outer,
                           const LocalIdeal<K>& inner,
                           int nmax = kDefaultNmax) {
  ArtinianQuotient<K> qo = stabilized_quotient(outer, nmax);
  for (const auto& g : inner.generators()) {
    if (!qo.contains(g))
      throw HypothesisError("mu_subquotient: generator '" + g.str() +
                            "' of the inner ideal lies outside the outer "
                            "ideal");
  }
  LocalIdeal<K> m = maximal_ideal(outer.ring());
  LocalIdeal<K> denom = ideal_sum(inner, ideal_product(m, outer));
  return local_length(denom, nmax) - qo.length();
}

template <class K>
bool ideal_equal(const LocalIdeal<K>& a, const LocalIdeal<K>& b,
                 int nmax = kDefaultNmax) {
  if (!same_ring(a.ring(), b.ring()))
    throw InputError("ideal_equal: operands live in different rings");
  ArtinianQuotient<K> qa = stabilized_quotient(a, nmax);
  for (const auto& g : b.generators())
    if (!qa.contains(g)) return false;
  ArtinianQuotient<K> qb = stabilized_quotient(b, nmax);
  for (const auto& g : a.generators())
    if (!qb.contains(g)) return false;
  return true;
}

template <class K>
bool ideal_contains_ideal(const LocalIdeal<K>& outer,
                          const LocalIdeal<K>& inner,
                          int nmax = kDefaultNmax) {
  ArtinianQuotient<K> qo = stabilized_quotient(outer, nmax);
  for (const auto& g : inner.generators())
    if (!qo.contains(g)) return false;
  return true;
}

// Number of independent linear leading forms: dim of the image of I in
// m/m^2, computed as (d + 1) - len R/(I + m^2).
template <class K>
std::size_t linear_rank(const LocalIdeal<K>& ideal, int nmax = kDefaultNmax) {
  LocalIdeal<K> m = maximal_ideal(ideal.ring());
  LocalIdeal<K> m2 = ideal_square(m);
  std::size_t len = local_length(ideal_sum(ideal, m2), nmax);
  return ideal.dimension() + 1 - len;
}

}  // namespace reesag
