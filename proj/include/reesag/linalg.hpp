#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "reesag/field.hpp"

namespace reesag {

// Sparse vector: (column, value) pairs with ascending columns, values nonzero.
template <class T>
using SparseRow = std::vector<std::pair<std::int32_t, T>>;

template <class T>
T sparse_entry(const SparseRow<T>& row, std::int32_t col) {
  auto it = std::lower_bound(
      row.begin(), row.end(), col,
      [](const std::pair<std::int32_t, T>& e, std::int32_t c) {
        return e.first < c;
      });
  if (it != row.end() && it->first == col) return it->second;
  return T{};
}

// alpha * a + beta * b, merged; zero results dropped.
template <class T>
SparseRow<T> sparse_combine(const T& alpha, const SparseRow<T>& a,
                            const T& beta, const SparseRow<T>& b) {
  SparseRow<T> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      T v = alpha * a[i].second;
      if (!is_zero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      T v = beta * b[j].second;
      if (!is_zero(v)) out.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      T v = alpha * a[i].second + beta * b[j].second;
      if (!is_zero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

// Callers may hand in rows holding explicit zero values; pivot bookkeeping
// assumes there are none, so inserts scrub them first.
template <class T>
void drop_zero_entries(SparseRow<T>& row) {
  row.erase(std::remove_if(row.begin(), row.end(),
                           [](const std::pair<std::int32_t, T>& e) {
                             return is_zero(e.second);
                           }),
            row.end());
}

// Fraction-free row echelon over the integers.  Rows are kept primitive
// (content 1, positive leading entry); elimination uses cross-multiplication
// so no rationals ever appear.  finalize() completes the reduction so every
// pivot column is zero in all other rows.
class IntegerEchelon {
 public:
  using Row = SparseRow<Integer>;

  void insert(Row row) {
    drop_zero_entries(row);
    normalize(row);
    while (!row.empty()) {
      std::int32_t lead = row.front().first;
      auto it = rows_.find(lead);
      if (it == rows_.end()) {
        rows_.emplace(lead, std::move(row));
        return;
      }
      const Row& pivot = it->second;
      const Integer alpha = pivot.front().second;
      const Integer beta = -row.front().second;
      row = sparse_combine(alpha, row, beta, pivot);
      normalize(row);
    }
  }

  // Gauss-Jordan sweep over ascending pivot columns; later sweeps only touch
  // later columns, so cleared entries stay cleared.
  void finalize() {
    for (auto& [col, pivot_row] : rows_) {
      for (auto& [other_col, row] : rows_) {
        if (other_col == col) continue;
        Integer e = sparse_entry(row, col);
        if (is_zero(e)) continue;
        const Integer alpha = pivot_row.front().second;
        const Integer beta = -e;
        row = sparse_combine(alpha, row, beta, pivot_row);
        normalize(row);
      }
    }
  }

  std::size_t rank() const { return rows_.size(); }
  const std::map<std::int32_t, Row>& rows() const { return rows_; }

  bool is_pivot(std::int32_t col) const { return rows_.count(col) != 0; }

  // Basis of the right kernel as primitive integer vectors of length ncols,
  // one per free column.  Requires finalize() to have run.
  std::vector<std::vector<Integer>> kernel_basis(std::int32_t ncols) const {
    std::vector<std::vector<Integer>> basis;
    for (std::int32_t f = 0; f < ncols; ++f) {
      if (is_pivot(f)) continue;
      Integer scale = 1;
      for (const auto& [col, row] : rows_) {
        if (!is_zero(sparse_entry(row, f)))
          scale = boost::multiprecision::lcm(scale, row.front().second);
      }
      std::vector<Integer> v(static_cast<std::size_t>(ncols), Integer(0));
      v[static_cast<std::size_t>(f)] = scale;
      for (const auto& [col, row] : rows_) {
        Integer e = sparse_entry(row, f);
        if (!is_zero(e)) v[static_cast<std::size_t>(col)] =
            -e * scale / row.front().second;
      }
      make_primitive(v);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // Rows scaled to pivot 1, as dense rational vectors keyed by pivot column.
  std::map<std::int32_t, std::vector<Rational>> monic_rows(
      std::int32_t ncols) const {
    std::map<std::int32_t, std::vector<Rational>> out;
    for (const auto& [col, row] : rows_) {
      std::vector<Rational> dense(static_cast<std::size_t>(ncols), Rational(0));
      const Integer& a = row.front().second;
      for (const auto& [c, val] : row)
        dense[static_cast<std::size_t>(c)] = Rational(val, a);
      out.emplace(col, std::move(dense));
    }
    return out;
  }

  static void normalize(Row& row) {
    if (row.empty()) return;
    Integer g = 0;
    for (const auto& [c, v] : row) g = boost::multiprecision::gcd(g, v);
    if (row.front().second < 0) g = -g;
    if (g != 1) {
      for (auto& [c, v] : row) v /= g;
    }
  }

  static void make_primitive(std::vector<Integer>& v) {
    Integer g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    if (is_zero(g)) return;
    for (auto& x : v)
      if (x < 0) {
        g = -g;
        break;
      } else if (x > 0) {
        break;
      }
    for (auto& x : v) x /= g;
  }

 private:
  std::map<std::int32_t, Row> rows_;
};

// Plain Gauss-Jordan over a field.  With K = GFp this is the working engine
// for prime fields; with K = Rational it is the naive divide-through
// elimination kept around as a cross-check against the fraction-free path.
template <class K>
class FieldEchelon {
 public:
  using Row = SparseRow<K>;

  void insert(Row row) {
    drop_zero_entries(row);
    while (!row.empty()) {
      std::int32_t lead = row.front().first;
      auto it = rows_.find(lead);
      if (it == rows_.end()) {
        normalize(row);
        rows_.emplace(lead, std::move(row));
        return;
      }
      // pivot is monic
      const K alpha = one_of(row);
      const K beta = -row.front().second;
      row = sparse_combine(alpha, row, beta, it->second);
    }
  }

  void finalize() {
    for (auto& [col, pivot_row] : rows_) {
      for (auto& [other_col, row] : rows_) {
        if (other_col == col) continue;
        K e = sparse_entry(row, col);
        if (is_zero(e)) continue;
        const K alpha = one_of(row);
        const K beta = -e;
        row = sparse_combine(alpha, row, beta, pivot_row);
      }
    }
  }

  std::size_t rank() const { return rows_.size(); }
  const std::map<std::int32_t, Row>& rows() const { return rows_; }
  bool is_pivot(std::int32_t col) const { return rows_.count(col) != 0; }

  // `unit` is the field's 1; it must come from outside because a GFp scalar
  // needs a modulus and the echelon may hold no rows to borrow one from.
  std::vector<std::vector<K>> kernel_basis(std::int32_t ncols,
                                           const K& unit) const {
    std::vector<std::vector<K>> basis;
    for (std::int32_t f = 0; f < ncols; ++f) {
      if (is_pivot(f)) continue;
      std::vector<K> v(static_cast<std::size_t>(ncols), K{});
      v[static_cast<std::size_t>(f)] = unit;
      for (const auto& [col, row] : rows_) {
        K e = sparse_entry(row, f);
        if (!is_zero(e)) v[static_cast<std::size_t>(col)] = -e;
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

  std::map<std::int32_t, std::vector<K>> monic_rows(std::int32_t ncols) const {
    std::map<std::int32_t, std::vector<K>> out;
    for (const auto& [col, row] : rows_) {
      std::vector<K> dense(static_cast<std::size_t>(ncols), K{});
      for (const auto& [c, val] : row) dense[static_cast<std::size_t>(c)] = val;
      out.emplace(col, std::move(dense));
    }
    return out;
  }

 private:
  static K one_of(const Row& row) {
    if constexpr (std::is_same_v<K, GFp>) {
      return GFp(1, row.front().second.modulus());
    } else {
      return K(1);
    }
  }

  static void normalize(Row& row) {
    if (row.empty()) return;
    K inv = field_inverse(row.front().second);
    for (auto& [c, v] : row) v = v * inv;
  }

  static K field_inverse(const K& x) {
    if constexpr (std::is_same_v<K, GFp>) {
      return x.inverse();
    } else {
      return K(1) / x;
    }
  }

  std::map<std::int32_t, Row> rows_;
};

}  // namespace reesag
