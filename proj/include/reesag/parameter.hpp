#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reesag/artinian.hpp"
#include "reesag/errors.hpp"
#include "reesag/local_ideal.hpp"
#include "reesag/polynomial.hpp"

namespace reesag {

enum class SopStatus { Verified, Asserted };

inline const char* to_string(SopStatus s) {
  return s == SopStatus::Verified ? "verified" : "asserted";
}

// A parameter ideal (or subsystem of parameters) with the classification
// facts downstream deciders key on: generator count r, whether it is a full
// system (r = d), how the sop property was established, and the number i of
// independent linear forms among the generators.
template <class K>
struct ParameterIdealData {
  LocalIdeal<K> ideal;
  std::size_t r{0};
  bool full{false};
  SopStatus sop_status{SopStatus::Asserted};
  std::size_t i{0};
  std::vector<std::string> warnings;
};

namespace detail {

// Exact height certificate for pure monomial generator lists: a radical
// computation in disguise.  The height of a monomial ideal is the size of a
// minimum vertex cover of the generator supports, and r single-monomial
// generators form a subsystem of parameters exactly when no cover smaller
// than r exists.
template <class K>
std::optional<std::size_t> monomial_min_cover(
    const std::vector<Polynomial<K>>& gens, std::size_t d) {
  std::vector<std::vector<std::size_t>> supports;
  for (const auto& g : gens) {
    if (g.term_count() != 1) return std::nullopt;
    std::vector<std::size_t> support;
    const Monomial& m = g.terms().begin()->first;
    for (std::size_t v = 0; v < d; ++v)
      if (m.exponent(v) > 0) support.push_back(v);
    supports.push_back(std::move(support));
  }
  for (std::size_t size = 0; size <= d; ++size) {
    // enumerate size-subsets of the variables
    std::vector<std::size_t> pick(size);
    std::function<bool(std::size_t, std::size_t)> rec =
        [&](std::size_t pos, std::size_t start) -> bool {
      if (pos == size) {
        for (const auto& s : supports) {
          bool covered = false;
          for (auto v : s)
            for (auto p : pick)
              if (v == p) covered = true;
          if (!covered) return false;
        }
        return true;
      }
      for (std::size_t v = start; v < d; ++v) {
        pick[pos] = v;
        if (rec(pos + 1, v + 1)) return true;
      }
      return false;
    };
    if (rec(0, 0)) return size;
  }
  return d;
}

}  // namespace detail

// Validates and classifies a candidate (sub)system of parameters.
//   r = d : verified m-primary through the quotient engine.
//   r < d : verified only for pure monomial generators via the cover
//           certificate; anything else is recorded as asserted with a
//           warning that rides into every downstream certificate.
//   r > d : rejected.
template <class K>
ParameterIdealData<K> classify_parameter_ideal(const LocalIdeal<K>& q,
                                               int nmax = kDefaultNmax) {
  const std::size_t d = q.dimension();
  const std::size_t r = q.generator_count();
  if (r == 0)
    throw HypothesisError("a parameter ideal needs at least one generator");
  if (!q.generators_in_maximal_ideal())
    throw HypothesisError(
        "parameter ideal generators must lie in the maximal ideal");
  if (r > d)
    throw HypothesisError("more generators (" + std::to_string(r) +
                          ") than ring dimension (" + std::to_string(d) +
                          "); not a subsystem of parameters");

  ParameterIdealData<K> data{q, r, r == d, SopStatus::Asserted, 0, {}};
  if (r == d) {
    stabilized_quotient(q, nmax);  // throws when not m-primary
    data.sop_status = SopStatus::Verified;
  } else {
    auto cover = detail::monomial_min_cover(q.generators(), d);
    if (cover) {
      if (*cover != r)
        throw HypothesisError(
            "monomial generators have height " + std::to_string(*cover) +
            " < " + std::to_string(r) + "; not a subsystem of parameters");
      data.sop_status = SopStatus::Verified;
    } else {
      data.sop_status = SopStatus::Asserted;
      data.warnings.push_back(
          "subsystem-of-parameters status asserted, not verified "
          "(non-monomial generators with r < d)");
    }
  }
  data.i = linear_rank(q, nmax);
  return data;
}

// Split presentation of a full parameter ideal Q = (x_1..x_i, a_1..a_{d-i})
// with each a_j a combination a_j = sum_k alpha_{jk} x_k over the trailing
// variables, alpha entries in the trailing-variable ideal.  Delta = det alpha
// is a socle generator: Q : m = Q + (Delta).
template <class K>
struct DeltaData {
  std::vector<Polynomial<K>> a_part;   // the leading variables x_1..x_i
  std::vector<Polynomial<K>> b_part;   // the quadratic-part generators a_j
  PolyMatrix<K> alpha;                 // (d-i) x (d-i), entries in b-vars
  Polynomial<K> delta;
};

// Builds DeltaData for a parameter ideal in split form and cross-checks the
// construction against the colon-based socle: Q + (Delta) = Q : m.
//
// Preconditions enforced here: the ideal is full and verified, the first i
// generators are literally the variables x_1..x_i, every remaining generator
// has all terms of degree >= 2 in the trailing variables, and i <= d - 2.
template <class K>
DeltaData<K> delta_construction(const ParameterIdealData<K>& pd,
                                int nmax = kDefaultNmax) {
  const auto& q = pd.ideal;
  const RingPtr<K>& ring = q.ring();
  const std::size_t d = q.dimension();
  const std::size_t i = pd.i;
  if (!pd.full)
    throw HypothesisError(
        "delta construction needs a full parameter ideal (r = d)");
  if (i + 2 > d)
    throw HypothesisError(
        "delta construction needs at least two trailing variables (i <= d-2); "
        "got i = " + std::to_string(i));

  const auto& gens = q.generators();
  DeltaData<K> out;

  // leading block must be the variables themselves, in order
  for (std::size_t k = 0; k < i; ++k) {
    Polynomial<K> xk = Polynomial<K>::variable(ring, k);
    if (gens[k] != xk)
      throw HypothesisError(
          "delta construction needs the first " + std::to_string(i) +
          " generators to be the variables " + "in order; generator " +
          std::to_string(k + 1) + " is '" + gens[k].str() + "', expected '" +
          ring->variable_name(k) + "'");
    out.a_part.push_back(std::move(xk));
  }

  const std::size_t n = d - i;  // trailing block size
  out.alpha.assign(n, std::vector<Polynomial<K>>(n, Polynomial<K>::zero(ring)));

  for (std::size_t j = 0; j < n; ++j) {
    const Polynomial<K>& aj = gens[i + j];
    out.b_part.push_back(aj);
    for (const auto& [m, c] : aj.terms()) {
      // every term needs degree >= 2 in the trailing variables, so the
      // peeled cofactor automatically stays inside the trailing-variable
      // ideal
      if (m.degree_in(i, d) < 2)
        throw HypothesisError(
            "generator '" + aj.str() + "' is not quadratic in the trailing "
            "variables; term '" +
            Polynomial<K>::from_monomial(ring, m, ring->one()).str() +
            "' violates the split shape");
      // peel off the smallest trailing variable dividing the term
      std::size_t k = i;
      while (m.exponent(k) == 0) ++k;
      Monomial cofactor = Monomial::variable(d, k).divide_into(m);
      out.alpha[j][k - i].add_term(cofactor, c);
    }
  }

  // alpha rows reassemble the generators exactly
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial<K> rebuilt = Polynomial<K>::zero(ring);
    for (std::size_t k = 0; k < n; ++k)
      rebuilt += out.alpha[j][k] * Polynomial<K>::variable(ring, i + k);
    if (rebuilt != gens[i + j])
      throw std::logic_error("alpha splitting failed to reassemble generator");
  }

  out.delta = det_exact(out.alpha, ring);

  // independent cross-check: the determinant route and the colon route agree
  LocalIdeal<K> with_delta = ideal_sum(
      q, LocalIdeal<K>(ring, std::vector<Polynomial<K>>{out.delta}));
  if (!ideal_equal(with_delta, socle_ideal(q, nmax), nmax))
    throw std::logic_error(
        "delta construction disagrees with the colon-based socle ideal");
  return out;
}

// I^2 = QI, the reduction equality the Rees-algebra analysis relies on.
// Requires Q <= I, checked first.
template <class K>
bool reduction_check(const LocalIdeal<K>& i_ideal, const LocalIdeal<K>& q,
                     int nmax = kDefaultNmax) {
  if (!ideal_contains_ideal(i_ideal, q, nmax))
    throw HypothesisError("reduction check needs Q contained in I");
  return ideal_equal(ideal_square(i_ideal), ideal_product(q, i_ideal), nmax);
}

}  // namespace reesag
