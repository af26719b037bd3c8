#pragma once

#include <string>
#include <vector>

#include "reesag/errors.hpp"
#include "reesag/polynomial.hpp"
#include "reesag/ring.hpp"

namespace reesag {

// Finitely generated ideal in the local ring model, held as a generator list.
// Zero generators are dropped at construction; the list is otherwise kept as
// given (no minimization).  Generators with a nonzero constant term are legal
// to hold (colon computations can produce the unit ideal) but every
// quotient-based operation requires all generators inside the maximal ideal.
template <class K>
class LocalIdeal {
 public:
  explicit LocalIdeal(RingPtr<K> ring) : ring_(std::move(ring)) {}

  LocalIdeal(RingPtr<K> ring, std::vector<Polynomial<K>> gens)
      : ring_(std::move(ring)) {
    for (auto& g : gens) {
      if (!same_ring(g.ring(), ring_))
        throw InputError("ideal generator from a different ring");
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }

  const RingPtr<K>& ring() const noexcept { return ring_; }
  const std::vector<Polynomial<K>>& generators() const noexcept {
    return gens_;
  }
  std::size_t generator_count() const noexcept { return gens_.size(); }
  std::size_t dimension() const { return ring_->dimension(); }

  bool contains_unit_generator() const {
    for (const auto& g : gens_)
      if (!is_zero(g.constant_term())) return true;
    return false;
  }

  bool generators_in_maximal_ideal() const {
    return !contains_unit_generator();
  }

  std::vector<std::string> generator_strings() const {
    std::vector<std::string> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_) out.push_back(g.str());
    return out;
  }

 private:
  RingPtr<K> ring_;
  std::vector<Polynomial<K>> gens_;
};

// The maximal ideal (x_1, ..., x_d).
template <class K>
LocalIdeal<K> maximal_ideal(const RingPtr<K>& ring) {
  std::vector<Polynomial<K>> gens;
  for (std::size_t i = 0; i < ring->dimension(); ++i)
    gens.push_back(Polynomial<K>::variable(ring, i));
  return LocalIdeal<K>(ring, std::move(gens));
}

enum class CombineOp { Sum, Product };

// Sum concatenates generator lists; product takes pairwise products of the
// two lists (unordered pairs when the operands are the same list would drop
// needed products, so proper A != B inputs use the full grid while A == A
// squares use i <= j).  No minimization in either case.
template <class K>
LocalIdeal<K> ideal_combine(const LocalIdeal<K>& a, const LocalIdeal<K>& b,
                            CombineOp op) {
  if (!same_ring(a.ring(), b.ring()))
    throw InputError("ideal_combine: operands live in different rings");
  std::vector<Polynomial<K>> gens;
  if (op == CombineOp::Sum) {
    gens = a.generators();
    for (const auto& g : b.generators()) gens.push_back(g);
  } else {
    const bool symmetric = &a == &b || a.generators() == b.generators();
    for (std::size_t i = 0; i < a.generator_count(); ++i) {
      std::size_t j0 = symmetric ? i : 0;
      for (std::size_t j = j0; j < b.generator_count(); ++j)
        gens.push_back(a.generators()[i] * b.generators()[j]);
    }
  }
  return LocalIdeal<K>(a.ring(), std::move(gens));
}

template <class K>
LocalIdeal<K> ideal_sum(const LocalIdeal<K>& a, const LocalIdeal<K>& b) {
  return ideal_combine(a, b, CombineOp::Sum);
}

template <class K>
LocalIdeal<K> ideal_product(const LocalIdeal<K>& a, const LocalIdeal<K>& b) {
  return ideal_combine(a, b, CombineOp::Product);
}

template <class K>
LocalIdeal<K> ideal_square(const LocalIdeal<K>& a) {
  return ideal_product(a, a);
}

}  // namespace reesag
