#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "reesag/errors.hpp"
#include "reesag/polynomial.hpp"
#include "reesag/ring.hpp"

namespace reesag {

// Basis element T_{i1}*...*T_{i_{n+1}} (x) Y1^nu1 * Y2^nu2 of the n-th term
// of the complex.  Subset entries are 1-based and ascending.
struct BasisLabel {
  std::vector<int> subset;
  int nu1{0};
  int nu2{0};

  std::string text() const {
    std::ostringstream os;
    if (subset.empty()) {
      os << "1";
      return os.str();
    }
    for (std::size_t t = 0; t < subset.size(); ++t) {
      if (t) os << "*";
      os << "T" << subset[t];
    }
    if (nu1 + nu2 > 0) {
      os << " (x) ";
      bool first = true;
      if (nu1 > 0) {
        os << "Y1";
        if (nu1 > 1) os << "^" << nu1;
        first = false;
      }
      if (nu2 > 0) {
        if (!first) os << "*";
        os << "Y2";
        if (nu2 > 1) os << "^" << nu2;
      }
    }
    return os.str();
  }
};

struct GradedFreeModule {
  std::vector<int> degrees;  // X-degree of each basis element
  std::vector<BasisLabel> labels;
  std::size_t rank() const { return degrees.size(); }
};

template <class K>
struct GradedMap {
  GradedFreeModule source;
  GradedFreeModule target;
  PolyMatrix<K> entries;  // target.rank() x source.rank()
};

// The complex of the 2 x r matrix [[X_1..X_r], [a_1..a_r]] over
// S = R[X_1..X_r], resolving the Rees algebra of (a_1..a_r).  Grading is by
// X-degree only.  tM is the transpose of the last differential in the dual
// bases: the relation matrix of the canonical module.
template <class K>
struct ENComplex {
  std::size_t r{0};
  RingPtr<K> ring_s;
  std::size_t base_dim{0};              // number of R-variables inside S
  std::vector<Polynomial<K>> params;    // a_1..a_r embedded in S
  std::vector<GradedFreeModule> modules;  // C_0 .. C_{r-1}
  std::vector<GradedMap<K>> maps;         // d_1 .. d_{r-1}
  GradedMap<K> tM;
};

namespace detail {

inline bool complement_lex_less(const std::vector<int>& a,
                                const std::vector<int>& b, int r) {
  auto complement = [r](const std::vector<int>& s) {
    std::vector<int> c;
    for (int v = 1; v <= r; ++v)
      if (std::find(s.begin(), s.end(), v) == s.end()) c.push_back(v);
    return c;
  };
  return complement(a) < complement(b);
}

inline std::vector<std::vector<int>> subsets_of_size(int r, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= r; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  std::sort(out.begin(), out.end(),
            [r](const std::vector<int>& a, const std::vector<int>& b) {
              return complement_lex_less(a, b, r);
            });
  return out;
}

// C_n basis: nu1 ascending outer, subsets complement-lex ascending inner.
// For the top term this is T (x) Y1^i Y2^(r-2-i) with i ascending; one step
// down it is (omit j) blocks with j ascending inside k ascending.
inline GradedFreeModule module_term(int r, int n) {
  GradedFreeModule mod;
  if (n == 0) {
    mod.degrees = {0};
    mod.labels = {BasisLabel{}};
    return mod;
  }
  auto subs = subsets_of_size(r, n + 1);
  for (int nu1 = 0; nu1 <= n - 1; ++nu1) {
    for (const auto& s : subs) {
      mod.degrees.push_back(nu1 + 1);
      mod.labels.push_back(BasisLabel{s, nu1, n - 1 - nu1});
    }
  }
  return mod;
}

inline std::size_t basis_index(const GradedFreeModule& mod,
                               const std::vector<int>& subset, int nu1) {
  for (std::size_t i = 0; i < mod.labels.size(); ++i)
    if (mod.labels[i].nu1 == nu1 && mod.labels[i].subset == subset) return i;
  throw std::logic_error("basis element not found");
}

}  // namespace detail

// S = R[X_1..X_r]; the X names are pinned, so they must not collide with the
// base ring's variables.
template <class K>
RingPtr<K> extend_ring_with_duals(const RingPtr<K>& ring, std::size_t r) {
  std::vector<std::string> vars = ring->variables();
  for (std::size_t j = 1; j <= r; ++j) {
    std::string name = "X" + std::to_string(j);
    if (ring->variable_index(name))
      throw InputError("variable name '" + name +
                       "' collides with the Rees variable block");
    vars.push_back(name);
  }
  return std::make_shared<const RingDescriptor<K>>(std::move(vars),
                                                   ring->context());
}

template <class K>
Polynomial<K> embed_into(const RingPtr<K>& target, const Polynomial<K>& f) {
  std::vector<Polynomial<K>> images;
  for (std::size_t v = 0; v < f.ring()->dimension(); ++v)
    images.push_back(Polynomial<K>::variable(target, v));
  return f.substitute(images);
}

template <class K>
ENComplex<K> build_en_complex(const std::vector<Polynomial<K>>& a,
                              std::optional<std::size_t> expected_r =
                                  std::nullopt) {
  const std::size_t r = a.size();
  if (r < 2) throw HypothesisError("the complex needs at least two parameters");
  if (expected_r && *expected_r != r)
    throw InputError("parameter count " + std::to_string(r) +
                     " does not match the requested r = " +
                     std::to_string(*expected_r));
  for (const auto& f : a)
    if (f.is_zero() || !is_zero(f.constant_term()))
      throw HypothesisError(
          "complex parameters must be nonzero elements of the maximal ideal");

  ENComplex<K> cx;
  cx.r = r;
  const RingPtr<K>& base = a.front().ring();
  cx.base_dim = base->dimension();
  cx.ring_s = extend_ring_with_duals(base, r);
  for (const auto& f : a) cx.params.push_back(embed_into(cx.ring_s, f));

  auto x_var = [&](int j) {  // 1-based
    return Polynomial<K>::variable(cx.ring_s,
                                   cx.base_dim + static_cast<std::size_t>(j) -
                                       1);
  };

  const int ri = static_cast<int>(r);
  for (int n = 0; n <= ri - 1; ++n)
    cx.modules.push_back(detail::module_term(ri, n));

  for (int n = 1; n <= ri - 1; ++n) {
    GradedMap<K> map;
    map.source = cx.modules[static_cast<std::size_t>(n)];
    map.target = cx.modules[static_cast<std::size_t>(n - 1)];
    map.entries.assign(map.target.rank(),
                       std::vector<Polynomial<K>>(
                           map.source.rank(), Polynomial<K>::zero(cx.ring_s)));
    for (std::size_t s = 0; s < map.source.rank(); ++s) {
      const BasisLabel& lbl = map.source.labels[s];
      if (n == 1) {
        // bottom map: the 2x2 determinant of the chosen columns
        int i1 = lbl.subset[0], i2 = lbl.subset[1];
        map.entries[0][s] = x_var(i1) * cx.params[static_cast<std::size_t>(
                                            i2 - 1)] -
                            x_var(i2) * cx.params[static_cast<std::size_t>(
                                            i1 - 1)];
        continue;
      }
      for (std::size_t t = 0; t < lbl.subset.size(); ++t) {
        int elt = lbl.subset[t];
        std::vector<int> rest;
        for (int v : lbl.subset)
          if (v != elt) rest.push_back(v);
        const bool positive = (t % 2 == 0);
        if (lbl.nu1 > 0) {
          std::size_t tgt = detail::basis_index(map.target, rest, lbl.nu1 - 1);
          Polynomial<K> term = x_var(elt);
          map.entries[tgt][s] += positive ? term : -term;
        }
        if (lbl.nu2 > 0) {
          std::size_t tgt = detail::basis_index(map.target, rest, lbl.nu1);
          const Polynomial<K>& term =
              cx.params[static_cast<std::size_t>(elt - 1)];
          map.entries[tgt][s] += positive ? term : -term;
        }
      }
    }
    cx.maps.push_back(std::move(map));
  }

  // transpose of the last differential in dual bases: under the duality the
  // dual of an X-degree-w generator sits in degree r - w, which puts the
  // presentation generators at the descending degrees r - 1, ..., 1.
  {
    const GradedMap<K>& last = cx.maps.back();
    GradedMap<K> t;
    t.source.degrees.reserve(last.target.rank());
    for (std::size_t q = 0; q < last.target.rank(); ++q) {
      t.source.degrees.push_back(ri - last.target.degrees[q]);
      BasisLabel dual = last.target.labels[q];
      t.source.labels.push_back(dual);
    }
    t.target.degrees.reserve(last.source.rank());
    for (std::size_t i = 0; i < last.source.rank(); ++i) {
      t.target.degrees.push_back(ri - last.source.degrees[i]);
      t.target.labels.push_back(last.source.labels[i]);
    }
    t.entries.assign(t.target.rank(),
                     std::vector<Polynomial<K>>(t.source.rank(),
                                                Polynomial<K>::zero(cx.ring_s)));
    for (std::size_t i = 0; i < t.target.rank(); ++i)
      for (std::size_t q = 0; q < t.source.rank(); ++q)
        t.entries[i][q] = last.entries[q][i];
    cx.tM = std::move(t);
  }

  return cx;
}

// Direct band construction of the transposed last differential for r >= 3:
// row i carries the parameter band at column block k = i and the X band at
// block k = i - 1, with alternating signs inside each block.  Kept separate
// from the generic construction so the two can be played against each other.
template <class K>
GradedMap<K> last_differential(const std::vector<Polynomial<K>>& a) {
  const std::size_t r = a.size();
  if (r < 3)
    throw HypothesisError(
        "band form of the last differential needs r >= 3");
  RingPtr<K> ring_s = extend_ring_with_duals(a.front().ring(), r);
  const std::size_t base_dim = a.front().ring()->dimension();
  std::vector<Polynomial<K>> pa;
  for (const auto& f : a) pa.push_back(embed_into(ring_s, f));

  const int ri = static_cast<int>(r);
  GradedMap<K> band;
  for (int i = 0; i <= ri - 2; ++i) {
    band.target.degrees.push_back(ri - 1 - i);
    band.target.labels.push_back(
        BasisLabel{std::vector<int>{}, i, ri - 2 - i});
  }
  for (int k = 0; k <= ri - 3; ++k) {
    for (int j = 1; j <= ri; ++j) {
      band.source.degrees.push_back(ri - 1 - k);
      std::vector<int> rest;
      for (int v = 1; v <= ri; ++v)
        if (v != j) rest.push_back(v);
      band.source.labels.push_back(BasisLabel{rest, k, ri - 3 - k});
    }
  }
  band.entries.assign(band.target.rank(),
                      std::vector<Polynomial<K>>(
                          band.source.rank(), Polynomial<K>::zero(ring_s)));
  for (int i = 0; i <= ri - 2; ++i) {
    for (int k = 0; k <= ri - 3; ++k) {
      for (int j = 1; j <= ri; ++j) {
        std::size_t col = static_cast<std::size_t>(k * ri + (j - 1));
        const bool positive = (j % 2 == 1);
        if (k == i) {
          const Polynomial<K>& e = pa[static_cast<std::size_t>(j - 1)];
          band.entries[static_cast<std::size_t>(i)][col] =
              positive ? e : -e;
        } else if (k == i - 1) {
          Polynomial<K> e = Polynomial<K>::variable(
              ring_s, base_dim + static_cast<std::size_t>(j) - 1);
          band.entries[static_cast<std::size_t>(i)][col] =
              positive ? e : -e;
        }
      }
    }
  }
  return band;
}

// Minimal presentation data of the canonical module: generator degrees
// r-1, r-2, ..., 1 and the band relation matrix.  The type is the generator
// count once minimality holds (no unit entries in the relation matrix).
template <class K>
struct CanonicalPresentation {
  std::vector<int> generator_degrees;
  GradedMap<K> relations;
  std::size_t type{0};
};

template <class K>
CanonicalPresentation<K> canonical_presentation(
    const std::vector<Polynomial<K>>& a) {
  if (a.size() < 3)
    throw HypothesisError("canonical presentation needs r >= 3");
  ENComplex<K> cx = build_en_complex(a);
  CanonicalPresentation<K> pres;
  pres.relations = cx.tM;
  pres.generator_degrees = cx.tM.target.degrees;
  for (const auto& row : pres.relations.entries)
    for (const auto& e : row)
      if (!e.is_zero() && !is_zero(e.constant_term()))
        throw HypothesisError(
            "presentation not minimal: relation entry with a unit term");
  pres.type = pres.generator_degrees.size();
  return pres;
}

struct CheckItem {
  std::string name;
  bool pass{false};
  std::string detail;
};

struct ComplexReport {
  std::vector<CheckItem> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace detail {

template <class K>
bool map_is_homogeneous(const GradedMap<K>& map, std::size_t lo,
                        std::size_t hi) {
  for (std::size_t t = 0; t < map.target.rank(); ++t)
    for (std::size_t s = 0; s < map.source.rank(); ++s) {
      const auto& e = map.entries[t][s];
      if (e.is_zero()) continue;
      if (!e.is_homogeneous_in(lo, hi)) return false;
      auto deg = e.degree_in(lo, hi);
      if (!deg ||
          static_cast<long long>(*deg) !=
              static_cast<long long>(map.source.degrees[s]) -
                  static_cast<long long>(map.target.degrees[t]))
        return false;
    }
  return true;
}

}  // namespace detail

// Structural validation: compositions vanish, every differential is
// homogeneous for the X-grading, the bottom map lists the 2x2 determinants
// of the parameter matrix, ranks match binom(r, n+1) * n, and for r >= 3 the
// generic transpose agrees with the band construction.
template <class K>
ComplexReport verify_complex(const ENComplex<K>& cx,
                             const std::vector<Polynomial<K>>& original_a) {
  ComplexReport report;
  const std::size_t lo = cx.base_dim, hi = cx.ring_s->dimension();

  {
    bool ok = true;
    std::string detail;
    for (std::size_t n = 0; n + 1 < cx.maps.size(); ++n) {
      const auto& f = cx.maps[n];      // C_{n+1} -> C_n
      const auto& g = cx.maps[n + 1];  // C_{n+2} -> C_{n+1}
      for (std::size_t t = 0; t < f.target.rank() && ok; ++t)
        for (std::size_t s = 0; s < g.source.rank() && ok; ++s) {
          Polynomial<K> acc = Polynomial<K>::zero(cx.ring_s);
          for (std::size_t m = 0; m < f.source.rank(); ++m) {
            if (f.entries[t][m].is_zero() || g.entries[m][s].is_zero())
              continue;
            acc += f.entries[t][m] * g.entries[m][s];
          }
          if (!acc.is_zero()) {
            ok = false;
            detail = "d" + std::to_string(n + 1) + " o d" +
                     std::to_string(n + 2) + " != 0";
          }
        }
    }
    report.checks.push_back({"composition-zero", ok, detail});
  }

  {
    bool ok = true;
    for (const auto& map : cx.maps)
      ok = ok && detail::map_is_homogeneous(map, lo, hi);
    ok = ok && detail::map_is_homogeneous(cx.tM, lo, hi);
    report.checks.push_back({"x-homogeneous", ok, ""});
  }

  {
    bool ok = cx.maps.front().target.rank() == 1;
    std::string detail;
    const auto& d1 = cx.maps.front();
    for (std::size_t s = 0; s < d1.source.rank() && ok; ++s) {
      const auto& lbl = d1.source.labels[s];
      int i1 = lbl.subset[0], i2 = lbl.subset[1];
      Polynomial<K> minor =
          Polynomial<K>::variable(cx.ring_s, cx.base_dim +
                                                 static_cast<std::size_t>(i1) -
                                                 1) *
              cx.params[static_cast<std::size_t>(i2 - 1)] -
          Polynomial<K>::variable(cx.ring_s, cx.base_dim +
                                                 static_cast<std::size_t>(i2) -
                                                 1) *
              cx.params[static_cast<std::size_t>(i1 - 1)];
      const auto& entry = d1.entries[0][s];
      if (entry != minor && entry != -minor) {
        ok = false;
        detail = "column " + std::to_string(s) + " is not the 2x2 minor";
      }
    }
    report.checks.push_back({"first-map-minors", ok, detail});
  }

  {
    bool ok = cx.modules.front().rank() == 1;
    auto binom = [](std::size_t n, std::size_t k) {
      if (k > n) return std::size_t{0};
      std::size_t acc = 1;
      for (std::size_t t = 1; t <= k; ++t) acc = acc * (n - k + t) / t;
      return acc;
    };
    for (std::size_t n = 1; n < cx.modules.size(); ++n)
      ok = ok && cx.modules[n].rank() == binom(cx.r, n + 1) * n;
    report.checks.push_back({"rank-formula", ok, ""});
  }

  if (cx.r >= 3) {
    GradedMap<K> band = last_differential(original_a);
    bool ok = band.entries.size() == cx.tM.entries.size();
    for (std::size_t i = 0; ok && i < band.entries.size(); ++i) {
      ok = band.entries[i].size() == cx.tM.entries[i].size();
      for (std::size_t q = 0; ok && q < band.entries[i].size(); ++q)
        ok = band.entries[i][q] == cx.tM.entries[i][q];
    }
    ok = ok && band.target.degrees == cx.tM.target.degrees &&
         band.source.degrees == cx.tM.source.degrees;
    report.checks.push_back({"band-agreement", ok, ""});
  }

  return report;
}

}  // namespace reesag
