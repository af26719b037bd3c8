#pragma once

#include <string>
#include <vector>

#include "reesag/artinian.hpp"
#include "reesag/errors.hpp"
#include "reesag/parameter.hpp"

namespace reesag {

enum class AGStatus {
  Gorenstein,
  AlmostGorensteinProper,  // almost Gorenstein but not Gorenstein
  NotAlmostGorenstein,
  Unknown,
};

inline const char* to_string(AGStatus s) {
  switch (s) {
    case AGStatus::Gorenstein:
      return "Gorenstein";
    case AGStatus::AlmostGorensteinProper:
      return "AlmostGorensteinProper";
    case AGStatus::NotAlmostGorenstein:
      return "NotAlmostGorenstein";
    case AGStatus::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

enum class VerdictMode { Graded, Local };

inline const char* to_string(VerdictMode m) {
  return m == VerdictMode::Graded ? "graded" : "local";
}

struct Fact {
  std::string name;
  std::string value;
};

// Verdict with a reproducible certificate: the rule that fired plus the
// computed facts it fired on.  Facts are engine outputs (lengths, ranks,
// generator lists), never restatements of the input.
struct AGVerdict {
  AGStatus status{AGStatus::Unknown};
  VerdictMode mode{VerdictMode::Graded};
  std::string rule;
  std::vector<Fact> facts;
  std::vector<std::string> warnings;
};

namespace detail {

inline void push_fact(AGVerdict& v, std::string name, std::string value) {
  v.facts.push_back(Fact{std::move(name), std::move(value)});
}

template <class K>
void push_field_warning(AGVerdict& v, const RingPtr<K>& ring) {
  if constexpr (std::is_same_v<K, GFp>) {
    v.warnings.push_back(
        "coefficient field " + ring->field_name() +
        " is finite; the infinite-residue-field hypothesis behind the "
        "criteria is not satisfied, results are computed anyway");
  }
}

}  // namespace detail

// Rees algebra of a (sub)system of parameters, graded criterion.  r = 2 is
// the hypersurface case (Gorenstein).  For r >= 3 the algebra is almost
// Gorenstein as a graded ring exactly when all r generators are part of a
// regular system of parameters, detected as linear_rank = r; the type is
// always r - 1.
template <class K>
AGVerdict decide_parameter_graded(const ParameterIdealData<K>& pd,
                                  int nmax = kDefaultNmax) {
  AGVerdict v;
  v.mode = VerdictMode::Graded;
  v.warnings = pd.warnings;
  detail::push_field_warning(v, pd.ideal.ring());
  const std::size_t r = pd.r;
  if (r < 2)
    throw HypothesisError(
        "Rees algebra verdicts need at least two parameters (r >= 2)");
  detail::push_fact(v, "r", std::to_string(r));
  if (r == 2) {
    v.status = AGStatus::Gorenstein;
    v.rule = "parameter-graded/hypersurface-r2";
    detail::push_fact(v, "type", "1");
    return v;
  }
  const std::size_t rank = pd.i;
  detail::push_fact(v, "type", std::to_string(r - 1));
  detail::push_fact(v, "linear_rank", std::to_string(rank));
  v.rule = "parameter-graded/regular-sop-rank";
  v.status = (rank == r) ? AGStatus::AlmostGorensteinProper
                         : AGStatus::NotAlmostGorenstein;
  (void)nmax;
  return v;
}

// Local criterion over this ring model: the base is regular, so the Rees
// algebra is almost Gorenstein locally for every subsystem of parameters;
// r = 2 stays Gorenstein.
template <class K>
AGVerdict decide_parameter_local(const ParameterIdealData<K>& pd,
                                 int nmax = kDefaultNmax) {
  AGVerdict v;
  v.mode = VerdictMode::Local;
  v.warnings = pd.warnings;
  detail::push_field_warning(v, pd.ideal.ring());
  const std::size_t r = pd.r;
  if (r < 2)
    throw HypothesisError(
        "Rees algebra verdicts need at least two parameters (r >= 2)");
  detail::push_fact(v, "r", std::to_string(r));
  if (r == 2) {
    v.status = AGStatus::Gorenstein;
    v.rule = "parameter-local/hypersurface-r2";
    detail::push_fact(v, "type", "1");
    return v;
  }
  v.status = AGStatus::AlmostGorensteinProper;
  v.rule = "parameter-local/regular-base";
  detail::push_fact(v, "type", std::to_string(r - 1));
  (void)nmax;
  return v;
}

namespace detail {

template <class K>
struct SocleAnalysis {
  LocalIdeal<K> socle;          // I = Q : m
  LocalIdeal<K> j_ideal;        // J = Q : I
  std::size_t len_q{0};
  std::size_t len_i{0};
  bool reduction_holds{false};  // I^2 = QI, computed, never assumed
  std::size_t type{0};          // (d - 2) + mu(J/I)
  std::size_t mu_j_over_i{0};
  bool i_equals_m{false};
  bool i_equals_j{false};
  bool m2_in_i{false};
  std::size_t linear_rank_i{0};
};

// Shared legwork for the socle-side deciders: computes I and J = Q : I and
// assembles the type from (d - 2) + mu(J/I).  The reduction equality
// I^2 = QI is computed and reported rather than assumed; it is guaranteed
// whenever linear_rank(Q) <= d - 2, but fails for shallower parameter
// ideals (e.g. Q = (x, y, z^2), where I = m), and the type formula is then
// a formal value that the verdicts flag with a warning.
template <class K>
SocleAnalysis<K> analyze_socle(const ParameterIdealData<K>& pd, int nmax) {
  if (!pd.full)
    throw HypothesisError(
        "socle verdicts need a full parameter ideal (r = d)");
  const auto& q = pd.ideal;
  const std::size_t d = q.dimension();
  ArtinianQuotient<K> quo = stabilized_quotient(q, nmax);
  if (quo.length() == 1)
    throw HypothesisError(
        "Q = m is not admissible for the socle construction (its socle "
        "ideal is the unit ideal)");

  SocleAnalysis<K> out{LocalIdeal<K>(q.ring()), LocalIdeal<K>(q.ring())};
  out.len_q = quo.length();
  out.socle = socle_ideal(q, nmax);
  out.len_i = local_length(out.socle, nmax);
  out.reduction_holds = reduction_check(out.socle, q, nmax);

  out.j_ideal = colon(q, out.socle, nmax);
  out.mu_j_over_i = mu_subquotient(out.j_ideal, out.socle, nmax);
  out.type = (d - 2) + out.mu_j_over_i;

  out.i_equals_m = ideal_equal(out.socle, maximal_ideal(q.ring()), nmax);
  out.i_equals_j = ideal_equal(out.socle, out.j_ideal, nmax);
  LocalIdeal<K> m2 = ideal_square(maximal_ideal(q.ring()));
  out.m2_in_i = ideal_contains_ideal(out.socle, m2, nmax);
  out.linear_rank_i = linear_rank(out.socle, nmax);
  return out;
}

template <class K>
void push_socle_facts(AGVerdict& v, const SocleAnalysis<K>& sa,
                      std::size_t d) {
  push_fact(v, "d", std::to_string(d));
  push_fact(v, "len(R/Q)", std::to_string(sa.len_q));
  push_fact(v, "len(R/I)", std::to_string(sa.len_i));
  std::string gens;
  for (const auto& s : sa.socle.generator_strings()) {
    if (!gens.empty()) gens += ", ";
    gens += s;
  }
  push_fact(v, "I = Q : m", "(" + gens + ")");
  push_fact(v, "I^2 = QI", sa.reduction_holds ? "true" : "false");
  push_fact(v, "mu(J/I)", std::to_string(sa.mu_j_over_i));
  push_fact(v, "type", std::to_string(sa.type));
  push_fact(v, "I = m", sa.i_equals_m ? "true" : "false");
  push_fact(v, "I = J", sa.i_equals_j ? "true" : "false");
  push_fact(v, "m^2 <= I", sa.m2_in_i ? "true" : "false");
  push_fact(v, "linear_rank(I)", std::to_string(sa.linear_rank_i));
  if (!sa.reduction_holds)
    v.warnings.push_back(
        "the reduction equality I^2 = QI fails for this input; the type "
        "fact is the formula value (d - 2) + mu(J/I), whose standing "
        "hypothesis is that equality");
}

}  // namespace detail

// Rees algebra of the socle ideal I = Q : m, graded criterion.  For d >= 3
// the algebra is almost Gorenstein exactly when I = m, or d = 3 and I is a
// single linear form plus m^2 (checked coordinate-free as m^2 <= I with one
// independent linear lead).  Gorenstein exactly at type 1.  d = 2 is outside
// the implemented criteria and returns Unknown.
template <class K>
AGVerdict decide_socle_graded(const ParameterIdealData<K>& pd,
                              int nmax = kDefaultNmax) {
  AGVerdict v;
  v.mode = VerdictMode::Graded;
  v.warnings = pd.warnings;
  detail::push_field_warning(v, pd.ideal.ring());
  const std::size_t d = pd.ideal.dimension();
  if (d < 3) {
    v.status = AGStatus::Unknown;
    v.rule = "socle-graded/low-dimension-unclassified";
    detail::push_fact(v, "d", std::to_string(d));
    v.warnings.push_back(
        "no implemented criterion covers the socle case in dimension " +
        std::to_string(d));
    return v;
  }
  detail::SocleAnalysis<K> sa = detail::analyze_socle(pd, nmax);
  detail::push_socle_facts(v, sa, d);
  const bool linear_shape = sa.m2_in_i && sa.linear_rank_i == 1;
  const bool almost = sa.i_equals_m || (d == 3 && linear_shape);
  v.rule = "socle-graded/shape-criterion";
  if (!almost) {
    v.status = AGStatus::NotAlmostGorenstein;
    return v;
  }
  v.status = (sa.type == 1) ? AGStatus::Gorenstein
                            : AGStatus::AlmostGorensteinProper;
  return v;
}

// Local socle criterion: Q <= m^2 (no linear leads at all) rules almost
// Gorenstein out; a graded Gorenstein / almost Gorenstein verdict promotes
// to the local ring; anything else stays Unknown (a graded failure does not
// decide the local question).
template <class K>
AGVerdict decide_socle_local(const ParameterIdealData<K>& pd,
                             int nmax = kDefaultNmax) {
  AGVerdict v;
  v.mode = VerdictMode::Local;
  v.warnings = pd.warnings;
  detail::push_field_warning(v, pd.ideal.ring());
  const std::size_t d = pd.ideal.dimension();
  if (d < 3) {
    v.status = AGStatus::Unknown;
    v.rule = "socle-local/low-dimension-unclassified";
    detail::push_fact(v, "d", std::to_string(d));
    v.warnings.push_back(
        "no implemented criterion covers the socle case in dimension " +
        std::to_string(d));
    return v;
  }
  if (!pd.full)
    throw HypothesisError(
        "socle verdicts need a full parameter ideal (r = d)");
  const std::size_t rank_q = linear_rank(pd.ideal, nmax);
  detail::push_fact(v, "linear_rank(Q)", std::to_string(rank_q));
  if (rank_q == 0) {
    // Q <= m^2 forces the socle Rees algebra away from almost Gorenstein
    detail::SocleAnalysis<K> sa = detail::analyze_socle(pd, nmax);
    detail::push_socle_facts(v, sa, d);
    v.status = AGStatus::NotAlmostGorenstein;
    v.rule = "socle-local/q-inside-m-squared";
    return v;
  }
  AGVerdict graded = decide_socle_graded(pd, nmax);
  v.facts = graded.facts;
  detail::push_fact(v, "linear_rank(Q)", std::to_string(rank_q));
  detail::push_fact(v, "graded_status", to_string(graded.status));
  if (graded.status == AGStatus::Gorenstein ||
      graded.status == AGStatus::AlmostGorensteinProper) {
    v.status = graded.status;
    v.rule = "socle-local/promoted-from-graded";
    return v;
  }
  v.status = AGStatus::Unknown;
  v.rule = "socle-local/unclassified";
  v.warnings.push_back(
      "graded criterion fails but no local criterion applies; the local "
      "question stays open for this input");
  return v;
}

// Cohen-Macaulay type of the socle Rees algebra, (d - 2) + mu(J/I) with
// J = Q : I, valid under the reduction hypothesis I^2 = QI.
template <class K>
std::size_t socle_rees_type(const ParameterIdealData<K>& pd,
                            int nmax = kDefaultNmax) {
  if (pd.ideal.dimension() < 2)
    throw HypothesisError("socle type needs ring dimension >= 2");
  detail::SocleAnalysis<K> sa = detail::analyze_socle(pd, nmax);
  return sa.type;
}

// Cohen-Macaulay type of the parameter Rees algebra: 1 in the hypersurface
// case, otherwise r - 1 read off the canonical presentation shape.
template <class K>
std::size_t parameter_rees_type(const ParameterIdealData<K>& pd) {
  if (pd.r < 2)
    throw HypothesisError(
        "Rees algebra verdicts need at least two parameters (r >= 2)");
  return pd.r == 2 ? 1 : pd.r - 1;
}

}  // namespace reesag
