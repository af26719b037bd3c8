#pragma once

#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "reesag/artinian.hpp"
#include "reesag/parameter.hpp"

namespace reesag {

// One identity check: inputs echoed, the expected value with the closed-form
// it came from, the engine-computed value, and the outcome.  A violated
// hypothesis marks the check skipped, never failed.
struct CheckReport {
  std::string check;
  std::string inputs;
  std::string expected;
  std::string provenance;
  std::string computed;
  bool pass{false};
  bool skipped{false};
  std::string note;
};

struct SuiteSummary {
  std::vector<CheckReport> reports;
  std::size_t passed{0};
  std::size_t failed{0};
  std::size_t skipped{0};

  void account(const CheckReport& r) {
    if (r.skipped)
      ++skipped;
    else if (r.pass)
      ++passed;
    else
      ++failed;
  }
};

// An ideal to sweep, with an optional split index for the identities that
// need the split presentation.
template <class K>
struct OracleInstance {
  std::string label;
  LocalIdeal<K> ideal;
  std::optional<std::size_t> split_i;
};

inline const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {
      "mu-m-times-q",  // mu(mQ) = d * mu(m) for Q <= m^2
      "mu-mq-mod-i2",  // mu(mQ / I^2) = d * (d - i) for i <= d - 2
      "socle-duality",    // Q : (Q : m) = m
      "length-step",      // len R/Q = len R/I + 1
      "reduction",        // I^2 = QI for i <= d - 2
      "mu-socle",         // mu(I) = d + 1 for Q <= m^2
  };
  return names;
}

namespace detail {

template <class K>
std::string ideal_inputs(const LocalIdeal<K>& q) {
  std::ostringstream os;
  os << q.ring()->field_name() << "[[";
  const auto& vars = q.ring()->variables();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) os << ",";
    os << vars[i];
  }
  os << "]], Q = (";
  const auto gens = q.generator_strings();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) os << ", ";
    os << gens[i];
  }
  os << ")";
  return os.str();
}

inline CheckReport skip(std::string check, std::string inputs,
                        std::string why) {
  CheckReport r;
  r.check = std::move(check);
  r.inputs = std::move(inputs);
  r.skipped = true;
  r.pass = true;
  r.note = std::move(why);
  return r;
}

inline CheckReport settle(CheckReport r, std::string expected,
                          std::string provenance, std::string computed) {
  r.expected = std::move(expected);
  r.provenance = std::move(provenance);
  r.computed = std::move(computed);
  r.pass = (r.expected == r.computed);
  return r;
}

template <class K>
CheckReport verify_identity_impl(const std::string& name,
                                 const OracleInstance<K>& inst,
                                 const std::string& inputs, int nmax);

}  // namespace detail

// Runs one named identity against one instance.  All identities need a full
// verified parameter ideal; individual ones add their own hypotheses and
// skip when those fail (a HypothesisError anywhere downgrades to a skip,
// never a failure).  The expected side comes from the closed form, the
// computed side from the quotient engine; the two never share a code path
// beyond the engine primitives themselves.
template <class K>
CheckReport verify_identity(const std::string& name,
                            const OracleInstance<K>& inst,
                            int nmax = kDefaultNmax) {
  const LocalIdeal<K>& q = inst.ideal;
  std::string inputs = detail::ideal_inputs(q);
  if (!inst.label.empty()) inputs = inst.label + ": " + inputs;
  try {
    return detail::verify_identity_impl(name, inst, inputs, nmax);
  } catch (const HypothesisError& e) {
    return detail::skip(name, inputs, e.what());
  }
}

namespace detail {

template <class K>
CheckReport verify_identity_impl(const std::string& name,
                                 const OracleInstance<K>& inst,
                                 const std::string& inputs, int nmax) {
  const LocalIdeal<K>& q = inst.ideal;
  const std::size_t d = q.dimension();

  CheckReport base;
  base.check = name;
  base.inputs = inputs;

  ParameterIdealData<K> pd = classify_parameter_ideal(q, nmax);
  if (!pd.full)
    return detail::skip(name, inputs, "needs a full parameter ideal (r = d)");

  ArtinianQuotient<K> quo = stabilized_quotient(q, nmax);
  const bool q_is_m = (quo.length() == 1);
  const bool q_in_m2 = (pd.i == 0);

  if (name == "mu-m-times-q") {
    if (!q_in_m2)
      return detail::skip(name, inputs, "needs Q <= m^2");
    LocalIdeal<K> m = maximal_ideal(q.ring());
    std::size_t lhs = ideal_mu(ideal_product(m, q), nmax);
    std::size_t rhs = d * ideal_mu(m, nmax);
    return detail::settle(base, std::to_string(rhs),
                          "closed form mu(mQ) = d * mu(m)",
                          std::to_string(lhs));
  }

  if (name == "mu-mq-mod-i2") {
    if (pd.i + 2 > d)
      return detail::skip(name, inputs,
                          "valid for linear_rank(Q) <= d - 2; computed rank "
                          "is " + std::to_string(pd.i));
    if (inst.split_i && *inst.split_i != pd.i)
      return detail::skip(name, inputs,
                          "declared split index " +
                              std::to_string(*inst.split_i) +
                              " disagrees with the computed linear rank " +
                              std::to_string(pd.i));
    LocalIdeal<K> m = maximal_ideal(q.ring());
    LocalIdeal<K> socle = socle_ideal(q, nmax);
    std::size_t lhs =
        mu_subquotient(ideal_product(m, q), ideal_square(socle), nmax);
    std::size_t rhs = d * (d - pd.i);
    return detail::settle(base, std::to_string(rhs),
                          "closed form mu(mQ / I^2) = d * (d - i)",
                          std::to_string(lhs));
  }

  if (name == "socle-duality") {
    if (q_is_m)
      return detail::skip(name, inputs, "needs Q strictly below m");
    LocalIdeal<K> socle = socle_ideal(q, nmax);
    bool equal = ideal_equal(colon(q, socle, nmax), maximal_ideal(q.ring()),
                             nmax);
    return detail::settle(base, "true", "duality Q : (Q : m) = m",
                          equal ? "true" : "false");
  }

  if (name == "length-step") {
    if (q_is_m)
      return detail::skip(name, inputs, "needs Q strictly below m");
    LocalIdeal<K> socle = socle_ideal(q, nmax);
    std::size_t len_q = quo.length();
    std::size_t len_i = local_length(socle, nmax);
    return detail::settle(base, std::to_string(len_i + 1),
                          "one-dimensional socle: len R/Q = len R/I + 1",
                          std::to_string(len_q));
  }

  if (name == "reduction") {
    if (q_is_m)
      return detail::skip(name, inputs, "needs Q strictly below m");
    if (pd.i + 2 > d)
      return detail::skip(name, inputs,
                          "the reduction equality is guaranteed only for "
                          "linear_rank(Q) <= d - 2; computed rank is " +
                              std::to_string(pd.i));
    LocalIdeal<K> socle = socle_ideal(q, nmax);
    bool equal = reduction_check(socle, q, nmax);
    return detail::settle(base, "true", "reduction equality I^2 = QI",
                          equal ? "true" : "false");
  }

  if (name == "mu-socle") {
    if (!q_in_m2)
      return detail::skip(name, inputs, "needs Q <= m^2");
    LocalIdeal<K> socle = socle_ideal(q, nmax);
    std::size_t lhs = ideal_mu(socle, nmax);
    return detail::settle(base, std::to_string(d + 1),
                          "closed form mu(I) = d + 1 for Q <= m^2",
                          std::to_string(lhs));
  }

  throw InputError("unknown identity '" + name + "'");
}

}  // namespace detail

template <class K>
std::vector<CheckReport> run_identities(const OracleInstance<K>& inst,
                                        int nmax = kDefaultNmax) {
  std::vector<CheckReport> out;
  for (const auto& name : identity_names())
    out.push_back(verify_identity(name, inst, nmax));
  return out;
}

// Fans out per instance, collects in instance order so output is
// deterministic.  A broken instance (for example not m-primary) becomes a
// failed instance-error report instead of aborting the sweep.
template <class K>
SuiteSummary run_suite(const std::vector<OracleInstance<K>>& instances,
                       int nmax = kDefaultNmax) {
  std::vector<std::future<std::vector<CheckReport>>> futures;
  futures.reserve(instances.size());
  for (const auto& inst : instances) {
    futures.push_back(std::async(std::launch::async, [&inst, nmax]() {
      return run_identities(inst, nmax);
    }));
  }
  SuiteSummary summary;
  for (std::size_t k = 0; k < futures.size(); ++k) {
    try {
      for (auto& r : futures[k].get()) {
        summary.account(r);
        summary.reports.push_back(std::move(r));
      }
    } catch (const std::exception& e) {
      CheckReport r;
      r.check = "instance-error";
      r.inputs = instances[k].label;
      r.computed = e.what();
      r.pass = false;
      summary.account(r);
      summary.reports.push_back(std::move(r));
    }
  }
  return summary;
}

}  // namespace reesag
