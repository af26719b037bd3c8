#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "reesag/errors.hpp"
#include "reesag/field.hpp"

namespace reesag {

// Parsed instance file.  Field paths in error messages follow the JSON
// pointer style used below ("$.vars[1]").
struct InstanceSpec {
  bool rational{true};
  std::uint64_t p{0};
  std::vector<std::string> vars;
  std::vector<std::string> gens;
  std::optional<std::size_t> split_i;
  std::vector<std::string> gens_b;  // optional second ideal (colon command)
  bool has_gens_b{false};
};

inline InstanceSpec parse_instance(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("$: instance must be a JSON object");
  static const std::vector<std::string> known = {"field", "vars", "gens",
                                                 "split_i", "gens_b"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const auto& k : known) ok = ok || it.key() == k;
    if (!ok) throw InputError("$." + it.key() + ": unknown field");
  }

  InstanceSpec spec;

  if (!j.contains("field")) throw InputError("$.field: missing");
  const auto& f = j.at("field");
  if (f.is_string()) {
    if (f.get<std::string>() != "Q")
      throw InputError("$.field: expected \"Q\" or {\"Fp\": prime}, got \"" +
                       f.get<std::string>() + "\"");
    spec.rational = true;
  } else if (f.is_object()) {
    if (f.size() != 1 || !f.contains("Fp"))
      throw InputError("$.field: expected \"Q\" or {\"Fp\": prime}");
    const auto& p = f.at("Fp");
    if (!p.is_number_unsigned())
      throw InputError("$.field.Fp: expected a positive integer");
    spec.rational = false;
    spec.p = p.get<std::uint64_t>();
    if (spec.p < 2 || spec.p >= (1ull << 31) || !is_prime_u64(spec.p))
      throw InputError("$.field.Fp: " + std::to_string(spec.p) +
                       " is not a prime below 2^31");
  } else {
    throw InputError("$.field: expected \"Q\" or {\"Fp\": prime}");
  }

  if (!j.contains("vars")) throw InputError("$.vars: missing");
  const auto& vars = j.at("vars");
  if (!vars.is_array() || vars.empty())
    throw InputError("$.vars: expected a nonempty array of variable names");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!vars[i].is_string())
      throw InputError("$.vars[" + std::to_string(i) + "]: expected a string");
    spec.vars.push_back(vars[i].get<std::string>());
  }

  if (!j.contains("gens")) throw InputError("$.gens: missing");
  const auto& gens = j.at("gens");
  if (!gens.is_array())
    throw InputError("$.gens: expected an array of generator expressions");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].is_string())
      throw InputError("$.gens[" + std::to_string(i) + "]: expected a string");
    spec.gens.push_back(gens[i].get<std::string>());
  }

  if (j.contains("split_i")) {
    const auto& s = j.at("split_i");
    if (!s.is_number_unsigned())
      throw InputError("$.split_i: expected a nonnegative integer");
    spec.split_i = s.get<std::size_t>();
  }

  if (j.contains("gens_b")) {
    const auto& gb = j.at("gens_b");
    if (!gb.is_array())
      throw InputError("$.gens_b: expected an array of generator expressions");
    spec.has_gens_b = true;
    for (std::size_t i = 0; i < gb.size(); ++i) {
      if (!gb[i].is_string())
        throw InputError("$.gens_b[" + std::to_string(i) +
                         "]: expected a string");
      spec.gens_b.push_back(gb[i].get<std::string>());
    }
  }

  return spec;
}

inline InstanceSpec load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("invalid JSON in '" + path + "': " + e.what());
  }
  return parse_instance(j);
}

}  // namespace reesag
