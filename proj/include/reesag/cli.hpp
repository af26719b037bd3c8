#pragma once

#include <algorithm>
#include <cctype>
#include <future>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "reesag/artinian.hpp"
#include "reesag/decider.hpp"
#include "reesag/eagon_northcott.hpp"
#include "reesag/errors.hpp"
#include "reesag/instance.hpp"
#include "reesag/oracle.hpp"
#include "reesag/parameter.hpp"
#include "reesag/parse.hpp"

namespace reesag {

struct CommandResult {
  int exit_code{0};
  std::string out;
  std::string err;
};

namespace cli_detail {

using nlohmann::json;

struct Options {
  std::string command;
  std::string input;
  std::string format{"text"};
  int nmax{kDefaultNmax};
  std::string mode{"graded"};
  std::string kind;
  int r{-1};
  std::string family;
  std::string n_range;
};

template <class K>
RingPtr<K> ring_from_spec(const InstanceSpec& spec) {
  if constexpr (std::is_same_v<K, Rational>) {
    return make_rational_ring(spec.vars);
  } else {
    return make_prime_ring(spec.vars, spec.p);
  }
}

template <class K>
std::vector<Polynomial<K>> parse_generators(
    const std::vector<std::string>& texts, const RingPtr<K>& ring,
    const std::string& field_path) {
  std::vector<Polynomial<K>> gens;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    try {
      gens.push_back(parse_polynomial(texts[i], ring));
    } catch (const ParseError& e) {
      throw InputError(field_path + "[" + std::to_string(i) +
                       "]: " + e.what());
    }
  }
  return gens;
}

inline json verdict_to_json(const AGVerdict& v) {
  json facts = json::array();
  for (const auto& f : v.facts) facts.push_back({{"name", f.name},
                                                 {"value", f.value}});
  return json{{"status", to_string(v.status)},
              {"mode", to_string(v.mode)},
              {"rule", v.rule},
              {"facts", facts},
              {"warnings", v.warnings}};
}

inline json report_to_json(const CheckReport& r) {
  return json{{"check", r.check},     {"inputs", r.inputs},
              {"expected", r.expected}, {"provenance", r.provenance},
              {"computed", r.computed}, {"pass", r.pass},
              {"skipped", r.skipped},   {"note", r.note}};
}

template <class K>
json map_to_json(const GradedMap<K>& map, const std::string& name) {
  json entries = json::array();
  for (const auto& row : map.entries) {
    json jrow = json::array();
    for (const auto& e : row) jrow.push_back(e.str());
    entries.push_back(std::move(jrow));
  }
  json src_labels = json::array(), tgt_labels = json::array();
  for (const auto& l : map.source.labels) src_labels.push_back(l.text());
  for (const auto& l : map.target.labels) tgt_labels.push_back(l.text());
  return json{{"name", name},
              {"rows", map.target.rank()},
              {"cols", map.source.rank()},
              {"source_degrees", map.source.degrees},
              {"target_degrees", map.target.degrees},
              {"source_basis", src_labels},
              {"target_basis", tgt_labels},
              {"entries", entries}};
}

// ---- command handlers -----------------------------------------------------

template <class K>
json cmd_socle(const InstanceSpec& spec, const Options& opt) {
  RingPtr<K> ring = ring_from_spec<K>(spec);
  LocalIdeal<K> q(ring, parse_generators(spec.gens, ring, "$.gens"));
  ArtinianQuotient<K> quo = stabilized_quotient(q, opt.nmax);
  LocalIdeal<K> socle = socle_ideal(q, opt.nmax);
  return json{{"command", "socle"},
              {"Q", q.generator_strings()},
              {"I", socle.generator_strings()},
              {"len_Q", quo.length()},
              {"len_I", local_length(socle, opt.nmax)}};
}

template <class K>
json cmd_length(const InstanceSpec& spec, const Options& opt) {
  RingPtr<K> ring = ring_from_spec<K>(spec);
  LocalIdeal<K> q(ring, parse_generators(spec.gens, ring, "$.gens"));
  ArtinianQuotient<K> quo = stabilized_quotient(q, opt.nmax);
  return json{{"command", "length"},
              {"length", quo.length()},
              {"level", quo.level()}};
}

template <class K>
json cmd_colon(const InstanceSpec& spec, const Options& opt) {
  RingPtr<K> ring = ring_from_spec<K>(spec);
  LocalIdeal<K> a(ring, parse_generators(spec.gens, ring, "$.gens"));
  LocalIdeal<K> b = spec.has_gens_b
                        ? LocalIdeal<K>(ring, parse_generators(spec.gens_b,
                                                               ring,
                                                               "$.gens_b"))
                        : maximal_ideal(ring);
  LocalIdeal<K> result = colon(a, b, opt.nmax);
  return json{{"command", "colon"},
              {"A", a.generator_strings()},
              {"B", b.generator_strings()},
              {"result", result.generator_strings()},
              {"contains_unit", result.contains_unit_generator()}};
}

template <class K>
json cmd_mu(const InstanceSpec& spec, const Options& opt) {
  RingPtr<K> ring = ring_from_spec<K>(spec);
  LocalIdeal<K> q(ring, parse_generators(spec.gens, ring, "$.gens"));
  return json{{"command", "mu"}, {"mu", ideal_mu(q, opt.nmax)}};
}

template <class K>
json cmd_type(const InstanceSpec& spec, const Options& opt) {
  if (opt.kind.empty())
    throw InputError("type needs --kind parameter|socle");
  RingPtr<K> ring = ring_from_spec<K>(spec);
  LocalIdeal<K> q(ring, parse_generators(spec.gens, ring, "$.gens"));
  ParameterIdealData<K> pd = classify_parameter_ideal(q, opt.nmax);
  json doc{{"command", "type"}, {"kind", opt.kind}};
  if (!pd.warnings.empty()) doc["warnings"] = pd.warnings;
  if (opt.kind == "parameter") {
    std::size_t type = 1;
    if (pd.r >= 3) {
      CanonicalPresentation<K> pres =
          canonical_presentation(q.generators());
      type = pres.type;
      doc["generator_degrees"] = pres.generator_degrees;
    }
    doc["r"] = pd.r;
    doc["type"] = type;
  } else {
    doc["type"] = socle_rees_type(pd, opt.nmax);
    doc["d"] = q.dimension();
  }
  return doc;
}

template <class K>
json cmd_en_complex(const InstanceSpec& spec, const Options& opt) {
  RingPtr<K> ring = ring_from_spec<K>(spec);
  std::vector<Polynomial<K>> a = parse_generators(spec.gens, ring, "$.gens");
  std::optional<std::size_t> expected;
  if (opt.r >= 0) expected = static_cast<std::size_t>(opt.r);
  ENComplex<K> cx = build_en_complex(a, expected);
  ComplexReport report = verify_complex(cx, a);
  json ranks = json::array();
  for (const auto& mod : cx.modules) ranks.push_back(mod.rank());
  json maps = json::array();
  for (std::size_t n = 0; n < cx.maps.size(); ++n)
    maps.push_back(map_to_json(cx.maps[n], "d" + std::to_string(n + 1)));
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass},
                      {"detail", c.detail}});
  json doc{{"command", "en-complex"},
           {"r", cx.r},
           {"ranks", ranks},
           {"maps", maps},
           {"tM", map_to_json(cx.tM, "tM")},
           {"checks", checks},
           {"all_checks_pass", report.all_pass()}};
  if (cx.r >= 3)
    doc["generator_degrees"] = cx.tM.target.degrees;
  return doc;
}

template <class K>
json cmd_decide(const InstanceSpec& spec, const Options& opt) {
  if (opt.kind.empty())
    throw InputError("decide needs --kind parameter|socle");
  RingPtr<K> ring = ring_from_spec<K>(spec);
  LocalIdeal<K> q(ring, parse_generators(spec.gens, ring, "$.gens"));
  ParameterIdealData<K> pd = classify_parameter_ideal(q, opt.nmax);
  AGVerdict v;
  if (opt.kind == "parameter") {
    v = (opt.mode == "local") ? decide_parameter_local(pd, opt.nmax)
                              : decide_parameter_graded(pd, opt.nmax);
  } else {
    v = (opt.mode == "local") ? decide_socle_local(pd, opt.nmax)
                              : decide_socle_graded(pd, opt.nmax);
  }
  json doc = verdict_to_json(v);
  doc["command"] = "decide";
  doc["kind"] = opt.kind;
  return doc;
}

template <class K>
json cmd_verify(const InstanceSpec& spec, const Options& opt) {
  RingPtr<K> ring = ring_from_spec<K>(spec);
  OracleInstance<K> inst{"", LocalIdeal<K>(ring, parse_generators(
                                               spec.gens, ring, "$.gens")),
                         spec.split_i};
  SuiteSummary summary = run_suite(std::vector<OracleInstance<K>>{inst},
                                   opt.nmax);
  json reports = json::array();
  for (const auto& r : summary.reports) reports.push_back(report_to_json(r));
  return json{{"command", "verify"},
              {"reports", reports},
              {"summary",
               {{"passed", summary.passed},
                {"failed", summary.failed},
                {"skipped", summary.skipped}}}};
}

// ---- scan: family sweep ---------------------------------------------------

inline std::vector<std::string> split_family(const std::string& family) {
  std::string s = family;
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos)
    throw InputError("--family: empty family expression");
  s = s.substr(first, last - first + 1);
  if (s.front() == '(' && s.back() == ')') {
    // strip only a matching outer pair
    int depth = 0;
    bool outer = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (depth == 0 && i + 1 < s.size()) {
        outer = false;
        break;
      }
    }
    if (outer) s = s.substr(1, s.size() - 2);
  }
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  for (auto& p : parts) {
    auto a = p.find_first_not_of(" \t");
    auto b = p.find_last_not_of(" \t");
    if (a == std::string::npos)
      throw InputError("--family: empty generator in family");
    p = p.substr(a, b - a + 1);
  }
  return parts;
}

// Identifier tokens in first-occurrence order, minus the sweep parameter n.
inline std::vector<std::string> family_variables(const std::string& family) {
  std::vector<std::string> vars;
  std::size_t i = 0;
  while (i < family.size()) {
    char c = family[i];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string tok;
      while (i < family.size() &&
             (std::isalnum(static_cast<unsigned char>(family[i])) ||
              family[i] == '_')) {
        tok += family[i];
        ++i;
      }
      if (tok != "n" &&
          std::find(vars.begin(), vars.end(), tok) == vars.end())
        vars.push_back(tok);
    } else {
      ++i;
    }
  }
  if (vars.empty())
    throw InputError("--family: no variables found in family expression");
  return vars;
}

inline std::string substitute_n(const std::string& text, long n) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string tok;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) ||
              text[i] == '_')) {
        tok += text[i];
        ++i;
      }
      out += (tok == "n") ? std::to_string(n) : tok;
    } else {
      out += c;
      ++i;
    }
  }
  return out;
}

inline std::pair<long, long> parse_n_range(const std::string& text) {
  auto pos = text.find("..");
  if (pos == std::string::npos)
    throw InputError("--n: expected LO..HI, got '" + text + "'");
  try {
    long lo = std::stol(text.substr(0, pos));
    long hi = std::stol(text.substr(pos + 2));
    if (lo > hi) throw InputError("--n: empty range '" + text + "'");
    if (lo < 1) throw InputError("--n: exponents must be positive");
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    throw InputError("--n: expected LO..HI, got '" + text + "'");
  } catch (const std::out_of_range&) {
    throw InputError("--n: range endpoint out of range in '" + text + "'");
  }
}

inline json cmd_scan(const Options& opt) {
  if (opt.family.empty()) throw InputError("scan needs --family");
  if (opt.n_range.empty()) throw InputError("scan needs --n LO..HI");
  auto [lo, hi] = parse_n_range(opt.n_range);
  std::vector<std::string> gen_templates = split_family(opt.family);
  std::vector<std::string> vars = family_variables(opt.family);
  const std::string kind = opt.kind.empty() ? "socle" : opt.kind;
  const std::string mode = opt.mode;
  const int nmax = opt.nmax;

  auto row_for = [&gen_templates, &vars, kind, mode, nmax](long n) -> json {
    RingPtr<Rational> ring = make_rational_ring(vars);
    std::vector<std::string> texts;
    for (const auto& t : gen_templates) texts.push_back(substitute_n(t, n));
    LocalIdeal<Rational> q(ring, parse_generators(texts, ring, "family"));
    ParameterIdealData<Rational> pd = classify_parameter_ideal(q, nmax);
    AGVerdict v;
    if (kind == "parameter") {
      v = (mode == "local") ? decide_parameter_local(pd, nmax)
                            : decide_parameter_graded(pd, nmax);
    } else {
      v = (mode == "local") ? decide_socle_local(pd, nmax)
                            : decide_socle_graded(pd, nmax);
    }
    json row{{"n", n},
             {"status", to_string(v.status)},
             {"rule", v.rule},
             {"gens", texts}};
    for (const auto& f : v.facts)
      if (f.name == "type") row["type"] = f.value;
    return row;
  };

  std::vector<std::future<json>> futures;
  for (long n = lo; n <= hi; ++n)
    futures.push_back(std::async(std::launch::async, row_for, n));
  json rows = json::array();
  for (auto& fut : futures) rows.push_back(fut.get());
  return json{{"command", "scan"},
              {"family", opt.family},
              {"kind", kind},
              {"mode", mode},
              {"rows", rows}};
}

// ---- text rendering ---------------------------------------------------------

inline std::string join_gens(const json& arr) {
  std::string s = "(";
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) s += ", ";
    s += arr[i].get<std::string>();
  }
  s += ")";
  return s;
}

inline std::string render_text(const json& doc) {
  std::ostringstream os;
  const std::string cmd = doc.at("command").get<std::string>();
  if (cmd == "socle") {
    os << "Q = " << join_gens(doc.at("Q")) << "\n";
    os << "I = Q : m = " << join_gens(doc.at("I")) << "\n";
    os << "len R/Q = " << doc.at("len_Q").get<std::size_t>() << "\n";
    os << "len R/I = " << doc.at("len_I").get<std::size_t>() << "\n";
  } else if (cmd == "length") {
    os << "length = " << doc.at("length").get<std::size_t>()
       << " (stabilized at level " << doc.at("level").get<int>() << ")\n";
  } else if (cmd == "colon") {
    os << "A = " << join_gens(doc.at("A")) << "\n";
    os << "B = " << join_gens(doc.at("B")) << "\n";
    os << "A : B = " << join_gens(doc.at("result")) << "\n";
    if (doc.at("contains_unit").get<bool>())
      os << "note: the colon is the unit ideal\n";
  } else if (cmd == "mu") {
    os << "mu = " << doc.at("mu").get<std::size_t>() << "\n";
  } else if (cmd == "type") {
    os << "type = " << doc.at("type").get<std::size_t>()
       << " (kind = " << doc.at("kind").get<std::string>() << ")\n";
    if (doc.contains("warnings"))
      for (const auto& w : doc.at("warnings"))
        os << "warning: " << w.get<std::string>() << "\n";
  } else if (cmd == "en-complex") {
    os << "r = " << doc.at("r").get<std::size_t>() << "\n";
    os << "ranks:";
    for (const auto& r : doc.at("ranks")) os << " " << r.get<std::size_t>();
    os << "\n";
    for (const auto& c : doc.at("checks"))
      os << (c.at("pass").get<bool>() ? "PASS " : "FAIL ")
         << c.at("name").get<std::string>() << "\n";
    const auto& tm = doc.at("tM");
    os << "tM (" << tm.at("rows").get<std::size_t>() << " x "
       << tm.at("cols").get<std::size_t>() << "):\n";
    for (const auto& row : tm.at("entries")) {
      os << "  [";
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) os << " | ";
        os << row[i].get<std::string>();
      }
      os << "]\n";
    }
  } else if (cmd == "decide") {
    os << "status: " << doc.at("status").get<std::string>() << "\n";
    os << "mode: " << doc.at("mode").get<std::string>() << "\n";
    os << "kind: " << doc.at("kind").get<std::string>() << "\n";
    os << "rule: " << doc.at("rule").get<std::string>() << "\n";
    os << "facts:\n";
    for (const auto& f : doc.at("facts"))
      os << "  " << f.at("name").get<std::string>() << " = "
         << f.at("value").get<std::string>() << "\n";
    for (const auto& w : doc.at("warnings"))
      os << "warning: " << w.get<std::string>() << "\n";
  } else if (cmd == "verify") {
    for (const auto& r : doc.at("reports")) {
      std::string tag = r.at("skipped").get<bool>()
                            ? "SKIP"
                            : (r.at("pass").get<bool>() ? "PASS" : "FAIL");
      os << tag << " " << r.at("check").get<std::string>();
      if (tag == "SKIP") {
        os << ": " << r.at("note").get<std::string>();
      } else {
        os << ": computed " << r.at("computed").get<std::string>()
           << ", expected " << r.at("expected").get<std::string>() << " ("
           << r.at("provenance").get<std::string>() << ")";
      }
      os << "\n";
    }
    const auto& s = doc.at("summary");
    os << "passed: " << s.at("passed").get<std::size_t>()
       << ", failed: " << s.at("failed").get<std::size_t>()
       << ", skipped: " << s.at("skipped").get<std::size_t>() << "\n";
  } else if (cmd == "scan") {
    os << "family " << doc.at("family").get<std::string>() << " ("
       << doc.at("kind").get<std::string>() << ", "
       << doc.at("mode").get<std::string>() << ")\n";
    os << std::left << std::setw(6) << "n" << std::setw(26) << "status"
       << std::setw(6) << "type" << "gens\n";
    for (const auto& row : doc.at("rows")) {
      os << std::left << std::setw(6) << row.at("n").get<long>()
         << std::setw(26) << row.at("status").get<std::string>()
         << std::setw(6)
         << (row.contains("type") ? row.at("type").get<std::string>() : "-")
         << join_gens(row.at("gens")) << "\n";
    }
  } else {
    os << doc.dump(2) << "\n";
  }
  return os.str();
}

template <class K>
json dispatch_typed(const Options& opt, const InstanceSpec& spec) {
  if (opt.command == "socle") return cmd_socle<K>(spec, opt);
  if (opt.command == "length") return cmd_length<K>(spec, opt);
  if (opt.command == "colon") return cmd_colon<K>(spec, opt);
  if (opt.command == "mu") return cmd_mu<K>(spec, opt);
  if (opt.command == "type") return cmd_type<K>(spec, opt);
  if (opt.command == "en-complex") return cmd_en_complex<K>(spec, opt);
  if (opt.command == "decide") return cmd_decide<K>(spec, opt);
  if (opt.command == "verify") return cmd_verify<K>(spec, opt);
  throw InputError("unknown command '" + opt.command + "'");
}

inline json dispatch(const Options& opt) {
  if (opt.nmax < 2) throw InputError("--nmax must be at least 2");
  if (opt.command == "scan") return cmd_scan(opt);
  if (opt.input.empty())
    throw InputError(opt.command + " needs --input PATH");
  InstanceSpec spec = load_instance_file(opt.input);
  if (spec.rational) return dispatch_typed<Rational>(opt, spec);
  return dispatch_typed<GFp>(opt, spec);
}

}  // namespace cli_detail

// Parses argv-style arguments (program name excluded), runs the command, and
// captures output; never prints or exits by itself.  Exit codes: 0 success
// (Unknown verdicts included), 2 invalid input, 3 hypothesis violations and
// internal errors.
inline CommandResult run_cli(const std::vector<std::string>& args) {
  CommandResult result;
  cli_detail::Options opts;

  CLI::App app{"Gorenstein / almost Gorenstein decision tool for Rees "
               "algebras of parameter and socle ideals"};
  app.require_subcommand(0, 1);

  static const std::vector<std::string> commands = {
      "socle",  "length", "colon",  "mu",  "type",
      "en-complex", "decide", "verify", "scan"};
  static const std::vector<std::string> descriptions = {
      "socle ideal Q : m of an m-primary parameter ideal",
      "length of R modulo an m-primary ideal",
      "colon ideal A : B (B defaults to the maximal ideal)",
      "minimal number of generators",
      "Cohen-Macaulay type of the Rees algebra",
      "Eagon-Northcott complex of the parameter matrix",
      "Gorenstein / almost Gorenstein verdict",
      "identity oracle suite on one instance",
      "decide a parametric family over a range of n"};
  for (std::size_t c = 0; c < commands.size(); ++c) {
    CLI::App* sub = app.add_subcommand(commands[c], descriptions[c]);
    sub->add_option("--input", opts.input, "instance JSON file");
    sub->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--nmax", opts.nmax,
                    "truncation cap for quotient stabilization")
        ->envname("REES_AG_NMAX");
    sub->add_option("--mode", opts.mode, "graded or local verdict")
        ->check(CLI::IsMember({"graded", "local"}));
    sub->add_option("--kind", opts.kind, "parameter or socle")
        ->check(CLI::IsMember({"parameter", "socle"}));
    sub->add_option("--r", opts.r, "expected number of parameters");
    sub->add_option("--family", opts.family,
                    "family expression with sweep parameter n");
    sub->add_option("--n", opts.n_range, "sweep range LO..HI");
  }

  std::vector<std::string> argv_store;
  argv_store.push_back("reesag");
  for (const auto& a : args) argv_store.push_back(a);
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = (code == 0) ? 0 : 2;
    return result;
  }

  auto parsed = app.get_subcommands();
  if (parsed.empty()) {
    result.err = "error: expected a command (see --help)\n";
    result.exit_code = 2;
    return result;
  }
  opts.command = parsed.front()->get_name();

  try {
    cli_detail::json doc = cli_detail::dispatch(opts);
    result.out = (opts.format == "json") ? doc.dump(2) + "\n"
                                         : cli_detail::render_text(doc);
    result.exit_code = 0;
  } catch (const InputError& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = 2;
  } catch (const HypothesisError& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = 3;
  } catch (const std::exception& e) {
    result.err = std::string("internal error: ") + e.what() + "\n";
    result.exit_code = 3;
  }
  return result;
}

}  // namespace reesag
