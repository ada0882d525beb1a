#pragma once

/**
 * @file cli.hpp
 * @brief The `hilbsmooth` command-line front end.
 *
 * `run` never touches std::cout or std::cerr directly so tests can drive it
 * with string streams.  Exit codes: 0 success, 1 domain error, 2 usage error.
 */

#include <hilbsmooth/classify.hpp>
#include <hilbsmooth/error.hpp>
#include <hilbsmooth/lex.hpp>
#include <hilbsmooth/monomial.hpp>
#include <hilbsmooth/numpoly.hpp>
#include <hilbsmooth/partition.hpp>
#include <hilbsmooth/tangent.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace hilbsmooth::cli {

using json = nlohmann::ordered_json;

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain = 1;
inline constexpr int exit_usage = 2;

/// Thrown for bad flag combinations that CLI11 cannot express.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// JSON encoding

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
inline json integer_json(const Integer& n) {
  if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max()) {
    return static_cast<long long>(n);
  }
  return n.str();
}

inline json partition_json(const Partition& lambda) { return lambda.parts(); }

inline json ideal_json(const MonomialIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.gens()) gens.push_back(g.exponents());
  return {{"vars", ideal.nvars()}, {"gens", std::move(gens)}};
}

/// Accepts {"vars": N, "gens": [[...], ...]}.
inline MonomialIdeal ideal_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("gens") || !j["vars"].is_number_integer() ||
      !j["gens"].is_array()) {
    throw error(errc::parse_error, "JSON ideal must have integer 'vars' and array 'gens'");
  }
  const long n = j["vars"].get<long>();
  if (n < 1) throw error(errc::parse_error, "'vars' must be positive");
  std::vector<Monomial> gens;
  for (const auto& g : j["gens"]) {
    if (!g.is_array()) throw error(errc::parse_error, "each generator must be an exponent array");
    std::vector<int> e;
    for (const auto& x : g) {
      if (!x.is_number_integer() || x.get<long>() < 0 || x.get<long>() > 1'000'000'000) {
        throw error(errc::parse_error, "exponents must be nonnegative integers");
      }
      e.push_back(x.get<int>());
    }
    if (e.size() != static_cast<std::size_t>(n)) {
      throw error(errc::length_mismatch, "generator has " + std::to_string(e.size()) + " exponents, expected " +
                                             std::to_string(n));
    }
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(static_cast<std::size_t>(n), std::move(gens));
}

/// Reads an ideal file in either the text format or the JSON object form.
inline MonomialIdeal load_ideal(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open ideal file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw error(errc::parse_error, std::string("bad JSON ideal: ") + e.what());
    }
    // A classify/witness report carries the ideal under "witness".
    if (j.contains("witness") && !j.contains("vars")) return ideal_from_json(j["witness"]);
    return ideal_from_json(j);
  }
  return read_ideal(text);
}

inline void save_ideal(const std::string& path, const MonomialIdeal& ideal) {
  std::ofstream out(path);
  if (!out) throw usage_error("cannot write '" + path + "'");
  write_ideal(out, ideal);
}

inline json certificate_json(const SingularCertificate& c) {
  return {{"hom0", c.hom0},
          {"lexComponentDim", integer_json(c.lex_dim)},
          {"comparison", std::to_string(c.hom0) + (c.singular_certified ? " > " : " <= ") + c.lex_dim.str()},
          {"singularCertified", c.singular_certified},
          {"field", c.report.field},
          {"assumption", c.assumption}};
}

inline json classification_json(const Classification& c, const NumericalPolynomial& p) {
  json j;
  j["ambient"] = c.ambient_m;
  j["partition"] = partition_json(c.partition);
  j["polynomial"] = to_string(p);
  j["verdict"] = std::string(to_string(c.verdict));
  j["condition"] = c.condition ? json(*c.condition) : json(nullptr);
  j["lexComponentDim"] = c.lex_component_dim ? integer_json(*c.lex_component_dim) : json(nullptr);
  j["description"] = c.description;
  j["witness"] = c.witness ? ideal_json(*c.witness) : json(nullptr);
  j["witnessStatus"] = std::string(to_string(c.witness_status));
  return j;
}

// ---------------------------------------------------------------------------
// classify

struct ClassifyOptions {
  int ambient = 0;
  std::optional<std::string> partition;
  std::optional<std::string> poly;
  std::optional<std::string> batch;
  bool witness = false;
  bool certify = false;
  bool json_out = false;
};

namespace detail {

/// Classifies one input and renders it; domain errors propagate.
inline std::string classify_one(const ClassifyOptions& o, const std::optional<std::string>& partition_text,
                                const std::optional<std::string>& poly_text) {
  NumericalPolynomial p;
  std::optional<Partition> lambda;
  if (partition_text) {
    lambda = parse_partition(*partition_text);
    p = hilbert_polynomial(*lambda);
  } else {
    p = parse_polynomial(*poly_text);
    try {
      lambda = partition_of_polynomial(p);
    } catch (const error& e) {
      if (e.code() != errc::not_hilbert) throw;
    }
  }

  std::ostringstream out;
  if (!lambda) {
    // Not a Hilbert polynomial at all: no subscheme of any P^m has it.
    if (o.ambient < 1) throw error(errc::invalid_ambient, "ambient dimension must be at least 1");
    const std::string description = to_string(p) + " is not the Hilbert polynomial of any subscheme";
    if (o.json_out) {
      json j;
      j["ambient"] = o.ambient;
      j["partition"] = nullptr;
      j["polynomial"] = to_string(p);
      j["verdict"] = "empty";
      j["condition"] = nullptr;
      j["lexComponentDim"] = nullptr;
      j["description"] = description;
      j["witness"] = nullptr;
      j["witnessStatus"] = std::string(to_string(WitnessStatus::not_needed));
      out << j.dump() << '\n';
    } else {
      out << "ambient: " << o.ambient << "\npolynomial: " << to_string(p)
          << "\nverdict: empty\ndescription: " << description << '\n';
    }
    return out.str();
  }

  const Classification c = classify(o.ambient, *lambda);
  std::optional<SingularCertificate> cert;
  if (o.certify && c.verdict == Verdict::singular && c.witness) {
    cert = certify_singular(o.ambient, *lambda, *c.witness, FieldSpec::rationals(), degree_cap_from_env());
  }

  if (o.json_out) {
    json j = classification_json(c, p);
    if (o.certify) j["certificate"] = cert ? certificate_json(*cert) : json(nullptr);
    out << j.dump() << '\n';
    return out.str();
  }

  out << "ambient: " << c.ambient_m << '\n';
  out << "partition: " << (lambda->empty() ? "()" : to_string(*lambda)) << '\n';
  out << "polynomial: " << to_string(p) << '\n';
  out << "verdict: " << to_string(c.verdict);
  if (c.condition) out << " (condition " << *c.condition << ')';
  out << '\n';
  if (c.lex_component_dim) out << "lex component dim: " << *c.lex_component_dim << '\n';
  out << "description: " << c.description << '\n';
  if (c.verdict == Verdict::singular && (o.witness || o.certify)) {
    out << "witness status: " << to_string(c.witness_status) << '\n';
    if (c.witness) out << "witness: " << to_string(*c.witness) << '\n';
    out << "rationale: " << c.witness_rationale << '\n';
  }
  if (o.certify) {
    if (cert) {
      out << "hom0: " << cert->hom0 << '\n';
      out << "lex component dim: " << cert->lex_dim << '\n';
      out << "comparison: " << cert->hom0 << (cert->singular_certified ? " > " : " <= ") << cert->lex_dim
          << (cert->singular_certified ? " (singular point certified)" : " (not certified)") << '\n';
      out << "note: " << cert->assumption << '\n';
    } else {
      out << "certificate: not available (" << (c.verdict == Verdict::singular ? "no witness" : "not singular")
          << ")\n";
    }
  }
  return out.str();
}

}  // namespace detail

inline int run_classify(const ClassifyOptions& o, std::ostream& out, std::ostream& err) {
  const int given = (o.partition ? 1 : 0) + (o.poly ? 1 : 0) + (o.batch ? 1 : 0);
  if (given != 1) throw usage_error("classify needs exactly one of --partition, --poly, --batch");
  if (!o.batch) {
    out << detail::classify_one(o, o.partition, o.poly);
    return exit_ok;
  }

  std::ifstream in(*o.batch);
  if (!in) throw usage_error("cannot open batch file '" + *o.batch + "'");
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] == '#') continue;
    if (first == std::string::npos) continue;
    lines.push_back(line);
  }

  // Lines are independent; classify them in parallel and print in input order.
  struct Result {
    std::string text;
    bool failed = false;
  };
  auto work = [&o](const std::string& line) {
    try {
      return Result{detail::classify_one(o, line, std::nullopt), false};
    } catch (const std::exception& e) {
      return Result{e.what(), true};
    }
  };
  const std::size_t workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<Result> results(lines.size());
  for (std::size_t start = 0; start < lines.size(); start += workers) {
    std::vector<std::future<Result>> batch;
    for (std::size_t k = start; k < std::min(lines.size(), start + workers); ++k) {
      batch.push_back(std::async(std::launch::async, work, std::cref(lines[k])));
    }
    for (std::size_t k = 0; k < batch.size(); ++k) results[start + k] = batch[k].get();
  }

  int code = exit_ok;
  for (std::size_t k = 0; k < results.size(); ++k) {
    if (results[k].failed) {
      code = exit_domain;
      err << "line '" << lines[k] << "': " << results[k].text << '\n';
      if (o.json_out) out << json{{"input", lines[k]}, {"error", results[k].text}}.dump() << '\n';
      continue;
    }
    if (!o.json_out && k > 0) out << '\n';
    out << results[k].text;
  }
  return code;
}

// ---------------------------------------------------------------------------
// the remaining subcommands

inline int run_convert(const std::optional<std::string>& partition_text, const std::optional<std::string>& poly_text,
                       bool json_out, std::ostream& out) {
  if (partition_text.has_value() == poly_text.has_value()) {
    throw usage_error("convert needs exactly one of --partition, --poly");
  }
  Partition lambda;
  NumericalPolynomial p;
  if (partition_text) {
    lambda = parse_partition(*partition_text);
    p = hilbert_polynomial(lambda);
  } else {
    p = parse_polynomial(*poly_text);
    lambda = partition_of_polynomial(p);
  }
  if (json_out) {
    json j;
    j["partition"] = partition_json(lambda);
    j["polynomial"] = to_string(p);
    j["powerCoeffs"] = serialize_power_coeffs(p);
    if (!lambda.empty()) {
      const auto inv = invariants(lambda);
      j["dimension"] = inv.dimension;
      j["degree"] = inv.degree;
      j["genus"] = integer_json(inv.genus);
      j["gotzmannBound"] = inv.gotzmann_bound;
    }
    out << j.dump() << '\n';
  } else if (partition_text) {
    out << to_string(p) << '\n';
  } else {
    out << (lambda.empty() ? "()" : to_string(lambda)) << '\n';
  }
  return exit_ok;
}

inline int run_lex(int m, const std::string& partition_text, bool decompose, bool json_out,
                   const std::optional<std::string>& ideal_out, std::ostream& out) {
  const Partition lambda = parse_partition(partition_text);
  const MonomialIdeal ideal = lex_ideal(lambda, m);
  if (ideal_out) save_ideal(*ideal_out, ideal);
  std::vector<MonomialIdeal> parts;
  if (decompose) parts = irreducible_components(lambda, m);
  if (json_out) {
    json j = ideal_json(ideal);
    if (decompose) {
      json comps = json::array();
      for (const auto& q : parts) comps.push_back(ideal_json(q));
      j["components"] = std::move(comps);
    }
    out << j.dump() << '\n';
    return exit_ok;
  }
  out << to_string(ideal) << '\n';
  for (const auto& q : parts) out << "  component " << to_string(q) << '\n';
  return exit_ok;
}

inline int run_chain(int m, const std::string& type_text, bool json_out, std::ostream& out) {
  const ResidualType rt = parse_residual_type(type_text);
  const auto chain = residual_chain(rt, m);
  if (json_out) {
    json arr = json::array();
    for (const auto& q : chain) arr.push_back(ideal_json(q));
    out << arr.dump() << '\n';
    return exit_ok;
  }
  for (std::size_t i = 0; i < chain.size(); ++i) out << "I_" << i + 1 << " = " << to_string(chain[i]) << '\n';
  return exit_ok;
}

inline int run_hilb(const std::string& path, int from, int to, bool polynomial, int hint, bool json_out,
                    std::ostream& out) {
  if (from < 0 || to < from) throw usage_error("need 0 <= --from <= --to");
  const MonomialIdeal ideal = load_ideal(path);
  json values = json::array();
  std::ostringstream text;
  for (int j = from; j <= to; ++j) {
    const long h = hilbert_function(ideal, j);
    values.push_back({{"degree", j}, {"value", h}});
    text << j << ' ' << h << '\n';
  }
  std::optional<NumericalPolynomial> p;
  if (polynomial) p = stable_hilbert_polynomial(ideal, hint);
  if (json_out) {
    json j{{"values", std::move(values)}};
    if (p) j["polynomial"] = to_string(*p);
    out << j.dump() << '\n';
    return exit_ok;
  }
  out << text.str();
  if (p) out << "polynomial: " << to_string(*p) << '\n';
  return exit_ok;
}

inline int run_tangent(const std::string& path, const std::string& field_text, std::optional<int> cap,
                       std::ostream& out) {
  const MonomialIdeal ideal = load_ideal(path);
  const FieldSpec field = parse_field(field_text);
  const TangentReport r = hom0_dimension(ideal, field, cap ? *cap : degree_cap_from_env());
  json j{{"ideal", ideal_json(r.ideal)},
         {"hom0Dim", r.hom0_dim},
         {"unknowns", r.unknowns},
         {"equations", r.equations},
         {"field", r.field}};
  out << j.dump() << '\n';
  return exit_ok;
}

inline int run_witness(int m, const std::string& partition_text, bool json_out,
                       const std::optional<std::string>& ideal_out, std::ostream& out) {
  const Partition lambda = parse_partition(partition_text);
  const WitnessResult w = singular_witness(m, lambda);
  if (ideal_out && w.ideal) save_ideal(*ideal_out, *w.ideal);
  if (json_out) {
    json j{{"ambient", m},
           {"partition", partition_json(lambda)},
           {"witness", w.ideal ? ideal_json(*w.ideal) : json(nullptr)},
           {"witnessStatus", std::string(to_string(w.status))},
           {"rationale", w.rationale}};
    out << j.dump() << '\n';
    return exit_ok;
  }
  out << "witness status: " << to_string(w.status) << '\n';
  if (w.ideal) out << "witness: " << to_string(*w.ideal) << '\n';
  out << "rationale: " << w.rationale << '\n';
  return exit_ok;
}

inline int run_resdim(int m, const std::string& type_text, std::ostream& out) {
  out << res_space_dim(m, parse_residual_type(type_text)) << '\n';
  return exit_ok;
}

// ---------------------------------------------------------------------------

/// args excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Smoothness of Hilbert schemes of projective space via monomial ideals", "hilbsmooth"};
  app.require_subcommand(1);

  ClassifyOptions co;
  auto* classify_cmd = app.add_subcommand("classify", "Decide smoothness of Hilb^p(P^m)");
  classify_cmd->add_option("--ambient,-m", co.ambient, "Ambient dimension m")->required();
  auto* c_part = classify_cmd->add_option("--partition,-p", co.partition, "Partition, e.g. 3,3,2,1");
  auto* c_poly = classify_cmd->add_option("--poly", co.poly, "Hilbert polynomial, e.g. 3t+1");
  auto* c_batch = classify_cmd->add_option("--batch", co.batch, "File with one partition per line");
  c_part->excludes(c_poly)->excludes(c_batch);
  c_poly->excludes(c_batch);
  classify_cmd->add_flag("--witness", co.witness, "Print the singular witness ideal");
  classify_cmd->add_flag("--certify", co.certify, "Compare hom0 at the witness with the lex component");
  classify_cmd->add_flag("--json", co.json_out, "Machine-readable output");

  std::optional<std::string> cv_part, cv_poly;
  bool cv_json = false;
  auto* convert_cmd = app.add_subcommand("convert", "Convert between partitions and Hilbert polynomials");
  auto* cv_p = convert_cmd->add_option("--partition,-p", cv_part, "Partition");
  auto* cv_q = convert_cmd->add_option("--poly", cv_poly, "Hilbert polynomial");
  cv_p->excludes(cv_q);
  convert_cmd->add_flag("--json", cv_json, "Machine-readable output");

  int lex_m = 0;
  std::string lex_part;
  bool lex_decompose = false, lex_json = false;
  std::optional<std::string> lex_out;
  auto* lex_cmd = app.add_subcommand("lex", "Lexicographic ideal L(lambda)");
  lex_cmd->add_option("--ambient,-m", lex_m, "Ambient dimension m")->required();
  lex_cmd->add_option("--partition,-p", lex_part, "Partition")->required();
  lex_cmd->add_flag("--decompose", lex_decompose, "Also print the irreducible components");
  lex_cmd->add_flag("--json", lex_json, "Machine-readable output");
  lex_cmd->add_option("--ideal-out", lex_out, "Write the ideal file here");

  int chain_m = 0;
  std::string chain_type;
  bool chain_json = false;
  auto* chain_cmd = app.add_subcommand("chain", "Residual chain of lex ideals for a residual type");
  chain_cmd->add_option("--ambient,-m", chain_m, "Ambient dimension m")->required();
  chain_cmd->add_option("--type,-t", chain_type, "Residual type, e.g. 3:2,2:4")->required();
  chain_cmd->add_flag("--json", chain_json, "Machine-readable output");

  std::string hilb_file;
  int hilb_from = 0, hilb_to = 0, hilb_hint = 0;
  bool hilb_poly = false, hilb_json = false;
  auto* hilb_cmd = app.add_subcommand("hilb", "Hilbert function of a monomial ideal");
  hilb_cmd->add_option("--ideal,-i", hilb_file, "Ideal file")->required();
  hilb_cmd->add_option("--from", hilb_from, "First degree")->required();
  hilb_cmd->add_option("--to", hilb_to, "Last degree")->required();
  hilb_cmd->add_flag("--polynomial", hilb_poly, "Also interpolate the Hilbert polynomial");
  hilb_cmd->add_option("--hint", hilb_hint, "Degree from which the Hilbert function is polynomial");
  hilb_cmd->add_flag("--json", hilb_json, "Machine-readable output");

  std::string tan_file, tan_field = "rational";
  std::optional<int> tan_cap;
  auto* tan_cmd = app.add_subcommand("tangent", "dim Hom(I, R/I)_0 as JSON");
  tan_cmd->add_option("--ideal,-i", tan_file, "Ideal file")->required();
  tan_cmd->add_option("--field", tan_field, "rational or prime:P");
  tan_cmd->add_option("--degree-cap", tan_cap, "Largest degree used (default 20 or HILB_DEGREE_CAP)")
      ->check(CLI::PositiveNumber);

  int wit_m = 0;
  std::string wit_part;
  bool wit_json = false;
  std::optional<std::string> wit_out;
  auto* wit_cmd = app.add_subcommand("witness", "Singular witness ideal");
  wit_cmd->add_option("--ambient,-m", wit_m, "Ambient dimension m")->required();
  wit_cmd->add_option("--partition,-p", wit_part, "Partition")->required();
  wit_cmd->add_flag("--json", wit_json, "Machine-readable output");
  wit_cmd->add_option("--ideal-out", wit_out, "Write the ideal file here");

  int res_m = 0;
  std::string res_type;
  auto* res_cmd = app.add_subcommand("resdim", "Dimension of the residual-flag parameter space");
  res_cmd->add_option("--ambient,-m", res_m, "Ambient dimension m")->required();
  res_cmd->add_option("--type,-t", res_type, "Residual type, e.g. 3:1")->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return exit_ok;
    }
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return exit_usage;
  }

  try {
    if (*classify_cmd) return run_classify(co, out, err);
    if (*convert_cmd) return run_convert(cv_part, cv_poly, cv_json, out);
    if (*lex_cmd) return run_lex(lex_m, lex_part, lex_decompose, lex_json, lex_out, out);
    if (*chain_cmd) return run_chain(chain_m, chain_type, chain_json, out);
    if (*hilb_cmd) return run_hilb(hilb_file, hilb_from, hilb_to, hilb_poly, hilb_hint, hilb_json, out);
    if (*tan_cmd) return run_tangent(tan_file, tan_field, tan_cap, out);
    if (*wit_cmd) return run_witness(wit_m, wit_part, wit_json, wit_out, out);
    if (*res_cmd) return run_resdim(res_m, res_type, out);
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == errc::parse_error ? exit_usage : exit_domain;
  }
  return exit_usage;
}

}  // namespace hilbsmooth::cli
