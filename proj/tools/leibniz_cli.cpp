// Command-line front end over the library. Inputs are builtin names or YAML/JSON
// files; each run prints one report document.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "leibniz/builtins.hpp"
#include "leibniz/dim1.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/io.hpp"
#include "leibniz/ito.hpp"
#include "leibniz/metabelian.hpp"

#ifndef LEIBNIZ_VERSION
#define LEIBNIZ_VERSION "0.0.0"
#endif

namespace {

using json = nlohmann::ordered_json;
using namespace leibniz;

enum ExitCode { kOk = 0, kViolation = 1, kInputError = 2, kBudget = 3 };

struct Globals {
  std::string report = "text";
  std::uint64_t seed = kDefaultSeed;
  std::string field;
  std::uint64_t budget = kDefaultEnumerationBudget;
};

json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

json to_json(const Subspace& s) { return to_json(s.basis()); }

json one_based(const std::vector<std::size_t>& indices) {
  json out = json::array();
  for (auto i : indices) out.push_back(i + 1);
  return out;
}

json to_json(const Dim1Triple& t) {
  return {{"field", t.field.to_string()},
          {"p_dim", t.p_dim},
          {"lambda", to_json(t.lambda)},
          {"Lambda", to_json(t.Lambda)},
          {"f", to_json(t.f)}};
}

json to_json(const MorphismTriple& m) { return {{"v", to_json(m.v)}, {"u", m.u.to_string()}, {"psi", to_json(m.psi)}}; }

json to_json(const DecompositionWitness& w) {
  return {{"a", to_json(w.a)}, {"b", to_json(w.b)}, {"sum_dim", w.sum_dim}, {"spans_g", w.spans_g}};
}

json to_json(const kernels::CensusCounts& c) {
  auto first = [](std::uint64_t t) { return t == kernels::kNoTable ? json(nullptr) : json(t); };
  return {{"tables", c.tables},
          {"leibniz", c.leibniz},
          {"lie", c.lie},
          {"metabelian", c.metabelian},
          {"decomposable", c.decomposable},
          {"extension_of_abelian_by_abelian", c.extension},
          {"decomposable_not_metabelian", c.decomposable_not_metabelian},
          {"metabelian_not_decomposable", c.metabelian_not_decomposable},
          {"metabelian_extension_mismatches", c.extension_mismatches},
          {"ideal_form_tuples", c.ideal_form_tuples},
          {"ideal_form_violations", c.ideal_form_violations},
          {"first_converse_failure", first(c.first_converse_failure)},
          {"first_violation", first(c.first_violation)}};
}

// Flattens a JSON value into "path: value" lines for the text report.
void render_text(const json& value, const std::string& path, std::ostream& os) {
  if (value.is_object()) {
    for (const auto& [key, child] : value.items()) render_text(child, path.empty() ? key : path + "." + key, os);
  } else if (value.is_array() && !value.empty() && (value[0].is_object())) {
    for (std::size_t i = 0; i < value.size(); ++i) render_text(value[i], path + "[" + std::to_string(i) + "]", os);
  } else if (value.is_string() && value.get<std::string>().find('\n') != std::string::npos) {
    os << path << ": |\n";
    std::istringstream lines(value.get<std::string>());
    for (std::string line; std::getline(lines, line);) os << "  " << line << "\n";
  } else {
    os << path << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
}

class Runner {
 public:
  explicit Runner(const Globals& globals) : globals_(globals) {}

  json& result() { return result_; }
  std::vector<std::string>& warnings() { return warnings_; }
  void input(const std::string& name) { inputs_.push_back(name); }

  std::optional<FieldSpec> field_override() const {
    if (globals_.field.empty()) return std::nullopt;
    return io::parse_field_flag(globals_.field);
  }

  AlgebraTable algebra(const std::string& source) {
    input(source);
    const auto target = field_override();
    if (is_builtin(source)) return note_vanished(builtin(source, target.value_or(FieldSpec::rationals())));
    AlgebraTable table = io::load_algebra(source);
    if (target && *target != table.field()) return note_vanished(change_field(table, *target));
    return table;
  }

  LeibnizAlgebra leibniz_algebra(const std::string& source) { return LeibnizAlgebra::checked(algebra(source)); }

  // A triple file, or an algebra (builtin or file) whose triple is extracted.
  Dim1Triple triple(const std::string& source, json* extraction = nullptr) {
    if (!is_builtin(source) && io::detect_document_kind(io::read_file(source)) == "triple") {
      input(source);
      return io::load_triple(source);
    }
    const Extraction e = extract_triple(leibniz_algebra(source));
    if (extraction) *extraction = {{"basis", to_json(e.basis)}, {"triple", to_json(e.triple)}};
    return e.triple;
  }

  int emit(const std::string& command, std::chrono::steady_clock::time_point start, int code = kOk) {
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    json doc = {{"command", command},
                {"inputs", inputs_},
                {"result", result_},
                {"seed", globals_.seed},
                {"timing_ms", elapsed.count()},
                {"version", LEIBNIZ_VERSION}};
    if (!warnings_.empty()) doc["warnings"] = warnings_;
    if (globals_.report == "json") {
      std::cout << doc.dump(2) << "\n";
    } else {
      render_text(doc, "", std::cout);
    }
    return code;
  }

 private:
  AlgebraTable note_vanished(FieldChange change) {
    for (const auto& e : change.vanished) {
      warnings_.push_back("structure constant " + e.coefficient.to_string() + " of [e" + std::to_string(e.i + 1) +
                          ", e" + std::to_string(e.j + 1) + "] along e" + std::to_string(e.k + 1) + " vanishes over " +
                          change.table.field().to_string());
    }
    return std::move(change.table);
  }

  const Globals& globals_;
  json result_ = json::object();
  std::vector<std::string> inputs_;
  std::vector<std::string> warnings_;
};

using Clock = std::chrono::steady_clock;

int cmd_check(const Globals& g, const std::string& source) {
  const auto start = Clock::now();
  Runner run(g);
  const AlgebraTable table = run.algebra(source);
  json& r = run.result();
  r["field"] = table.field().to_string();
  r["dim"] = table.dim();
  const BracketReport leib = is_leibniz(table);
  r["leibniz"] = leib.holds;
  if (!leib.holds) {
    r["leibniz_witness"] = {{"triple", one_based(leib.witness->indices)},
                            {"lhs", to_json(leib.witness->lhs)},
                            {"rhs", to_json(leib.witness->rhs)}};
    return run.emit("check", start);
  }
  const LeibnizAlgebra alg = LeibnizAlgebra::checked(table);
  r["lie"] = is_lie(alg);
  r["metabelian"] = is_metabelian(alg);
  if (const auto w = metabelian_witness(alg)) {
    r["metabelian_witness"] = {{"brackets", one_based({w->i, w->j, w->k, w->l})}, {"value", to_json(w->value)}};
  }
  json dims = json::array();
  for (const auto& s : derived_series(alg)) dims.push_back(s.dim());
  r["derived_dims"] = dims;
  const IdentityCheck skew = check_partial_skew(alg, {.trials = 1000, .seed = g.seed});
  r["partial_skew"] = {{"holds", skew.holds}, {"exhaustive", skew.exhaustive}, {"instances", skew.instances}};
  const BracketReport law = check_equivalent_law(alg);
  r["equivalent_law"] = law.holds;
  const bool ok = skew.holds && law.holds;
  return run.emit("check", start, ok ? kOk : kViolation);
}

std::vector<Vector> parse_rows(const std::string& text, FieldSpec field) {
  std::vector<Vector> rows;
  std::stringstream outer(text);
  std::string row;
  while (std::getline(outer, row, ';')) {
    Vector v;
    std::stringstream inner(row);
    std::string entry;
    while (std::getline(inner, entry, ',')) v.push_back(Scalar::parse(field, entry));
    rows.push_back(std::move(v));
  }
  return rows;
}

int cmd_ito(const Globals& g, const std::string& source, bool exhaustive, std::size_t max_pairs,
            const std::string& witness_a, const std::string& witness_b) {
  const auto start = Clock::now();
  Runner run(g);
  const LeibnizAlgebra alg = run.leibniz_algebra(source);
  json& r = run.result();
  r["field"] = alg.field().to_string();
  r["metabelian"] = is_metabelian(alg);
  if (!witness_a.empty() || !witness_b.empty()) {
    const Subspace a = Subspace::span(alg.field(), alg.dim(), parse_rows(witness_a, alg.field()));
    const Subspace b = Subspace::span(alg.field(), alg.dim(), parse_rows(witness_b, alg.field()));
    const std::size_t sum_dim = subspace_sum(a, b).dim();
    const DecompositionWitness w{a, b, sum_dim, sum_dim == alg.dim()};
    r["mode"] = "SuppliedWitness";
    r["witness"] = to_json(w);
    r["metabelian_verified"] = verify_ito_corollary(alg, w);
    return run.emit("ito", start);
  }
  if (!exhaustive && !alg.field().is_finite()) {
    throw UnsupportedMode("over Q the ito command needs a witness (--a, --b); exhaustive search needs GF(p)");
  }
  if (exhaustive && !alg.field().is_finite()) {
    throw UnsupportedMode("--exhaustive is refused over Q: subspaces of Q^n cannot be enumerated");
  }
  const ItoReport report = run_ito_exhaustive(alg, {.budget = g.budget, .max_listed = max_pairs});
  r["mode"] = "ExhaustiveFiniteField";
  r["abelian_subalgebras"] = report.pairs.abelian.size();
  r["pairs_examined"] = report.pairs.pairs_examined;
  r["max_abelian_sum_dim"] = report.max_abelian_sum_dim;
  if (report.pairs.max_witness) r["max_witness"] = to_json(*report.pairs.max_witness);
  r["spanning_pairs"] = report.decompositions_found;
  json listed = json::array();
  for (const auto& w : report.pairs.witnesses) listed.push_back(to_json(w));
  r["listed_pairs"] = listed;
  r["ito_violations"] = report.ito_violations;
  return run.emit("ito", start, report.ito_violations.empty() ? kOk : kViolation);
}

int cmd_census(const Globals& g, const std::string& field_text, std::size_t dim, bool large, bool ideal_form,
               bool serial) {
  const auto start = Clock::now();
  Runner run(g);
  const FieldSpec field = io::parse_field_flag(field_text);
  CensusOptions options;
  options.budget = g.budget;
  options.allow_large = large;
  options.ideal_form = ideal_form;
  options.execution = serial ? kernels::Execution::Serial : kernels::Execution::Parallel;
  const CensusReport report = census_small_leibniz(field, dim, options);
  json& r = run.result();
  r["field"] = field.to_string();
  r["dim"] = dim;
  r["ideal_form"] = ideal_form;
  r["counts"] = to_json(report.counts);
  return run.emit("census", start);
}

int cmd_classify(const Globals& g, const std::string& source) {
  const auto start = Clock::now();
  Runner run(g);
  json extraction;
  const Dim1Triple t = run.triple(source, &extraction);
  const Classification c = classify(t);
  json& r = run.result();
  r["family"] = std::string(family_name(c.tag));
  if (!extraction.is_null()) r["extraction"] = extraction;
  r["triple"] = to_json(t);
  r["canonical"] = to_json(c.canonical);
  if (c.theta) r["theta"] = to_json(*c.theta);
  r["to_canonical"] = to_json(c.to_canonical);
  return run.emit("classify", start);
}

int cmd_iso(const Globals& g, const std::string& a_src, const std::string& b_src, const std::string& witness_path) {
  const auto start = Clock::now();
  Runner run(g);
  const Dim1Triple a = run.triple(a_src);
  const Dim1Triple b = run.triple(b_src);
  json& r = run.result();
  if (!witness_path.empty()) {
    run.input(witness_path);
    const MorphismTriple m = io::load_morphism(witness_path, a.field, a.p_dim);
    r["mode"] = "verify_witness";
    r["witness"] = to_json(m);
    r["isomorphic"] = verify_isomorphism_witness(a, b, m);
    return run.emit("iso", start);
  }
  const auto w = are_isomorphic(a, b, g.budget);
  r["mode"] = "search";
  r["isomorphic"] = w.has_value();
  if (w) r["witness"] = to_json(*w);
  return run.emit("iso", start);
}

int cmd_aut(const Globals& g, const std::string& source) {
  const auto start = Clock::now();
  Runner run(g);
  const Dim1Triple t = run.triple(source);
  const AutomorphismReport rep = automorphism_group(t, {.budget = g.budget, .seed = g.seed});
  json& r = run.result();
  r["family"] = std::string(family_name(rep.tag));
  r["order"] = rep.order;
  r["brute_force_order"] = rep.brute_force_order;
  r["matches_brute_force"] = rep.matches_brute_force;
  r["closed"] = rep.closed;
  r["composition_preserved"] = rep.composition_preserved;
  r["pairs_checked"] = rep.pairs_checked;
  r["pairs_exhaustive"] = rep.pairs_exhaustive;
  r["identity_ok"] = rep.identity_ok;
  r["inverses_ok"] = rep.inverses_ok;
  r["factorization_ok"] = rep.factorization_ok;
  json gens = json::array();
  for (const auto& x : rep.generators) gens.push_back(to_json(x));
  r["generators"] = gens;
  r["cross_check"] = rep.consistent() ? "consistent" : "inconsistent";
  return run.emit("aut", start, rep.consistent() ? kOk : kViolation);
}

int cmd_product(const Globals& g, const std::string& path) {
  const auto start = Clock::now();
  Runner run(g);
  run.input(path);
  const io::AnyDatum datum = io::load_datum(path);
  const AlgebraTable table = std::visit(
      [](const auto& d) {
        if constexpr (std::is_same_v<std::decay_t<decltype(d)>, MetabelianDatum>) {
          return build_metabelian_product(d);
        } else {
          return build_lie_metabelian_product(d);
        }
      },
      datum);
  const LeibnizAlgebra alg = LeibnizAlgebra::checked(table);
  json& r = run.result();
  r["algebra"] = io::serialize_algebra(table);
  r["leibniz"] = true;
  r["metabelian"] = is_metabelian(alg);
  r["lie"] = is_lie(alg);
  return run.emit("product", start, is_metabelian(alg) ? kOk : kViolation);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification and classification tools for Leibniz algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--report", g.report, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "Seed for randomized checks");
  app.add_option("--field", g.field, "Re-instantiate inputs over Q or GF:p; the census field");
  app.add_option("--budget", g.budget, "Cap on enumerated candidates");

  std::string source;
  auto* check = app.add_subcommand("check", "Leibniz, Lie, metabelian and identity checks");
  check->add_option("source", source, "Algebra file or builtin name")->required();

  bool exhaustive = false;
  std::size_t max_pairs = 16;
  std::string witness_a;
  std::string witness_b;
  auto* ito = app.add_subcommand("ito", "Abelian decompositions and the metabelian conclusion");
  ito->add_option("source", source, "Algebra file or builtin name")->required();
  ito->add_flag("--exhaustive", exhaustive, "Enumerate all abelian subalgebras (prime fields only)");
  ito->add_option("--max-dim-pairs", max_pairs, "Spanning pairs listed in the report");
  ito->add_option("--a", witness_a, "Witness A as rows 'x,y,z;...'");
  ito->add_option("--b", witness_b, "Witness B as rows 'x,y,z;...'");

  std::size_t census_dim = 2;
  bool large = false;
  bool ideal_form = false;
  bool serial = false;
  auto* census = app.add_subcommand("census", "Every structure-constant table of a small dimension");
  census->add_option("--dim", census_dim, "Dimension");
  census->add_flag("--large", large, "Allow runs up to 2^27 tables");
  census->add_flag("--ideal-form", ideal_form, "Also check ideals inside A + B");
  census->add_flag("--serial", serial, "Use the serial kernel");

  auto* classify = app.add_subcommand("classify", "Family of an algebra with one-dimensional derived algebra");
  classify->add_option("source", source, "Algebra or triple file, or builtin name")->required();

  std::string other;
  std::string witness_path;
  auto* iso = app.add_subcommand("iso", "Isomorphism search between two triples");
  iso->add_option("a", source, "First algebra or triple")->required();
  iso->add_option("b", other, "Second algebra or triple")->required();
  iso->add_option("--verify-witness", witness_path, "Morphism file to verify instead of searching");

  auto* aut = app.add_subcommand("aut", "Automorphism group of a triple");
  aut->add_option("source", source, "Algebra or triple file, or builtin name")->required();

  auto* product = app.add_subcommand("product", "Metabelian product of a datum file");
  product->add_option("datum", source, "Datum file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (check->parsed()) return cmd_check(g, source);
    if (ito->parsed()) return cmd_ito(g, source, exhaustive, max_pairs, witness_a, witness_b);
    if (census->parsed()) {
      return cmd_census(g, g.field.empty() ? "GF:2" : g.field, census_dim, large, ideal_form, serial);
    }
    if (classify->parsed()) return cmd_classify(g, source);
    if (iso->parsed()) return cmd_iso(g, source, other, witness_path);
    if (aut->parsed()) return cmd_aut(g, source);
    if (product->parsed()) return cmd_product(g, source);
  } catch (const TheoremViolation& e) {
    std::cerr << "property violation: " << e.what() << "\n";
    return kViolation;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
