#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "object_spec.hpp"
#include "towerkit/categories.hpp"
#include "towerkit/holim.hpp"
#include "towerkit/homalg.hpp"
#include "towerkit/io.hpp"
#include "towerkit/suites.hpp"

namespace towerkit::cli {

nlohmann::ordered_json RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["bound"] = bound;
  j["ex_depth"] = ex_depth;
  j["cap"] = cap;
  j["format"] = format;
  j["seedless"] = true;
  return j;
}

namespace {

/// Failure that maps to exit code 1 after the report is written.
struct Outcome {
  int code = 0;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string join_words(const std::vector<std::string>& words) {
  std::string s;
  for (const auto& w : words) s += (s.empty() ? "" : " ") + w;
  return s;
}

Limits limits_of(const RunConfig& cfg) {
  Limits l;
  l.cap = cfg.cap;
  return l;
}

/// Writes `text` to stdout, or to --out when given.
void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw Error("cannot write " + cfg.out);
  f << text;
}

/// Report commands: the chosen format on stdout, and <out>.json plus <out>.csv with --out.
void emit_report(const RunConfig& cfg, const nlohmann::ordered_json& json, const std::string& csv,
                 const std::string& table, std::ostream& out) {
  const std::string js = json.dump(2) + "\n";
  out << (cfg.format == "json" ? js : cfg.format == "csv" ? csv : table);
  if (cfg.out.empty()) return;
  for (const auto& [ext, text] : {std::pair{std::string(".json"), js}, std::pair{std::string(".csv"), csv}}) {
    std::ofstream f(cfg.out + ext);
    if (!f) throw Error("cannot write " + cfg.out + ext);
    f << text;
  }
}

std::string f_vector_text(const std::vector<std::size_t>& f) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s;
}

Outcome cmd_build(const RunConfig& cfg, const std::string& spec, std::ostream& out) {
  const BuiltObject b = build_object(spec);
  nlohmann::ordered_json j;
  j["config"] = cfg.to_json();
  j["object"] = spec;
  j["kind"] = b.kind;
  std::ostringstream csv, table;
  if (b.complex) {
    j["f_vector"] = b.complex->f_vector();
    j["complex"] = complex_to_json(*b.complex);
    csv << "dimension,faces\n";
    for (std::size_t d = 0; d < b.complex->f_vector().size(); ++d) csv << d << "," << b.complex->f_vector()[d] << "\n";
    table << spec << "\nf-vector (" << f_vector_text(b.complex->f_vector()) << ")\nfacets:";
    for (const auto& f : b.complex->facets()) {
      table << " {";
      for (std::size_t i = 0; i < f.size(); ++i) table << (i ? "," : "") << b.complex->labels()[f[i]];
      table << "}";
    }
    table << "\n";
  } else {
    j["cells"] = b.set->cell_counts();
    j["sset"] = sset_to_json(*b.set);
    csv << "degree,cells\n";
    for (std::size_t d = 0; d < b.set->cell_counts().size(); ++d) csv << d << "," << b.set->cell_counts()[d] << "\n";
    table << spec << "\nnondegenerate cells (" << f_vector_text(b.set->cell_counts()) << ") through degree "
          << b.set->bound() << "\n";
  }
  emit(cfg, cfg.format == "json" ? j.dump(2) + "\n" : cfg.format == "csv" ? csv.str() : table.str(), out);
  return {};
}

Outcome cmd_homology(const RunConfig& cfg, const std::string& spec, std::ostream& out) {
  const BuiltObject b = build_object(spec);
  const SimplicialSet x = b.as_set();
  int top = cfg.bound;
  if (top < 0) top = b.complex ? std::max(b.complex->dimension(), 0) : std::max(x.bound() - 1, 0);
  const HomologyResult h = homology(x, top, true);
  nlohmann::ordered_json j;
  j["config"] = cfg.to_json();
  j["object"] = spec;
  j["homology"] = homology_to_json(h);
  std::ostringstream table;
  table << spec << "\ndegree  betti  torsion\n";
  for (const auto& g : h.groups) {
    table << std::left << std::setw(8) << g.degree << std::setw(7) << g.betti;
    for (std::size_t i = 0; i < g.torsion.size(); ++i) table << (i ? " " : "") << "Z/" << g.torsion[i].str();
    table << "\n";
  }
  emit(cfg, cfg.format == "json" ? j.dump(2) + "\n" : cfg.format == "csv" ? homology_csv(h) : table.str(), out);
  return {};
}

Outcome cmd_tower(const RunConfig& cfg, const std::string& spec, std::ostream& out) {
  std::string fspec = "identity", xword;
  std::size_t fpos = 0, xpos = 0;
  int k = 0, n_lo = 0, n_hi = 1, bound = cfg.bound < 0 ? 1 : cfg.bound;
  for (const Token& t : tokenize(spec)) {
    const auto kv = key_value(t);
    if (!kv) throw ParseError("expected key=value, got '" + t.text + "'", t.pos);
    const std::size_t vpos = t.pos + kv->first.size() + 1;
    if (kv->first == "F") {
      fspec = kv->second;
      fpos = vpos;
    } else if (kv->first == "X") {
      xword = kv->second;
      xpos = vpos;
    } else if (kv->first == "k") {
      k = parse_int(kv->second, vpos);
    } else if (kv->first == "n") {
      std::tie(n_lo, n_hi) = parse_range(kv->second, vpos);
    } else if (kv->first == "bound") {
      bound = parse_int(kv->second, vpos);
    } else {
      throw ParseError("unknown key '" + kv->first + "'", t.pos);
    }
  }
  if (xword.empty()) throw ParseError("missing X=", spec.size());
  if (k < 0 || n_lo < 0 || bound < 0) throw ParseError("k, n and bound must be non-negative", 0);
  FunctorSpec f;
  try {
    f = FunctorSpec::parse(fspec, [](const std::string& w) { return resolve_complex(w, 0); });
  } catch (const ParseError& e) {
    throw ParseError("in F=: " + e.message(), fpos + e.position());
  }
  const SimplicialComplex x = resolve_complex(xword, xpos);
  const TowerReport r = tower_report(f, xword, x, k, n_lo, n_hi, bound, cfg.ex_depth, limits_of(cfg));
  nlohmann::ordered_json j;
  j["config"] = cfg.to_json();
  j["tower"] = r.to_json();
  std::ostringstream table;
  table << "tower " << r.functor << " on " << r.space << ", row k=" << r.k << ", ex depth " << r.ex_depth << "\n";
  for (const auto& s : r.stages) {
    table << "  n=" << s.n << "  ";
    if (s.capped) {
      table << "capped\n";
      continue;
    }
    table << "cells (" << f_vector_text(s.cells) << ")  " << describe(s.homology) << "\n";
  }
  for (const auto& m : r.maps) {
    table << "  " << m.from << " -> " << m.to << "  ranks";
    for (int v : m.ranks) table << " " << v;
    table << "\n";
  }
  if (r.composition_ok) table << "  H_0 composition " << (*r.composition_ok ? "ok" : "broken") << "\n";
  emit_report(cfg, j, r.to_csv(), table.str(), out);
  return {r.composition_ok && !*r.composition_ok ? 1 : 0};
}

Outcome cmd_cofinality(const RunConfig& cfg, const std::string& spec, std::ostream& out) {
  const auto tokens = tokenize(spec);
  if (tokens.empty()) throw ParseError("expected cn, identity, inclusion or @file", 0);
  const Token& head = tokens.front();
  std::map<std::string, Token> kv;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const auto p = key_value(tokens[i]);
    if (!p) throw ParseError("expected key=value, got '" + tokens[i].text + "'", tokens[i].pos);
    kv[p->first] = Token{p->second, tokens[i].pos + p->first.size() + 1};
  }
  auto get = [&](const std::string& key) {
    const auto it = kv.find(key);
    if (it == kv.end()) throw ParseError("missing " + key + "=", head.pos);
    return parse_int(it->second.text, it->second.pos);
  };
  CofinalityMode mode = CofinalityMode::comma_nerve;
  CommaSide side = CommaSide::over;
  if (kv.count("mode")) {
    const Token& t = kv.at("mode");
    if (t.text == "delta") mode = CofinalityMode::delta_shaped;
    else if (t.text != "comma") throw ParseError("mode must be comma or delta", t.pos);
  }
  if (kv.count("side")) {
    const Token& t = kv.at("side");
    if (t.text == "under") side = CommaSide::under;
    else if (t.text != "over") throw ParseError("side must be over or under", t.pos);
  }
  FunctorBetween g;
  if (head.text == "cn") {
    g = c_functor(get("n"));
  } else if (head.text == "identity") {
    g = identity_functor(std::make_shared<const FiniteCategory>(truncated_simplex_category(get("n"))));
  } else if (head.text == "inclusion") {
    g = simplex_inclusion(get("m"), get("n"));
  } else if (!head.text.empty() && head.text[0] == '@') {
    std::ifstream in(head.text.substr(1));
    if (!in) throw ParseError("cannot read '" + head.text.substr(1) + "'", head.pos + 1);
    nlohmann::json cj;
    try {
      in >> cj;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(e.what(), head.pos + 1);
    }
    g = identity_functor(std::make_shared<const FiniteCategory>(category_from_json(cj)));
  } else {
    throw ParseError("unknown functor '" + head.text + "'", head.pos);
  }
  const int bound = cfg.bound < 0 ? 3 : cfg.bound;
  const CofinalityReport r = cofinality_report(g, mode, bound, side, limits_of(cfg));
  nlohmann::ordered_json j;
  j["config"] = cfg.to_json();
  j["functor"] = spec;
  j["report"] = r.to_json();
  std::ostringstream csv, table;
  csv << "object,cells,homology,certificate,verdict\n";
  table << "cofinality " << spec << " (" << to_string(r.mode) << ", " << to_string(r.side) << ", bound " << r.bound
        << ")\n";
  for (const auto& e : r.entries) {
    csv << csv_field(e.object) << "," << csv_field(f_vector_text(e.cells)) << "," << csv_field(describe(e.homology))
        << "," << csv_field(e.certificate) << "," << to_string(e.verdict) << "\n";
    table << "  " << std::left << std::setw(14) << e.object << std::setw(32) << describe(e.homology)
          << to_string(e.verdict) << (e.certificate.empty() ? "" : "  [" + e.certificate + "]") << "\n";
  }
  emit_report(cfg, j, csv.str(), table.str(), out);
  return {r.all_trivial() ? 0 : 1};
}

Outcome cmd_suite(const RunConfig& cfg, const std::vector<std::string>& words, std::ostream& out) {
  std::vector<std::string> names = words;
  if (names.empty() || (names.size() == 1 && names[0] == "all")) names = suite_names();
  for (std::size_t i = 0, pos = 0; i < names.size(); pos += names[i].size() + 1, ++i)
    if (std::find(suite_names().begin(), suite_names().end(), names[i]) == suite_names().end())
      throw ParseError("unknown suite '" + names[i] + "'", pos);
  nlohmann::ordered_json j;
  j["config"] = cfg.to_json();
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  std::ostringstream csv, table;
  csv << "suite,input,claim,expected,observed,verdict\n";
  bool ok = true;
  for (const auto& name : names) {
    const SuiteResult r = run_suite(name, limits_of(cfg));
    ok = ok && r.passed();
    arr.push_back(r.to_json(cfg.timings));
    table << r.to_table(cfg.timings) << "\n";
    for (const auto& c : r.cases)
      csv << name << "," << csv_field(c.input) << "," << csv_field(c.claim) << "," << csv_field(c.expected) << ","
          << csv_field(c.observed) << "," << c.verdict << "\n";
  }
  j["suites"] = arr;
  j["passed"] = ok;
  emit_report(cfg, j, csv.str(), table.str(), out);
  return {ok ? 0 : 1};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite models of simplicial constructions, homotopy limits and tower stages"};
  app.name("towerkit");
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--bound", cfg.bound, "Homology degree bound (command default when omitted)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--ex-depth", cfg.ex_depth, "Number of Ex iterations on values")->check(CLI::Range(0, 4));
  app.add_option("--cap", cfg.cap, "Enumeration cap per degree")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--out", cfg.out, "Output file (reports: prefix for .json and .csv)");
  app.add_flag("--timings", cfg.timings, "Add wall-clock seconds to suite reports");

  std::vector<std::string> words;
  auto* build = app.add_subcommand("build", "Build an object and print it");
  build->add_option("spec", words, "Object spec, e.g. \"Yk k=1 p=1\"")->required();
  auto* hom = app.add_subcommand("homology", "Reduced homology of an object");
  hom->add_option("spec", words, "Object spec")->required();
  auto* tower = app.add_subcommand("tower", "Tower stages and restriction maps");
  tower->add_option("spec", words, "F=... X=... k=K n=A..B [bound=B]")->required();
  auto* cof = app.add_subcommand("cofinality", "Cofinality report of a functor");
  cof->add_option("spec", words, "cn n=N | identity n=N | inclusion m=M n=N | @category.json, [mode=] [side=]")
      ->required();
  auto* suite = app.add_subcommand("suite", "Run verification suites");
  suite->add_option("names", words, "Suite names or 'all'");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string spec = join_words(words);
  cfg.command = sub->get_name() + (spec.empty() ? "" : " " + spec);
  try {
    Outcome o;
    if (sub == build) o = cmd_build(cfg, spec, out);
    else if (sub == hom) o = cmd_homology(cfg, spec, out);
    else if (sub == tower) o = cmd_tower(cfg, spec, out);
    else if (sub == cof) o = cmd_cofinality(cfg, spec, out);
    else o = cmd_suite(cfg, words, out);
    return o.code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n  " << spec << "\n  " << std::string(std::min(e.position(), spec.size()), ' ')
        << "^\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace towerkit::cli
