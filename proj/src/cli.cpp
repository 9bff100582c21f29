#include "crossdrop/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "crossdrop/classify.hpp"
#include "crossdrop/cutsets.hpp"
#include "crossdrop/diagram.hpp"
#include "crossdrop/errors.hpp"
#include "crossdrop/plane_graph.hpp"
#include "crossdrop/polynomials.hpp"
#include "crossdrop/verify.hpp"

namespace crossdrop {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
  int max_recursion_edges = 16;
  int max_subset_edges = 20;
  int max_crossings = 16;
  std::string format = "text";

  QOptions q() const { return {max_recursion_edges, true, PivotOrder::kLowestId}; }
  BracketOptions bracket() const { return {max_crossings, SmoothingConvention::kStandard, 1}; }
  VerifyOptions verify() const { return {q(), max_subset_edges, bracket()}; }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int env_cap(const char* name, int fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (*end != '\0' || value <= 0 || value > std::numeric_limits<int>::max())
    throw UsageError(std::string(name) + " must be a positive integer");
  return static_cast<int>(value);
}

// --- json helpers ------------------------------------------------------------

Json coefficient_json(const BigInt& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

Json poly_json(const LaurentPoly& p, std::string_view var = "A") {
  Json terms = Json::array();
  for (const auto& [exp, c] : p.terms()) terms.push_back({{"exp", exp}, {"coeff", coefficient_json(c)}});
  return {{"text", p.to_string(var)}, {"terms", terms}};
}

bool is_poly(const Json& j) {
  return j.is_object() && j.size() == 2 && j.contains("text") && j.contains("terms");
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  if (is_poly(j)) return j["text"].get<std::string>();
  if (j.is_array()) {
    std::string out;
    for (const Json& x : j) out += (out.empty() ? "" : " ") + scalar_text(x);
    return out;
  }
  return j.dump();
}

std::string quoted(const std::string& s) {
  return s.find(' ') == std::string::npos && !s.empty() ? s : "\"" + s + "\"";
}

std::string inline_object(const Json& j) {
  std::string out;
  for (const auto& [k, v] : j.items()) out += (out.empty() ? "" : " ") + k + "=" + quoted(scalar_text(v));
  return out;
}

std::string singular(const std::string& key) {
  if (key.size() > 1 && key.back() == 's') return key.substr(0, key.size() - 1);
  return key;
}

// Text mirror of a report: one "key: value" line per field; arrays put one
// element per line under the singular key.
void render_text(const Json& doc, std::ostream& out) {
  if (doc.size() == 1 && is_poly(doc.begin().value())) {
    out << scalar_text(doc.begin().value()) << '\n';
    return;
  }
  for (const auto& [key, value] : doc.items()) {
    if (value.is_array() && !value.empty() && !is_poly(value)) {
      for (const Json& x : value) {
        out << singular(key) << ": "
            << (x.is_object() && !is_poly(x) ? inline_object(x) : scalar_text(x)) << '\n';
      }
    } else if (value.is_array()) {
      out << key << ": none\n";
    } else if (value.is_object() && !is_poly(value)) {
      out << key << ": " << inline_object(value) << '\n';
    } else {
      out << key << ": " << scalar_text(value) << '\n';
    }
  }
}

// --- command bodies ----------------------------------------------------------

SignedPlaneGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_graph(buffer.str());
  } catch (const ParseError& e) {
    throw DomainError(path + ": " + e.what());
  }
}

std::string vertex_name(const SignedPlaneGraph& g, int v) { return g.vertices().at(v).name; }

Json edge_names(const SignedPlaneGraph& g, const std::vector<EdgeId>& ids) {
  Json out = Json::array();
  for (EdgeId id : ids) out.push_back(g.edge(id).name);
  return out;
}

Json edge_set_list(const SignedPlaneGraph& g, const std::vector<std::vector<EdgeId>>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(edge_names(g, s));
  return out;
}

Json graph_json(const SignedPlaneGraph& g) {
  Json vertices = Json::array();
  for (const PlaneVertex& v : g.vertices()) {
    Json rotation = Json::array();
    for (Dart d : v.rotation) rotation.push_back(g.dart_name(d));
    vertices.push_back({{"name", v.name}, {"rotation", rotation}});
  }
  Json edges = Json::array();
  for (const PlaneEdge& e : g.edges()) {
    edges.push_back({{"name", e.name},
                     {"sign", std::string(1, sign_char(e.sign))},
                     {"half_edges", {g.dart_name(2 * e.id), g.dart_name(2 * e.id + 1)}}});
  }
  return {{"name", g.name()}, {"vertices", vertices}, {"edges", edges}};
}

Json verdict_json(const SignedPlaneGraph& g, const EdgeVerdict& v) {
  Json neighbors = Json::array();
  for (int w : v.common_neighbors) neighbors.push_back(vertex_name(g, w));
  Json parallels = Json::array();
  for (const ParallelFact& p : v.parallels) {
    parallels.push_back({{"edge", g.edge(p.parallel).name},
                         {"connected", p.connected},
                         {"bridgeless", p.bridgeless}});
  }
  Json caveats = Json::array();
  for (const std::string& c : v.caveats()) caveats.push_back(c);
  return {{"graph", g.name()},
          {"edge", g.edge(v.edge).name},
          {"u", vertex_name(g, v.u)},
          {"v", vertex_name(g, v.v)},
          {"multiplicity", v.multiplicity},
          {"split_status", to_string(v.split_status)},
          {"g_minus_e_has_bridges", v.g_minus_e_has_bridges},
          {"common_neighbors", neighbors},
          {"parallels", parallels},
          {"verdict", to_string(v.verdict)},
          {"clause", clause_label(v.matched)},
          {"conditional_on_alternating", v.conditional_on_alternating},
          {"conditional_on_split_assumption", v.conditional_on_split_assumption},
          {"caveats", caveats}};
}

Json check_json(const CheckResult& c) {
  Json j{{"name", c.name}, {"subject", c.subject}, {"passed", c.passed}};
  if (!c.passed) {
    j["expected"] = c.expected;
    j["actual"] = c.actual;
  }
  return j;
}

struct Outcome {
  Outcome() = default;
  Outcome(Json d, int s = kExitOk, std::optional<std::string> t = std::nullopt)
      : doc(std::move(d)), status(s), text(std::move(t)) {}

  Json doc;
  int status = kExitOk;
  std::optional<std::string> text;  // replaces the generic text rendering
};

Outcome cmd_qpoly(const SignedPlaneGraph& g, const Config& cfg) {
  return Outcome(Json{{"q", poly_json(q_polynomial(g, cfg.q()))}});
}

Outcome cmd_tutte(const SignedPlaneGraph& g, const Config& cfg) {
  Json doc{{"tutte_neg", poly_json(tutte_neg_eval(g.abstract(), cfg.max_subset_edges), "t")}};
  if (is_connected(g.abstract()) && g.abstract().all_positive())
    doc["q_via_tutte"] = poly_json(q_via_tutte(g.abstract(), cfg.max_subset_edges));
  return {doc};
}

Outcome cmd_bracket(const SignedPlaneGraph& g, const Config& cfg, bool listing) {
  const MedialDiagram d = build_medial(g);
  Outcome o(Json{{"bracket", poly_json(kauffman_bracket(d, cfg.bracket()))}});
  if (listing) {
    o.doc["medial"] = medial_listing(d);
    o.text = o.doc["bracket"]["text"].get<std::string>() + "\n" + medial_listing(d);
  }
  return o;
}

Outcome cmd_dual(const SignedPlaneGraph& g) {
  const SignedPlaneGraph d = dual(g);
  return {{{"dual", graph_json(d)}}, kExitOk, d.to_text()};
}

Outcome cmd_components(const SignedPlaneGraph& g) {
  const MedialDiagram d = build_medial(g);
  return {{{"link_components", link_components(d)},
           {"crossings", d.crossing_count()},
           {"pieces", d.pieces()}}};
}

Outcome cmd_cutsets(const SignedPlaneGraph& g) {
  const PdsFamily pds = all_maximal_pds(g.abstract());
  const MultipleEdgeFamily multi = maximal_multiple_edges(g.abstract());
  return {{{"pairwise_disconnecting_sets", edge_set_list(g, pds.sets)},
           {"maximal_multiple_edges", edge_set_list(g, multi.groups)},
           {"pds_excess", pds.excess()},
           {"multiple_edge_excess", multi.excess()}}};
}

Outcome cmd_flip(const SignedPlaneGraph& g, EdgeId e, const Config& cfg) {
  const FlipAnalysis f = analyze_flip(g.abstract(), e, cfg.q());
  const bool ok = f.contracted_identity_holds() && f.deleted_identity_holds();
  Json doc{{"edge", g.edge(e).name},
           {"original", poly_json(f.original)},
           {"flipped", poly_json(f.flipped)},
           {"deleted", poly_json(f.deleted)},
           {"contracted", poly_json(f.contracted)},
           {"via_contracted", poly_json(f.via_contracted)},
           {"via_deleted", poly_json(f.via_deleted)},
           {"contracted_identity", f.contracted_identity_holds() ? "pass" : "fail"},
           {"deleted_identity", f.deleted_identity_holds() ? "pass" : "fail"}};
  if (!f.original.is_zero() && !f.flipped.is_zero()) {
    doc["span_original"] = f.original.span();
    doc["span_flipped"] = f.flipped.span();
  }
  return {doc, ok ? kExitOk : kExitDomain};
}

Outcome cmd_classify(const SignedPlaneGraph& g, EdgeId e, SplitAssumption split) {
  return {verdict_json(g, classify_edge(g.abstract(), e, split))};
}

Outcome cmd_classify_all(const SignedPlaneGraph& g) {
  Json rows = Json::array();
  std::vector<std::string> caveats{kAlternatingCaveat};
  for (const PlaneEdge& pe : g.edges()) {
    const EdgeVerdict v = classify_edge(g.abstract(), pe.id);
    rows.push_back({{"edge", pe.name},
                    {"multiplicity", v.multiplicity},
                    {"split_status", to_string(v.split_status)},
                    {"verdict", to_string(v.verdict)},
                    {"clause", clause_label(v.matched)}});
    for (const std::string& c : v.caveats()) {
      if (std::find(caveats.begin(), caveats.end(), c) == caveats.end()) caveats.push_back(c);
    }
  }
  return {{{"graph", g.name()}, {"edges", rows}, {"caveats", caveats}}};
}

Outcome cmd_corollary(const SignedPlaneGraph& g, int which) {
  const CorollaryReport r = which == 1 ? corollary_knot_check(g) : corollary_simple_check(g);
  Json conditions = Json::array();
  for (const CorollaryCondition& c : r.conditions) {
    Json j{{"name", c.name}, {"passed", c.passed}};
    if (!c.passed) j["witness"] = c.witness;
    conditions.push_back(j);
  }
  return {{{"graph", g.name()},
           {"corollary", r.which},
           {"link_components", r.link_components},
           {"is_knot", r.is_knot},
           {"conditions", conditions},
           {"result", r.passed() ? "pass" : "fail"}}};
}

Outcome cmd_verify(const SignedPlaneGraph& g, std::optional<EdgeId> e, const Config& cfg) {
  const VerifyReport r = verify_graph(g, e, cfg.verify());
  Json checks = Json::array();
  for (const CheckResult& c : r.checks) checks.push_back(check_json(c));
  const int failed = r.failures();
  return {{{"graph", g.name()},
           {"checks", checks},
           {"passed", static_cast<int>(r.checks.size()) - failed},
           {"failed", failed},
           {"result", failed == 0 ? "pass" : "fail"}},
          failed == 0 ? kExitOk : kExitDomain};
}

Outcome cmd_selftest(int max_edges, int threads, const Config& cfg) {
  SelftestOptions options;
  options.max_edges = max_edges;
  options.threads = threads;
  options.verify = cfg.verify();
  const SelftestSummary s = selftest(options);
  Json tallies = Json::array();
  int passed = 0;
  int failed = 0;
  for (const CheckTally& t : s.tallies) {
    tallies.push_back({{"name", t.name}, {"passed", t.passed}, {"failed", t.failed}});
    passed += t.passed;
    failed += t.failed;
  }
  Json failures = Json::array();
  for (const CheckResult& c : s.failures) failures.push_back(check_json(c));
  return {{{"max_edges", max_edges},
           {"enumerated_graphs", s.enumerated_graphs},
           {"corpus_graphs", s.corpus_graphs},
           {"checks", tallies},
           {"failures", failures},
           {"checks_passed", passed},
           {"checks_failed", failed},
           {"result", s.passed() ? "pass" : "fail"}},
          s.passed() ? kExitOk : kExitDomain};
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  try {
    cfg.max_recursion_edges = env_cap("CROSSDROP_MAX_RECURSION_EDGES", cfg.max_recursion_edges);
    cfg.max_subset_edges = env_cap("CROSSDROP_MAX_SUBSET_EDGES", cfg.max_subset_edges);
    cfg.max_crossings = env_cap("CROSSDROP_MAX_CROSSINGS", cfg.max_crossings);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  CLI::App app{"Q-polynomials, Kauffman brackets and crossing-change classification for signed "
               "plane graphs",
               args.empty() ? "crossdrop" : args[0]};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  auto positive = CLI::PositiveNumber;
  app.add_option("--max-recursion-edges", cfg.max_recursion_edges,
                 "Edge cap for the deletion-contraction recursion (env CROSSDROP_MAX_RECURSION_EDGES)")
      ->check(positive);
  app.add_option("--max-subset-edges", cfg.max_subset_edges,
                 "Edge cap for the subset expansion (env CROSSDROP_MAX_SUBSET_EDGES)")
      ->check(positive);
  app.add_option("--max-crossings", cfg.max_crossings,
                 "Crossing cap for the bracket state sum (env CROSSDROP_MAX_CROSSINGS)")
      ->check(positive);
  app.fallthrough();

  std::string file;
  std::string edge;
  int which = 1;
  int max_edges = 7;
  int threads = 1;
  bool listing = false;
  bool assume_split = false;
  bool assume_nonsplit = false;

  auto with_file = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("FILE", file, "Graph file")->required();
    return sub;
  };
  CLI::App* qpoly = with_file("qpoly", "Q-polynomial by deletion-contraction");
  CLI::App* tutte = with_file("tutte", "Tutte polynomial at (-t, -1/t) and its Q specialization");
  CLI::App* bracket = with_file("bracket", "Kauffman bracket of the medial diagram");
  bracket->add_flag("--listing", listing, "Also print the medial diagram");
  CLI::App* dual_cmd = with_file("dual", "Componentwise dual with flipped signs");
  CLI::App* components = with_file("components", "Link components of the medial diagram");
  CLI::App* cutsets = with_file("cutsets", "Maximal pairwise-disconnecting sets and multiple edges");
  CLI::App* flip = with_file("flip", "Q after turning one positive edge negative");
  flip->add_option("--edge", edge, "Edge id")->required();
  CLI::App* classify = with_file("classify", "Does flipping this edge drop the crossing number by exactly two");
  classify->add_option("--edge", edge, "Edge id")->required();
  CLI::Option* split_flag = classify->add_flag("--assume-split", assume_split, "Assert the changed link is split");
  classify->add_flag("--assume-nonsplit", assume_nonsplit, "Assert the changed link is non-split")
      ->excludes(split_flag);
  CLI::App* classify_all = with_file("classify-all", "Classify every edge");
  CLI::App* corollary = with_file("corollary", "Whole-graph check for knots");
  corollary->add_option("--which", which, "1: multigraph form, 2: simple-graph form")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  CLI::App* verify_cmd = with_file("verify", "Cross-check every invariant on one graph");
  verify_cmd->add_option("--edge", edge, "Also check the flip at this edge");
  CLI::App* selftest_cmd = app.add_subcommand("selftest", "Cross-check the enumerated and curated corpus");
  selftest_cmd->add_option("--max-edges", max_edges, "Enumeration edge bound")->check(positive);
  selftest_cmd->add_option("--threads", threads, "Worker threads")->check(positive);

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("crossdrop");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << one_line(e.what()) << '\n';
    return kExitUsage;
  }

  try {
    Outcome o;
    if (selftest_cmd->parsed()) {
      o = cmd_selftest(max_edges, threads, cfg);
    } else {
      const SignedPlaneGraph g = load_graph(file);
      auto edge_ref = [&] { return g.edge_id(edge); };
      if (qpoly->parsed()) o = cmd_qpoly(g, cfg);
      else if (tutte->parsed()) o = cmd_tutte(g, cfg);
      else if (bracket->parsed()) o = cmd_bracket(g, cfg, listing);
      else if (dual_cmd->parsed()) o = cmd_dual(g);
      else if (components->parsed()) o = cmd_components(g);
      else if (cutsets->parsed()) o = cmd_cutsets(g);
      else if (flip->parsed()) o = cmd_flip(g, edge_ref(), cfg);
      else if (classify->parsed()) {
        const SplitAssumption split = assume_split      ? SplitAssumption::kAssertSplit
                                      : assume_nonsplit ? SplitAssumption::kAssertNonsplit
                                                        : SplitAssumption::kAuto;
        o = cmd_classify(g, edge_ref(), split);
      } else if (classify_all->parsed()) o = cmd_classify_all(g);
      else if (corollary->parsed()) o = cmd_corollary(g, which);
      else if (verify_cmd->parsed()) {
        std::optional<EdgeId> e;
        if (!edge.empty()) e = edge_ref();
        o = cmd_verify(g, e, cfg);
      }
    }
    if (cfg.format == "json") out << o.doc.dump(2) << '\n';
    else if (o.text) out << *o.text;
    else render_text(o.doc, out);
    return o.status;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << one_line(e.what()) << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kExitDomain;
  }
}

}  // namespace crossdrop
