#include "crossdrop/classify.hpp"

#include <algorithm>

#include "crossdrop/cutsets.hpp"
#include "crossdrop/diagram.hpp"
#include "crossdrop/errors.hpp"

namespace crossdrop {

std::string to_string(SplitStatus s) {
  switch (s) {
    case SplitStatus::kKnownSplit: return "known_split";
    case SplitStatus::kAssumedNonsplit: return "assumed_nonsplit";
    case SplitStatus::kAssertedSplit: return "asserted_split";
    case SplitStatus::kAssertedNonsplit: return "asserted_nonsplit";
  }
  return "unknown";
}

std::string to_string(Verdict v) {
  return v == Verdict::kExactlyTwo ? "EXACTLY_TWO" : "NOT_EXACTLY_TWO";
}

std::string clause_label(MatchedClause c) {
  switch (c) {
    case MatchedClause::kNone: return "none";
    case MatchedClause::kSplitParallelPair: return "1";
    case MatchedClause::kSimpleEdge: return "2(1)";
    case MatchedClause::kParallelEdge: return "2(2)";
  }
  return "none";
}

std::vector<std::string> EdgeVerdict::caveats() const {
  std::vector<std::string> out{kAlternatingCaveat};
  if (split_status == SplitStatus::kAssumedNonsplit) out.emplace_back(kNonsplitCaveat);
  if (split_status == SplitStatus::kAssertedSplit ||
      split_status == SplitStatus::kAssertedNonsplit)
    out.emplace_back(kAssertedCaveat);
  return out;
}

namespace {

void require_reduced_positive(const SignedGraph& g, const char* op) {
  const BridgeInfo bi = bridges_components(g);
  if (bi.components != 1) throw DomainError(std::string(op) + ": graph is not connected");
  if (g.has_loops()) throw DomainError(std::string(op) + ": graph has a loop");
  if (!bi.bridges.empty()) throw DomainError(std::string(op) + ": graph has a bridge");
  if (!g.all_positive())
    throw DomainError(std::string(op) +
                      ": graph has a negative edge; classify the dual graph instead");
}

}  // namespace

EdgeVerdict classify_edge(const SignedGraph& g, EdgeId e, SplitAssumption split) {
  require_reduced_positive(g, "classify_edge");
  const GraphEdge& edge = g.edge(e);

  EdgeVerdict out;
  out.edge = e;
  out.u = edge.u;
  out.v = edge.v;
  const MultiplicityInfo mi = multiplicity_info(g);
  out.multiplicity = mi.multiplicity.at(e);
  const SignedGraph without = g.without_edge(e);
  out.g_minus_e_has_bridges = has_bridges(without);
  out.common_neighbors = common_neighbors(g, edge.u, edge.v);

  bool disconnecting_pair = false;
  for (const GraphEdge& f : g.edges()) {
    if (f.id == e || !f.joins(edge.u, edge.v)) continue;
    const SignedGraph rest = without.without_edge(f.id);
    const BridgeInfo bi = bridges_components(rest);
    out.parallels.push_back({f.id, bi.components == 1, bi.bridges.empty()});
    disconnecting_pair = disconnecting_pair || bi.components != 1;
  }
  if (disconnecting_pair && out.multiplicity != 2)
    throw InvariantViolation("a disconnecting parallel pair requires multiplicity two");

  if (disconnecting_pair) {
    out.split_status = SplitStatus::kKnownSplit;
  } else {
    switch (split) {
      case SplitAssumption::kAuto: out.split_status = SplitStatus::kAssumedNonsplit; break;
      case SplitAssumption::kAssertSplit: out.split_status = SplitStatus::kAssertedSplit; break;
      case SplitAssumption::kAssertNonsplit:
        out.split_status = SplitStatus::kAssertedNonsplit;
        break;
    }
  }
  out.conditional_on_split_assumption = out.split_status != SplitStatus::kKnownSplit;

  const bool split_branch = out.split_status == SplitStatus::kKnownSplit ||
                            out.split_status == SplitStatus::kAssertedSplit;
  if (split_branch) {
    if (out.multiplicity == 2 && disconnecting_pair) out.matched = MatchedClause::kSplitParallelPair;
  } else if (out.multiplicity == 1) {
    if (out.g_minus_e_has_bridges && out.common_neighbors.empty())
      out.matched = MatchedClause::kSimpleEdge;
  } else {
    // Every parallel f leaves the same graph up to relabeling; all must agree.
    const bool all_good = std::all_of(out.parallels.begin(), out.parallels.end(),
                                      [](const ParallelFact& p) { return p.connected && p.bridgeless; });
    if (all_good) out.matched = MatchedClause::kParallelEdge;
  }
  out.verdict = out.matched == MatchedClause::kNone ? Verdict::kNotExactlyTwo : Verdict::kExactlyTwo;
  return out;
}

bool CorollaryReport::conditions_pass() const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [](const CorollaryCondition& c) { return c.passed; });
}

namespace {

std::string edge_list(const SignedPlaneGraph& g, std::initializer_list<EdgeId> ids) {
  std::string out;
  for (EdgeId id : ids) {
    if (!out.empty()) out += ' ';
    out += g.edge(id).name;
  }
  return out;
}

std::string triangle_witness(const SignedPlaneGraph& g, const Triangle& t) {
  return "triangle " + g.vertices()[t.vertices[0]].name + " " + g.vertices()[t.vertices[1]].name +
         " " + g.vertices()[t.vertices[2]].name + " via " +
         edge_list(g, {t.edges[0], t.edges[1], t.edges[2]});
}

bool is_two_edge_connected(const SignedGraph& g) {
  const BridgeInfo bi = bridges_components(g);
  return bi.components == 1 && bi.bridges.empty();
}

CorollaryReport start_report(const SignedPlaneGraph& g, int which) {
  require_reduced_positive(g.abstract(), which == 1 ? "corollary 1" : "corollary 2");
  CorollaryReport report;
  report.which = which;
  report.link_components = link_components(build_medial(g));
  report.is_knot = report.link_components == 1;
  return report;
}

}  // namespace

CorollaryReport corollary_knot_check(const SignedPlaneGraph& g) {
  CorollaryReport report = start_report(g, 1);
  const SignedGraph& abstract = g.abstract();
  const MultiplicityInfo mi = multiplicity_info(abstract);

  CorollaryCondition triangle{"quasi_simple_triangle_free", true, ""};
  if (auto t = find_triangle(abstract, true)) {
    triangle.passed = false;
    triangle.witness = triangle_witness(g, *t);
  }

  CorollaryCondition single{"simple_edges_irreducible", true, ""};
  for (const GraphEdge& e : abstract.edges()) {
    if (mi.multiplicity.at(e.id) != 1) continue;
    if (is_two_edge_connected(abstract.without_edge(e.id))) {
      single.passed = false;
      single.witness = "reducible edge " + g.edge(e.id).name;
      break;
    }
  }

  CorollaryCondition pairs{"multiple_edge_pairs_reducible", true, ""};
  for (const auto& group : mi.maximal_multiple_edges) {
    const EdgeId pair[] = {group[0], group[1]};
    if (!is_two_edge_connected(abstract.without_edges(pair))) {
      pairs.passed = false;
      pairs.witness = "irreducible pair " + edge_list(g, {group[0], group[1]});
      break;
    }
  }

  report.conditions = {triangle, single, pairs};
  return report;
}

CorollaryReport corollary_simple_check(const SignedPlaneGraph& g) {
  const SignedGraph& abstract = g.abstract();
  if (abstract.has_loops() || !multiplicity_info(abstract).maximal_multiple_edges.empty())
    throw DomainError("corollary 2: graph is not simple");
  CorollaryReport report = start_report(g, 2);

  CorollaryCondition triangle{"triangle_free", true, ""};
  if (auto t = find_triangle(abstract)) {
    triangle.passed = false;
    triangle.witness = triangle_witness(g, *t);
  }
  CorollaryCondition minimal{"minimal_2_edge_connected", true, ""};
  for (const GraphEdge& e : abstract.edges()) {
    if (!has_bridges(abstract.without_edge(e.id))) {
      minimal.passed = false;
      minimal.witness = "reducible edge " + g.edge(e.id).name;
      break;
    }
  }
  report.conditions = {triangle, minimal};
  return report;
}

}  // namespace crossdrop
