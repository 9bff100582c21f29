// Acceptance suite: prints one PASS/FAIL line per criterion and exits nonzero
// if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "crossdrop/classify.hpp"
#include "crossdrop/corpus.hpp"
#include "crossdrop/cutsets.hpp"
#include "crossdrop/diagram.hpp"
#include "crossdrop/polynomials.hpp"
#include "crossdrop/verify.hpp"

using namespace crossdrop;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> problems;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (problems.size() < 5) problems.push_back(what);
    }
  }
};

std::string graph_label(const SignedGraph& g) {
  std::ostringstream out;
  out << "V=" << g.vertex_count() << " E={";
  for (const GraphEdge& e : g.edges()) out << ' ' << e.u << '-' << e.v;
  out << " }";
  return out.str();
}

LaurentPoly P(std::string_view s) { return LaurentPoly::parse(s); }

const std::vector<SignedGraph>& bridgeless8() {
  static const std::vector<SignedGraph> graphs = enumerate_test_graphs({8, 8, false});
  return graphs;
}

// 1. Point values.
Outcome point_values() {
  Outcome o;
  const std::pair<const char*, const char*> expected[] = {
      {"E2", "-A^2 - A^-2"},       {"B1", "-A^-3"},           {"C2", "-A^4 - A^-4"},
      {"C3", "A^-7 - A^-3 - A^5"}, {"Theta3", "A^7 - A^3 - A^-5"},
  };
  for (const auto& [name, value] : expected) {
    const LaurentPoly q = q_polynomial(corpus_graph(name));
    o.require(q == P(value), std::string(name) + " gave " + q.to_string());
  }
  o.detail = "5 exact values";
  return o;
}

// 2. Bracket of the medial diagram equals Q on the embedded corpus.
Outcome bracket_equals_q(SmoothingConvention convention, std::vector<std::string>* mismatched) {
  Outcome o;
  int graphs = 0, mixed = 0;
  for (const CorpusGraph& c : curated_corpus()) {
    if (c.graph.edge_count() > 12) continue;
    ++graphs;
    if (!c.graph.abstract().all_positive()) ++mixed;
    const LaurentPoly q = q_polynomial(c.graph);
    const LaurentPoly b = kauffman_bracket(build_medial(c.graph), {16, convention, 1});
    if (q != b && mismatched) mismatched->push_back(c.name);
    o.require(q == b, c.name + ": Q " + q.to_string() + " vs bracket " + b.to_string());
  }
  o.require(graphs >= 12 && mixed >= 3, "corpus too small");
  o.detail = std::to_string(graphs) + " graphs, " + std::to_string(mixed) + " mixed-sign";
  return o;
}

// 3. Recursion equals the Tutte specialization on every connected positive
// loopless multigraph with at most 8 edges.
Outcome tutte_specialization() {
  Outcome o;
  const auto graphs = enumerate_test_graphs({9, 8, true});
  for (const SignedGraph& g : graphs)
    o.require(q_polynomial(g) == q_via_tutte(g), graph_label(g));
  o.require(graphs.size() >= 100, "enumeration too small");
  o.detail = std::to_string(graphs.size()) + " graphs";
  return o;
}

// 4. Q is invariant under the componentwise dual.
Outcome dual_invariance() {
  Outcome o;
  int n = 0;
  for (const CorpusGraph& c : curated_corpus()) {
    const SignedPlaneGraph d = dual(c.graph);
    o.require(q_polynomial(c.graph) == q_polynomial(d), c.name);
    o.require(q_polynomial(d) == q_polynomial(dual(d)), c.name + " double dual");
    ++n;
  }
  o.detail = std::to_string(n) + " graphs and their duals";
  return o;
}

// 5. Extreme degrees and coefficients of Q.
Outcome extreme_coefficients() {
  Outcome o;
  for (const SignedGraph& g : bridgeless8()) {
    const LaurentPoly q = q_polynomial(g);
    const ExtremeCoefficients p = extreme_coeff_predictions(g);
    const ExtremeCoefficients seen = observed_extremes(q, p);
    o.require(q.max_degree() == p.highest.degree && q.min_degree() == p.lowest.degree &&
                  seen.highest == p.highest && seen.second_highest == p.second_highest &&
                  seen.lowest == p.lowest && seen.second_lowest == p.second_lowest,
              graph_label(g));
  }
  o.detail = std::to_string(bridgeless8().size()) + " graphs";
  return o;
}

// 6. Second coefficients of T(-t,-1/t) from cut sets and multiple edges, and
// the cut/multiple-edge duality on the embedded corpus.
Outcome tutte_second_coefficients() {
  Outcome o;
  for (const SignedGraph& g : bridgeless8()) {
    const LaurentPoly t = tutte_neg_eval(g);
    const TopCoefficients top = dl_extreme_coeffs(g);
    const BottomCoefficients bottom = dual_extreme_coeffs(g);
    o.require(t.coeff(top.m) == top.a_m && t.coeff(top.m - 1) == top.a_m_minus_1 &&
                  t.coeff(bottom.n) == bottom.a_n && t.coeff(bottom.n + 1) == bottom.a_n_plus_1,
              graph_label(g));
  }
  int dual_pairs = 0;
  for (const CorpusGraph& c : curated_corpus()) {
    const SignedGraph& g = c.graph.abstract();
    if (g.edge_count() == 0 || !is_connected(g) || !is_bridgeless(g) || g.has_loops()) continue;
    const SignedGraph d = dual(c.graph).abstract();
    o.require(all_maximal_pds(g).sets == maximal_multiple_edges(d).groups, c.name + " PDS");
    o.require(maximal_multiple_edges(g).groups == all_maximal_pds(d).sets, c.name + " multi");
    ++dual_pairs;
  }
  o.detail = std::to_string(bridgeless8().size()) + " graphs, " + std::to_string(dual_pairs) +
             " embedded duality pairs";
  return o;
}

int sign_of(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

// 7. Coefficients of the flipped polynomial for multiplicity-one edges.
Outcome flip_coefficients() {
  Outcome o;
  int pairs = 0;
  for (const SignedGraph& g : bridgeless8()) {
    const int E = g.edge_count(), V = g.vertex_count();
    const MultiplicityInfo mi = multiplicity_info(g);
    const PdsFamily pds = all_maximal_pds(g);
    for (const GraphEdge& e : g.edges()) {
      if (mi.multiplicity.at(e.id) != 1) continue;
      ++pairs;
      const LaurentPoly flipped = q_after_flip(g, e.id);
      const int k = pds.containing(e.id) ? 1 : 0;
      const int es = mi.simplified_edge_count;
      const int es2 = multiplicity_info(g.contracted(e.id)).simplified_edge_count;
      const int faces = E - V + 2;
      o.require(flipped.coeff(E + 2 * faces - 4) == sign_of(E - V + 1) * k,
                graph_label(g) + " top at edge " + std::to_string(e.id));
      o.require(flipped.coeff(-E - 2 * V + 8) == sign_of(V - 1) * (es2 + 2 - es),
                graph_label(g) + " bottom at edge " + std::to_string(e.id));
      const int shared = static_cast<int>(common_neighbors(g, e.u, e.v).size());
      o.require(es == es2 + 1 + shared, graph_label(g) + " |E_s| identity");
    }
  }
  o.detail = std::to_string(pairs) + " (G, e) pairs";
  return o;
}

// 8. Span drop and its characterization by the edge classification.
Outcome span_drop() {
  Outcome o;
  int pairs = 0, exact = 0;
  for (const SignedGraph& g : bridgeless8()) {
    const int span = q_polynomial(g).span();
    for (const GraphEdge& e : g.edges()) {
      const EdgeVerdict v = classify_edge(g, e.id);
      bool disconnecting_pair = false;
      for (const ParallelFact& p : v.parallels) disconnecting_pair |= !p.connected;
      if (disconnecting_pair) continue;
      ++pairs;
      const int flipped = q_after_flip(g, e.id).span();
      o.require(flipped <= span - 8, graph_label(g) + " edge " + std::to_string(e.id) + " span");
      const bool equal = flipped == span - 8;
      exact += equal ? 1 : 0;
      o.require(equal == (v.verdict == Verdict::kExactlyTwo),
                graph_label(g) + " edge " + std::to_string(e.id) + " verdict " +
                    to_string(v.verdict));
    }
  }
  o.detail = std::to_string(pairs) + " pairs, " + std::to_string(exact) + " with drop exactly 8";
  return o;
}

// 9. Parallel edges of opposite sign cancel.
Outcome parallel_cancellation() {
  Outcome o;
  int pairs = 0;
  for (const SignedGraph& g : bridgeless8()) {
    for (const GraphEdge& e : g.edges()) {
      for (const GraphEdge& f : g.edges()) {
        if (f.id == e.id || !f.joins(e.u, e.v)) continue;
        const EdgeId both[] = {e.id, f.id};
        const SignedGraph rest = g.without_edges(both);
        if (!is_connected(rest)) continue;
        ++pairs;
        o.require(q_after_flip(g, e.id) == q_polynomial(rest), graph_label(g));
      }
    }
  }
  o.require(pairs > 0, "no applicable pairs");
  o.detail = std::to_string(pairs) + " (G, e, f) triples";
  return o;
}

// 10. Torus knot narratives and the two negative examples.
Outcome knot_narratives() {
  Outcome o;
  for (int n : {5, 7, 9}) {
    const SignedPlaneGraph g = cycle_graph(n);
    const MedialDiagram d = build_medial(g);
    o.require(link_components(d) == 1, "C" + std::to_string(n) + " is not a knot");
    o.require(span_k(d).span_v == n, "C" + std::to_string(n) + " span");
    for (const GraphEdge& e : g.abstract().edges())
      o.require(classify_edge(g.abstract(), e.id).verdict == Verdict::kExactlyTwo,
                "C" + std::to_string(n) + " edge " + std::to_string(e.id));
    o.require(corollary_simple_check(g).passed(), "C" + std::to_string(n) + " corollary");
  }
  const SignedPlaneGraph c3 = cycle_graph(3);
  for (const GraphEdge& e : c3.abstract().edges()) {
    const EdgeVerdict v = classify_edge(c3.abstract(), e.id);
    o.require(v.verdict == Verdict::kNotExactlyTwo && v.common_neighbors.size() == 1, "C3 edge");
  }
  const CorollaryReport c3r = corollary_simple_check(c3);
  o.require(!c3r.passed() && !c3r.conditions[0].passed &&
                c3r.conditions[0].witness == "triangle v1 v2 v3 via e1 e2 e3",
            "C3 triangle witness: " + c3r.conditions[0].witness);
  const SignedPlaneGraph theta = corpus_graph("Theta3");
  for (const GraphEdge& e : theta.abstract().edges()) {
    const EdgeVerdict v = classify_edge(theta.abstract(), e.id);
    bool bridge_left = !v.parallels.empty();
    for (const ParallelFact& p : v.parallels) bridge_left &= p.connected && !p.bridgeless;
    o.require(v.verdict == Verdict::kNotExactlyTwo && bridge_left, "Theta3 edge");
  }
  const CorollaryReport tr = corollary_knot_check(theta);
  o.require(!tr.passed() && !tr.conditions[2].passed &&
                tr.conditions[2].witness == "irreducible pair e1 e2",
            "Theta3 pair witness: " + tr.conditions[2].witness);
  o.detail = "C5, C7, C9 pass; C3 triangle and Theta3 pair witnesses";
  return o;
}

// 11. A corrupted smoothing convention must break criterion 2 on C2.
Outcome negative_control() {
  Outcome o;
  std::vector<std::string> mismatched;
  const Outcome corrupted = bracket_equals_q(SmoothingConvention::kAlternatingMirror, &mismatched);
  const bool c2_caught = std::find(mismatched.begin(), mismatched.end(), "C2") != mismatched.end();
  o.require(!corrupted.ok, "corrupted convention still passes criterion 2");
  o.require(c2_caught, "C2 not caught");
  o.detail = "corrupted convention fails on " + std::to_string(mismatched.size()) +
             " graphs including C2";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"point values of Q", point_values},
      {"bracket of the medial diagram equals Q",
       [] { return bracket_equals_q(SmoothingConvention::kStandard, nullptr); }},
      {"Q equals the Tutte specialization", tutte_specialization},
      {"Q is invariant under duality", dual_invariance},
      {"extreme degrees and coefficients of Q", extreme_coefficients},
      {"second Tutte coefficients and cut/multiple-edge duality", tutte_second_coefficients},
      {"flipped-polynomial coefficient formulas", flip_coefficients},
      {"span drop and its characterization", span_drop},
      {"opposite-sign parallel edges cancel", parallel_cancellation},
      {"torus knot narratives and negative examples", knot_narratives},
      {"negative control on the smoothing convention", negative_control},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.problems.push_back(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first
              << " (" << o.detail << "; " << static_cast<int>(secs * 1000) << " ms)\n";
    for (const std::string& p : o.problems) std::cout << "    " << p << '\n';
    failed += o.ok ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << '\n';
  return failed == 0 ? 0 : 1;
}
