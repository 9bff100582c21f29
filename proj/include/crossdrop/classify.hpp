#pragma once

// Decides when turning one edge of a positive plane graph from + to - drops
// the crossing number of the corresponding alternating link by exactly two,
// and the whole-graph checks built on that decision.
//
// The graph-level criterion is exact only under two assumptions about the
// changed link: that it is alternating, and whether it is split. Neither is
// decided here; verdicts carry caveats naming the assumptions they rest on.

#include <optional>
#include <string>
#include <vector>

#include "crossdrop/plane_graph.hpp"
#include "crossdrop/signed_graph.hpp"

namespace crossdrop {

enum class SplitAssumption { kAuto, kAssertSplit, kAssertNonsplit };
enum class SplitStatus { kKnownSplit, kAssumedNonsplit, kAssertedSplit, kAssertedNonsplit };
enum class Verdict { kExactlyTwo, kNotExactlyTwo };

/// Which clause of the criterion produced EXACTLY_TWO.
enum class MatchedClause {
  kNone,
  kSplitParallelPair,   // split: mu(e) = 2 and G-e-f disconnected ("1")
  kSimpleEdge,          // mu(e) = 1, G-e has bridges, N(u) ∩ N(v) empty ("2(1)")
  kParallelEdge,        // mu(e) > 1, G-e-f connected and bridgeless ("2(2)")
};

std::string to_string(SplitStatus s);
std::string to_string(Verdict v);
/// "1", "2(1)", "2(2)" or "none".
std::string clause_label(MatchedClause c);

struct ParallelFact {
  EdgeId parallel;
  bool connected = false;   // G - e - f
  bool bridgeless = false;  // G - e - f
};

inline constexpr const char* kAlternatingCaveat =
    "crossing-number conclusion is conditional on the changed link being alternating";
inline constexpr const char* kNonsplitCaveat =
    "changed link assumed non-split; not certified by the graph";
inline constexpr const char* kAssertedCaveat =
    "split status taken from the caller's assertion";

struct EdgeVerdict {
  EdgeId edge = -1;
  int u = -1;
  int v = -1;
  int multiplicity = 0;
  SplitStatus split_status = SplitStatus::kAssumedNonsplit;
  bool g_minus_e_has_bridges = false;
  std::vector<int> common_neighbors;
  std::vector<ParallelFact> parallels;
  Verdict verdict = Verdict::kNotExactlyTwo;
  MatchedClause matched = MatchedClause::kNone;
  bool conditional_on_alternating = true;
  bool conditional_on_split_assumption = false;

  std::vector<std::string> caveats() const;
};

/// Requires g connected, bridgeless, loopless and all positive; negative
/// inputs are rejected with a pointer to the dual. A graph-certified split
/// (a parallel f with G-e-f disconnected) overrides any assertion.
EdgeVerdict classify_edge(const SignedGraph& g, EdgeId e,
                          SplitAssumption split = SplitAssumption::kAuto);

struct CorollaryCondition {
  std::string name;
  bool passed = false;
  std::string witness;  // empty when passed
};

struct CorollaryReport {
  int which = 1;  // 1: multigraph check, 2: simple-graph check
  int link_components = 0;
  bool is_knot = false;
  std::vector<CorollaryCondition> conditions;

  bool conditions_pass() const;
  bool passed() const { return is_knot && conditions_pass(); }
};

/// Every crossing change of the knot drops the crossing number by exactly two
/// iff: no quasi-simple triangle; every multiplicity-one edge is irreducible;
/// removing a pair from any maximal multiple edge leaves a 2-edge-connected
/// graph.
CorollaryReport corollary_knot_check(const SignedPlaneGraph& g);

/// Simple-graph form: triangle-free and minimal 2-edge-connected.
/// Throws DomainError on non-simple input.
CorollaryReport corollary_simple_check(const SignedPlaneGraph& g);

}  // namespace crossdrop
