#pragma once

// Cross-checks every computed invariant against an independent route to the
// same value, on one graph (and optionally one edge flip) or on the whole
// enumerated corpus.

#include <optional>
#include <string>
#include <vector>

#include "crossdrop/diagram.hpp"
#include "crossdrop/plane_graph.hpp"
#include "crossdrop/polynomials.hpp"
#include "crossdrop/signed_graph.hpp"

namespace crossdrop {

struct VerifyOptions {
  QOptions q;
  int max_subset_edges = 20;
  BracketOptions bracket;
};

struct CheckResult {
  std::string name;
  std::string subject;  // graph name, or "<graph>/<edge>" for flip checks
  bool passed = false;
  std::string expected;  // both filled on failure
  std::string actual;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  int failures() const;
  void append(const VerifyReport& other);
};

/// Checks that need no embedding. `edge_name(id)` labels flip checks.
/// Checks whose preconditions g does not meet are omitted, not failed.
VerifyReport verify_abstract(const SignedGraph& g, const std::string& name,
                             std::optional<EdgeId> flip_edge, const VerifyOptions& options,
                             const std::vector<std::string>& edge_names = {});

/// verify_abstract plus the bracket, dual and cut/multi-edge duality checks.
VerifyReport verify_graph(const SignedPlaneGraph& g, std::optional<EdgeId> flip_edge,
                          const VerifyOptions& options = {});

struct SelftestOptions {
  int max_edges = 7;
  int max_vertices = 8;
  int threads = 1;
  VerifyOptions verify;
};

struct CheckTally {
  std::string name;
  int passed = 0;
  int failed = 0;
};

struct SelftestSummary {
  int enumerated_graphs = 0;
  int corpus_graphs = 0;
  std::vector<CheckTally> tallies;  // sorted by name
  std::vector<CheckResult> failures;

  bool passed() const { return failures.empty(); }
};

/// Every enumerated graph with every edge flipped, plus every curated corpus
/// graph with every positive non-loop edge flipped.
SelftestSummary selftest(const SelftestOptions& options);

}  // namespace crossdrop
