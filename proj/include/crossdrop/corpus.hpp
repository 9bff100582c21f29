#pragma once

// Test graphs: a curated set of embedded graphs for identities that need the
// embedding, and exhaustive enumeration of small abstract multigraphs for the
// ones that do not.

#include <string>
#include <string_view>
#include <vector>

#include "crossdrop/plane_graph.hpp"
#include "crossdrop/signed_graph.hpp"

namespace crossdrop {

SignedPlaneGraph edgeless_graph(int n);
/// Two vertices joined by `multiplicity` parallel edges (B1, C2, Θ3, M4 ...).
SignedPlaneGraph parallel_graph(int multiplicity);
/// Cycle on n >= 2 vertices; n = 2 is the digon.
SignedPlaneGraph cycle_graph(int n);
SignedPlaneGraph path_graph(int vertices);

struct CorpusGraph {
  std::string name;
  SignedPlaneGraph graph;
};

/// E1-E3, B1, C2-C9, Theta3, M4, diamond, bowtie, H_split, loop1,
/// C3_pendant, and mixed-sign variants (names ending in "_mixed").
std::vector<CorpusGraph> curated_corpus();
/// Throws DomainError for an unknown name.
SignedPlaneGraph corpus_graph(std::string_view name);

struct EnumerationOptions {
  int max_vertices = 8;
  int max_edges = 8;
  /// When false only bridgeless graphs are emitted.
  bool allow_bridges = false;
};

inline constexpr int kEnumerationEdgeCap = 10;

/// All connected loopless multigraphs within the bounds, one per isomorphism
/// class, all edges positive, at least one edge. Throws CapExceeded above
/// kEnumerationEdgeCap edges.
std::vector<SignedGraph> enumerate_test_graphs(const EnumerationOptions& options);

}  // namespace crossdrop
