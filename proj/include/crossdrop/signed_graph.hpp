#pragma once

// Abstract signed multigraphs: the embedding-free half of the graph kernel.
// Vertices are positions 0..n-1; edge ids are stable labels that survive
// deletion and contraction.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace crossdrop {

enum class Sign : std::uint8_t { kPositive, kNegative };

constexpr Sign opposite(Sign s) noexcept {
  return s == Sign::kPositive ? Sign::kNegative : Sign::kPositive;
}
constexpr char sign_char(Sign s) noexcept {
  return s == Sign::kPositive ? '+' : '-';
}

using EdgeId = int;

struct GraphEdge {
  EdgeId id;
  int u;
  int v;
  Sign sign = Sign::kPositive;

  bool is_loop() const noexcept { return u == v; }
  bool joins(int a, int b) const noexcept {
    return (u == a && v == b) || (u == b && v == a);
  }
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

class SignedGraph {
 public:
  SignedGraph() : SignedGraph(1) {}
  /// Edges are stored sorted by id. Throws DomainError on duplicate ids,
  /// out-of-range endpoints or vertex_count < 1.
  explicit SignedGraph(int vertex_count, std::vector<GraphEdge> edges = {});

  int vertex_count() const noexcept { return vertex_count_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<GraphEdge>& edges() const noexcept { return edges_; }

  bool has_edge(EdgeId id) const noexcept;
  /// Throws DomainError for an unknown id.
  const GraphEdge& edge(EdgeId id) const;

  SignedGraph without_edge(EdgeId id) const;
  SignedGraph without_edges(std::span<const EdgeId> ids) const;
  /// Identifies the endpoints of `id`; other edges between them become loops.
  /// The merged vertex takes the lower index. Throws DomainError on a loop.
  SignedGraph contracted(EdgeId id) const;
  SignedGraph with_sign(EdgeId id, Sign sign) const;
  SignedGraph all_signs(Sign sign) const;

  bool all_positive() const noexcept;
  bool has_loops() const noexcept;

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  int vertex_count_;
  std::vector<GraphEdge> edges_;
};

/// Vertex -> component label (0-based, in order of first vertex).
std::vector<int> component_labels(const SignedGraph& g);
int component_count(const SignedGraph& g);
bool is_connected(const SignedGraph& g);
/// Component count of g minus the given edges.
int component_count_without(const SignedGraph& g, std::span<const EdgeId> removed);

struct BridgeInfo {
  std::vector<EdgeId> bridges;  // ascending
  int components = 0;           // k(G)
};

BridgeInfo bridges_components(const SignedGraph& g);
bool has_bridges(const SignedGraph& g);
bool is_bridgeless(const SignedGraph& g);

struct MultiplicityInfo {
  std::map<EdgeId, int> multiplicity;                      // mu(e)
  std::vector<std::vector<EdgeId>> maximal_multiple_edges; // classes of size >= 2
  int simplified_edge_count = 0;                           // |E_s|
};

/// Throws DomainError when g has loops.
MultiplicityInfo multiplicity_info(const SignedGraph& g);

/// N(u) ∩ N(v), ascending. Throws DomainError for unknown vertices.
std::vector<int> common_neighbors(const SignedGraph& g, int u, int v);

struct ConnectivityFlags {
  bool connected = false;
  bool loopless = false;
  bool bridgeless = false;
  bool is_2ec = false;
  bool is_minimal_2ec = false;
  bool has_quasi_simple_triangle = false;
  bool is_simple = false;
  bool is_triangle_free = false;
};

ConnectivityFlags connectivity_predicates(const SignedGraph& g);

/// A cycle through three distinct vertices, reported by one edge per side.
struct Triangle {
  std::array<int, 3> vertices;
  std::array<EdgeId, 3> edges;
};

/// First triangle found, scanning vertex triples in lexicographic order.
/// With `quasi_simple`, at least one side must have multiplicity 1.
std::optional<Triangle> find_triangle(const SignedGraph& g, bool quasi_simple = false);

}  // namespace crossdrop
