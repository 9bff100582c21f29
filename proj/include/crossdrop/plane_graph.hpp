#pragma once

// Signed plane multigraphs encoded by rotation systems.
//
// Every edge `id` owns the two darts 2*id and 2*id+1; `twin(d) = d ^ 1`.
// Each vertex lists its darts in counterclockwise cyclic order. Rotations are
// stored starting at their smallest dart, so graphs that differ only by a
// cyclic shift of some rotation compare equal.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crossdrop/signed_graph.hpp"

namespace crossdrop {

using Dart = int;

constexpr Dart twin(Dart d) noexcept { return d ^ 1; }
constexpr EdgeId edge_of(Dart d) noexcept { return d >> 1; }
constexpr Dart first_dart(EdgeId e) noexcept { return 2 * e; }

struct PlaneVertex {
  std::string name;
  std::vector<Dart> rotation;  // counterclockwise

  friend bool operator==(const PlaneVertex&, const PlaneVertex&) = default;
};

struct PlaneEdge {
  EdgeId id;
  std::string name;
  Sign sign = Sign::kPositive;

  friend bool operator==(const PlaneEdge&, const PlaneEdge&) = default;
};

/// Boundary walk of a face: the orbit of d -> next_ccw(twin(d)). A component
/// consisting of one isolated vertex has a single face with an empty walk.
struct Face {
  std::vector<Dart> darts;
  int isolated_vertex = -1;
};

class SignedPlaneGraph {
 public:
  /// Validates the rotation system: each dart of each edge appears in exactly
  /// one rotation exactly once, and every component satisfies v - e + f = 2.
  /// `dart_names` is indexed by dart; missing entries are generated.
  SignedPlaneGraph(std::string name, std::vector<PlaneVertex> vertices,
                   std::vector<PlaneEdge> edges,
                   std::vector<std::string> dart_names = {});

  const std::string& name() const noexcept { return name_; }
  int vertex_count() const noexcept { return static_cast<int>(vertices_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<PlaneVertex>& vertices() const noexcept { return vertices_; }
  const std::vector<PlaneEdge>& edges() const noexcept { return edges_; }

  const PlaneEdge& edge(EdgeId id) const;
  /// Looks up by file name; throws DomainError when absent.
  EdgeId edge_id(std::string_view edge_name) const;
  int vertex_index(std::string_view vertex_name) const;

  int vertex_of(Dart d) const;
  Dart next_ccw(Dart d) const;
  Dart prev_ccw(Dart d) const;
  const std::string& dart_name(Dart d) const;

  /// The embedding-free view; vertex i of the result is vertices()[i].
  const SignedGraph& abstract() const noexcept { return abstract_; }

  SignedPlaneGraph with_sign(EdgeId id, Sign sign) const;
  SignedPlaneGraph renamed(std::string name) const;

  /// Serializes in the graph file format; parse_graph(to_text()) == *this.
  std::string to_text() const;

  friend bool operator==(const SignedPlaneGraph& a, const SignedPlaneGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::string name_;
  std::vector<PlaneVertex> vertices_;
  std::vector<PlaneEdge> edges_;  // ascending id
  std::vector<std::string> dart_names_;
  std::vector<int> dart_vertex_;  // -1 for darts of absent edges
  std::vector<int> dart_slot_;    // position inside its rotation
  SignedGraph abstract_;
};

/// Parses the line-oriented graph format:
///   graph <name>
///   vertex <vid>: <hid> <hid> ...
///   edge <eid> <+|-> : <hid> <hid>
/// Edge ids are assigned in file order. Errors carry the offending line.
SignedPlaneGraph parse_graph(std::string_view text);

SignedPlaneGraph delete_edge(const SignedPlaneGraph& g, EdgeId e);
/// Splices the rotations at the two endpoints: the darts following e's dart at
/// u, then those following e's dart at v. Throws DomainError on a loop.
SignedPlaneGraph contract_edge(const SignedPlaneGraph& g, EdgeId e);

std::vector<Face> faces(const SignedPlaneGraph& g);

/// Componentwise dual: one vertex per face, the same edge ids with flipped
/// signs. Dart d lies at the face whose walk contains d.
SignedPlaneGraph dual(const SignedPlaneGraph& g);

/// Builds a plane graph from vertex coordinates. Darts are ordered by angle;
/// `bend` > 0 bows an edge to the left of u->v so parallel edges separate.
struct DrawnEdge {
  int u;
  int v;
  Sign sign = Sign::kPositive;
  double bend = 0.0;
};

SignedPlaneGraph draw_plane_graph(std::string name,
                                  const std::vector<std::pair<double, double>>& points,
                                  const std::vector<DrawnEdge>& edges);

}  // namespace crossdrop
