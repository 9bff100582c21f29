#include "crossdrop/cutsets.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "crossdrop/errors.hpp"

namespace crossdrop {

namespace {

void require_connected_bridgeless(const SignedGraph& g, const char* op) {
  const BridgeInfo bi = bridges_components(g);
  if (bi.components != 1) throw DomainError(std::string(op) + ": graph is not connected");
  if (!bi.bridges.empty()) throw DomainError(std::string(op) + ": graph has a bridge");
}

BigInt parity_sign(int exponent) { return (exponent % 2 == 0) ? BigInt(1) : BigInt(-1); }

int excess_of(const std::vector<std::vector<EdgeId>>& sets) {
  int total = 0;
  for (const auto& s : sets) total += static_cast<int>(s.size()) - 1;
  return total;
}

// G - S has |S| components arranged around a cycle by the edges of S.
bool arranged_on_cycle(const SignedGraph& g, std::span<const EdgeId> s) {
  const SignedGraph rest = g.without_edges(s);
  const std::vector<int> label = component_labels(rest);
  const int k = *std::max_element(label.begin(), label.end()) + 1;
  if (k != static_cast<int>(s.size())) return false;
  std::vector<int> degree(k, 0);
  for (EdgeId id : s) {
    const GraphEdge& e = g.edge(id);
    const int a = label[e.u];
    const int b = label[e.v];
    if (a == b) return false;
    ++degree[a];
    ++degree[b];
  }
  // k nodes, k edges, all of degree 2 and connected (G is): a single cycle.
  return std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; });
}

}  // namespace

int PdsFamily::excess() const { return excess_of(sets); }

const std::vector<EdgeId>* PdsFamily::containing(EdgeId e) const {
  for (const auto& s : sets) {
    if (std::find(s.begin(), s.end(), e) != s.end()) return &s;
  }
  return nullptr;
}

int MultipleEdgeFamily::excess() const { return excess_of(groups); }

bool is_pds(const SignedGraph& g, std::span<const EdgeId> s) {
  require_connected_bridgeless(g, "is_pds");
  if (s.size() < 2) throw DomainError("is_pds: the set needs at least two edges");
  std::set<EdgeId> distinct(s.begin(), s.end());
  if (distinct.size() != s.size()) throw DomainError("is_pds: repeated edge in the set");
  for (EdgeId id : s) g.edge(id);

  bool pairwise = true;
  for (std::size_t i = 0; i < s.size() && pairwise; ++i) {
    for (std::size_t j = i + 1; j < s.size() && pairwise; ++j) {
      const EdgeId pair[] = {s[i], s[j]};
      pairwise = component_count_without(g, pair) > 1;
    }
  }
  const bool counted = component_count_without(g, s) == static_cast<int>(s.size());
  const bool cyclic = arranged_on_cycle(g, s);
  if (pairwise != counted || pairwise != cyclic)
    throw InvariantViolation("pairwise-disconnecting criteria disagree");
  return pairwise;
}

std::optional<std::vector<EdgeId>> maximal_pds_of_edge(const SignedGraph& g, EdgeId e) {
  require_connected_bridgeless(g, "maximal_pds_of_edge");
  g.edge(e);
  std::vector<EdgeId> out = bridges_components(g.without_edge(e)).bridges;
  out.push_back(e);
  std::sort(out.begin(), out.end());
  if (out.size() < 2) return std::nullopt;
  return out;
}

PdsFamily all_maximal_pds(const SignedGraph& g) {
  require_connected_bridgeless(g, "all_maximal_pds");
  std::set<std::vector<EdgeId>> found;
  for (const GraphEdge& e : g.edges()) {
    if (auto s = maximal_pds_of_edge(g, e.id)) found.insert(std::move(*s));
  }
  PdsFamily family{{found.begin(), found.end()}};
  std::set<EdgeId> used;
  for (const auto& s : family.sets) {
    for (EdgeId id : s) {
      if (!used.insert(id).second)
        throw InvariantViolation("maximal pairwise-disconnecting sets overlap at edge " +
                                 std::to_string(id));
    }
    if (!bridges_components(g.without_edges(s)).bridges.empty())
      throw InvariantViolation("a piece left by a maximal pairwise-disconnecting set has a bridge");
  }
  return family;
}

MultipleEdgeFamily maximal_multiple_edges(const SignedGraph& g) {
  return {multiplicity_info(g).maximal_multiple_edges};
}

TopCoefficients dl_extreme_coeffs(const SignedGraph& g) {
  if (!is_connected(g)) throw DomainError("dl_extreme_coeffs: graph is not connected");
  if (g.has_loops()) throw DomainError("dl_extreme_coeffs: graph has a loop");
  const int v = g.vertex_count();
  const int e = g.edge_count();
  const BigInt sign = parity_sign(v - 1);
  return {v - 1, sign, sign * (v - 1 - e + maximal_multiple_edges(g).excess())};
}

BottomCoefficients dual_extreme_coeffs(const SignedGraph& g) {
  require_connected_bridgeless(g, "dual_extreme_coeffs");
  const int v = g.vertex_count();
  const int e = g.edge_count();
  const BigInt sign = parity_sign(e - v + 1);
  return {-e + v - 1, sign, sign * (-v + 1 + all_maximal_pds(g).excess())};
}

bool es_identity_check(const SignedGraph& g, EdgeId e) {
  require_connected_bridgeless(g, "es_identity_check");
  if (g.has_loops()) throw DomainError("es_identity_check: graph has a loop");
  const MultiplicityInfo mi = multiplicity_info(g);
  if (mi.multiplicity.at(g.edge(e).id) != 1)
    throw DomainError("es_identity_check: edge has multiplicity above one");
  const GraphEdge& edge = g.edge(e);
  const int common = static_cast<int>(common_neighbors(g, edge.u, edge.v).size());
  const int contracted = multiplicity_info(g.contracted(e)).simplified_edge_count;
  return mi.simplified_edge_count == contracted + 1 + common;
}

}  // namespace crossdrop
