#include "crossdrop/signed_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "crossdrop/errors.hpp"

namespace crossdrop {

SignedGraph::SignedGraph(int vertex_count, std::vector<GraphEdge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 1) throw DomainError("a graph needs at least one vertex");
  std::sort(edges_.begin(), edges_.end(),
            [](const GraphEdge& a, const GraphEdge& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const GraphEdge& e = edges_[i];
    if (i > 0 && edges_[i - 1].id == e.id)
      throw DomainError("duplicate edge id " + std::to_string(e.id));
    if (e.u < 0 || e.u >= vertex_count_ || e.v < 0 || e.v >= vertex_count_)
      throw DomainError("edge " + std::to_string(e.id) + " has an endpoint out of range");
  }
}

bool SignedGraph::has_edge(EdgeId id) const noexcept {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const GraphEdge& e, EdgeId x) { return e.id < x; });
  return it != edges_.end() && it->id == id;
}

const GraphEdge& SignedGraph::edge(EdgeId id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const GraphEdge& e, EdgeId x) { return e.id < x; });
  if (it == edges_.end() || it->id != id)
    throw DomainError("unknown edge id " + std::to_string(id));
  return *it;
}

SignedGraph SignedGraph::without_edge(EdgeId id) const {
  const EdgeId ids[] = {id};
  return without_edges(ids);
}

SignedGraph SignedGraph::without_edges(std::span<const EdgeId> ids) const {
  for (EdgeId id : ids) edge(id);
  std::vector<GraphEdge> kept;
  kept.reserve(edges_.size());
  for (const GraphEdge& e : edges_) {
    if (std::find(ids.begin(), ids.end(), e.id) == ids.end()) kept.push_back(e);
  }
  return SignedGraph(vertex_count_, std::move(kept));
}

SignedGraph SignedGraph::contracted(EdgeId id) const {
  const GraphEdge& target = edge(id);
  if (target.is_loop())
    throw DomainError("cannot contract loop " + std::to_string(id));
  const int keep = std::min(target.u, target.v);
  const int gone = std::max(target.u, target.v);
  auto remap = [&](int x) {
    if (x == gone) return keep;
    return x > gone ? x - 1 : x;
  };
  std::vector<GraphEdge> out;
  out.reserve(edges_.size() - 1);
  for (const GraphEdge& e : edges_) {
    if (e.id == id) continue;
    out.push_back({e.id, remap(e.u), remap(e.v), e.sign});
  }
  return SignedGraph(vertex_count_ - 1, std::move(out));
}

SignedGraph SignedGraph::with_sign(EdgeId id, Sign sign) const {
  edge(id);
  SignedGraph out = *this;
  for (GraphEdge& e : out.edges_) {
    if (e.id == id) e.sign = sign;
  }
  return out;
}

SignedGraph SignedGraph::all_signs(Sign sign) const {
  SignedGraph out = *this;
  for (GraphEdge& e : out.edges_) e.sign = sign;
  return out;
}

bool SignedGraph::all_positive() const noexcept {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const GraphEdge& e) { return e.sign == Sign::kPositive; });
}

bool SignedGraph::has_loops() const noexcept {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const GraphEdge& e) { return e.is_loop(); });
}

namespace {

struct DisjointSets {
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<int> parent;
};

}  // namespace

std::vector<int> component_labels(const SignedGraph& g) {
  DisjointSets sets(g.vertex_count());
  for (const GraphEdge& e : g.edges()) sets.unite(e.u, e.v);
  std::vector<int> label(g.vertex_count(), -1);
  int next = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int root = sets.find(v);
    if (label[root] < 0) label[root] = next++;
    label[v] = label[root];
  }
  return label;
}

int component_count(const SignedGraph& g) {
  DisjointSets sets(g.vertex_count());
  int count = g.vertex_count();
  for (const GraphEdge& e : g.edges()) count -= sets.unite(e.u, e.v) ? 1 : 0;
  return count;
}

bool is_connected(const SignedGraph& g) { return component_count(g) == 1; }

int component_count_without(const SignedGraph& g, std::span<const EdgeId> removed) {
  DisjointSets sets(g.vertex_count());
  int count = g.vertex_count();
  for (const GraphEdge& e : g.edges()) {
    if (std::find(removed.begin(), removed.end(), e.id) != removed.end()) continue;
    count -= sets.unite(e.u, e.v) ? 1 : 0;
  }
  return count;
}

BridgeInfo bridges_components(const SignedGraph& g) {
  const int n = g.vertex_count();
  // incidence: (neighbor, edge position)
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  const auto& edges = g.edges();
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    if (edges[i].is_loop()) continue;
    adj[edges[i].u].push_back({edges[i].v, i});
    adj[edges[i].v].push_back({edges[i].u, i});
  }

  BridgeInfo info;
  std::vector<int> order(n, -1), low(n, 0);
  int clock = 0;
  struct Frame {
    int vertex;
    int via_edge;
    std::size_t next = 0;
  };
  for (int root = 0; root < n; ++root) {
    if (order[root] >= 0) continue;
    ++info.components;
    std::vector<Frame> stack{{root, -1}};
    order[root] = low[root] = clock++;
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next < adj[top.vertex].size()) {
        auto [w, ei] = adj[top.vertex][top.next++];
        if (ei == top.via_edge) continue;
        if (order[w] < 0) {
          order[w] = low[w] = clock++;
          stack.push_back({w, ei});
        } else {
          low[top.vertex] = std::min(low[top.vertex], order[w]);
        }
        continue;
      }
      const Frame done = top;
      stack.pop_back();
      if (!stack.empty()) {
        const int parent = stack.back().vertex;
        low[parent] = std::min(low[parent], low[done.vertex]);
        if (low[done.vertex] > order[parent]) info.bridges.push_back(edges[done.via_edge].id);
      }
    }
  }
  std::sort(info.bridges.begin(), info.bridges.end());
  return info;
}

bool has_bridges(const SignedGraph& g) { return !bridges_components(g).bridges.empty(); }
bool is_bridgeless(const SignedGraph& g) { return !has_bridges(g); }

MultiplicityInfo multiplicity_info(const SignedGraph& g) {
  if (g.has_loops()) throw DomainError("multiplicity is defined for loopless graphs only");
  std::map<std::pair<int, int>, std::vector<EdgeId>> classes;
  for (const GraphEdge& e : g.edges())
    classes[{std::min(e.u, e.v), std::max(e.u, e.v)}].push_back(e.id);
  MultiplicityInfo info;
  info.simplified_edge_count = static_cast<int>(classes.size());
  for (const auto& [pair, ids] : classes) {
    for (EdgeId id : ids) info.multiplicity[id] = static_cast<int>(ids.size());
    if (ids.size() >= 2) info.maximal_multiple_edges.push_back(ids);
  }
  std::sort(info.maximal_multiple_edges.begin(), info.maximal_multiple_edges.end());
  return info;
}

namespace {

std::set<int> neighbors(const SignedGraph& g, int x) {
  std::set<int> out;
  for (const GraphEdge& e : g.edges()) {
    if (e.u == x && e.v != x) out.insert(e.v);
    if (e.v == x && e.u != x) out.insert(e.u);
  }
  return out;
}

}  // namespace

std::vector<int> common_neighbors(const SignedGraph& g, int u, int v) {
  if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
    throw DomainError("unknown vertex");
  const std::set<int> nu = neighbors(g, u);
  const std::set<int> nv = neighbors(g, v);
  std::vector<int> out;
  std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(out));
  return out;
}

std::optional<Triangle> find_triangle(const SignedGraph& g, bool quasi_simple) {
  const int n = g.vertex_count();
  // lowest edge id and multiplicity per unordered vertex pair
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  std::vector<std::vector<EdgeId>> first(n, std::vector<EdgeId>(n, -1));
  for (const GraphEdge& e : g.edges()) {
    if (e.is_loop()) continue;
    for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      ++mult[a][b];
      if (first[a][b] < 0 || e.id < first[a][b]) first[a][b] = e.id;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (mult[a][b] == 0) continue;
      for (int c = b + 1; c < n; ++c) {
        if (mult[b][c] == 0 || mult[a][c] == 0) continue;
        if (quasi_simple && mult[a][b] != 1 && mult[b][c] != 1 && mult[a][c] != 1) continue;
        return Triangle{{a, b, c}, {first[a][b], first[b][c], first[a][c]}};
      }
    }
  return std::nullopt;
}

ConnectivityFlags connectivity_predicates(const SignedGraph& g) {
  ConnectivityFlags f;
  const BridgeInfo bi = bridges_components(g);
  f.connected = bi.components == 1;
  f.loopless = !g.has_loops();
  f.bridgeless = bi.bridges.empty();
  f.is_2ec = f.connected && f.bridgeless;
  if (f.is_2ec) {
    f.is_minimal_2ec = std::all_of(g.edges().begin(), g.edges().end(), [&](const GraphEdge& e) {
      return has_bridges(g.without_edge(e.id));
    });
  }
  f.is_simple = f.loopless;
  if (f.loopless) {
    const MultiplicityInfo mi = multiplicity_info(g);
    f.is_simple = mi.maximal_multiple_edges.empty();
  }
  f.is_triangle_free = !find_triangle(g).has_value();
  f.has_quasi_simple_triangle = find_triangle(g, true).has_value();
  return f;
}

}  // namespace crossdrop
