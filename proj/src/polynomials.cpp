#include "crossdrop/polynomials.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "crossdrop/cutsets.hpp"
#include "crossdrop/errors.hpp"

namespace crossdrop {

namespace {

using poly::A;

struct WorkEdge {
  int u;
  int v;
  bool positive;
  EdgeId id;
};

struct WorkGraph {
  int n;
  std::vector<WorkEdge> edges;
};

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Positions (into g.edges) of the bridges of g. g must be loopless.
std::vector<int> bridge_positions(const WorkGraph& g) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.n);
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    adj[g.edges[i].u].push_back({g.edges[i].v, i});
    adj[g.edges[i].v].push_back({g.edges[i].u, i});
  }
  std::vector<int> order(g.n, -1), low(g.n, 0), out;
  int clock = 0;
  struct Frame {
    int vertex;
    int via;
    std::size_t next;
  };
  for (int root = 0; root < g.n; ++root) {
    if (order[root] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    order[root] = low[root] = clock++;
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next < adj[top.vertex].size()) {
        auto [w, ei] = adj[top.vertex][top.next++];
        if (ei == top.via) continue;
        if (order[w] < 0) {
          order[w] = low[w] = clock++;
          stack.push_back({w, ei, 0});
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
        if (low[done.vertex] > order[parent]) out.push_back(done.via);
      }
    }
  }
  return out;
}

WorkGraph merge_vertices(const WorkGraph& g, UnionFind& uf, const std::vector<bool>& drop) {
  std::vector<int> index(g.n, -1);
  int next = 0;
  for (int v = 0; v < g.n; ++v) {
    const int r = uf.find(v);
    if (index[r] < 0) index[r] = next++;
  }
  WorkGraph out{next, {}};
  out.edges.reserve(g.edges.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (drop[i]) continue;
    const WorkEdge& e = g.edges[i];
    out.edges.push_back({index[uf.find(e.u)], index[uf.find(e.v)], e.positive, e.id});
  }
  return out;
}

// Vertices ordered by (degree, positive degree) then edges sorted: a relabeling
// of the graph itself, so equal keys always mean isomorphic signed graphs.
std::string memo_key(const WorkGraph& g) {
  std::vector<std::pair<int, int>> degree(g.n, {0, 0});
  for (const WorkEdge& e : g.edges) {
    for (int x : {e.u, e.v}) {
      ++degree[x].first;
      if (e.positive) ++degree[x].second;
    }
  }
  std::vector<int> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return degree[a] < degree[b]; });
  std::vector<int> rank(g.n);
  for (int i = 0; i < g.n; ++i) rank[order[i]] = i;
  std::vector<std::tuple<int, int, bool>> edges;
  edges.reserve(g.edges.size());
  for (const WorkEdge& e : g.edges) {
    const int a = rank[e.u];
    const int b = rank[e.v];
    edges.emplace_back(std::min(a, b), std::max(a, b), e.positive);
  }
  std::sort(edges.begin(), edges.end());
  std::string key = std::to_string(g.n);
  for (const auto& [a, b, s] : edges) {
    key += s ? '+' : '-';
    key += std::to_string(a);
    key += ',';
    key += std::to_string(b);
  }
  return key;
}

class QEvaluator {
 public:
  explicit QEvaluator(const QOptions& options) : options_(options) {}

  LaurentPoly eval(WorkGraph g) {
    LaurentPoly factor = LaurentPoly::constant(1);

    // Loops: (B + A d) for +, (A + B d) for -.
    std::vector<bool> drop(g.edges.size(), false);
    bool any_loop = false;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      if (g.edges[i].u != g.edges[i].v) continue;
      factor *= g.edges[i].positive ? -A(3) : -A(-3);
      drop[i] = true;
      any_loop = true;
    }
    if (any_loop) {
      UnionFind same(g.n);
      g = merge_vertices(g, same, drop);
    }

    // Bridges: (A + B d) for +, (B + A d) for -. Contracting a bridge creates
    // neither loops nor new bridges, so all of them go at once.
    const std::vector<int> bridges = bridge_positions(g);
    if (!bridges.empty()) {
      UnionFind merged(g.n);
      std::vector<bool> gone(g.edges.size(), false);
      for (int pos : bridges) {
        factor *= g.edges[pos].positive ? -A(-3) : -A(3);
        merged.unite(g.edges[pos].u, g.edges[pos].v);
        gone[pos] = true;
      }
      g = merge_vertices(g, merged, gone);
    }

    if (g.edges.empty()) return factor * poly::loop_weight().pow(g.n - 1);

    std::string key;
    if (options_.memoize) {
      key = memo_key(g);
      if (auto it = memo_.find(key); it != memo_.end()) return factor * it->second;
    }

    const auto pivot_it =
        options_.pivot == PivotOrder::kLowestId
            ? std::min_element(g.edges.begin(), g.edges.end(),
                               [](const WorkEdge& a, const WorkEdge& b) { return a.id < b.id; })
            : std::max_element(g.edges.begin(), g.edges.end(),
                               [](const WorkEdge& a, const WorkEdge& b) { return a.id < b.id; });
    const std::size_t pivot = static_cast<std::size_t>(pivot_it - g.edges.begin());
    const WorkEdge e = g.edges[pivot];

    std::vector<bool> only_pivot(g.edges.size(), false);
    only_pivot[pivot] = true;
    UnionFind untouched(g.n);
    WorkGraph deleted = merge_vertices(g, untouched, only_pivot);
    UnionFind joined(g.n);
    joined.unite(e.u, e.v);
    WorkGraph contracted = merge_vertices(g, joined, only_pivot);

    // s(e) = +: B Q[G-e] + A Q[G/e];  s(e) = -: A Q[G-e] + B Q[G/e].
    LaurentPoly value = e.positive ? A(-1) * eval(std::move(deleted)) + A(1) * eval(std::move(contracted))
                                   : A(1) * eval(std::move(deleted)) + A(-1) * eval(std::move(contracted));
    if (options_.memoize) memo_.emplace(std::move(key), value);
    return factor * value;
  }

 private:
  QOptions options_;
  std::unordered_map<std::string, LaurentPoly> memo_;
};

WorkGraph to_work(const SignedGraph& g) {
  WorkGraph w{g.vertex_count(), {}};
  for (const GraphEdge& e : g.edges())
    w.edges.push_back({e.u, e.v, e.sign == Sign::kPositive, e.id});
  return w;
}

}  // namespace

LaurentPoly q_polynomial(const SignedGraph& g, const QOptions& options) {
  if (g.edge_count() > options.max_edges)
    throw CapExceeded("q_polynomial: " + std::to_string(g.edge_count()) +
                      " edges exceed the recursion cap of " + std::to_string(options.max_edges));
  QEvaluator evaluator(options);
  return evaluator.eval(to_work(g));
}

LaurentPoly tutte_neg_eval(const SignedGraph& g, int max_edges) {
  const int m = g.edge_count();
  const int n = g.vertex_count();
  if (m > max_edges)
    throw CapExceeded("tutte_neg_eval: " + std::to_string(m) +
                      " edges exceed the subset-expansion cap of " + std::to_string(max_edges));

  // counts[k][r]: subsets with k(F) = k components and nullity r.
  std::vector<std::vector<long long>> counts(n + 1, std::vector<long long>(m + 1, 0));
  const auto& edges = g.edges();
  std::vector<int> parent(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int components = n;
    int size = 0;
    for (int i = 0; i < m; ++i) {
      if (!(mask >> i & 1u)) continue;
      ++size;
      const int a = find(edges[i].u);
      const int b = find(edges[i].v);
      if (a != b) {
        parent[std::max(a, b)] = std::min(a, b);
        --components;
      }
    }
    ++counts[components][size - n + components];
  }

  const LaurentPoly x_minus_1 = -poly::var() - LaurentPoly::constant(1);           // -t - 1
  const LaurentPoly y_minus_1 = -LaurentPoly::monomial(1, -1) - LaurentPoly::constant(1);  // -t^-1 - 1
  std::vector<LaurentPoly> x_pow{LaurentPoly::constant(1)};
  std::vector<LaurentPoly> y_pow{LaurentPoly::constant(1)};
  for (int i = 1; i <= std::max(n, m); ++i) {
    x_pow.push_back(x_pow.back() * x_minus_1);
    y_pow.push_back(y_pow.back() * y_minus_1);
  }
  LaurentPoly total;
  for (int k = 1; k <= n; ++k) {
    for (int r = 0; r <= m; ++r) {
      if (counts[k][r] == 0) continue;
      total += LaurentPoly::constant(counts[k][r]) * x_pow[k - 1] * y_pow[r];
    }
  }
  return total;
}

LaurentPoly q_via_tutte(const SignedGraph& g, int max_edges) {
  if (!is_connected(g)) throw DomainError("q_via_tutte: graph is not connected");
  if (!g.all_positive()) throw DomainError("q_via_tutte: graph has a negative edge");
  const LaurentPoly t = tutte_neg_eval(g, max_edges);
  return t.substitute_power(-4).shifted(-g.edge_count() + 2 * g.vertex_count() - 2);
}

FlipAnalysis analyze_flip(const SignedGraph& g, EdgeId e, const QOptions& options) {
  const GraphEdge& edge = g.edge(e);
  if (edge.is_loop()) throw DomainError("flip: edge " + std::to_string(e) + " is a loop");
  if (edge.sign != Sign::kPositive)
    throw DomainError("flip: edge " + std::to_string(e) + " is already negative");

  FlipAnalysis out;
  out.edge = e;
  out.original = q_polynomial(g, options);
  out.flipped = q_polynomial(g.with_sign(e, Sign::kNegative), options);
  out.deleted = q_polynomial(g.without_edge(e), options);
  out.contracted = q_polynomial(g.contracted(e), options);
  out.via_contracted = A(2) * out.original + (A(-1) - A(3)) * out.contracted;
  out.via_deleted = A(-2) * out.original + (A(1) - A(-3)) * out.deleted;
  return out;
}

LaurentPoly q_after_flip(const SignedGraph& g, EdgeId e, const QOptions& options) {
  FlipAnalysis analysis = analyze_flip(g, e, options);
  if (!analysis.contracted_identity_holds())
    throw InvariantViolation("flip identity through G/e failed for edge " + std::to_string(e));
  if (!analysis.deleted_identity_holds())
    throw InvariantViolation("flip identity through G-e failed for edge " + std::to_string(e));
  return std::move(analysis.flipped);
}

ExtremeCoefficients extreme_coeff_predictions(const SignedGraph& g) {
  const BridgeInfo bi = bridges_components(g);
  if (bi.components != 1) throw DomainError("extreme coefficients: graph is not connected");
  if (!bi.bridges.empty()) throw DomainError("extreme coefficients: graph has a bridge");
  if (g.has_loops()) throw DomainError("extreme coefficients: graph has a loop");
  if (!g.all_positive()) throw DomainError("extreme coefficients: graph has a negative edge");

  const int v = g.vertex_count();
  const int e = g.edge_count();
  const BigInt top_sign = ((e - v + 1) % 2 == 0) ? 1 : -1;
  const BigInt bottom_sign = ((v - 1) % 2 == 0) ? 1 : -1;
  const int high = 3 * e - 2 * v + 2;
  const int low = -e - 2 * v + 2;
  ExtremeCoefficients out;
  out.highest = {high, top_sign};
  out.second_highest = {high - 4, top_sign * (-v + 1 + all_maximal_pds(g).excess())};
  out.lowest = {low, bottom_sign};
  out.second_lowest = {low + 4, bottom_sign * (v - 1 - e + maximal_multiple_edges(g).excess())};
  return out;
}

ExtremeCoefficients observed_extremes(const LaurentPoly& q, const ExtremeCoefficients& predicted) {
  auto at = [&](const DegreeCoefficient& p) { return DegreeCoefficient{p.degree, q.coeff(p.degree)}; };
  return {at(predicted.highest), at(predicted.second_highest), at(predicted.lowest),
          at(predicted.second_lowest)};
}

}  // namespace crossdrop
