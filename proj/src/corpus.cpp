#include "crossdrop/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "crossdrop/errors.hpp"

namespace crossdrop {

SignedPlaneGraph edgeless_graph(int n) {
  if (n < 1) throw DomainError("edgeless graph needs at least one vertex");
  std::vector<PlaneVertex> vertices;
  for (int i = 0; i < n; ++i) vertices.push_back({"v" + std::to_string(i + 1), {}});
  return SignedPlaneGraph("E" + std::to_string(n), std::move(vertices), {});
}

SignedPlaneGraph parallel_graph(int multiplicity) {
  if (multiplicity < 1) throw DomainError("parallel graph needs at least one edge");
  std::vector<DrawnEdge> edges;
  const double step = 0.4;
  for (int i = 0; i < multiplicity; ++i) {
    const double bend = step * ((multiplicity - 1) / 2.0 - i);
    edges.push_back({0, 1, Sign::kPositive, bend});
  }
  return draw_plane_graph("P" + std::to_string(multiplicity), {{0.0, 0.0}, {1.0, 0.0}}, edges);
}

SignedPlaneGraph cycle_graph(int n) {
  if (n < 2) throw DomainError("cycle needs at least two vertices");
  if (n == 2) return parallel_graph(2).renamed("C2");
  std::vector<std::pair<double, double>> points;
  std::vector<DrawnEdge> edges;
  for (int i = 0; i < n; ++i) {
    const double a = 2 * std::numbers::pi * i / n;
    points.push_back({std::cos(a), std::sin(a)});
    edges.push_back({i, (i + 1) % n});
  }
  return draw_plane_graph("C" + std::to_string(n), points, edges);
}

SignedPlaneGraph path_graph(int vertices) {
  if (vertices < 1) throw DomainError("path needs at least one vertex");
  if (vertices == 1) return edgeless_graph(1).renamed("P1");
  std::vector<std::pair<double, double>> points;
  std::vector<DrawnEdge> edges;
  for (int i = 0; i < vertices; ++i) {
    points.push_back({static_cast<double>(i), 0.0});
    if (i + 1 < vertices) edges.push_back({i, i + 1});
  }
  return draw_plane_graph("path" + std::to_string(vertices), points, edges);
}

namespace {

SignedPlaneGraph with_negative(const SignedPlaneGraph& g, std::initializer_list<EdgeId> ids,
                               const std::string& name) {
  SignedPlaneGraph out = g;
  for (EdgeId id : ids) out = out.with_sign(id, Sign::kNegative);
  return out.renamed(name);
}

SignedPlaneGraph diamond() {
  // 4-cycle u w v x with the chord u-v as the last edge.
  return draw_plane_graph("diamond", {{0, 0}, {1, 1}, {2, 0}, {1, -1}},
                          {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
}

SignedPlaneGraph bowtie() {
  return draw_plane_graph("bowtie", {{0, 0}, {-1, 1}, {-1, -1}, {1, 1}, {1, -1}},
                          {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
}

SignedPlaneGraph h_split() {
  // Two triangles joined by a parallel pair between c (2) and d (3).
  return draw_plane_graph("H_split", {{-2, 1}, {-2, -1}, {-1, 0}, {1, 0}, {2, 1}, {2, -1}},
                          {{0, 1},
                           {1, 2},
                           {2, 0},
                           {3, 4},
                           {4, 5},
                           {5, 3},
                           {2, 3, Sign::kPositive, 0.4},
                           {2, 3, Sign::kPositive, -0.4}});
}

SignedPlaneGraph loop_graph() {
  return SignedPlaneGraph("loop1", {{"v1", {0, 1}}}, {{0, "e1", Sign::kPositive}});
}

SignedPlaneGraph pendant_triangle() {
  return draw_plane_graph("C3_pendant", {{0, 0}, {1, 1}, {1, -1}, {-1, 0}},
                          {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
}

}  // namespace

std::vector<CorpusGraph> curated_corpus() {
  std::vector<CorpusGraph> out;
  auto add = [&](SignedPlaneGraph g) {
    std::string name = g.name();
    out.push_back({std::move(name), std::move(g)});
  };
  for (int n = 1; n <= 3; ++n) add(edgeless_graph(n));
  add(parallel_graph(1).renamed("B1"));
  for (int n = 2; n <= 9; ++n) add(cycle_graph(n));
  add(parallel_graph(3).renamed("Theta3"));
  add(parallel_graph(4).renamed("M4"));
  add(diamond());
  add(bowtie());
  add(h_split());
  add(loop_graph());
  add(pendant_triangle());
  add(with_negative(cycle_graph(3), {0}, "C3_mixed"));
  add(with_negative(cycle_graph(4), {1, 3}, "C4_mixed"));
  add(with_negative(parallel_graph(3), {1}, "Theta3_mixed"));
  add(with_negative(diamond(), {4}, "diamond_mixed"));
  add(with_negative(h_split(), {0, 6}, "H_split_mixed"));
  add(with_negative(pendant_triangle(), {3}, "C3_pendant_mixed"));
  return out;
}

SignedPlaneGraph corpus_graph(std::string_view name) {
  for (CorpusGraph& c : curated_corpus()) {
    if (c.name == name) return std::move(c.graph);
  }
  throw DomainError("unknown corpus graph '" + std::string(name) + "'");
}

// --- enumeration -------------------------------------------------------------

namespace {

struct Multigraph {
  int n = 1;
  std::vector<int> mult;  // n*n symmetric, zero diagonal

  int at(int i, int j) const { return mult[i * n + j]; }
  int& at(int i, int j) { return mult[i * n + j]; }

  Multigraph grown() const {
    Multigraph out{n + 1, std::vector<int>((n + 1) * (n + 1), 0)};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out.at(i, j) = at(i, j);
    return out;
  }
};

// Colour refinement on multiplicity-weighted neighbourhoods; colours are
// ranks of iso-invariant signatures, so they are canonical.
std::vector<int> refined_colors(const Multigraph& g) {
  std::vector<int> color(g.n, 0);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) color[i] += g.at(i, j);
  int classes = 0;
  while (true) {
    std::vector<std::vector<int>> signature(g.n);
    for (int i = 0; i < g.n; ++i) {
      std::vector<std::pair<int, int>> around;
      for (int j = 0; j < g.n; ++j) {
        if (g.at(i, j) > 0) around.push_back({color[j], g.at(i, j)});
      }
      std::sort(around.begin(), around.end());
      signature[i].push_back(color[i]);
      for (auto [c, m] : around) {
        signature[i].push_back(c);
        signature[i].push_back(m);
      }
    }
    std::vector<std::vector<int>> distinct = signature;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int i = 0; i < g.n; ++i)
      color[i] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), signature[i]) -
                                  distinct.begin());
    if (static_cast<int>(distinct.size()) == classes) break;
    classes = static_cast<int>(distinct.size());
  }
  return color;
}

// Smallest upper-triangle multiplicity code over all orderings that list the
// refined colour classes in order.
std::vector<int> canonical_code(const Multigraph& g) {
  const std::vector<int> color = refined_colors(g);
  std::vector<int> order(g.n);
  for (int i = 0; i < g.n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return std::pair{color[a], a} < std::pair{color[b], b}; });
  std::vector<std::pair<int, int>> blocks;  // [begin, end) of equal colours
  for (int i = 0; i < g.n;) {
    int j = i;
    while (j < g.n && color[order[j]] == color[order[i]]) ++j;
    blocks.push_back({i, j});
    i = j;
  }

  std::vector<int> best;
  std::vector<int> code;
  code.reserve(g.n * (g.n - 1) / 2 + 1);
  while (true) {
    code.clear();
    code.push_back(g.n);
    for (int i = 0; i < g.n; ++i)
      for (int j = i + 1; j < g.n; ++j) code.push_back(g.at(order[i], order[j]));
    if (best.empty() || code < best) best = code;
    // Odometer over the per-block permutations.
    std::size_t b = 0;
    for (; b < blocks.size(); ++b) {
      auto first = order.begin() + blocks[b].first;
      auto last = order.begin() + blocks[b].second;
      if (std::next_permutation(first, last)) break;
    }
    if (b == blocks.size()) break;
  }
  return best;
}

Multigraph decode(const std::vector<int>& code) {
  Multigraph g{code[0], std::vector<int>(code[0] * code[0], 0)};
  std::size_t k = 1;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j) {
      g.at(i, j) = g.at(j, i) = code[k++];
    }
  return g;
}

SignedGraph to_signed_graph(const Multigraph& g) {
  std::vector<GraphEdge> edges;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      for (int k = 0; k < g.at(i, j); ++k)
        edges.push_back({static_cast<EdgeId>(edges.size()), i, j, Sign::kPositive});
  return SignedGraph(g.n, std::move(edges));
}

}  // namespace

std::vector<SignedGraph> enumerate_test_graphs(const EnumerationOptions& options) {
  if (options.max_edges > kEnumerationEdgeCap)
    throw CapExceeded("enumeration is capped at " + std::to_string(kEnumerationEdgeCap) + " edges");
  if (options.max_vertices < 1 || options.max_edges < 0)
    throw DomainError("enumeration bounds must be positive");

  // level[k]: canonical codes of connected loopless multigraphs with k edges.
  std::set<std::vector<int>> level{canonical_code(Multigraph{1, {0}})};
  std::vector<SignedGraph> out;
  for (int k = 1; k <= options.max_edges; ++k) {
    std::set<std::vector<int>> next;
    for (const std::vector<int>& code : level) {
      const Multigraph g = decode(code);
      for (int i = 0; i < g.n; ++i) {
        for (int j = i + 1; j < g.n; ++j) {
          Multigraph h = g;
          ++h.at(i, j);
          ++h.at(j, i);
          next.insert(canonical_code(h));
        }
        if (g.n < options.max_vertices) {
          Multigraph h = g.grown();
          h.at(i, g.n) = h.at(g.n, i) = 1;
          next.insert(canonical_code(h));
        }
      }
    }
    level = std::move(next);
    for (const std::vector<int>& code : level) {
      SignedGraph g = to_signed_graph(decode(code));
      if (!options.allow_bridges && has_bridges(g)) continue;
      out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace crossdrop
