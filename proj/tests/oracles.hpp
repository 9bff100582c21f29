#pragma once

// Brute-force reference computations for the unit tests. Each one is written
// from the definition and shares no code with the library beyond the value
// types it returns.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "crossdrop/laurent.hpp"
#include "crossdrop/signed_graph.hpp"

namespace oracle {

using crossdrop::EdgeId;
using crossdrop::LaurentPoly;
using crossdrop::SignedGraph;

struct Edge {
  int id;
  int u;
  int v;
  bool positive;
};

inline std::vector<Edge> edges_of(const SignedGraph& g) {
  std::vector<Edge> out;
  for (const auto& e : g.edges())
    out.push_back({e.id, e.u, e.v, e.sign == crossdrop::Sign::kPositive});
  return out;
}

// Components of the spanning subgraph on `n` vertices using edges whose bit in
// `keep` is set.
inline int components(int n, const std::vector<Edge>& edges, std::uint64_t keep) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  int count = n;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!((keep >> i) & 1u)) continue;
    const int a = find(edges[i].u);
    const int b = find(edges[i].v);
    if (a != b) {
      parent[a] = b;
      --count;
    }
  }
  return count;
}

inline std::uint64_t all_bits(std::size_t m) { return (std::uint64_t{1} << m) - 1; }

/// Edges whose single deletion raises the component count.
inline std::set<EdgeId> bridges(const SignedGraph& g) {
  const auto edges = edges_of(g);
  const std::uint64_t full = all_bits(edges.size());
  const int base = components(g.vertex_count(), edges, full);
  std::set<EdgeId> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (components(g.vertex_count(), edges, full & ~(std::uint64_t{1} << i)) > base)
      out.insert(edges[i].id);
  }
  return out;
}

/// Bracket-style state sum over spanning subgraphs S: a positive edge in S
/// weighs A, outside A^-1 (swapped for negative edges), and S contributes
/// d^(2k(S) + |S| - |V| - 1).
inline LaurentPoly q_state_sum(const SignedGraph& g) {
  const auto edges = edges_of(g);
  const int n = g.vertex_count();
  const LaurentPoly d = LaurentPoly::from_terms({{2, -1}, {-2, -1}});
  std::map<std::pair<int, int>, long long> counts;  // (A exponent, circles - 1)
  for (std::uint64_t s = 0; s <= all_bits(edges.size()); ++s) {
    int exponent = 0;
    int size = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const bool in = (s >> i) & 1u;
      size += in ? 1 : 0;
      exponent += (in == edges[i].positive) ? 1 : -1;
    }
    const int k = components(n, edges, s);
    ++counts[{exponent, 2 * k + size - n - 1}];
  }
  LaurentPoly total;
  for (const auto& [key, count] : counts)
    total += LaurentPoly::monomial(count, key.first) * d.pow(key.second);
  return total;
}

/// Inclusion-maximal sets (size >= 2) in which every pair of edges is a
/// disconnecting pair. Exhaustive over subsets; fine up to ~16 edges.
inline std::vector<std::vector<EdgeId>> maximal_pds(const SignedGraph& g) {
  const auto edges = edges_of(g);
  const std::size_t m = edges.size();
  const std::uint64_t full = all_bits(m);
  std::vector<std::vector<bool>> cut(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const std::uint64_t keep = full & ~(std::uint64_t{1} << i) & ~(std::uint64_t{1} << j);
      cut[i][j] = cut[j][i] = components(g.vertex_count(), edges, keep) > 1;
    }
  std::vector<std::uint64_t> good;
  for (std::uint64_t s = 0; s <= full; ++s) {
    if (std::popcount(s) < 2) continue;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i)
      for (std::size_t j = i + 1; j < m && ok; ++j)
        if (((s >> i) & 1u) && ((s >> j) & 1u) && !cut[i][j]) ok = false;
    if (ok) good.push_back(s);
  }
  std::vector<std::vector<EdgeId>> out;
  for (std::uint64_t s : good) {
    const bool maximal = std::none_of(good.begin(), good.end(), [&](std::uint64_t t) {
      return t != s && (t & s) == s;
    });
    if (!maximal) continue;
    std::vector<EdgeId> ids;
    for (std::size_t i = 0; i < m; ++i)
      if ((s >> i) & 1u) ids.push_back(edges[i].id);
    out.push_back(ids);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Isomorphism-class key by trying every vertex permutation.
inline std::vector<int> brute_canonical(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  do {
    std::vector<int> mult(n * n, 0);
    for (auto [u, v] : edges) {
      const int a = std::min(perm[u], perm[v]);
      const int b = std::max(perm[u], perm[v]);
      ++mult[a * n + b];
    }
    std::vector<int> code{n};
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) code.push_back(mult[i * n + j]);
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Number of isomorphism classes of connected loopless bridgeless
/// multigraphs with exactly `m` edges, by exhaustive labelled generation.
inline int count_bridgeless_classes(int m) {
  std::set<std::vector<int>> seen;
  for (int n = 2; n <= m; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    // Multisets of m pairs as nondecreasing index sequences.
    std::vector<int> pick(m, 0);
    while (true) {
      std::vector<std::pair<int, int>> edges;
      std::vector<Edge> typed;
      for (int k = 0; k < m; ++k) {
        edges.push_back(pairs[pick[k]]);
        typed.push_back({k, pairs[pick[k]].first, pairs[pick[k]].second, true});
      }
      const std::uint64_t full = all_bits(m);
      bool ok = components(n, typed, full) == 1;
      for (int k = 0; k < m && ok; ++k)
        if (components(n, typed, full & ~(std::uint64_t{1} << k)) > 1) ok = false;
      if (ok) seen.insert(brute_canonical(n, edges));
      int k = m - 1;
      while (k >= 0 && pick[k] == static_cast<int>(pairs.size()) - 1) --k;
      if (k < 0) break;
      ++pick[k];
      for (int r = k + 1; r < m; ++r) pick[r] = pick[k];
    }
  }
  return static_cast<int>(seen.size());
}

}  // namespace oracle
