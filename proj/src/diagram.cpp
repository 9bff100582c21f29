#include "crossdrop/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "crossdrop/errors.hpp"

namespace crossdrop {

namespace {

class Partition {
 public:
  explicit Partition(int n) : parent_(n), classes_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    parent_[std::max(a, b)] = std::min(a, b);
    --classes_;
  }
  int classes() const noexcept { return classes_; }

 private:
  std::vector<int> parent_;
  int classes_;
};

// Strand-end on the `ccw_side` (true) or clockwise side of dart d.
int strand_end(int crossing, Dart d, bool ccw_side) {
  const int base = (d & 1) ? 2 : 0;
  return 4 * crossing + base + (ccw_side ? 0 : 1);
}

}  // namespace

MedialDiagram::MedialDiagram(std::vector<Crossing> crossings, std::vector<int> arc_partner,
                             int free_circles, int pieces)
    : crossings_(std::move(crossings)),
      arc_partner_(std::move(arc_partner)),
      free_circles_(free_circles),
      pieces_(pieces) {
  if (arc_partner_.size() != 4 * crossings_.size())
    throw InvariantViolation("medial diagram needs four strand-ends per crossing");
  for (int end = 0; end < static_cast<int>(arc_partner_.size()); ++end) {
    const int other = arc_partner_[end];
    if (other < 0 || other >= static_cast<int>(arc_partner_.size()) || arc_partner_[other] != end ||
        other == end)
      throw InvariantViolation("strand-end " + std::to_string(end) + " is not matched");
  }
}

MedialDiagram build_medial(const SignedPlaneGraph& g) {
  std::map<EdgeId, int> crossing_of;
  std::vector<Crossing> crossings;
  for (const PlaneEdge& e : g.edges()) {
    crossing_of[e.id] = static_cast<int>(crossings.size());
    crossings.push_back({e.id, e.sign == Sign::kPositive ? 0 : 1});
  }

  std::vector<int> partner(4 * crossings.size(), -1);
  int free_circles = 0;
  for (const PlaneVertex& v : g.vertices()) {
    if (v.rotation.empty()) {
      ++free_circles;
      continue;
    }
    for (Dart h : v.rotation) {
      const Dart next = g.next_ccw(h);
      // The corner between h and its counterclockwise successor.
      const int a = strand_end(crossing_of.at(edge_of(h)), h, true);
      const int b = strand_end(crossing_of.at(edge_of(next)), next, false);
      partner[a] = b;
      partner[b] = a;
    }
  }

  Partition joined(static_cast<int>(crossings.size()));
  for (int end = 0; end < static_cast<int>(partner.size()); ++end)
    joined.unite(end / 4, partner[end] / 4);
  return MedialDiagram(std::move(crossings), std::move(partner), free_circles,
                       joined.classes() + free_circles);
}

int link_components(const MedialDiagram& d) {
  const int ends = 4 * d.crossing_count();
  Partition strands(ends);
  for (int end = 0; end < ends; ++end) strands.unite(end, d.arc_partner(end));
  for (int c = 0; c < d.crossing_count(); ++c) {
    strands.unite(4 * c + 0, 4 * c + 2);
    strands.unite(4 * c + 1, 4 * c + 3);
  }
  return strands.classes() + d.free_circles();
}

namespace {

// The pair that the A-smoothing joins at an over-strand end `o`, under the
// standard convention: the clockwise neighbour of o.
int a_partner(int o, bool mirrored) { return mirrored ? (o + 1) % 4 : (o + 3) % 4; }

// counts[a][loops]: states with `a` A-smoothings and `loops` closed curves.
using StateCounts = std::vector<std::vector<long long>>;

void sum_states(const MedialDiagram& d, const std::vector<bool>& mirrored, std::uint64_t first,
                std::uint64_t last, StateCounts& counts) {
  const int c = d.crossing_count();
  const int ends = 4 * c;
  std::vector<int> parent(ends);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint64_t mask = first; mask < last; ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    int classes = ends;
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) {
        parent[std::max(a, b)] = std::min(a, b);
        --classes;
      }
    };
    for (int end = 0; end < ends; ++end) {
      if (end < d.arc_partner(end)) unite(end, d.arc_partner(end));
    }
    int a_count = 0;
    for (int k = 0; k < c; ++k) {
      const int o = d.crossings()[k].over_strand;
      const int base = 4 * k;
      const bool use_a = (mask >> k) & 1u;
      a_count += use_a ? 1 : 0;
      int first_pair;
      if (use_a) {
        first_pair = a_partner(o, mirrored[k]);
      } else {
        first_pair = a_partner(o, !mirrored[k]);
      }
      // Smoothing joins o with first_pair and the remaining two ends together.
      unite(base + o, base + first_pair);
      const int rest_a = (o + 2) % 4;
      const int rest_b = (first_pair + 2) % 4;
      unite(base + rest_a, base + rest_b);
    }
    ++counts[a_count][classes + d.free_circles()];
  }
}

}  // namespace

LaurentPoly kauffman_bracket(const MedialDiagram& d, const BracketOptions& options) {
  const int c = d.crossing_count();
  if (c > options.max_crossings)
    throw CapExceeded("kauffman_bracket: " + std::to_string(c) +
                      " crossings exceed the state-sum cap of " +
                      std::to_string(options.max_crossings));

  std::vector<bool> mirrored(c, false);
  for (int k = 0; k < c; ++k) {
    switch (options.convention) {
      case SmoothingConvention::kStandard: break;
      case SmoothingConvention::kMirrored: mirrored[k] = true; break;
      case SmoothingConvention::kAlternatingMirror: mirrored[k] = (k % 2 == 1); break;
    }
  }

  const int max_loops = 2 * c + d.free_circles() + 1;
  const std::uint64_t states = std::uint64_t{1} << c;
  const int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(states)));
  std::vector<StateCounts> partial(threads, StateCounts(c + 1, std::vector<long long>(max_loops + 1, 0)));
  if (threads == 1) {
    sum_states(d, mirrored, 0, states, partial[0]);
  } else {
    std::vector<std::thread> workers;
    const std::uint64_t chunk = (states + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const std::uint64_t lo = std::min(states, chunk * t);
      const std::uint64_t hi = std::min(states, lo + chunk);
      workers.emplace_back(sum_states, std::cref(d), std::cref(mirrored), lo, hi,
                           std::ref(partial[t]));
    }
    for (auto& w : workers) w.join();
  }

  const LaurentPoly loop = poly::loop_weight();
  std::vector<LaurentPoly> loop_pow{LaurentPoly::constant(1)};
  for (int i = 1; i <= max_loops; ++i) loop_pow.push_back(loop_pow.back() * loop);

  LaurentPoly total;
  for (int a = 0; a <= c; ++a) {
    for (int loops = 1; loops <= max_loops; ++loops) {
      long long n = 0;
      for (const StateCounts& p : partial) n += p[a][loops];
      if (n == 0) continue;
      total += LaurentPoly::monomial(n, 2 * a - c) * loop_pow[loops - 1];
    }
  }
  return total;
}

SpanInfo span_k(const MedialDiagram& d, const BracketOptions& options) {
  const LaurentPoly bracket = kauffman_bracket(d, options);
  if (bracket.is_zero()) throw InvariantViolation("bracket of a diagram vanished");
  const int span = bracket.span();
  if (span % 4 != 0)
    throw InvariantViolation("bracket span " + std::to_string(span) + " is not a multiple of 4");
  return {span, span / 4};
}

std::string medial_listing(const MedialDiagram& d) {
  std::ostringstream out;
  out << "crossings " << d.crossing_count() << " free_circles " << d.free_circles() << '\n';
  for (int c = 0; c < d.crossing_count(); ++c) {
    const Crossing& x = d.crossings()[c];
    out << "crossing " << c << " edge " << x.source_edge << " over "
        << (x.over_strand == 0 ? "0-2" : "1-3") << " arcs";
    for (int k = 0; k < 4; ++k) {
      const int p = d.arc_partner(4 * c + k);
      out << ' ' << k << "->" << p / 4 << '.' << p % 4;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace crossdrop
