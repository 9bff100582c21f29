#pragma once

// Pairwise-disconnecting edge sets and maximal multiple edges, and the
// extreme coefficients of T_G(-t, -t^-1) they determine.
//
// A set S (|S| >= 2) is pairwise-disconnecting when deleting any two of its
// edges disconnects G. For connected bridgeless G the maximal such sets are
// disjoint, and the one containing e is {e} ∪ bridges(G - e).

#include <optional>
#include <span>
#include <vector>

#include "crossdrop/laurent.hpp"
#include "crossdrop/signed_graph.hpp"

namespace crossdrop {

struct PdsFamily {
  std::vector<std::vector<EdgeId>> sets;  // each ascending; ordered by first id

  /// Sum over members of (|S| - 1).
  int excess() const;
  /// The member containing e, if any.
  const std::vector<EdgeId>* containing(EdgeId e) const;
};

struct MultipleEdgeFamily {
  std::vector<std::vector<EdgeId>> groups;

  int excess() const;
};

/// Requires g connected and bridgeless, |S| >= 2, S ⊆ E(g). Evaluates the
/// pairwise definition, the component count k(G - S) = |S| and the cyclic
/// arrangement of G - S, and throws InvariantViolation if they disagree.
bool is_pds(const SignedGraph& g, std::span<const EdgeId> s);

std::optional<std::vector<EdgeId>> maximal_pds_of_edge(const SignedGraph& g, EdgeId e);

/// Deduplicated over all edges. Checks disjointness and that every component
/// of G - S is bridgeless.
PdsFamily all_maximal_pds(const SignedGraph& g);

/// Maximal classes of parallel edges. Requires g loopless.
MultipleEdgeFamily maximal_multiple_edges(const SignedGraph& g);

/// Top of T_G(-t,-t^-1) for connected loopless g:
/// m = |V|-1, a_m = (-1)^(|V|-1), a_{m-1} = (-1)^(|V|-1) (|V|-1-|E|+Σ(|I_M|-1)).
struct TopCoefficients {
  int m = 0;
  BigInt a_m;
  BigInt a_m_minus_1;
};
TopCoefficients dl_extreme_coeffs(const SignedGraph& g);

/// Bottom of T_G(-t,-t^-1) for connected bridgeless g:
/// n = -|E|+|V|-1, a_n = (-1)^(|E|-|V|+1),
/// a_{n+1} = (-1)^(|E|-|V|+1) (-|V|+1+Σ(|S_M|-1)).
struct BottomCoefficients {
  int n = 0;
  BigInt a_n;
  BigInt a_n_plus_1;
};
BottomCoefficients dual_extreme_coeffs(const SignedGraph& g);

/// |E_s| == |E_s(G/e)| + 1 + |N(u) ∩ N(v)| for a multiplicity-one edge of a
/// connected, bridgeless, loopless g.
bool es_identity_check(const SignedGraph& g, EdgeId e);

}  // namespace crossdrop
