#pragma once

// The signed-graph Q-polynomial Q[G](A, A^-1, -A^2-A^-2), the Tutte subset
// expansion used as its independent oracle, and the crossing-flip identities.

#include "crossdrop/laurent.hpp"
#include "crossdrop/plane_graph.hpp"
#include "crossdrop/signed_graph.hpp"

namespace crossdrop {

enum class PivotOrder { kLowestId, kHighestId };

struct QOptions {
  int max_edges = 16;
  bool memoize = true;
  PivotOrder pivot = PivotOrder::kLowestId;
};

/// Deletion-contraction with loops and bridges stripped first, then a pivot on
/// the lowest (or highest) remaining edge id. Throws CapExceeded above
/// `max_edges`. The embedding is ignored.
LaurentPoly q_polynomial(const SignedGraph& g, const QOptions& options = {});
inline LaurentPoly q_polynomial(const SignedPlaneGraph& g, const QOptions& options = {}) {
  return q_polynomial(g.abstract(), options);
}

/// sum over F ⊆ E of (-t-1)^(k(F)-1) (-t^-1-1)^(|F|-|V|+k(F)), i.e. the Tutte
/// polynomial at (-t, -t^-1). Signs are ignored. Throws CapExceeded.
LaurentPoly tutte_neg_eval(const SignedGraph& g, int max_edges = 20);

/// A^(-|E|+2|V|-2) T_G(-A^-4, -A^4) for a connected all-positive graph.
LaurentPoly q_via_tutte(const SignedGraph& g, int max_edges = 20);

/// Q of the graph with edge e turned from + to -, computed by the recursion,
/// together with the two closed forms that express it through Q[G], Q[G/e]
/// and Q[G-e].
struct FlipAnalysis {
  EdgeId edge = -1;
  LaurentPoly original;    // Q[G]
  LaurentPoly flipped;     // Q[G~]
  LaurentPoly deleted;     // Q[G-e]
  LaurentPoly contracted;  // Q[G/e]
  LaurentPoly via_contracted;  // A^2 Q[G] + (A^-1 - A^3) Q[G/e]
  LaurentPoly via_deleted;     // A^-2 Q[G] + (A - A^-3) Q[G-e]

  bool contracted_identity_holds() const { return via_contracted == flipped; }
  bool deleted_identity_holds() const { return via_deleted == flipped; }
};

/// Requires e positive and not a loop.
FlipAnalysis analyze_flip(const SignedGraph& g, EdgeId e, const QOptions& options = {});

/// Q[G~]; throws InvariantViolation if either closed form disagrees.
LaurentPoly q_after_flip(const SignedGraph& g, EdgeId e, const QOptions& options = {});

struct DegreeCoefficient {
  int degree = 0;
  BigInt coefficient;

  friend bool operator==(const DegreeCoefficient&, const DegreeCoefficient&) = default;
};

/// Predicted extreme terms of Q[G] for a connected, bridgeless, loopless,
/// all-positive G. Second-highest/lowest sit 4 away from the extremes.
struct ExtremeCoefficients {
  DegreeCoefficient highest;
  DegreeCoefficient second_highest;
  DegreeCoefficient lowest;
  DegreeCoefficient second_lowest;
};

ExtremeCoefficients extreme_coeff_predictions(const SignedGraph& g);

/// The four entries read off an actual polynomial at the predicted degrees.
ExtremeCoefficients observed_extremes(const LaurentPoly& q, const ExtremeCoefficients& predicted);

}  // namespace crossdrop
