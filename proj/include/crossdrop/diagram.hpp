#pragma once

// Link diagrams obtained from signed plane graphs by the medial construction,
// and the Kauffman bracket computed by an honest state sum over smoothings.
//
// Crossing c sits on source edge e = (u, v) and owns the strand-ends 4c+k,
// listed counterclockwise around the crossing. With u drawn to the west and
// the left side of u->v to the north:
//   k = 0  north-west   (left side of e's dart at u)
//   k = 1  south-west   (right side of e's dart at u)
//   k = 2  south-east   (left side of e's dart at v)
//   k = 3  north-east   (right side of e's dart at v)
// Strands pass straight through: 0-2 and 1-3.

#include <array>
#include <string>
#include <vector>

#include "crossdrop/laurent.hpp"
#include "crossdrop/plane_graph.hpp"

namespace crossdrop {

struct Crossing {
  EdgeId source_edge = -1;
  /// 0: the strand 0-2 passes over; 1: the strand 1-3 passes over.
  int over_strand = 0;
};

class MedialDiagram {
 public:
  MedialDiagram(std::vector<Crossing> crossings, std::vector<int> arc_partner, int free_circles,
                int pieces);

  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  /// The strand-end joined to `end` by an arc of the diagram.
  int arc_partner(int end) const { return arc_partner_.at(end); }
  /// Closed curves with no crossings (one per isolated source vertex).
  int free_circles() const noexcept { return free_circles_; }
  /// Connected pieces of the diagram, free circles included.
  int pieces() const noexcept { return pieces_; }

 private:
  std::vector<Crossing> crossings_;
  std::vector<int> arc_partner_;
  int free_circles_;
  int pieces_;
};

/// A positive edge puts the strand 0-2 on top, so its A-channels are the two
/// regions containing the edge's endpoints.
MedialDiagram build_medial(const SignedPlaneGraph& g);

/// Number of closed strands when traversal runs straight through crossings.
int link_components(const MedialDiagram& d);

/// Which pairing of strand-ends counts as the A-smoothing. kStandard opens
/// the A-channels swept by turning the over-strand counterclockwise.
/// The other values are deliberate corruptions for harness self-tests:
/// kMirrored applies the opposite rule everywhere, kAlternatingMirror applies
/// it at odd-numbered crossings only.
enum class SmoothingConvention { kStandard, kMirrored, kAlternatingMirror };

struct BracketOptions {
  int max_crossings = 16;
  SmoothingConvention convention = SmoothingConvention::kStandard;
  /// Worker threads for the state sum; the result is the same for any value.
  int threads = 1;
};

/// sum over states of A^(#A - #B) d^(#loops - 1). Throws CapExceeded.
LaurentPoly kauffman_bracket(const MedialDiagram& d, const BracketOptions& options = {});

struct SpanInfo {
  int span_k = 0;
  int span_v = 0;  // span_k / 4
};

/// Throws InvariantViolation if span_k is not a multiple of 4 or the bracket
/// vanishes.
SpanInfo span_k(const MedialDiagram& d, const BracketOptions& options = {});

/// Text listing of crossings and arcs for debugging.
std::string medial_listing(const MedialDiagram& d);

}  // namespace crossdrop
