#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hdk {

/// Reference to side `side` (0..2) of triangle `tri`.
struct SideRef {
  int tri = -1;
  int side = -1;
  bool operator==(const SideRef&) const = default;
};

/// One-vertex triangulation of a closed oriented surface of genus >= 1.
///
/// Triangle sides are listed in ccw order; side k runs from corner (k+2)%3
/// to corner k, so corner j sits between the head of side j and the tail of
/// side j+1. Every edge appears in exactly two triangle sides, once forward
/// and once backward.
class Surface {
 public:
  struct Side {
    int edge = -1;
    bool forward = true;
    bool operator==(const Side&) const = default;
  };

  int genus = 0;
  int edge_count = 0;
  std::vector<std::array<Side, 3>> tris;

  int triangle_count() const { return static_cast<int>(tris.size()); }
  int euler_characteristic() const { return 1 - edge_count + triangle_count(); }

  const SideRef& forward_placement(int edge) const { return fwd_place_[edge]; }
  const SideRef& backward_placement(int edge) const { return bwd_place_[edge]; }
  SideRef other_placement(const SideRef& s) const;
  const Side& side(const SideRef& s) const { return tris[s.tri][s.side]; }

  /// Corner id = 3*tri + j for the corner between sides j and j+1.
  static int corner_id(int tri, int j) { return 3 * tri + j; }

  /// Corners in ccw cyclic order around the single vertex (length 3T).
  const std::vector<int>& vertex_link() const { return link_; }
  /// Position of each corner in vertex_link().
  int link_position(int corner) const { return link_pos_[corner]; }

  /// The edge-end crossed when stepping ccw out of corner (tri,j): this is
  /// the head end of side j as placed. Returns (edge, is_head_of_edge).
  std::pair<int, bool> ccw_exit_end(int corner) const;

  /// Finishes construction: builds placements and the vertex link, and
  /// checks all invariants (throws std::invalid_argument on failure).
  void finalize();

  bool finalized() const { return !link_.empty(); }

 private:
  std::vector<SideRef> fwd_place_, bwd_place_;
  std::vector<int> link_;
  std::vector<int> link_pos_;
};

/// Canonical surface of the given genus: the fan triangulation of the
/// 4g-gon with boundary word a1 b1 a1' b1' ... ag bg ag' bg'.
/// Edges 2i and 2i+1 are the a/b loops of handle i; edges 2g..6g-4 are the
/// fan diagonals d2..d_{4g-2} in order.
Surface build_surface(int genus);

/// Human-readable names for the canonical surface's edges (a1, b1, ..., d2, ...).
std::string canonical_edge_name(const Surface& s, int edge);

}  // namespace hdk
