#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hdk/multicurve.hpp"

namespace hdk {

/// One boundary circle of a cut piece: which component of the cut multicurve
/// it came from and which side of it (0/1; sides are indexed consistently
/// per component).
struct BoundaryLabel {
  int component = -1;
  int side = -1;
  bool operator==(const BoundaryLabel&) const = default;
  bool operator<(const BoundaryLabel& o) const {
    return std::pair(component, side) < std::pair(o.component, o.side);
  }
};

struct CutPiece {
  int euler = 0;
  std::vector<BoundaryLabel> boundary;  // one entry per boundary circle
  int boundary_count() const { return static_cast<int>(boundary.size()); }
  int genus() const { return (2 - euler - boundary_count()) / 2; }
  bool is_pants() const { return euler == -1 && boundary_count() == 3; }
  bool is_annulus() const { return euler == 0 && boundary_count() == 2; }
  bool is_disk() const { return euler == 1 && boundary_count() == 1; }
};

/// An arc of a carried curve inside a piece: a seam joins two distinct
/// boundary circles, a wave returns to one.
struct ArcClass {
  int piece = -1;
  BoundaryLabel b1, b2;
  bool is_seam() const { return !(b1 == b2); }
};

/// Result of cutting a surface along a multicurve, optionally carrying a
/// second multicurve through the cut.
struct CutSurface {
  std::vector<CutPiece> pieces;
  std::vector<ArcClass> arcs;  // present when a carried curve was supplied
  int piece_count() const { return static_cast<int>(pieces.size()); }
  std::vector<ArcClass> arcs_in(int piece) const;
};

/// Cuts S along m. If `carried` is given it is first isotoped into minimal
/// position with m, then traced through the pieces.
CutSurface cut_along(const Multicurve& m, const Multicurve* carried = nullptr);

/// True iff every piece of S|P is a pair of pants (genus >= 2 decomposition
/// check) or, for the torus, a single annulus.
bool decomposes_into_pants(const Multicurve& p);

struct SeamReport {
  bool all_traversed = false;
  // Missing seams: (piece, pair of boundary circles).
  std::vector<ArcClass> missing;
};

/// Checks that alpha traverses every seam of every pants piece of S|P:
/// for each piece and each unordered pair of distinct boundary circles, some
/// arc of alpha joins them. Throws if P is not a pants decomposition.
SeamReport traverses_all_seams(const Multicurve& alpha, const Multicurve& pants);

}  // namespace hdk
