#pragma once

// Shared arrangement-level helpers for the surgery pipeline (band sums,
// parallel copies, guide subarcs). Internal to the library sources.

#include <set>
#include <stdexcept>
#include <vector>

#include "geom_internal.hpp"
#include "hdk/arrangement.hpp"
#include "hdk/regions.hpp"

namespace hdk::sys {

inline std::vector<int> slot_positions(const Arrangement& arr, const Analysis& an) {
  std::vector<int> spc(arr.slots.size(), -1);
  for (size_t s = 0; s < arr.slots.size(); s++)
    if (arr.slots[s].curve >= 0) spc[s] = an.slot_pos(static_cast<int>(s));
  return spc;
}

/// True iff the tail (s_from) of chord g lies on the left of chord u's
/// oriented line; both chords must share a triangle (e.g. they cross).
inline bool tail_left_of(const Arrangement& arr, const std::vector<int>& spc,
                         const Analysis::Chord& u, const Analysis::Chord& g) {
  geom::Pt P = geom::slot_point_in_tri(arr, u.tri, u.s_from, spc[u.s_from]);
  geom::Pt Q = geom::slot_point_in_tri(arr, u.tri, u.s_to, spc[u.s_to]);
  geom::Vec dir = geom::direction(P, Q);
  geom::Pt A = geom::slot_point_in_tri(arr, u.tri, g.s_from, spc[g.s_from]);
  geom::Vec va = geom::direction(P, A);
  int s = geom::sign(geom::cross(dir, va));
  if (s == 0) throw std::logic_error("tail_left_of: degenerate");
  return s > 0;
}

/// Whether the +edge direction at a slot of chord u points to u's left;
/// equivalently where to insert a "left of u" parallel slot.
inline bool left_is_after(const Arrangement& arr, const std::vector<int>& spc,
                          const Analysis::Chord& u, int slot) {
  const Surface& S = *arr.surf;
  geom::Pt P = geom::slot_point_in_tri(arr, u.tri, u.s_from, spc[u.s_from]);
  geom::Pt Q = geom::slot_point_in_tri(arr, u.tri, u.s_to, spc[u.s_to]);
  geom::Vec dirc = geom::direction(P, Q);
  int e = arr.slots[slot].edge;
  int k = geom::side_of_edge(S, u.tri, e);
  const Surface::Side& sd = S.tris[u.tri][k];
  geom::Pt tailp = geom::corner_pt((k + 2) % 3), headp = geom::corner_pt(k);
  geom::Vec dire = geom::direction(tailp, headp);
  if (!sd.forward) {
    dire.x = -dire.x;
    dire.y = -dire.y;
  }
  int sigma = geom::sign(geom::cross(dirc, dire));
  if (sigma == 0) throw std::logic_error("left_is_after: chord parallel to edge");
  return sigma > 0;
}

/// Creates a full parallel copy of curve u on its left (or right) side.
/// Returns the new curve id.
int parallel_copy(Arrangement& arr, int u, bool left);

/// Cuts curves u and w at their crossings x_u, x_w with the guide curve and
/// reconnects them through two strands running parallel to the guide between
/// those crossings (walking the guide forward from x_u to x_w). The two old
/// curves are replaced by a single new curve, whose id is returned.
/// Requires: u != w, both cross the guide at the stated crossings, and no
/// crossing with u or w lies strictly between them along the guide.
int band_join(Arrangement& arr, int u, int w, int guide, int x_u, int x_w);

/// Crossings of `guide` (in traversal order) with curves in `targets`.
struct GuideHit {
  int crossing;
  int other_curve;
  int guide_chord_idx;
};
std::vector<GuideHit> guide_hits(const Analysis& an, int guide, const std::set<int>& targets);

}  // namespace hdk::sys
