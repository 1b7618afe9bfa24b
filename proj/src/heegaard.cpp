#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hdk/heegaard.hpp"
#include "hdk/minimize.hpp"
#include "sys_internal.hpp"

namespace hdk {

namespace sys {

int parallel_copy(Arrangement& arr, int u, bool left) {
  Analysis an(arr);
  std::vector<int> spc = slot_positions(arr, an);
  const auto& cv = arr.curves[u];
  int n = cv.size();
  std::vector<int> slots(n), tris(n);
  for (int i = 0; i < n; i++) {
    int s = cv.slot_seq[i];
    int g = an.chord_of(u, i);  // chord leaving s
    bool after = left_is_after(arr, spc, an.chords[g], s) == left;
    slots[i] = arr.new_slot_adjacent(s, !after, -2);
    tris[i] = cv.chord_tri[i];
  }
  return arr.add_curve(slots, tris);
}

std::vector<GuideHit> guide_hits(const Analysis& an, int guide, const std::set<int>& targets) {
  std::vector<GuideHit> hits;
  const auto& cv = an.arr->curves[guide];
  for (int idx = 0; idx < cv.size(); idx++) {
    int g = an.chord_of(guide, idx);
    for (int x : an.chord_crossings[g]) {
      int other = an.crossings[x].ca == g ? an.crossings[x].cb : an.crossings[x].ca;
      int oc = an.chords[other].curve;
      if (targets.count(oc)) hits.push_back({x, oc, idx});
    }
  }
  return hits;
}

int band_join(Arrangement& arr, int u, int w, int guide, int x_u, int x_w) {
  if (u == w) throw std::invalid_argument("band_join: need two distinct curves");
  Analysis an(arr);
  std::vector<int> spc = slot_positions(arr, an);

  // Locate the two crossings on the guide and the subarc between them.
  auto hits = guide_hits(an, guide, {u, w});
  int pu = -1, pw = -1;
  for (size_t i = 0; i < hits.size(); i++) {
    if (hits[i].crossing == x_u) pu = static_cast<int>(i);
    if (hits[i].crossing == x_w) pw = static_cast<int>(i);
  }
  if (pu < 0 || pw < 0) throw std::invalid_argument("band_join: crossings not on guide");
  if ((pu + 1) % static_cast<int>(hits.size()) != pw)
    throw std::invalid_argument("band_join: band interior meets the curves");

  // Guide subarc slots/chords from x_u to x_w (forward).
  const auto& gv = arr.curves[guide];
  int gl = gv.size();
  std::vector<int> bslots;             // guide slots strictly between
  std::vector<int> bchord_tris;        // triangles of guide chords traversed
  std::vector<const Analysis::Chord*> bchords;
  {
    int c0 = hits[pu].guide_chord_idx, c1 = hits[pw].guide_chord_idx;
    int i = c0;
    while (true) {
      bchords.push_back(&an.chords[an.chord_of(guide, i)]);
      bchord_tris.push_back(gv.chord_tri[i]);
      if (i == c1) {
        // Same chord can carry both crossings; ensure x_w not before x_u on it
        // when c0 == c1 and pu -> pw wraps the full guide... handled by hits
        // adjacency already.
        if (c0 != c1 || bchords.size() > 1 || true) break;
      }
      bslots.push_back(gv.slot_seq[(i + 1) % gl]);
      i = (i + 1) % gl;
      if (static_cast<int>(bchords.size()) > gl + 1)
        throw std::logic_error("band_join: guide walk overflow");
    }
    // Wait: when c0 == c1 but x_w lies after x_u on the same chord, the walk
    // above stops immediately (single chord, no slots) — correct. When the
    // subarc wraps the whole guide (x_w before x_u on the same chord), hits
    // adjacency means every other crossing on the guide lies outside, and we
    // must walk the full cycle; detect via crossing order on the chord.
    if (c0 == c1) {
      const auto& xs = an.chord_crossings[an.chord_of(guide, c0)];
      int ru = -1, rw = -1;
      for (size_t q = 0; q < xs.size(); q++) {
        if (xs[q] == x_u) ru = static_cast<int>(q);
        if (xs[q] == x_w) rw = static_cast<int>(q);
      }
      if (ru > rw) {
        // full wrap
        bslots.clear();
        bchords.clear();
        bchord_tris.clear();
        int i2 = c0;
        for (int step = 0; step <= gl; step++) {
          bchords.push_back(&an.chords[an.chord_of(guide, i2)]);
          bchord_tris.push_back(gv.chord_tri[i2]);
          if (step == gl) break;
          bslots.push_back(gv.slot_seq[(i2 + 1) % gl]);
          i2 = (i2 + 1) % gl;
        }
      }
    }
  }

  const auto& xu = an.crossings[x_u];
  const auto& xw = an.crossings[x_w];
  int gu_chord = an.chords[xu.ca].curve == u ? xu.ca : xu.cb;
  int ggu = gu_chord == xu.ca ? xu.cb : xu.ca;  // guide chord at x_u
  int gw_chord = an.chords[xw.ca].curve == w ? xw.ca : xw.cb;
  int ggw = gw_chord == xw.ca ? xw.cb : xw.ca;
  if (an.chords[gu_chord].curve != u || an.chords[gw_chord].curve != w ||
      an.chords[ggu].curve != guide || an.chords[ggw].curve != guide)
    throw std::invalid_argument("band_join: crossing curves mismatch");

  // Flank slots: for each guide slot between the crossings, one slot on each
  // side, inserted adjacent.
  std::vector<int> flank_left, flank_right;
  for (size_t j = 0; j < bslots.size(); j++) {
    int s = bslots[j];
    // chord leaving s along the walk = bchords[j+1]
    const Analysis::Chord& ch = *bchords[j + 1];
    bool after_for_left = left_is_after(arr, spc, ch, s);
    flank_left.push_back(arr.new_slot_adjacent(s, !after_for_left, -2));
    flank_right.push_back(arr.new_slot_adjacent(s, after_for_left, -2));
  }

  // Which side of the guide each cut end lies on.
  bool u_tail_left = tail_left_of(arr, spc, an.chords[ggu], an.chords[gu_chord]);
  bool w_tail_left = tail_left_of(arr, spc, an.chords[ggw], an.chords[gw_chord]);

  // Assemble the new cycle:
  //   u forward from (s_to of gu) to (s_from of gu),
  //   junction into the flank on u's tail side, flank forward,
  //   junction into w at the end on the same side, w traversed accordingly,
  //   junction into the other flank backward, closing junction to u.
  const auto& cu = an.chords[gu_chord];
  const auto& cw = an.chords[gw_chord];
  std::vector<int> seq, tris;
  auto append_curve_cycle = [&](int curve, int start_slot, bool forward, int end_slot) {
    // walk from start_slot to end_slot inclusive, in the given direction.
    const auto& cv = arr.curves[curve];
    int n = cv.size();
    int pos = -1;
    for (int i = 0; i < n; i++)
      if (cv.slot_seq[i] == start_slot) pos = i;
    if (pos < 0) throw std::logic_error("band_join: start slot missing");
    int i = pos;
    while (true) {
      seq.push_back(cv.slot_seq[i]);
      if (cv.slot_seq[i] == end_slot && !(cv.slot_seq[i] == start_slot && seq.size() == 1 && n > 1 && start_slot != end_slot))
        break;
      if (forward) {
        tris.push_back(cv.chord_tri[i]);
        i = (i + 1) % n;
      } else {
        i = (i + n - 1) % n;
        tris.push_back(cv.chord_tri[i]);
      }
      if (static_cast<int>(seq.size()) > n + 1) throw std::logic_error("band_join: cycle overflow");
    }
  };

  // u: forward from cu.s_to around to cu.s_from.
  append_curve_cycle(u, cu.s_to, true, cu.s_from);
  // junction A: from cu.s_from into the tail-side flank, at its x_u end.
  const std::vector<int>& flank1 = u_tail_left ? flank_left : flank_right;
  const std::vector<int>& flank2 = u_tail_left ? flank_right : flank_left;
  tris.push_back(cu.tri);
  for (size_t j = 0; j < flank1.size(); j++) {
    seq.push_back(flank1[j]);
    if (j + 1 < flank1.size()) tris.push_back(bchord_tris[j + 1]);
  }
  // junction B into w at x_w on the same side as flank1.
  bool flank1_left = u_tail_left;
  // If flank1 is empty, the junction runs from cu.s_from straight to w's end
  // inside the shared triangle of the band (the guide chord's triangle).
  if (flank1.empty()) {
    tris.back() = cu.tri;  // the single junction chord's triangle
    if (cu.tri != cw.tri && bchord_tris.size() == 1) {
      // both crossings on one guide chord: junction stays in that triangle
      tris.back() = bchords.front()->tri;
    }
  } else {
    tris.push_back(cw.tri);
  }
  // w traversal: enter at the end of w on side flank1_left.
  bool enter_at_w_tail = (w_tail_left == flank1_left);
  if (enter_at_w_tail) {
    // enter at s_from side: traverse w backward from s_from to s_to.
    append_curve_cycle(w, cw.s_from, false, cw.s_to);
  } else {
    append_curve_cycle(w, cw.s_to, true, cw.s_from);
  }
  // junction C into flank2 at its x_w end, traversed backward to x_u.
  tris.push_back(cw.tri);
  for (int j = static_cast<int>(flank2.size()) - 1; j >= 0; j--) {
    seq.push_back(flank2[j]);
    if (j > 0) tris.push_back(bchord_tris[j]);
  }
  if (flank2.empty()) {
    tris.back() = bchords.front()->tri;
  }
  // closing junction D back to u at cu.s_to.
  tris.push_back(cu.tri);

  if (seq.size() != tris.size()) throw std::logic_error("band_join: assembly size mismatch");

  // Retire u and w, then install the band sum as a fresh curve.
  std::vector<int> useq = arr.curves[u].slot_seq;  // keep: reused in seq
  // The assembled seq reuses u's and w's slots; just rebuild curve u with the
  // new cycle and delete w's record.
  // Slots of w change ownership to u.
  arr.curves[w].slot_seq.clear();
  arr.curves[w].chord_tri.clear();
  arr.curves[w].removed = true;
  for (int s : seq) arr.slots[s].curve = u;
  arr.curves[u].slot_seq = seq;
  arr.curves[u].chord_tri = tris;
  return u;
}

}  // namespace sys

Curve band_sum(const Curve& a, const Curve& b, const BandSpec& band) {
  const Surface& s = *a.surface();
  if (a.surface() != b.surface()) throw std::invalid_argument("band_sum: surfaces differ");
  if (geometric_intersection(a, b) != 0)
    throw std::invalid_argument("band_sum: curves must be disjoint");
  Arrangement arr(s);
  int ia = arr.insert_normal(a.weights()).at(0);
  int ib = arr.insert_normal(b.weights()).at(0);
  // Make them disjoint in the realization.
  remove_curve_bigons(arr, {ib});
  {
    Analysis an0(arr);
    if (an0.crossings_between(ia, ib) != 0)
      throw std::invalid_argument("band_sum: could not realize the curves disjointly");
  }
  int joined = -1;
  if (band.kind == BandSpec::Kind::GuideSubarc) {
    if (band.guide.component_count() != 1)
      throw std::invalid_argument("band_sum: guide must be a single curve");
    int ig = arr.insert_normal(band.guide.weights()).at(0);
    remove_curve_bigons(arr, {ig});
    Analysis an(arr);
    auto hits = sys::guide_hits(an, ig, {ia, ib});
    // Find the band.from_hit-th admissible consecutive pair (a then b or b
    // then a).
    int found = 0;
    int m = static_cast<int>(hits.size());
    int chosen = -1;
    for (int i = 0; i < m; i++) {
      int j = (i + 1) % m;
      if (hits[i].other_curve != hits[j].other_curve) {
        if (found == band.from_hit) {
          chosen = i;
          break;
        }
        found++;
      }
    }
    if (chosen < 0) throw std::invalid_argument("band_sum: no admissible band along the guide");
    int i = chosen, j = (chosen + 1) % m;
    int cu = hits[i].other_curve, xw_u = hits[i].crossing;
    int xw_w = hits[j].crossing;
    if (cu == ia)
      joined = sys::band_join(arr, ia, ib, ig, xw_u, xw_w);
    else
      joined = sys::band_join(arr, ib, ia, ig, xw_u, xw_w);
    arr.remove_curve(ig);
  } else {
    // Corridor: connect the two curves through one complementary region by a
    // short dummy guide built from a region path... realized instead as a
    // direct two-flank bridge; implemented via a throwaway guide curve is
    // unnecessary — use the simplest corridor: a region both curves touch.
    joined = sys::corridor_band_join(arr, ia, ib);
  }
  (void)joined;
  std::vector<long long> w = normalize_to_weights(s, std::move(arr));
  Multicurve out(s, std::move(w));
  return Curve::from(out);
}

}  // namespace hdk
