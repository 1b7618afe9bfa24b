#include "hdk/minimize.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace hdk {

namespace {

struct SideRun {
  int curve;
  std::vector<int> chord_idx;       // chord indices along the curve's own direction
  int s_in, s_out;                  // slots bracketing the run on the outside
  std::vector<int> interior_slots;  // slots strictly inside, in run order
  std::vector<int> chord_tris;      // triangle of each chord in the run
  bool reversed = false;            // true when circuit order opposed the curve
  bool wraps = false;               // both corners on one chord: run covers the rest
};

// Turn a circuit run (the darts between the two corners) into curve-order
// data. All darts lie on chords of one curve and share a direction.
SideRun build_run(const Analysis& an, const std::vector<int>& darts) {
  SideRun r;
  const auto& frag0 = an.fragments[an.frag_of(darts.front())];
  int g0 = frag0.owner;
  r.curve = an.chords[g0].curve;
  bool fwd = an.dart_forward(darts.front());
  std::vector<int> gs;
  for (int d : darts) {
    if (an.dart_forward(d) != fwd) throw std::logic_error("bigon run: mixed direction");
    int g = an.fragments[an.frag_of(d)].owner;
    if (an.chords[g].curve != r.curve) throw std::logic_error("bigon run: mixed curve");
    gs.push_back(g);
  }
  r.reversed = !fwd;
  if (!fwd) std::reverse(gs.begin(), gs.end());
  r.wraps = gs.size() >= 2 && gs.front() == gs.back();
  r.s_in = an.chords[gs.front()].s_from;
  r.s_out = an.chords[gs.back()].s_to;
  for (size_t i = 0; i + 1 < gs.size(); i++) {
    if (an.chords[gs[i]].s_to != an.chords[gs[i + 1]].s_from)
      throw std::logic_error("bigon run: chords not consecutive");
    r.interior_slots.push_back(an.chords[gs[i]].s_to);
  }
  for (int g : gs) {
    r.chord_idx.push_back(an.chords[g].idx);
    r.chord_tris.push_back(an.chords[g].tri);
  }
  return r;
}

}  // namespace

long long remove_curve_bigons(Arrangement& arr, const std::set<int>& movable,
                              bool skip_vertex_regions) {
  long long removed = 0;
  while (true) {
    Analysis an(arr);
    auto bigons = an.bigons();
    std::sort(bigons.begin(), bigons.end(),
              [](const Analysis::Bigon& a, const Analysis::Bigon& b) { return a.region < b.region; });
    std::set<int> used_curves;
    std::set<int> used_gaps;  // old-analysis fragment ids receiving insertions
    bool any = false;
    for (const auto& b : bigons) {
      bool a_mov = movable.count(b.curve_a) > 0;
      bool b_mov = movable.count(b.curve_b) > 0;
      if (!a_mov && !b_mov) continue;
      if (skip_vertex_regions && an.region_has_vertex[b.region]) continue;
      if (used_curves.count(b.curve_a) || used_curves.count(b.curve_b)) continue;
      // Move the movable side; if both movable, the higher curve id moves.
      bool move_a = a_mov && (!b_mov || b.curve_a > b.curve_b);

      SideRun mov = build_run(an, move_a ? b.darts_a : b.darts_b);
      SideRun sta = build_run(an, move_a ? b.darts_b : b.darts_a);
      // Circuit order: run A goes corner_a -> corner_b, run B the reverse.
      int mov_circ_start = move_a ? b.corner_entry_a : b.corner_entry_b;
      int mov_circ_end = move_a ? b.corner_entry_b : b.corner_entry_a;
      int sta_circ_start = move_a ? b.corner_entry_b : b.corner_entry_a;
      int sta_circ_end = move_a ? b.corner_entry_a : b.corner_entry_b;
      // Where the movable curve (its own direction) enters the bigon, and
      // where the static side starts when walked in its own direction.
      int x_in = mov.reversed ? mov_circ_end : mov_circ_start;
      int sta_cd_start = sta.reversed ? sta_circ_end : sta_circ_start;
      // The parallel path must follow the static side from x_in onward.
      bool aligned = (sta_cd_start == x_in);
      std::vector<int> tau = sta.interior_slots;
      std::vector<int> stris = sta.chord_tris;
      if (!aligned) {
        std::reverse(tau.begin(), tau.end());
        std::reverse(stris.begin(), stris.end());
      }

      // Determine insertion gaps; skip this bigon if any gap already used in
      // this batch (rerouted strands through one gap could interact).
      struct Ins {
        int slot;
        bool before;
        int gap;
      };
      std::vector<Ins> ins;
      bool conflict = false;
      for (int t : tau) {
        int edge = arr.slots[t].edge;
        int pos = an.slot_pos(t);
        int f_before = an.edge_gap_fragment(edge, pos, false);
        int f_after = an.edge_gap_fragment(edge, pos, true);
        int r_before = an.region_of_face[an.face_of_dart[2 * f_before]];
        int r_after = an.region_of_face[an.face_of_dart[2 * f_after]];
        bool before_in = (r_before == b.region);
        bool after_in = (r_after == b.region);
        if (before_in == after_in) throw std::logic_error("bigon: cannot find insertion side");
        int gap = after_in ? f_before : f_after;
        if (used_gaps.count(gap)) conflict = true;
        ins.push_back({t, after_in, gap});
      }
      if (conflict) continue;
      for (const auto& i : ins) used_gaps.insert(i.gap);
      used_curves.insert(b.curve_a);
      used_curves.insert(b.curve_b);
      any = true;
      removed++;

      std::vector<int> new_slots;
      for (const auto& i : ins)
        new_slots.push_back(arr.new_slot_adjacent(i.slot, i.before, mov.curve));

      if (mov.wraps) {
        // Both corners lie on one movable chord and the run covers the rest
        // of the curve: the whole curve is replaced by the parallel of the
        // static side, closed up through the corner triangle.
        if (new_slots.size() < 2)
          throw std::logic_error("bigon: wrapped side leaves too small a curve");
        if (stris.front() != stris.back())
          throw std::logic_error("bigon: wrap corners in different triangles");
        std::vector<int> tris;
        for (size_t i = 1; i + 1 < stris.size(); i++) tris.push_back(stris[i]);
        tris.push_back(stris.front());  // closing chord past the kept fragment
        arr.replace_curve(mov.curve, new_slots, tris);
      } else {
        const auto& seq = arr.curves[mov.curve].slot_seq;
        int ia = -1, ib = -1;
        for (int i = 0; i < static_cast<int>(seq.size()); i++) {
          if (seq[i] == mov.s_in) ia = i;
          if (seq[i] == mov.s_out) ib = i;
        }
        if (ia < 0 || ib < 0) throw std::logic_error("bigon: splice anchors missing");
        arr.splice(mov.curve, ia, ib, new_slots, stris);
      }
      if (std::getenv("HDK_DEBUG_BIGON")) break;  // one application per pass
    }
    if (!any) break;
  }
  return removed;
}

long long minimal_crossings(Arrangement& arr, int fixed, int movable) {
  remove_curve_bigons(arr, {movable});
  Analysis an(arr);
  return an.crossings_between(fixed, movable);
}

}  // namespace hdk
