#include <algorithm>
#include <map>
#include <stdexcept>

#include "geom_internal.hpp"
#include "hdk/minimize.hpp"
#include "hdk/multicurve.hpp"
#include "hdk/regions.hpp"

namespace hdk {

namespace {

struct Strand {
  int alpha_curve;
  int rank;          // event rank of the crossing along the traversal of c
  bool enters_left;  // the strand's tail lies left of oriented c
};

}  // namespace

// Twist by splicing: after putting (a, c) in minimal position, every strand
// of a crossing c is rerouted through a spiral of |k| laps running parallel
// to c on its left side; the image is the shear of the annulus around c.
// Positive k winds along the stored traversal orientation of c's normal
// realization (the global handedness convention; the torus oracle pins it).
Multicurve dehn_twist(const Multicurve& a, const Curve& c, long long k) {
  if (a.surface() != c.surface()) throw std::invalid_argument("dehn_twist: different surfaces");
  if (k == 0 || a.empty()) return a;

  const Surface& S = *a.surface();
  Arrangement arr(S);
  int ic = arr.insert_normal(c.weights()).at(0);
  std::vector<int> ialist = arr.insert_normal(a.weights());
  std::set<int> movable(ialist.begin(), ialist.end());
  // Punctured-surface minimization only: the splice is class-exact from any
  // transverse position, and skipping vertex regions keeps the operation
  // exact on normal coordinates (so twist round trips are identities).
  remove_curve_bigons(arr, movable, /*skip_vertex_regions=*/true);
  Analysis an(arr);

  {
    bool any = false;
    for (int ci : ialist)
      if (an.crossings_between(ic, ci) > 0) any = true;
    if (!any) return a;
  }

  // The twist handedness is independent of c's orientation: positive k
  // shears backward along the stored traversal, negative k forward (the
  // global sign is pinned by the torus convention tau_m(l) = l + m).
  long long laps = k > 0 ? k : -k;
  bool forward_shear = k < 0;
  const auto& cc = arr.curves[ic];
  int L = cc.size();

  // Traversal of c: tslots[i] = i-th slot; the chord leaving tslots[i] is
  // c's chord tchord[i].idx.
  std::vector<int> tslots(L);
  struct TC {
    int idx;
    bool aligned;
  };
  std::vector<TC> tchord(L);
  for (int i = 0; i < L; i++) {
    tslots[i] = cc.slot_seq[i];
    tchord[i] = {i, true};
  }
  std::vector<int> traversal_of_chord(L, -1);
  for (int i = 0; i < L; i++) traversal_of_chord[tchord[i].idx] = i;

  // Event ranks along the traversal: slot, then crossings on the leaving
  // chord in traversal order.
  std::vector<int> slot_rank(L);
  std::map<int, int> crossing_rank;
  std::vector<int> slot_of_rank;  // rank -> traversal index (for slot events)
  int M = 0;
  {
    std::vector<std::pair<bool, int>> events;
    for (int i = 0; i < L; i++) {
      slot_rank[i] = static_cast<int>(events.size());
      events.push_back({true, i});
      int g = an.chord_of(ic, tchord[i].idx);
      std::vector<int> xs;
      for (int x : an.chord_crossings[g]) xs.push_back(x);
      if (!tchord[i].aligned) std::reverse(xs.begin(), xs.end());
      for (int x : xs) {
        crossing_rank[x] = static_cast<int>(events.size());
        events.push_back({false, x});
      }
    }
    M = static_cast<int>(events.size());
    slot_of_rank.assign(M, -1);
    for (int i = 0; i < L; i++) slot_of_rank[slot_rank[i]] = i;
  }

  std::vector<int> slot_pos_cache(arr.slots.size(), -1);
  for (size_t s = 0; s < arr.slots.size(); s++)
    if (arr.slots[s].curve >= 0) slot_pos_cache[s] = an.slot_pos(static_cast<int>(s));

  // Oriented direction of c along traversal step i, in that chord's triangle.
  auto traversal_dir = [&](int i) -> geom::Vec {
    const TC& tc = tchord[i];
    const auto& cu = an.chords[an.chord_of(ic, tc.idx)];
    geom::Pt P = geom::slot_point_in_tri(arr, cu.tri, cu.s_from, slot_pos_cache[cu.s_from]);
    geom::Pt Q = geom::slot_point_in_tri(arr, cu.tri, cu.s_to, slot_pos_cache[cu.s_to]);
    geom::Vec d = geom::direction(P, Q);
    if (!tc.aligned) {
      d.x = -d.x;
      d.y = -d.y;
    }
    return d;
  };

  // Strands.
  std::vector<Strand> strands;
  std::map<int, int> strand_of_crossing;
  for (const auto& [x, rank] : crossing_rank) {
    const auto& xr = an.crossings[x];
    int gc = an.chords[xr.ca].curve == ic ? xr.ca : xr.cb;
    int ga = gc == xr.ca ? xr.cb : xr.ca;
    if (an.chords[gc].curve != ic || an.chords[ga].curve == ic)
      throw std::logic_error("dehn_twist: unexpected crossing pair");
    Strand st;
    st.alpha_curve = an.chords[ga].curve;
    st.rank = rank;
    int ti = traversal_of_chord[an.chords[gc].idx];
    geom::Vec dirc = traversal_dir(ti);
    const auto& cu = an.chords[gc];
    const auto& gau = an.chords[ga];
    geom::Pt base = geom::slot_point_in_tri(arr, cu.tri, cu.s_from, slot_pos_cache[cu.s_from]);
    geom::Pt A = geom::slot_point_in_tri(arr, gau.tri, gau.s_from, slot_pos_cache[gau.s_from]);
    geom::Vec va = geom::direction(base, A);
    int side = geom::sign(geom::cross(dirc, va));
    if (side == 0) throw std::logic_error("dehn_twist: degenerate strand side");
    st.enters_left = side > 0;
    strand_of_crossing[x] = static_cast<int>(strands.size());
    strands.push_back(st);
  }
  int m = static_cast<int>(strands.size());

  // Signed event distance along the annulus: positive shear measures forward
  // along the traversal, negative shear backward.
  auto shear_dist = [&](int from_rank, int to_rank) -> long long {
    long long d = forward_shear ? (to_rank - from_rank) : (from_rank - to_rank);
    return ((d % M) + M) % M;
  };

  // Insertion sides, precomputed before any insertion disturbs positions
  // (the signs are position-independent, but consistency is cheap).
  std::vector<bool> insert_after_at(L);
  for (int i = 0; i < L; i++) {
    int s_anchor = tslots[i];
    geom::Vec dirc = traversal_dir(i);
    const TC& tc = tchord[i];
    const auto& cu = an.chords[an.chord_of(ic, tc.idx)];
    int e = arr.slots[s_anchor].edge;
    int kside = geom::side_of_edge(S, cu.tri, e);
    const Surface::Side& sd = S.tris[cu.tri][kside];
    geom::Pt tailp = geom::corner_pt((kside + 2) % 3), headp = geom::corner_pt(kside);
    geom::Vec dire = geom::direction(tailp, headp);
    if (!sd.forward) {
      dire.x = -dire.x;
      dire.y = -dire.y;
    }
    int sigma = geom::sign(geom::cross(dirc, dire));
    if (sigma == 0) throw std::logic_error("dehn_twist: chord parallel to edge");
    insert_after_at[i] = sigma > 0;  // +e direction points left of c
  }

  // Create the spiral passage slots: at each traversal slot, all (strand,
  // lap) passages, inserted on the left of c in ascending height order so
  // the highest passage ends nearest to c.
  std::map<std::pair<int, long long>, int> passage_slot;
  for (int i = 0; i < L; i++) {
    int s_anchor = tslots[i];
    bool insert_after = insert_after_at[i];

    std::vector<std::pair<long long, int>> keyed;
    for (int si = 0; si < m; si++) {
      long long dist = shear_dist(strands[si].rank, slot_rank[i]);
      for (long long l = 0; l < laps; l++) keyed.push_back({l * M + dist, si});
    }
    std::sort(keyed.begin(), keyed.end());
    for (const auto& [key, si] : keyed) {
      int ns = arr.new_slot_adjacent(s_anchor, !insert_after, strands[si].alpha_curve);
      passage_slot[{si, key}] = ns;
    }
  }

  auto corridor_tri = [&](int i) {
    return an.chords[an.chord_of(ic, tchord[i].idx)].tri;
  };

  // Rebuild the alpha curves.
  for (int ci : ialist) {
    const auto& cv = arr.curves[ci];
    int n = cv.size();
    std::vector<int> nseq, ntris;
    for (int idx = 0; idx < n; idx++) {
      nseq.push_back(cv.slot_seq[idx]);
      int g = an.chord_of(ci, idx);
      int gtri = an.chords[g].tri;
      std::vector<int> xs;
      for (int x : an.chord_crossings[g]) {
        int other = an.crossings[x].ca == g ? an.crossings[x].cb : an.crossings[x].ca;
        if (an.chords[other].curve == ic) xs.push_back(x);
      }
      for (int x : xs) {
        int si = strand_of_crossing.at(x);
        const Strand& st = strands[si];
        std::vector<long long> keys;
        for (int i2 = 0; i2 < L; i2++) {
          long long dist = shear_dist(st.rank, slot_rank[i2]);
          for (long long l = 0; l < laps; l++) keys.push_back(l * M + dist);
        }
        std::sort(keys.begin(), keys.end());
        // A strand entering from the left starts at the outer annulus
        // boundary and travels toward c (keys ascending); from the right it
        // travels outward (descending). Travel direction along c is the
        // shear direction for left entries and its reverse for right ones.
        if (!st.enters_left) std::reverse(keys.begin(), keys.end());
        bool travel_forward = (st.enters_left == forward_shear);
        auto anchor_of_key = [&](long long key) {
          long long d = ((key % M) + M) % M;
          long long r = forward_shear ? (st.rank + d) % M : ((st.rank - d) % M + M) % M;
          int t = slot_of_rank[r];
          if (t < 0) throw std::logic_error("dehn_twist: passage anchor missing");
          return t;
        };
        for (size_t j = 0; j < keys.size(); j++) {
          if (j == 0) {
            ntris.push_back(gtri);
          } else {
            int t1 = anchor_of_key(keys[j - 1]);
            int t2 = anchor_of_key(keys[j]);
            int tri;
            if (travel_forward) {
              if ((t1 + 1) % L != t2 && L > 1)
                throw std::logic_error("dehn_twist: non-adjacent spiral passages");
              tri = corridor_tri(t1);
            } else {
              if ((t2 + 1) % L != t1 && L > 1)
                throw std::logic_error("dehn_twist: non-adjacent spiral passages");
              tri = corridor_tri(t2);
            }
            ntris.push_back(tri);
          }
          nseq.push_back(passage_slot.at({si, keys[j]}));
        }
      }
      ntris.push_back(gtri);
    }
    if (ntris.size() != nseq.size()) throw std::logic_error("dehn_twist: rebuild size mismatch");
    auto& cv2 = arr.curves[ci];
    cv2.slot_seq = std::move(nseq);
    cv2.chord_tri = std::move(ntris);
  }

  arr.remove_curve(ic);
  std::vector<long long> w = normalize_to_weights(S, std::move(arr));
  return Multicurve(S, std::move(w));
}

}  // namespace hdk
