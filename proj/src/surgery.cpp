#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "geom_internal.hpp"
#include "hdk/cut.hpp"
#include "hdk/minimize.hpp"
#include "hdk/regions.hpp"

namespace hdk {

namespace {

struct DSU {
  std::vector<int> p;
  explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

// Pieces of the surface cut along the curves in `cut_set`; other curves in
// the arrangement are treated as carried (interior to pieces).
struct PieceDecomposition {
  const Analysis* an;
  std::vector<int> piece_of_face;
  int piece_count = 0;
  std::vector<int> euler;
  // Boundary circles: circles[i] = list of darts; circle_piece[i];
  // circle_label[i] identifies (cut curve id, side).
  std::vector<std::vector<int>> circles;
  std::vector<int> circle_piece;
  std::vector<std::pair<int, int>> circle_label;  // (arr curve id, side 0/1)
  std::vector<std::vector<int>> piece_circles;

  PieceDecomposition(const Analysis& a, const std::set<int>& cut_set) : an(&a) {
    const Analysis& A = a;
    DSU dsu(A.face_count);
    for (size_t f = 0; f < A.fragments.size(); f++) {
      const auto& fr = A.fragments[f];
      bool boundary = !fr.is_edge && cut_set.count(A.chords[fr.owner].curve) > 0;
      if (!boundary) dsu.unite(A.face_of_dart[2 * f], A.face_of_dart[2 * f + 1]);
    }
    std::vector<int> root_to_piece(A.face_count, -1);
    piece_of_face.assign(A.face_count, -1);
    for (int f = 0; f < A.face_count; f++) {
      int r = dsu.find(f);
      if (root_to_piece[r] < 0) root_to_piece[r] = piece_count++;
      piece_of_face[f] = root_to_piece[r];
    }
    // Euler characteristic: faces - interior fragments + interior 0-cells.
    std::vector<int> fcount(piece_count, 0), icells(piece_count, 0), ifrags(piece_count, 0);
    for (int f = 0; f < A.face_count; f++) fcount[piece_of_face[f]]++;
    for (size_t f = 0; f < A.fragments.size(); f++) {
      const auto& fr = A.fragments[f];
      bool boundary = !fr.is_edge && cut_set.count(A.chords[fr.owner].curve) > 0;
      if (!boundary) ifrags[piece_of_face[A.face_of_dart[2 * f]]]++;
    }
    // vertex
    {
      int vp = -1;
      // any dart at the vertex: find an edge's first fragment
      for (size_t f = 0; f < A.fragments.size(); f++) {
        if (A.fragments[f].is_edge) {
          const auto& fr = A.fragments[f];
          if (fr.node_a == 0 || fr.node_b == 0) {
            vp = piece_of_face[A.face_of_dart[2 * f]];
            break;
          }
        }
      }
      if (vp >= 0) icells[vp]++;
    }
    // interior 0-cells: slots of carried curves; crossings not involving cut
    // curves... carried curves are pairwise disjoint in our uses, but handle
    // crossings generically: a crossing is interior iff neither chord's curve
    // is in the cut set.
    for (size_t s = 0; s < A.arr->slots.size(); s++) {
      if (A.arr->slots[s].curve < 0) continue;
      if (cut_set.count(A.arr->slots[s].curve)) continue;
      // piece: via an adjacent edge gap fragment
      int e = A.arr->slots[s].edge;
      int pos = A.slot_pos(static_cast<int>(s));
      int f = A.edge_gap_fragment(e, pos, true);
      icells[piece_of_face[A.face_of_dart[2 * f]]]++;
    }
    // crossings: one pass over fragments to find a face for each crossing
    std::vector<int> crossing_piece(A.crossings.size(), -1);
    for (size_t f = 0; f < A.fragments.size(); f++) {
      const auto& fr = A.fragments[f];
      if (fr.is_edge) continue;
      for (int node : {fr.node_a, fr.node_b})
        if (A.node_is_crossing(node))
          crossing_piece[A.node_crossing(node)] = piece_of_face[A.face_of_dart[2 * f]];
    }
    for (size_t x = 0; x < A.crossings.size(); x++) {
      int cu = A.chords[A.crossings[x].ca].curve, cv = A.chords[A.crossings[x].cb].curve;
      if (cut_set.count(cu) || cut_set.count(cv)) continue;
      icells[crossing_piece[x]]++;
    }
    euler.assign(piece_count, 0);
    for (int p = 0; p < piece_count; p++) euler[p] = fcount[p] - ifrags[p] + icells[p];

    // Boundary circles: orbits over darts of cut-curve fragments, skipping
    // interior fragments.
    auto is_boundary_dart = [&](int d) {
      const auto& fr = A.fragments[A.frag_of(d)];
      return !fr.is_edge && cut_set.count(A.chords[fr.owner].curve) > 0;
    };
    auto psi = [&](int d) {
      int e = A.face_next(d);
      while (!is_boundary_dart(e)) e = A.face_next(A.alpha(e));
      return e;
    };
    std::vector<char> used(A.dart_count(), 0);
    for (int d0 = 0; d0 < A.dart_count(); d0++) {
      if (!is_boundary_dart(d0) || used[d0]) continue;
      std::vector<int> circle;
      int d = d0;
      do {
        if (used[d]) throw std::logic_error("pieces: dart reused in circle");
        used[d] = 1;
        circle.push_back(d);
        d = psi(d);
      } while (d != d0);
      int curve = A.chords[A.fragments[A.frag_of(circle[0])].owner].curve;
      for (int dd : circle)
        if (A.chords[A.fragments[A.frag_of(dd)].owner].curve != curve)
          throw std::logic_error("pieces: mixed boundary circle");
      bool fwd = A.dart_forward(circle[0]);
      for (int dd : circle)
        if (A.dart_forward(dd) != fwd) throw std::logic_error("pieces: inconsistent circle direction");
      circle_piece.push_back(piece_of_face[A.face_of_dart[circle[0]]]);
      circle_label.emplace_back(curve, fwd ? 0 : 1);
      circles.push_back(std::move(circle));
    }
    piece_circles.assign(piece_count, {});
    for (size_t i = 0; i < circles.size(); i++)
      piece_circles[circle_piece[i]].push_back(static_cast<int>(i));
  }
};

}  // namespace

std::vector<ArcClass> CutSurface::arcs_in(int piece) const {
  std::vector<ArcClass> out;
  for (const auto& a : arcs)
    if (a.piece == piece) out.push_back(a);
  return out;
}

CutSurface cut_along(const Multicurve& m, const Multicurve* carried) {
  const Surface& S = *m.surface();
  if (m.empty()) throw std::invalid_argument("cut_along: empty multicurve");
  Arrangement arr(S);
  std::vector<int> mids = arr.insert_normal(m.weights());
  std::vector<int> cids;
  if (carried && !carried->empty()) {
    if (carried->surface() != &S) throw std::invalid_argument("cut_along: carried on wrong surface");
    cids = arr.insert_normal(carried->weights());
    std::set<int> movable(cids.begin(), cids.end());
    remove_curve_bigons(arr, movable);
  }
  Analysis an(arr);
  std::set<int> cut_set(mids.begin(), mids.end());
  PieceDecomposition pd(an, cut_set);

  CutSurface out;
  // Map arrangement curve id -> m component index.
  std::map<int, int> comp_of;
  for (size_t i = 0; i < mids.size(); i++) comp_of[mids[i]] = static_cast<int>(i);

  out.pieces.resize(pd.piece_count);
  for (int p = 0; p < pd.piece_count; p++) {
    out.pieces[p].euler = pd.euler[p];
    for (int ci : pd.piece_circles[p]) {
      BoundaryLabel bl;
      bl.component = comp_of.at(pd.circle_label[ci].first);
      bl.side = pd.circle_label[ci].second;
      out.pieces[p].boundary.push_back(bl);
    }
    std::sort(out.pieces[p].boundary.begin(), out.pieces[p].boundary.end());
  }

  if (!cids.empty()) {
    // Trace each carried component's arcs between consecutive crossings with
    // the cut curves.
    std::set<int> carried_set(cids.begin(), cids.end());
    // Precompute slot positions for geometry.
    std::vector<int> spc(arr.slots.size(), -1);
    for (size_t s = 0; s < arr.slots.size(); s++)
      if (arr.slots[s].curve >= 0) spc[s] = an.slot_pos(static_cast<int>(s));
    for (int ci : cids) {
      const auto& cv = arr.curves[ci];
      int n = cv.size();
      // Gather, along the curve, the sequence of crossings with cut curves.
      struct Hit {
        int chord_idx;
        int crossing;
        int cut_chord;  // global chord id of the cut curve chord
      };
      std::vector<Hit> hits;
      for (int idx = 0; idx < n; idx++) {
        int g = an.chord_of(ci, idx);
        for (int x : an.chord_crossings[g]) {
          int other = an.crossings[x].ca == g ? an.crossings[x].cb : an.crossings[x].ca;
          if (cut_set.count(an.chords[other].curve)) hits.push_back({idx, x, other});
        }
      }
      if (hits.empty()) continue;  // disjoint from the cut: no arcs
      // The side of the cut chord faced by the carried curve as it departs /
      // arrives determines the boundary circle label at each end. The
      // reference slot never crosses that particular cut chord again, so its
      // half-plane side is the arc's side.
      auto side_of_slot_wrt = [&](int cut_chord, int slot) {
        const auto& cu = an.chords[cut_chord];
        geom::Pt P = geom::slot_point_in_tri(arr, cu.tri, cu.s_from, spc[cu.s_from]);
        geom::Pt Q = geom::slot_point_in_tri(arr, cu.tri, cu.s_to, spc[cu.s_to]);
        geom::Vec dirc = geom::direction(P, Q);
        geom::Pt A = geom::slot_point_in_tri(arr, cu.tri, slot, spc[slot]);
        geom::Vec va = geom::direction(P, A);
        int s = geom::sign(geom::cross(dirc, va));
        if (s == 0) throw std::logic_error("cut_along: degenerate arc side");
        return s > 0 ? 0 : 1;  // left of forward = side 0
      };
      int h = static_cast<int>(hits.size());
      for (int i = 0; i < h; i++) {
        const Hit& from = hits[i];
        const Hit& to = hits[(i + 1) % h];
        const auto& gfrom = an.chords[an.chord_of(ci, from.chord_idx)];
        const auto& gto = an.chords[an.chord_of(ci, to.chord_idx)];
        ArcClass arc;
        arc.b1.component = comp_of.at(an.chords[from.cut_chord].curve);
        arc.b1.side = side_of_slot_wrt(from.cut_chord, gfrom.s_to);
        arc.b2.component = comp_of.at(an.chords[to.cut_chord].curve);
        arc.b2.side = side_of_slot_wrt(to.cut_chord, gto.s_from);
        // Piece of the arc's interior: the face just past the `from` crossing
        // along the carried chord.
        {
          int g = an.chord_of(ci, from.chord_idx);
          const auto& xs = an.chord_crossings[g];
          int r = -1;
          for (size_t q = 0; q < xs.size(); q++)
            if (xs[q] == from.crossing) r = static_cast<int>(q);
          if (r < 0) throw std::logic_error("cut_along: crossing not on chord");
          int frag = an.chord_frag_start[g] + r + 1;
          arc.piece = pd.piece_of_face[an.face_of_dart[2 * frag]];
        }
        out.arcs.push_back(arc);
      }
    }
  }
  return out;
}

bool decomposes_into_pants(const Multicurve& p) {
  if (p.empty()) return false;
  CutSurface cs = cut_along(p);
  const Surface& S = *p.surface();
  if (S.genus == 1) return cs.piece_count() == 1 && cs.pieces[0].is_annulus();
  for (const auto& piece : cs.pieces)
    if (!piece.is_pants()) return false;
  return true;
}

SeamReport traverses_all_seams(const Multicurve& alpha, const Multicurve& pants) {
  if (!decomposes_into_pants(pants))
    throw std::invalid_argument("traverses_all_seams: not a pants decomposition");
  CutSurface cs = cut_along(pants, &alpha);
  SeamReport rep;
  rep.all_traversed = true;
  for (int p = 0; p < cs.piece_count(); p++) {
    const auto& piece = cs.pieces[p];
    auto arcs = cs.arcs_in(p);
    for (int i = 0; i < piece.boundary_count(); i++) {
      for (int j = i + 1; j < piece.boundary_count(); j++) {
        const BoundaryLabel& u = piece.boundary[i];
        const BoundaryLabel& v = piece.boundary[j];
        if (u == v) continue;
        bool found = false;
        for (const auto& a : arcs) {
          if ((a.b1 == u && a.b2 == v) || (a.b1 == v && a.b2 == u)) {
            found = true;
            break;
          }
        }
        if (!found) {
          rep.all_traversed = false;
          ArcClass missing;
          missing.piece = p;
          missing.b1 = u;
          missing.b2 = v;
          rep.missing.push_back(missing);
        }
      }
    }
  }
  return rep;
}

}  // namespace hdk
