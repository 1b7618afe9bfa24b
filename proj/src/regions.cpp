#include "hdk/regions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "geom_internal.hpp"

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

}  // namespace

Analysis::Analysis(const Arrangement& a) : arr(&a) {
  slot_count_ = static_cast<int>(a.slots.size());
  slot_pos_.assign(slot_count_, -1);
  for (int e = 0; e < a.surf->edge_count; e++)
    for (int i = 0; i < static_cast<int>(a.edge_slots[e].size()); i++)
      slot_pos_[a.edge_slots[e][i]] = i;

  chord_offset.assign(a.curves.size() + 1, 0);
  for (size_t ci = 0; ci < a.curves.size(); ci++) {
    chord_offset[ci] = static_cast<int>(chords.size());
    const auto& c = a.curves[ci];
    if (c.removed) continue;
    int n = c.size();
    for (int i = 0; i < n; i++)
      chords.push_back({static_cast<int>(ci), i, c.chord_tri[i], c.slot_seq[i],
                        c.slot_seq[(i + 1) % n]});
  }
  chord_offset[a.curves.size()] = static_cast<int>(chords.size());

  build_crossings();
  build_map();
  build_regions();
  build_circuits();
}

namespace {

geom::Pt chord_endpoint(const Arrangement& a, const std::vector<int>& slot_pos, int tri, int slot) {
  return geom::slot_point_in_tri(a, tri, slot, slot_pos[slot]);
}

}  // namespace

void Analysis::build_crossings() {
  const Arrangement& a = *arr;
  const Surface& S = *a.surf;
  int T = S.triangle_count();
  std::vector<std::vector<int>> tri_chords(T);
  for (size_t g = 0; g < chords.size(); g++) tri_chords[chords[g].tri].push_back(static_cast<int>(g));

  chord_crossings.assign(chords.size(), {});
  cgeom_.assign(chords.size(), {});

  auto side_pos_of = [&](int t, int slot) -> std::pair<int, long long> {
    int e = a.slots[slot].edge;
    int k = geom::side_of_edge(S, t, e);
    const Surface::Side& sd = S.tris[t][k];
    long long n = static_cast<long long>(a.edge_slots[e].size());
    long long side_pos = sd.forward ? slot_pos_[slot] : (n - 1 - slot_pos_[slot]);
    return {k, side_pos};
  };

  // Classify chords and rank hugger heights per (triangle, side): wider
  // intervals get strictly larger heights so nested huggers stack properly.
  for (int t = 0; t < T; t++) {
    std::array<std::vector<int>, 3> side_huggers;
    for (int g : tri_chords[t]) {
      auto [k1, p1] = side_pos_of(t, chords[g].s_from);
      auto [k2, p2] = side_pos_of(t, chords[g].s_to);
      if (k1 == k2) {
        cgeom_[g].hugger = true;
        cgeom_[g].side = k1;
        cgeom_[g].p_from = p1;
        cgeom_[g].p_to = p2;
        side_huggers[k1].push_back(g);
      }
    }
    for (int k = 0; k < 3; k++) {
      auto& hs = side_huggers[k];
      std::sort(hs.begin(), hs.end(), [&](int x, int y) {
        long long wx = std::llabs(cgeom_[x].p_from - cgeom_[x].p_to);
        long long wy = std::llabs(cgeom_[y].p_from - cgeom_[y].p_to);
        if (wx != wy) return wx < wy;
        return x < y;
      });
      for (size_t i = 0; i < hs.size(); i++) cgeom_[hs[i]].height = static_cast<long long>(i) + 1;
    }
  }

  for (int t = 0; t < T; t++) {
    auto& list = tri_chords[t];
    if (list.size() < 2) continue;
    auto boundary_key = [&](int slot) -> long long {
      auto [k, side_pos] = side_pos_of(t, slot);
      return static_cast<long long>(k) * (1LL << 40) + side_pos;
    };
    struct CI {
      long long lo, hi;
      int g;
    };
    std::vector<CI> cis;
    cis.reserve(list.size());
    for (int g : list) {
      long long b1 = boundary_key(chords[g].s_from);
      long long b2 = boundary_key(chords[g].s_to);
      if (b1 > b2) std::swap(b1, b2);
      if (b1 == b2) throw std::logic_error("crossings: coincident chord endpoints");
      cis.push_back({b1, b2, g});
    }
    std::sort(cis.begin(), cis.end(), [](const CI& x, const CI& y) { return x.lo < y.lo; });
    std::set<std::pair<long long, int>> active;
    for (const CI& cj : cis) {
      while (!active.empty() && active.begin()->first < cj.lo) active.erase(active.begin());
      for (auto it = active.upper_bound({cj.lo, 1 << 30});
           it != active.end() && it->first < cj.hi; ++it) {
        int gi = it->second, gj = cj.g;
        int x = static_cast<int>(crossings.size());
        crossings.push_back({std::min(gi, gj), std::max(gi, gj)});
        chord_crossings[gi].push_back(x);
        chord_crossings[gj].push_back(x);
      }
      active.insert({cj.hi, cj.g});
    }
  }

  // Sort each chord's crossings from s_from to s_to. Regular chords order
  // their regular crossings by the exact segment parameter; crossings with
  // huggers cling to the endpoint inside the hugger's interval, ordered by
  // hugger height. A hugger orders crossings along its trapezoid: up the
  // entry vertical (height ascending), along the horizontal (by side
  // position, in traversal direction), down the exit vertical (height
  // descending).
  for (size_t gi = 0; gi < chords.size(); gi++) {
    int g = static_cast<int>(gi);
    auto& xs = chord_crossings[g];
    if (xs.size() < 2) continue;
    const Chord& cg = chords[g];

    if (!cgeom_[g].hugger) {
      geom::Pt P = chord_endpoint(a, slot_pos_, cg.tri, cg.s_from);
      geom::Pt Q = chord_endpoint(a, slot_pos_, cg.tri, cg.s_to);
      auto [k_from, p_from] = side_pos_of(cg.tri, cg.s_from);
      auto [k_to, p_to] = side_pos_of(cg.tri, cg.s_to);
      (void)p_from;
      (void)p_to;
      struct Key {
        int section;      // 0: at s_from, 1: middle, 2: at s_to
        long long height; // for sections 0/2
        geom::Frac param; // for section 1
        int x;
      };
      std::vector<Key> keyed;
      for (int x : xs) {
        int other = crossings[x].ca == g ? crossings[x].cb : crossings[x].ca;
        if (cgeom_[other].hugger) {
          int hk = cgeom_[other].side;
          int section = (hk == k_from) ? 0 : 2;
          keyed.push_back({section, cgeom_[other].height, geom::Frac{0, 1}, x});
        } else {
          const Chord& co = chords[other];
          geom::Pt R = chord_endpoint(a, slot_pos_, co.tri, co.s_from);
          geom::Pt So = chord_endpoint(a, slot_pos_, co.tri, co.s_to);
          geom::Frac f = geom::cross_param(P, Q, R, So);
          if (geom::sign(f.den) == 0)
            throw std::logic_error("crossings: parallel interleaved chords");
          keyed.push_back({1, 0, f, x});
        }
      }
      std::sort(keyed.begin(), keyed.end(), [&](const Key& u, const Key& v) {
        if (u.section != v.section) return u.section < v.section;
        if (u.section == 0) return u.height < v.height;   // ascending away from side
        if (u.section == 2) return u.height > v.height;   // descending toward side
        return geom::frac_cmp(u.param, v.param) < 0;
      });
      for (size_t i = 0; i < keyed.size(); i++) xs[i] = keyed[i].x;
    } else {
      // Hugger traversal: vertical up at p_from, horizontal to p_to,
      // vertical down.
      long long pf = cgeom_[g].p_from, pt = cgeom_[g].p_to;
      bool increasing = pf < pt;
      struct Key {
        int section;       // 0: entry vertical, 1: horizontal, 2: exit vertical
        long long primary; // height (verticals) or signed position (horizontal)
        int x;
      };
      std::vector<Key> keyed;
      for (int x : xs) {
        int other = crossings[x].ca == g ? crossings[x].cb : crossings[x].ca;
        if (!cgeom_[other].hugger) {
          // regular chord crosses the horizontal at its side endpoint
          auto [k1, q1] = side_pos_of(cg.tri, chords[other].s_from);
          auto [k2, q2] = side_pos_of(cg.tri, chords[other].s_to);
          long long q = (k1 == cgeom_[g].side) ? q1 : q2;
          if ((k1 == cgeom_[g].side) == (k2 == cgeom_[g].side))
            throw std::logic_error("crossings: hugger/regular side confusion");
          keyed.push_back({1, increasing ? q : -q, x});
        } else {
          // two interleaved huggers on one side
          const auto& og = cgeom_[other];
          if (og.height > cgeom_[g].height) {
            // crossing on my horizontal at the taller chord's endpoint that
            // lies strictly inside my interval
            long long lo = std::min(pf, pt), hi = std::max(pf, pt);
            long long q;
            if (og.p_from > lo && og.p_from < hi)
              q = og.p_from;
            else if (og.p_to > lo && og.p_to < hi)
              q = og.p_to;
            else
              throw std::logic_error("crossings: interleaved hugger without inner endpoint");
            keyed.push_back({1, increasing ? q : -q, x});
          } else {
            // crossing on my vertical at whichever of my endpoints lies in
            // the other's interval
            long long olo = std::min(og.p_from, og.p_to), ohi = std::max(og.p_from, og.p_to);
            bool at_from = (pf > olo && pf < ohi);
            bool at_to = (pt > olo && pt < ohi);
            if (at_from == at_to)
              throw std::logic_error("crossings: hugger vertical ambiguity");
            keyed.push_back({at_from ? 0 : 2, og.height, x});
          }
        }
      }
      std::sort(keyed.begin(), keyed.end(), [&](const Key& u, const Key& v) {
        if (u.section != v.section) return u.section < v.section;
        if (u.section == 0) return u.primary < v.primary;  // up: ascending height
        if (u.section == 2) return u.primary > v.primary;  // down: descending height
        return u.primary < v.primary;                      // along horizontal
      });
      for (size_t i = 0; i < keyed.size(); i++) xs[i] = keyed[i].x;
    }
  }
}

void Analysis::build_map() {
  const Arrangement& a = *arr;
  const Surface& S = *a.surf;

  // Fragments of edges.
  edge_frag_ids_.assign(S.edge_count, {});
  for (int e = 0; e < S.edge_count; e++) {
    const auto& order = a.edge_slots[e];
    int prev_node = 0;  // vertex
    for (int s : order) {
      edge_frag_ids_[e].push_back(static_cast<int>(fragments.size()));
      fragments.push_back({prev_node, slot_node(s), true, e, static_cast<int>(edge_frag_ids_[e].size()) - 1});
      prev_node = slot_node(s);
    }
    edge_frag_ids_[e].push_back(static_cast<int>(fragments.size()));
    fragments.push_back({prev_node, 0, true, e, static_cast<int>(edge_frag_ids_[e].size()) - 1});
  }

  // Fragments of chords.
  chord_frag_start.assign(chords.size(), 0);
  for (size_t g = 0; g < chords.size(); g++) {
    chord_frag_start[g] = static_cast<int>(fragments.size());
    const Chord& cg = chords[g];
    int prev_node = slot_node(cg.s_from);
    for (int x : chord_crossings[g]) {
      fragments.push_back({prev_node, crossing_node(x), false, static_cast<int>(g),
                           static_cast<int>(fragments.size()) - chord_frag_start[g]});
      prev_node = crossing_node(x);
    }
    fragments.push_back({prev_node, slot_node(cg.s_to), false, static_cast<int>(g),
                         static_cast<int>(fragments.size()) - chord_frag_start[g]});
  }

  // Rotations.
  int node_count = 1 + slot_count_ + static_cast<int>(crossings.size());
  rotations_.assign(node_count, {});

  // At the vertex: ccw edge-end order from the link.
  for (int corner : S.vertex_link()) {
    auto [e, is_head] = S.ccw_exit_end(corner);
    const auto& fr = edge_frag_ids_[e];
    if (is_head) {
      int f = fr.back();  // (last, v): outgoing dart is the reverse
      rotations_[0].push_back(2 * f + 1);
    } else {
      int f = fr.front();  // (v, first): forward dart
      rotations_[0].push_back(2 * f);
    }
  }

  // Chord darts at slots: for each slot, the outgoing dart of its previous
  // and next chords.
  std::vector<int> out_next(slot_count_, -1), out_prev(slot_count_, -1);
  for (size_t g = 0; g < chords.size(); g++) {
    int first_frag = chord_frag_start[g];
    int last_frag = first_frag + static_cast<int>(chord_crossings[g].size());
    out_next[chords[g].s_from] = 2 * first_frag;     // forward dart away from s_from
    out_prev[chords[g].s_to] = 2 * last_frag + 1;    // reverse dart away from s_to
  }

  for (int e = 0; e < S.edge_count; e++) {
    const auto& order = a.edge_slots[e];
    const auto& fr = edge_frag_ids_[e];
    SideRef pf = S.forward_placement(e);
    for (int i = 0; i < static_cast<int>(order.size()); i++) {
      int s = order[i];
      int node = slot_node(s);
      // +e dart: fragment i+1 forward; -e dart: fragment i reversed.
      int plus = 2 * fr[i + 1];
      int minus = 2 * fr[i] + 1;
      // Chords at this slot: prev/next chord of its curve; identify which is
      // in the forward-placement triangle.
      int cnext = out_next[s], cprev = out_prev[s];
      if (cnext < 0 || cprev < 0) throw std::logic_error("map: slot missing chords");
      auto tri_of_dart = [&](int d) { return chords[fragments[frag_of(d)].owner].tri; };
      int d_f, d_b;
      if (tri_of_dart(cnext) == pf.tri && tri_of_dart(cprev) != pf.tri) {
        d_f = cnext;
        d_b = cprev;
      } else if (tri_of_dart(cprev) == pf.tri && tri_of_dart(cnext) != pf.tri) {
        d_f = cprev;
        d_b = cnext;
      } else {
        throw std::logic_error("map: cannot orient chords at slot");
      }
      rotations_[node] = {plus, d_f, minus, d_b};
    }
  }

  // At crossings: ccw order of the four darts from the tangent directions of
  // the two chords at the crossing (huggers follow their trapezoid section).
  auto side_dir = [&](int k) -> geom::Vec {
    geom::Pt tailp = geom::corner_pt((k + 2) % 3), headp = geom::corner_pt(k);
    return geom::direction(tailp, headp);
  };
  auto tangent_at = [&](int g, int other) -> geom::Vec {
    const Chord& cg = chords[g];
    if (!cgeom_[g].hugger) {
      geom::Pt P = chord_endpoint(a, slot_pos_, cg.tri, cg.s_from);
      geom::Pt Q = chord_endpoint(a, slot_pos_, cg.tri, cg.s_to);
      return geom::direction(P, Q);
    }
    const auto& hg = cgeom_[g];
    geom::Vec sd = side_dir(hg.side);
    geom::Vec inward{-sd.y, sd.x};  // rotate +90
    bool increasing = hg.p_from < hg.p_to;
    // Which trapezoid section carries the crossing with `other`?
    int section;
    if (!cgeom_[other].hugger || cgeom_[other].height > hg.height) {
      section = 1;
    } else {
      const auto& og = cgeom_[other];
      long long olo = std::min(og.p_from, og.p_to), ohi = std::max(og.p_from, og.p_to);
      bool at_from = (hg.p_from > olo && hg.p_from < ohi);
      section = at_from ? 0 : 2;
    }
    if (section == 0) return inward;
    if (section == 2) return geom::Vec{-inward.x, -inward.y};
    return increasing ? sd : geom::Vec{-sd.x, -sd.y};
  };
  for (size_t x = 0; x < crossings.size(); x++) {
    int ga = crossings[x].ca, gb = crossings[x].cb;
    auto find_pos = [&](int g) {
      const auto& xs = chord_crossings[g];
      for (size_t i = 0; i < xs.size(); i++)
        if (xs[i] == static_cast<int>(x)) return static_cast<int>(i);
      throw std::logic_error("map: crossing not on chord");
    };
    int ra = find_pos(ga), rb = find_pos(gb);
    int fa0 = chord_frag_start[ga] + ra, fa1 = fa0 + 1;
    int fb0 = chord_frag_start[gb] + rb, fb1 = fb0 + 1;
    // Outgoing darts: toward from-side: reverse of frag r; toward to-side:
    // forward of frag r+1.
    int a_bwd = 2 * fa0 + 1, a_fwd = 2 * fa1;
    int b_bwd = 2 * fb0 + 1, b_fwd = 2 * fb1;
    geom::Vec da = tangent_at(ga, gb), db = tangent_at(gb, ga);
    int s = geom::sign(geom::cross(da, db));
    if (s == 0) throw std::logic_error("map: degenerate crossing");
    int node = crossing_node(static_cast<int>(x));
    if (s > 0)
      rotations_[node] = {a_fwd, b_fwd, a_bwd, b_bwd};
    else
      rotations_[node] = {a_fwd, b_bwd, a_bwd, b_fwd};
  }

  // Position of each dart in its origin rotation.
  rot_pos_.assign(dart_count(), -1);
  for (int n = 0; n < node_count; n++)
    for (int i = 0; i < static_cast<int>(rotations_[n].size()); i++)
      rot_pos_[rotations_[n][i]] = i;
  for (int d = 0; d < dart_count(); d++)
    if (rot_pos_[d] < 0) throw std::logic_error("map: dart missing from rotation");

  // Face orbits: next(d) = rotation-predecessor of alpha(d) at dart_to(d).
  face_of_dart.assign(dart_count(), -1);
  face_count = 0;
  for (int d0 = 0; d0 < dart_count(); d0++) {
    if (face_of_dart[d0] >= 0) continue;
    int f = face_count++;
    int d = d0;
    do {
      face_of_dart[d] = f;
      d = face_next(d);
    } while (d != d0);
  }

  // Euler check (dead slots are not nodes of the map).
  int live_slots = 0;
  for (const auto& sl : a.slots)
    if (sl.curve >= 0) live_slots++;
  int V = 1 + live_slots + static_cast<int>(crossings.size());
  int E = static_cast<int>(fragments.size()), F = face_count;
  if (V - E + F != 2 - 2 * S.genus)
    throw std::logic_error("map: Euler characteristic check failed");
}

int Analysis::face_next(int d) const {
  int b = dart_to(d);
  int r = alpha(d);
  const auto& rot = rotations_[b];
  int i = rot_pos_[r];
  int prev = rot[(i + rot.size() - 1) % rot.size()];
  return prev;
}

void Analysis::build_regions() {
  DSU dsu(face_count);
  for (size_t f = 0; f < fragments.size(); f++) {
    if (!fragments[f].is_edge) continue;
    dsu.unite(face_of_dart[2 * f], face_of_dart[2 * f + 1]);
  }
  std::vector<int> root_to_region(face_count, -1);
  region_of_face.assign(face_count, -1);
  region_count = 0;
  for (int f = 0; f < face_count; f++) {
    int r = dsu.find(f);
    if (root_to_region[r] < 0) root_to_region[r] = region_count++;
    region_of_face[f] = root_to_region[r];
  }
  region_faces.assign(region_count, {});
  for (int f = 0; f < face_count; f++) region_faces[region_of_face[f]].push_back(f);

  std::vector<int> frag_in(region_count, 0);
  for (size_t f = 0; f < fragments.size(); f++)
    if (fragments[f].is_edge) frag_in[region_of_face[face_of_dart[2 * f]]]++;

  region_has_vertex.assign(region_count, 0);
  if (!rotations_[0].empty())
    region_has_vertex[region_of_face[face_of_dart[rotations_[0][0]]]] = 1;

  region_euler.assign(region_count, 0);
  std::vector<int> fcount(region_count, 0);
  for (int f = 0; f < face_count; f++) fcount[region_of_face[f]]++;
  for (int r = 0; r < region_count; r++)
    region_euler[r] = fcount[r] - frag_in[r] + (region_has_vertex[r] ? 1 : 0);
}

int Analysis::vertex_region() const {
  for (int r = 0; r < region_count; r++)
    if (region_has_vertex[r]) return r;
  throw std::logic_error("vertex_region: none");
}

void Analysis::build_circuits() {
  // psi: next chord dart along the region boundary, skipping interior edge
  // fragments.
  auto psi = [&](int d) {
    int e = face_next(d);
    while (fragments[frag_of(e)].is_edge) e = face_next(alpha(e));
    return e;
  };
  std::vector<char> used(dart_count(), 0);
  region_circuits.assign(region_count, {});
  for (int d0 = 0; d0 < dart_count(); d0++) {
    if (fragments[frag_of(d0)].is_edge || used[d0]) continue;
    Circuit c;
    c.region = region_of_dart(d0);
    int d = d0;
    do {
      if (used[d]) throw std::logic_error("circuits: dart reused");
      used[d] = 1;
      c.darts.push_back(d);
      if (node_is_crossing(dart_to(d)))
        c.corners.push_back(static_cast<int>(c.darts.size()) - 1);
      d = psi(d);
    } while (d != d0);
    region_circuits[c.region].push_back(static_cast<int>(circuits.size()));
    circuits.push_back(std::move(c));
  }
}

long long Analysis::crossings_between(int curve_a, int curve_b) const {
  long long n = 0;
  for (const auto& x : crossings) {
    int u = chords[x.ca].curve, v = chords[x.cb].curve;
    if ((u == curve_a && v == curve_b) || (u == curve_b && v == curve_a)) n++;
  }
  return n;
}

std::vector<Analysis::Bigon> Analysis::bigons() const {
  std::vector<Bigon> out;
  for (int r = 0; r < region_count; r++) {
    if (region_euler[r] != 1) continue;
    if (region_circuits[r].size() != 1) continue;
    const Circuit& c = circuits[region_circuits[r][0]];
    if (c.corners.size() != 2) continue;
    Bigon b;
    b.region = r;
    int i0 = c.corners[0], i1 = c.corners[1];
    int n = static_cast<int>(c.darts.size());
    b.corner_entry_a = node_crossing(dart_to(c.darts[i0]));
    b.corner_entry_b = node_crossing(dart_to(c.darts[i1]));
    // run A: darts i0+1 .. i1; run B: darts i1+1 .. i0 (cyclic)
    for (int i = (i0 + 1) % n;; i = (i + 1) % n) {
      b.darts_a.push_back(c.darts[i]);
      if (i == i1) break;
    }
    for (int i = (i1 + 1) % n;; i = (i + 1) % n) {
      b.darts_b.push_back(c.darts[i]);
      if (i == i0) break;
    }
    b.curve_a = curve_of_dart(b.darts_a.front());
    b.curve_b = curve_of_dart(b.darts_b.front());
    for (int d : b.darts_a)
      if (curve_of_dart(d) != b.curve_a) throw std::logic_error("bigon: mixed side A");
    for (int d : b.darts_b)
      if (curve_of_dart(d) != b.curve_b) throw std::logic_error("bigon: mixed side B");
    if (b.curve_a == b.curve_b) throw std::logic_error("bigon: self bigon");
    out.push_back(std::move(b));
  }
  return out;
}

int Analysis::map_euler() const {
  int live_slots = 0;
  for (const auto& sl : arr->slots)
    if (sl.curve >= 0) live_slots++;
  int V = 1 + live_slots + static_cast<int>(crossings.size());
  return V - static_cast<int>(fragments.size()) + face_count;
}

int Analysis::edge_gap_fragment(int edge, int pos, bool after) const {
  const auto& fr = edge_frag_ids_[edge];
  return after ? fr[pos + 1] : fr[pos];
}

}  // namespace hdk
