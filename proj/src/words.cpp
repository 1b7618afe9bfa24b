#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hdk/heegaard.hpp"
#include "hdk/minimize.hpp"
#include "sys_internal.hpp"

namespace hdk {

FreeWord FreeWord::reduced() const {
  std::vector<int> st;
  for (int x : letters) {
    if (!st.empty() && st.back() == -x)
      st.pop_back();
    else
      st.push_back(x);
  }
  return FreeWord(std::move(st));
}

FreeWord FreeWord::cyclically_reduced() const {
  std::vector<int> w = reduced().letters;
  while (w.size() >= 2 && w.front() == -w.back()) {
    w.erase(w.begin());
    w.pop_back();
  }
  return FreeWord(std::move(w));
}

std::string FreeWord::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < letters.size(); i++) {
    if (i) os << " ";
    int x = letters[i];
    os << "x" << std::abs(x) << (x < 0 ? "'" : "");
  }
  return os.str();
}

CutSystemReport validate_cut_system(const CutSystem& c) {
  CutSystemReport r;
  const Surface& s = *c.curves.surface();
  r.component_count_ok = c.curves.component_count() == s.genus &&
                         c.curves.essential_component_count() == s.genus;
  if (c.curves.empty()) return r;
  CutSurface cs = cut_along(c.curves);
  r.connected_complement = cs.piece_count() == 1;
  if (r.connected_complement) {
    const CutPiece& p = cs.pieces[0];
    r.planar_complement = (p.genus() == 0);
  }
  return r;
}

CutSystem make_cut_system(const Multicurve& m, Side side) {
  CutSystem c{m, side};
  CutSystemReport r = validate_cut_system(c);
  if (!r.ok()) {
    std::ostringstream os;
    os << "cut system invalid:";
    if (!r.component_count_ok) os << " component count != genus or inessential component";
    else {
      if (!r.connected_complement) os << " complement disconnected";
      else if (!r.planar_complement) os << " complement not planar";
    }
    throw std::invalid_argument(os.str());
  }
  return c;
}

HeegaardDiagram make_diagram(const Surface& s, const Multicurve& dv, const Multicurve& ew) {
  HeegaardDiagram diag;
  diag.surf = &s;
  diag.d = make_cut_system(dv, Side::V);
  diag.e = make_cut_system(ew, Side::W);
  diag.bigon_free = false;
  return diag;
}

HeegaardDiagram remove_bigons(const HeegaardDiagram& diag) {
  const Surface& s = *diag.surf;
  Arrangement arr(s);
  std::vector<int> ie = arr.insert_normal(diag.e.curves.weights());
  std::vector<int> id = arr.insert_normal(diag.d.curves.weights());
  std::set<int> movable(id.begin(), id.end());
  remove_curve_bigons(arr, movable);
  for (int e : ie) arr.remove_curve(e);
  std::vector<long long> w = normalize_to_weights(s, std::move(arr));
  HeegaardDiagram out;
  out.surf = &s;
  out.d = make_cut_system(Multicurve(s, w), Side::V);
  out.e = diag.e;
  out.bigon_free = true;
  return out;
}

Multicurve edge_loop_pushoff(const Surface& s, int edge, int side) {
  // The loop (edge ∪ vertex) has an annulus neighborhood; each boundary
  // circle crosses the edge-ends of one complementary arc of the vertex
  // link, innermost around the vertex, and closes with a chord parallel to
  // the edge.
  const auto& link = s.vertex_link();
  int n = static_cast<int>(link.size());
  int pos_head = -1, pos_tail = -1;
  for (int i = 0; i < n; i++) {
    auto [e, is_head] = s.ccw_exit_end(link[i]);
    if (e == edge && is_head) pos_head = i;
    if (e == edge && !is_head) pos_tail = i;
  }
  if (pos_head < 0 || pos_tail < 0) throw std::logic_error("edge_loop_pushoff: ends missing");
  int from = side == 0 ? pos_head : pos_tail;
  int to = side == 0 ? pos_tail : pos_head;
  std::vector<int> arc;  // link positions whose exits the pushoff crosses
  for (int i = (from + 1) % n; i != to; i = (i + 1) % n) arc.push_back(i);
  if (arc.size() < 2) throw std::invalid_argument("edge_loop_pushoff: degenerate arc");

  Arrangement arr(s);
  std::vector<int> slots;
  std::vector<int> tris;
  for (int i : arc) {
    auto [e, is_head] = s.ccw_exit_end(link[i]);
    slots.push_back(arr.new_slot_extreme(e, is_head, 0));
  }
  for (size_t j = 0; j + 1 < arc.size(); j++) {
    int corner = link[(arc[j] + 1) % n];
    tris.push_back(corner / 3);
  }
  // Closing chord parallel to `edge`: in the placement of the last slot's
  // edge opposite the last corner chord (placements must alternate at every
  // slot).
  {
    int last_slot_edge = arr.slots[slots.back()].edge;
    int last_corner_tri = tris.back();
    SideRef f = s.forward_placement(last_slot_edge), b = s.backward_placement(last_slot_edge);
    int closing = (f.tri == last_corner_tri) ? b.tri : f.tri;
    tris.push_back(closing);
  }
  arr.add_curve(slots, tris);
  std::vector<long long> w = normalize_to_weights(s, std::move(arr));
  return Multicurve(s, std::move(w));
}

FreeWord curve_word(const Multicurve& alpha, const CutSystem& c) {
  const Surface& s = *alpha.surface();
  if (alpha.surface() != c.curves.surface())
    throw std::invalid_argument("curve_word: surfaces differ");
  if (alpha.component_count() != 1) throw std::invalid_argument("curve_word: need a single curve");
  Arrangement arr(s);
  std::vector<int> ic = arr.insert_normal(c.curves.weights());
  std::vector<int> ia = arr.insert_normal(alpha.weights());
  std::set<int> movable(ia.begin(), ia.end());
  remove_curve_bigons(arr, movable);
  Analysis an(arr);
  std::vector<int> spc = sys::slot_positions(arr, an);
  std::map<int, int> comp_of;
  for (size_t i = 0; i < ic.size(); i++) comp_of[ic[i]] = static_cast<int>(i);

  std::vector<int> letters;
  const auto& cv = arr.curves[ia[0]];
  for (int idx = 0; idx < cv.size(); idx++) {
    int g = an.chord_of(ia[0], idx);
    for (int x : an.chord_crossings[g]) {
      int other = an.crossings[x].ca == g ? an.crossings[x].cb : an.crossings[x].ca;
      auto it = comp_of.find(an.chords[other].curve);
      if (it == comp_of.end()) continue;
      bool left = sys::tail_left_of(arr, spc, an.chords[other], an.chords[g]);
      int letter = it->second + 1;
      letters.push_back(left ? letter : -letter);
    }
  }
  // Deterministic representative: lexicographically smallest cyclic shift.
  if (!letters.empty()) {
    int m = static_cast<int>(letters.size());
    int best = 0;
    for (int r = 1; r < m; r++) {
      for (int i = 0; i < m; i++) {
        int a = letters[(r + i) % m], b = letters[(best + i) % m];
        if (a != b) {
          if (a < b) best = r;
          break;
        }
      }
    }
    std::rotate(letters.begin(), letters.begin() + best, letters.end());
  }
  return FreeWord(std::move(letters));
}

DiskCertificate bounds_disk(const Multicurve& alpha, const CutSystem& c) {
  DiskCertificate out;
  out.word = curve_word(alpha, c);
  out.reduced_word = out.word.cyclically_reduced();
  out.bounds = out.reduced_word.length() == 0;
  return out;
}

bool verify_pants(const PantsDecomposition& p, const CutSystem& c) {
  if (!decomposes_into_pants(p.curves)) return false;
  for (int i = 0; i < p.curves.component_count(); i++) {
    DiskCertificate cert = bounds_disk(Multicurve(*p.curves.surface(), p.curves.component(i)), c);
    if (!cert.bounds) return false;
  }
  return true;
}

}  // namespace hdk
