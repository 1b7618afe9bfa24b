#include "hdk/surface.hpp"

#include <sstream>
#include <stdexcept>

namespace hdk {

SideRef Surface::other_placement(const SideRef& s) const {
  const Side& sd = side(s);
  return sd.forward ? bwd_place_[sd.edge] : fwd_place_[sd.edge];
}

std::pair<int, bool> Surface::ccw_exit_end(int corner) const {
  int t = corner / 3, j = corner % 3;
  const Side& sd = tris[t][j];
  // Head of side j: if the side runs the edge forward, that's the edge head.
  return {sd.edge, sd.forward};
}

void Surface::finalize() {
  if (genus < 1) throw std::invalid_argument("surface: genus must be >= 1");
  int T = triangle_count();
  if (edge_count != 6 * genus - 3 || T != 4 * genus - 2)
    throw std::invalid_argument("surface: wrong edge or triangle count for one-vertex triangulation");

  fwd_place_.assign(edge_count, SideRef{});
  bwd_place_.assign(edge_count, SideRef{});
  std::vector<int> fwd_seen(edge_count, 0), bwd_seen(edge_count, 0);
  for (int t = 0; t < T; t++) {
    for (int k = 0; k < 3; k++) {
      const Side& sd = tris[t][k];
      if (sd.edge < 0 || sd.edge >= edge_count)
        throw std::invalid_argument("surface: side references unknown edge");
      if (sd.forward) {
        fwd_place_[sd.edge] = {t, k};
        fwd_seen[sd.edge]++;
      } else {
        bwd_place_[sd.edge] = {t, k};
        bwd_seen[sd.edge]++;
      }
    }
  }
  for (int e = 0; e < edge_count; e++)
    if (fwd_seen[e] != 1 || bwd_seen[e] != 1)
      throw std::invalid_argument("surface: each edge must appear once forward and once backward");

  // Walk the vertex link ccw. Stepping out of corner (t,j) through the head
  // end of side j lands at the tail corner of the glued side.
  link_.clear();
  link_pos_.assign(3 * T, -1);
  int start = 0, c = start;
  for (int i = 0; i < 3 * T; i++) {
    if (link_pos_[c] != -1) throw std::invalid_argument("surface: vertex link closes early (more than one vertex)");
    link_pos_[c] = i;
    link_.push_back(c);
    int t = c / 3, j = c % 3;
    SideRef glued = other_placement({t, j});
    // The head of side j is identified with the tail of the glued side;
    // the corner at the tail of side k is corner k-1.
    c = corner_id(glued.tri, (glued.side + 2) % 3);
  }
  if (c != start) throw std::invalid_argument("surface: vertex link does not close");
}

Surface build_surface(int genus) {
  if (genus < 1)
    throw std::invalid_argument("build_surface: genus must be >= 1 (genus 0 has no essential curves)");
  Surface s;
  s.genus = genus;
  int n = 4 * genus;  // polygon sides
  s.edge_count = 6 * genus - 3;

  // Polygon side m carries: handle i = m/4, letter a if m%4 in {0,2}, b if
  // in {1,3}; the first occurrence is forward, the second backward.
  auto polygon_side = [&](int m) -> Surface::Side {
    int i = m / 4, r = m % 4;
    int edge = 2 * i + (r % 2);
    bool forward = r < 2;
    return {edge, forward};
  };
  // Fan diagonal d_j joins polygon corners 0 and j, for j = 2..4g-2.
  auto diag_edge = [&](int j) { return 2 * genus + (j - 2); };

  // Triangle t (t = 1..4g-2) has corners (c0, c_t, c_{t+1}) and ccw sides:
  //   side 0: c0 -> c_t       (diagonal d_t, forward; polygon side 0 if t == 1)
  //   side 1: c_t -> c_{t+1}  (polygon side t)
  //   side 2: c_{t+1} -> c0   (diagonal d_{t+1}, backward; polygon side n-1 if t == n-2... )
  for (int t = 1; t <= n - 2; t++) {
    Surface::Side s0 = (t == 1) ? polygon_side(0) : Surface::Side{diag_edge(t), true};
    Surface::Side s1 = polygon_side(t);
    Surface::Side s2 = (t == n - 2) ? polygon_side(n - 1) : Surface::Side{diag_edge(t + 1), false};
    s.tris.push_back({s0, s1, s2});
  }
  s.finalize();
  return s;
}

std::string canonical_edge_name(const Surface& s, int edge) {
  if (edge < 2 * s.genus) {
    std::ostringstream os;
    os << (edge % 2 == 0 ? 'a' : 'b') << (edge / 2 + 1);
    return os.str();
  }
  std::ostringstream os;
  os << 'd' << (edge - 2 * s.genus + 2);
  return os.str();
}

}  // namespace hdk
