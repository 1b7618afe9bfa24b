#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hdk/surface.hpp"

using namespace hdk;

TEST_CASE("canonical surfaces have the right counts") {
  struct Row {
    int genus, edges, tris, chi;
  };
  for (Row r : {Row{1, 3, 2, 0}, Row{2, 9, 6, -2}, Row{3, 15, 10, -4}, Row{4, 21, 14, -6}}) {
    Surface s = build_surface(r.genus);
    CHECK(s.edge_count == r.edges);
    CHECK(s.triangle_count() == r.tris);
    CHECK(s.euler_characteristic() == r.chi);
    CHECK(static_cast<int>(s.vertex_link().size()) == 3 * r.tris);
  }
}

TEST_CASE("genus 0 rejected") { CHECK_THROWS(build_surface(0)); }

TEST_CASE("every edge has one forward and one backward placement") {
  Surface s = build_surface(2);
  for (int e = 0; e < s.edge_count; e++) {
    auto f = s.forward_placement(e), b = s.backward_placement(e);
    CHECK(s.side(f).edge == e);
    CHECK(s.side(f).forward);
    CHECK(s.side(b).edge == e);
    CHECK_FALSE(s.side(b).forward);
  }
}

TEST_CASE("vertex link crosses each edge end once") {
  for (int g = 1; g <= 3; g++) {
    Surface s = build_surface(g);
    std::vector<int> head_seen(s.edge_count, 0), tail_seen(s.edge_count, 0);
    for (int corner : s.vertex_link()) {
      auto [e, is_head] = s.ccw_exit_end(corner);
      (is_head ? head_seen : tail_seen)[e]++;
    }
    for (int e = 0; e < s.edge_count; e++) {
      CHECK(head_seen[e] == 1);
      CHECK(tail_seen[e] == 1);
    }
  }
}

TEST_CASE("edge names") {
  Surface s = build_surface(2);
  CHECK(canonical_edge_name(s, 0) == "a1");
  CHECK(canonical_edge_name(s, 1) == "b1");
  CHECK(canonical_edge_name(s, 2) == "a2");
  CHECK(canonical_edge_name(s, 3) == "b2");
  CHECK(canonical_edge_name(s, 4) == "d2");
  CHECK(canonical_edge_name(s, 8) == "d6");
}
