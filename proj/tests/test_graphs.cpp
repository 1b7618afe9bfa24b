#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hdk/graphs.hpp"

using namespace hdk;

namespace {

Multigraph cycle(int n) {
  Multigraph g;
  g.vertex_count = n;
  for (int i = 0; i < n; i++) g.add_edge(i, (i + 1) % n);
  return g;
}

Multigraph complete(int n) {
  Multigraph g;
  g.vertex_count = n;
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++) g.add_edge(i, j);
  return g;
}

}  // namespace

TEST_CASE("triangle is 2-connected") { CHECK(is_2_connected(cycle(3))); }

TEST_CASE("path on 3 vertices is not 2-connected") {
  Multigraph g;
  g.vertex_count = 3;
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  CHECK(is_connected(g));
  CHECK_FALSE(is_2_connected(g));
}

TEST_CASE("two triangles sharing a vertex have a cut vertex") {
  Multigraph g;
  g.vertex_count = 5;
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(0, 3);
  g.add_edge(3, 4);
  g.add_edge(4, 0);
  CHECK(is_connected(g));
  CHECK_FALSE(is_2_connected(g));
}

TEST_CASE("two vertices never 2-connected") {
  Multigraph g;
  g.vertex_count = 2;
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  CHECK_FALSE(is_2_connected(g));
}

TEST_CASE("contract one edge of a 4-cycle gives a triangle") {
  Multigraph g = contract_edge(cycle(4), 0);
  CHECK(g.vertex_count == 3);
  CHECK(g.edges.size() == 3);
  CHECK(is_2_connected(g));
}

TEST_CASE("delete one edge of a triangle gives a path") {
  Multigraph g = delete_edge(cycle(3), 0);
  CHECK(g.vertex_count == 3);
  CHECK(g.edges.size() == 2);
  CHECK(is_connected(g));
  CHECK_FALSE(is_2_connected(g));
}

TEST_CASE("contract a doubled edge gives a loop") {
  Multigraph g;
  g.vertex_count = 2;
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  Multigraph h = contract_edge(g, 0);
  CHECK(h.vertex_count == 1);
  REQUIRE(h.edges.size() == 1);
  CHECK(h.is_loop(0));
}

TEST_CASE("find_contractible_edge on small graphs, against brute force") {
  for (const Multigraph& g : {cycle(4), complete(4)}) {
    int e = find_contractible_edge(g);
    CHECK(is_2_connected(contract_edge(g, e)));
    // brute force: every non-loop edge works for these graphs
    for (int i = 0; i < static_cast<int>(g.edges.size()); i++)
      CHECK(is_2_connected(contract_edge(g, i)));
  }
  // wheel on 5 vertices
  Multigraph w = cycle(4);
  int hub = w.add_vertex();
  for (int i = 0; i < 4; i++) w.add_edge(hub, i);
  int e = find_contractible_edge(w);
  CHECK(is_2_connected(contract_edge(w, e)));
  bool any = false;
  for (int i = 0; i < static_cast<int>(w.edges.size()); i++)
    if (is_2_connected(contract_edge(w, i))) any = true;
  CHECK(any);
}

TEST_CASE("find_contractible_edge preconditions") {
  CHECK_THROWS(find_contractible_edge(cycle(3)));  // |X| = 3
  Multigraph g;
  g.vertex_count = 4;
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  CHECK_THROWS(find_contractible_edge(g));  // not 2-connected
}

TEST_CASE("edge move report on triangle, 4-cycle, K4") {
  {
    Multigraph g = cycle(3);
    EdgeMoveReport r = edge_move_report(g, 0);
    CHECK(r.minus_connected);
    CHECK(r.contract_connected);
    CHECK_FALSE(r.minus_2_connected);   // path
    CHECK_FALSE(r.contract_2_connected);  // 2 vertices
    CHECK_FALSE(r.dichotomy_holds());   // the |X|>2 boundary case
  }
  {
    EdgeMoveReport r = edge_move_report(cycle(4), 0);
    CHECK(r.contract_2_connected);
    CHECK(r.dichotomy_holds());
  }
  {
    EdgeMoveReport r = edge_move_report(complete(4), 0);
    CHECK(r.minus_2_connected);
    CHECK(r.contract_2_connected);
  }
}

TEST_CASE("canonical form invariant under relabeling") {
  Multigraph g = complete(4);
  g.add_edge(1, 2);
  Multigraph h;
  h.vertex_count = 4;
  // same graph with vertices permuted by (0 3 1 2)
  auto p = [](int v) { return std::vector<int>{3, 2, 0, 1}[v]; };
  for (const auto& [u, v] : g.edges) h.add_edge(p(u), p(v));
  CHECK(canonical_form(g) == canonical_form(h));
}

TEST_CASE("enumeration covers known counts and the dichotomy holds") {
  // All 2-connected multigraphs with <= 5 vertices and <= 6 edges.
  auto graphs = enumerate_2_connected_multigraphs(5, 6);
  CHECK(graphs.size() > 10);
  for (const auto& g : graphs) {
    CHECK(is_2_connected(g));
    for (int e = 0; e < static_cast<int>(g.edges.size()); e++) {
      EdgeMoveReport r = edge_move_report(g, e);
      if (g.edges.size() > 1) {
        CHECK(r.minus_connected);
        CHECK(r.contract_connected);
      }
      // The dichotomy needs at least 4 vertices under the strict |X|>2
      // definition of 2-connected (the 3-vertex cases are the documented
      // boundary).
      if (g.vertex_count >= 4) CHECK(r.dichotomy_holds());
    }
    if (g.vertex_count >= 4) {
      int e = find_contractible_edge(g);
      CHECK(is_2_connected(contract_edge(g, e)));
    }
  }
}
