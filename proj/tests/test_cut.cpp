#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hdk/cut.hpp"
#include "hdk/multicurve.hpp"
#include "hdk/surface.hpp"
#include "torus_util.hpp"

using namespace hdk;

TEST_CASE("torus cut along one essential curve is an annulus") {
  Surface s = build_surface(1);
  CutSurface cs = cut_along(pq_curve(s, 1, 0));
  REQUIRE(cs.piece_count() == 1);
  CHECK(cs.pieces[0].is_annulus());
  CHECK(cs.pieces[0].euler == 0);
}

TEST_CASE("euler characteristics of pieces sum to the surface's") {
  Surface s = build_surface(2);
  Multicurve link(s, std::vector<long long>(s.edge_count, 2));  // vertex link
  CutSurface cs = cut_along(link);
  int total = 0;
  for (const auto& p : cs.pieces) total += p.euler;
  CHECK(total == s.euler_characteristic());
  CHECK(cs.piece_count() == 2);
  // one disk; one genus-2 piece with one boundary circle
  bool has_disk = false, has_big = false;
  for (const auto& p : cs.pieces) {
    if (p.is_disk()) has_disk = true;
    if (p.euler == -3 && p.boundary_count() == 1) has_big = true;
  }
  CHECK(has_disk);
  CHECK(has_big);
}

TEST_CASE("carried (1,n) curve crosses the torus annulus in n seams") {
  Surface s = build_surface(1);
  Curve m = pq_curve(s, 1, 0);
  for (long long n = 1; n <= 4; n++) {
    Curve c = pq_curve(s, n, 1);  // i((1,0),(n,1)) = 1*1 - 0*n = 1... use (1,n)
    (void)c;
    Curve carried = pq_curve(s, 1, n);
    Multicurve mc1(m);
    CutSurface cs = cut_along(mc1, &carried);
    REQUIRE(cs.piece_count() == 1);
    CHECK(static_cast<int>(cs.arcs.size()) == det_oracle(1, 0, 1, n));
    for (const auto& a : cs.arcs) CHECK(a.is_seam());
  }
}

TEST_CASE("carried curve equal to the cut curve leaves no arcs") {
  Surface s = build_surface(1);
  Curve m = pq_curve(s, 1, 0);
  Curve par = pq_curve(s, 1, 0);
  CutSurface cs = cut_along(Multicurve(m), &static_cast<const Multicurve&>(par));
  CHECK(cs.arcs.empty());
}

TEST_CASE("arc totals equal the intersection number") {
  Surface s = build_surface(2);
  // cut along the vertex link with a carried admissible curve
  Multicurve link(s, std::vector<long long>(s.edge_count, 2));
  // a multicurve with some crossings with the link: all-4 is two parallel
  // links (disjoint after isotopy); use an asymmetric vector instead.
  // (weights found by trial in the torus... use genus-1 for determinism)
  Surface t = build_surface(1);
  Curve m = pq_curve(t, 1, 0);
  Curve x = pq_curve(t, 2, 3);
  Multicurve mm(m);
  CutSurface cs = cut_along(mm, &static_cast<const Multicurve&>(x));
  CHECK(static_cast<long long>(cs.arcs.size()) == geometric_intersection(m, x));
}

TEST_CASE("torus single-curve system decomposes as the genus-1 convention") {
  Surface s = build_surface(1);
  CHECK(decomposes_into_pants(Multicurve(pq_curve(s, 1, 0))));
}

TEST_CASE("traverses_all_seams on the torus annulus") {
  Surface s = build_surface(1);
  Multicurve pants(pq_curve(s, 1, 0));
  // the cut curve itself: disjoint, traverses nothing
  SeamReport r0 = traverses_all_seams(Multicurve(pq_curve(s, 1, 0)), pants);
  CHECK_FALSE(r0.all_traversed);
  // a transverse curve crosses the annulus: every arc a seam
  SeamReport r1 = traverses_all_seams(Multicurve(pq_curve(s, 0, 1)), pants);
  CHECK(r1.all_traversed);
}
