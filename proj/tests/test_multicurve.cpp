#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "hdk/multicurve.hpp"
#include "hdk/surface.hpp"
#include "torus_util.hpp"

using namespace hdk;

TEST_CASE("all-zero weights give the empty multicurve") {
  Surface s = build_surface(2);
  Multicurve m = validate_multicurve(s, std::vector<long long>(s.edge_count, 0));
  CHECK(m.empty());
  CHECK(m.component_count() == 0);
}

TEST_CASE("parity violation is rejected with a triangle named") {
  Surface s = build_surface(2);
  std::vector<long long> w(s.edge_count, 0);
  w[0] = 1;
  try {
    validate_multicurve(s, w);
    FAIL("expected a parity error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("triangle") != std::string::npos);
  }
}

TEST_CASE("triangle inequality violation is rejected") {
  Surface s = build_surface(1);
  // edges a,b,d: weights (2,0,0): triangle needs |2-0| <= 0
  CHECK_THROWS_AS(validate_multicurve(s, {2, 0, 0}), std::invalid_argument);
}

TEST_CASE("torus (1,0) curve has one essential component") {
  Surface s = build_surface(1);
  Multicurve m = validate_multicurve(s, pq_weights(1, 0));
  CHECK(m.component_count() == 1);
  CHECK(m.component_essential(0));
  CHECK_NOTHROW(Curve::from(m));
}

TEST_CASE("torus (2,4) splits into two parallel components") {
  Surface s = build_surface(1);
  Multicurve m = validate_multicurve(s, pq_weights(2, 4));
  CHECK(m.component_count() == 2);
  CHECK(m.component(0) == pq_weights(1, 2));
  CHECK(m.component(1) == pq_weights(1, 2));
}

TEST_CASE("coprime (p,q) vectors give single essential curves") {
  Surface s = build_surface(1);
  for (long long p = -4; p <= 4; p++) {
    for (long long q = -4; q <= 4; q++) {
      if (std::gcd(p, q) != 1) continue;
      Multicurve m = validate_multicurve(s, pq_weights(p, q));
      CHECK(m.component_count() == 1);
      CHECK(m.component_essential(0));
    }
  }
}

TEST_CASE("the vertex link is a single inessential component") {
  for (int g : {1, 2, 3}) {
    Surface s = build_surface(g);
    Multicurve m = validate_multicurve(s, std::vector<long long>(s.edge_count, 2));
    CHECK(m.component_count() == 1);
    CHECK_FALSE(m.component_essential(0));
    CHECK(m.essential_component_count() == 0);
  }
}

TEST_CASE("doubled vertex link has two inessential components") {
  Surface s = build_surface(2);
  Multicurve m = validate_multicurve(s, std::vector<long long>(s.edge_count, 4));
  CHECK(m.component_count() == 2);
  CHECK(m.essential_component_count() == 0);
}

TEST_CASE("Curve constructor rejects multicurves and inessential input") {
  Surface s = build_surface(1);
  CHECK_THROWS(Curve(s, pq_weights(2, 4)));
  Surface s2 = build_surface(2);
  CHECK_THROWS(Curve(s2, std::vector<long long>(s2.edge_count, 2)));
}
