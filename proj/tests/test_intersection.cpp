#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "hdk/multicurve.hpp"
#include "hdk/surface.hpp"
#include "torus_util.hpp"

using namespace hdk;

TEST_CASE("meridian and longitude meet once") {
  Surface s = build_surface(1);
  CHECK(geometric_intersection(pq_curve(s, 1, 0), pq_curve(s, 0, 1)) == 1);
}

TEST_CASE("self intersection vanishes") {
  Surface s = build_surface(1);
  for (auto [p, q] : std::vector<std::pair<long long, long long>>{{1, 0}, {1, 2}, {3, -2}}) {
    Curve c = pq_curve(s, p, q);
    CHECK(geometric_intersection(c, c) == 0);
  }
}

TEST_CASE("torus determinant oracle") {
  Surface s = build_surface(1);
  for (long long p = -5; p <= 5; p++)
    for (long long q = -5; q <= 5; q++) {
      if (std::gcd(p, q) != 1) continue;
      for (long long r = -5; r <= 5; r++)
        for (long long ss = -5; ss <= 5; ss++) {
          if (std::gcd(r, ss) != 1) continue;
          long long expect = det_oracle(p, q, r, ss);
          CHECK(geometric_intersection(pq_curve(s, p, q), pq_curve(s, r, ss)) == expect);
        }
    }
}

namespace {

// Deterministic generator of admissible weight vectors on a surface.
std::vector<long long> random_admissible(const Surface& s, std::mt19937& rng, int cap) {
  std::uniform_int_distribution<int> d(0, cap);
  while (true) {
    std::vector<long long> w(s.edge_count);
    for (auto& x : w) x = d(rng);
    bool ok = true;
    for (int t = 0; t < s.triangle_count() && ok; t++) {
      long long a = w[s.tris[t][0].edge], b = w[s.tris[t][1].edge], c = w[s.tris[t][2].edge];
      if ((a + b + c) % 2 != 0) ok = false;
      if (a > b + c || b > a + c || c > a + b) ok = false;
    }
    if (ok) return w;
  }
}

}  // namespace

TEST_CASE("intersection number is symmetric") {
  std::mt19937 rng(20240811);
  for (int g : {1, 2}) {
    Surface s = build_surface(g);
    int trials = g == 1 ? 60 : 60;
    for (int i = 0; i < trials; i++) {
      Multicurve a(s, random_admissible(s, rng, 8));
      Multicurve b(s, random_admissible(s, rng, 8));
      long long ab = geometric_intersection(a, b);
      long long ba = geometric_intersection(b, a);
      CHECK(ab == ba);
    }
  }
}

TEST_CASE("isotopic curves on the torus") {
  Surface s = build_surface(1);
  CHECK(isotopic(pq_curve(s, 1, 0), pq_curve(s, 1, 0)));
  CHECK_FALSE(isotopic(pq_curve(s, 1, 0), pq_curve(s, 0, 1)));
  CHECK_FALSE(isotopic(pq_curve(s, 1, 0), pq_curve(s, 1, 2)));
}

TEST_CASE("meridian and longitude fill the torus") {
  Surface s = build_surface(1);
  CHECK(fills(pq_curve(s, 1, 0), pq_curve(s, 0, 1)));
  // (1,0) and (1,2): i = 2, complement two squares: fills as well
  CHECK(fills(pq_curve(s, 1, 0), pq_curve(s, 1, 2)));
}
