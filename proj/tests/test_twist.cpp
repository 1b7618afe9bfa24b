#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "hdk/multicurve.hpp"
#include "hdk/surface.hpp"
#include "torus_util.hpp"

using namespace hdk;

TEST_CASE("twisting the twisting curve is trivial") {
  Surface s = build_surface(1);
  Curve c = pq_curve(s, 1, 2);
  for (long long k : {-3LL, -1LL, 0LL, 1LL, 4LL}) {
    Multicurve img = dehn_twist(c, c, k);
    CHECK(isotopic(img, c));
  }
}

TEST_CASE("zeroth power is the identity") {
  Surface s = build_surface(1);
  CHECK(dehn_twist(pq_curve(s, 0, 1), pq_curve(s, 1, 0), 0) == Multicurve(pq_curve(s, 0, 1)));
}

TEST_CASE("twist about the meridian moves the longitude the right amount") {
  Surface s = build_surface(1);
  Curve m = pq_curve(s, 1, 0);
  Curve l = pq_curve(s, 0, 1);
  for (long long n = 1; n <= 5; n++) {
    Multicurve img = dehn_twist(l, m, n);
    CHECK(img.component_count() == 1);
    CHECK(geometric_intersection(img, l) == n);
    CHECK(geometric_intersection(img, m) == 1);
  }
}

TEST_CASE("twist handedness matches the matrix convention") {
  // In (p,q) coordinates with m = (1,0) and l = (0,1), the positive twists
  // act by tau_m: (p,q) -> (p+q, q) and tau_l: (p,q) -> (p, q-p).
  Surface s = build_surface(1);
  Curve m = pq_curve(s, 1, 0);
  Curve l = pq_curve(s, 0, 1);
  CHECK(dehn_twist(l, m, 1).weights() == pq_weights(1, 1));
  CHECK(dehn_twist(l, m, -1).weights() == pq_weights(-1, 1));
  CHECK(dehn_twist(m, l, 1).weights() == pq_weights(1, -1));
  CHECK(dehn_twist(m, l, -1).weights() == pq_weights(1, 1));
  // Composite tau_m . tau_l^{-1} on m: (1,0) -> (1,1) -> (2,1); and on l:
  // (0,1) -> (0,1) -> (1,1).
  Multicurve x = dehn_twist(m, l, -1);
  Multicurve y = dehn_twist(x, m, 1);
  CHECK(y.weights() == pq_weights(2, 1));
  Multicurve u = dehn_twist(l, l, -1);
  Multicurve v = dehn_twist(u, m, 1);
  CHECK(v.weights() == pq_weights(1, 1));
}

TEST_CASE("twists are invertible on coordinates") {
  Surface s = build_surface(1);
  std::mt19937 rng(7);
  Curve c = pq_curve(s, 2, 1);
  for (auto [p, q] : std::vector<std::pair<long long, long long>>{{0, 1}, {1, 0}, {3, 1}, {1, -2}}) {
    Multicurve a = pq_curve(s, p, q);
    for (long long k : {1LL, 2LL, 3LL}) {
      Multicurve img = dehn_twist(a, c, k);
      Multicurve back = dehn_twist(img, c, -k);
      CHECK(back.weights() == a.weights());
    }
  }
}

namespace {

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

hdk::Curve random_curve(const Surface& s, std::mt19937& rng, int cap) {
  while (true) {
    Multicurve m(s, random_admissible(s, rng, cap));
    if (m.component_count() >= 1) {
      for (int i = 0; i < m.component_count(); i++) {
        if (m.component_essential(i)) return Curve::from(m.component_curve(i));
      }
    }
  }
}

}  // namespace

TEST_CASE("twist inequality on genus 2") {
  Surface s = build_surface(2);
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 12; trial++) {
    Curve a = random_curve(s, rng, 4);
    Curve b = random_curve(s, rng, 4);
    Curve c = random_curve(s, rng, 4);
    long long iab = geometric_intersection(a, b);
    long long iac = geometric_intersection(a, c);
    long long ibc = geometric_intersection(b, c);
    for (long long n : {1LL, 2LL, 3LL}) {
      Multicurve tb = dehn_twist(b, a, n);
      long long lhs = geometric_intersection(tb, c);
      long long drift = lhs - n * iab * iac;
      CHECK(std::llabs(drift) <= ibc);
      Multicurve back = dehn_twist(tb, a, -n);
      CHECK(back.weights() == b.weights());
    }
  }
}
