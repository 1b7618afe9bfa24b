#pragma once

// Shared torus helpers for tests: the (p,q) straight-line curve on the
// canonical one-vertex torus triangulation (edges a, b, d) has weights
// (|q|, |p|, |p-q|), and geometric intersection numbers obey the
// determinant rule |ps - qr|.

#include <cstdlib>
#include <numeric>
#include <vector>

#include "hdk/multicurve.hpp"
#include "hdk/surface.hpp"

inline std::vector<long long> pq_weights(long long p, long long q) {
  return {std::llabs(q), std::llabs(p), std::llabs(p - q)};
}

inline hdk::Curve pq_curve(const hdk::Surface& torus, long long p, long long q) {
  return hdk::Curve(torus, pq_weights(p, q));
}

inline long long det_oracle(long long p, long long q, long long r, long long s) {
  return std::llabs(p * s - q * r);
}
