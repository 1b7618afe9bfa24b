#pragma once

// Exact rational predicates for chord geometry inside a triangle chart.
// Corner coordinates: C0=(1,0), C1=(0,1), C2=(0,0); side k runs from corner
// (k+2)%3 to corner k. Points on sides are rationals with per-edge
// denominators, so signs and parameter comparisons are computed over
// integers (256-bit to leave ample headroom).

#include <boost/multiprecision/cpp_int.hpp>

#include "hdk/arrangement.hpp"

namespace hdk::geom {

using Big = boost::multiprecision::int256_t;

struct Pt {
  long long xn, yn, den;  // (xn/den, yn/den), den > 0
};

inline Pt corner_pt(int corner) {
  switch (corner) {
    case 0: return {1, 0, 1};
    case 1: return {0, 1, 1};
    default: return {0, 0, 1};
  }
}

/// Point of the i-th of n slots (0-based, in edge order) as seen on side k
/// of a triangle, given whether the side runs the edge forward.
inline Pt side_point(int k, bool forward, long long i, long long n) {
  long long num = forward ? (i + 1) : (n - i);
  long long den = n + 1;
  Pt tail = corner_pt((k + 2) % 3), head = corner_pt(k);
  // tail + (num/den) * (head - tail); corner coords are 0/1 so this stays small.
  Pt p;
  p.den = den;
  p.xn = tail.xn * (den - num) + head.xn * num;
  p.yn = tail.yn * (den - num) + head.yn * num;
  return p;
}

struct Vec {
  Big x, y;
};

inline Vec direction(const Pt& a, const Pt& b) {
  // (b - a) scaled by the positive factor a.den*b.den
  return {Big(b.xn) * a.den - Big(a.xn) * b.den, Big(b.yn) * a.den - Big(a.yn) * b.den};
}

inline Big cross(const Vec& u, const Vec& v) { return u.x * v.y - u.y * v.x; }

inline int sign(const Big& v) { return v == 0 ? 0 : (v > 0 ? 1 : -1); }

/// Exact parameter of the crossing of segment PQ with segment RS, as a
/// fraction num/den along PQ (den may be negative; normalize by sign).
struct Frac {
  Big num, den;
};

inline Frac cross_param(const Pt& P, const Pt& Q, const Pt& R, const Pt& S) {
  // t = cross(R-P, S-P) scaled consistently; using scaled directions with the
  // common positive factors cancelling:
  //   N = cross(dir(P,R), dir(P,S)) / (pd^2 rd sd)   [dir carries pd*rd etc.]
  // Work with the scaled crosses directly; ratios keep exactness.
  Vec pr = direction(P, R), ps = direction(P, S), pq = direction(P, Q);
  // cross(pr, ps) corresponds to cross2(P,R,S) * (pd^2 * rd * sd)
  Big n_N = cross(pr, ps);
  // D = cross2(P,Q,S) - cross2(P,Q,R); scale both to denominator pd^2 qd rd sd
  Big c_pqs = cross(pq, ps);  // * pd^2 qd sd
  Big c_pqr = cross(pq, pr);  // * pd^2 qd rd
  Big n_D = c_pqs * R.den - c_pqr * S.den;  // * pd^2 qd rd sd
  // t = n_N * qd / n_D  (the pd^2 rd sd factors cancel)
  return {n_N * Q.den, n_D};
}

inline int frac_cmp(const Frac& a, const Frac& b) {
  Big lhs = a.num * b.den, rhs = b.num * a.den;
  int flip = (sign(a.den) * sign(b.den) < 0) ? -1 : 1;
  Big d = lhs - rhs;
  return flip * sign(d);
}

/// Which side of triangle t carries edge e (triangles never repeat an edge).
inline int side_of_edge(const Surface& S, int t, int e) {
  for (int k = 0; k < 3; k++)
    if (S.tris[t][k].edge == e) return k;
  throw std::logic_error("side_of_edge: edge not on triangle");
}

/// Exact coordinates of a slot as seen inside triangle `tri`.
inline Pt slot_point_in_tri(const Arrangement& a, int tri, int slot, int slot_pos) {
  const Surface& S = *a.surf;
  int e = a.slots[slot].edge;
  int k = side_of_edge(S, tri, e);
  const Surface::Side& sd = S.tris[tri][k];
  long long n = static_cast<long long>(a.edge_slots[e].size());
  return side_point(k, sd.forward, slot_pos, n);
}

}  // namespace hdk::geom
