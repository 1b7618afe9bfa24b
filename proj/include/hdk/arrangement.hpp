#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hdk/surface.hpp"

namespace hdk {

/// Explicit realization of a system of disjointly-embedded-per-component
/// closed curves on a triangulated surface. Each curve is a cyclic sequence
/// of slots (transverse crossings with triangulation edges); consecutive
/// slots are joined by a straight chord inside a recorded triangle. Chords
/// of different curves may cross inside triangles; chords of one curve
/// never cross (the component stays embedded).
///
/// Slot positions along an edge are given by the order of `edge_slots[e]`;
/// the geometric parameter of the i-th of n slots is (i+1)/(n+1), measured
/// along the edge's own direction.
class Arrangement {
 public:
  struct Slot {
    int edge = -1;
    int curve = -1;  // -1 marks a freed slot
  };
  struct Curve {
    std::vector<int> slot_seq;   // cyclic
    std::vector<int> chord_tri;  // chord i joins slot_seq[i] -> slot_seq[(i+1)%n]
    bool removed = false;
    int size() const { return static_cast<int>(slot_seq.size()); }
  };

  explicit Arrangement(const Surface& s) : surf(&s), edge_slots(s.edge_count) {}

  const Surface* surf;
  std::vector<Slot> slots;
  std::vector<std::vector<int>> edge_slots;
  std::vector<Curve> curves;

  int new_slot(int edge, int curve) {
    slots.push_back({edge, curve});
    return static_cast<int>(slots.size()) - 1;
  }

  /// Inserts a multicurve from normal coordinates. New slots go in a fresh
  /// block at the tail of every edge's slot order, laid out so the inserted
  /// multicurve is embedded and normal. Returns one curve id per component.
  std::vector<int> insert_normal(const std::vector<long long>& weights);

  /// Live crossing count of edge e.
  long long edge_weight(int e) const;
  /// Weight vector of one curve.
  std::vector<long long> curve_weights(int curve) const;
  /// Total weight vector of a set of curves.
  std::vector<long long> weights_of(const std::vector<int>& curve_ids) const;

  int live_curve_count() const;
  long long total_slots() const;

  /// Position of a slot in its edge's order (linear scan; cached by Analysis).
  int slot_position(int slot) const;

  /// In-edge-order insertion helpers. `before`: insert immediately before
  /// `anchor` in the edge order, else immediately after.
  int new_slot_adjacent(int anchor_slot, bool before, int curve);
  /// Insert at the extreme end of an edge (next to the vertex).
  /// head=true: at the edge's head end (last position).
  int new_slot_extreme(int edge, bool head, int curve);

  /// Removes a curve and its slots.
  void remove_curve(int curve);

  /// Replaces the cyclic portion of curve c strictly between slot positions
  /// ia and ib (exclusive bounds, walking forward from ia) by the given
  /// slots/triangles. new_tris has size new_slots.size()+1: the triangles of
  /// the chords (ia->new_0), (new_0->new_1), ..., (new_last->ib).
  void splice(int curve, int ia, int ib, const std::vector<int>& new_slots,
              const std::vector<int>& new_tris);

  /// Registers a brand new curve built from explicit slots (already created
  /// via new_slot*); tris[i] = triangle of chord slots[i]->slots[i+1].
  int add_curve(const std::vector<int>& slot_ids, const std::vector<int>& tris);

  /// Replaces curve c's cycle wholesale: frees its old slots (except any that
  /// reappear in the new cycle) and installs the new slots/triangles.
  void replace_curve(int c, const std::vector<int>& slot_ids, const std::vector<int>& tris);

  /// Drops freed slots from the pool and reindexes everything.
  void compact();

  /// Normalizes curve `c` in place by pushing same-edge chords across edges
  /// (valid when no other curve crosses c's triangles... callers use it on
  /// single-system arrangements). Returns false if the curve vanished (was
  /// null-homotopic within a disk) — the curve is then removed.
  bool normalize_curve(int c);

  /// Internal consistency check (throws on violation).
  void check() const;
};

/// Builds the canonical normal-form weights of a multicurve given any
/// explicit realization of it alone on the surface.
std::vector<long long> normalize_to_weights(const Surface& s, Arrangement&& arr);

}  // namespace hdk
