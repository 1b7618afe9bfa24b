#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hdk/arrangement.hpp"

namespace hdk {

/// Planar-map analysis of an Arrangement: chord-chord crossings, the face
/// complex of (curves + triangulation edges), the regions of the curve
/// complement (faces glued across edge fragments; the vertex is interior to
/// its region), region boundary circuits, and bigon detection.
class Analysis {
 public:
  explicit Analysis(const Arrangement& a);

  const Arrangement* arr;

  // --- chords -------------------------------------------------------------
  struct Chord {
    int curve, idx;       // chord idx of curve: slot_seq[idx] -> slot_seq[idx+1]
    int tri;
    int s_from, s_to;     // slot ids
  };
  std::vector<Chord> chords;
  std::vector<int> chord_offset;           // per curve, index into `chords`
  int chord_of(int curve, int idx) const { return chord_offset[curve] + idx; }

  // --- crossings ----------------------------------------------------------
  struct Crossing {
    int ca, cb;  // global chord ids, ca < cb
  };
  std::vector<Crossing> crossings;
  std::vector<std::vector<int>> chord_crossings;  // per chord, sorted from s_from to s_to
  long long crossing_count() const { return static_cast<long long>(crossings.size()); }
  /// Crossings between two specific curves.
  long long crossings_between(int curve_a, int curve_b) const;

  // --- planar map ---------------------------------------------------------
  // Nodes: 0 = the vertex; 1..S = slots (id+1); S+1.. = crossings.
  // Fragments: directed pairs stored once; darts = 2*frag (+1 for reverse).
  struct Fragment {
    int node_a, node_b;
    bool is_edge;  // true: fragment of a triangulation edge; false: chord fragment
    int owner;     // edge id or global chord id
    int sub;       // index along the owner (0-based)
  };
  std::vector<Fragment> fragments;
  std::vector<int> chord_frag_start;  // per chord: id of its first fragment
  int dart_count() const { return 2 * static_cast<int>(fragments.size()); }
  int frag_of(int dart) const { return dart / 2; }
  bool dart_forward(int dart) const { return (dart & 1) == 0; }
  int dart_from(int d) const {
    const Fragment& f = fragments[frag_of(d)];
    return dart_forward(d) ? f.node_a : f.node_b;
  }
  int dart_to(int d) const {
    const Fragment& f = fragments[frag_of(d)];
    return dart_forward(d) ? f.node_b : f.node_a;
  }
  int alpha(int d) const { return d ^ 1; }

  std::vector<int> face_of_dart;  // face to the LEFT of each dart
  int face_count = 0;
  std::vector<int> region_of_face;
  int region_count = 0;
  std::vector<int> region_euler;           // per region
  std::vector<char> region_has_vertex;     // per region
  std::vector<std::vector<int>> region_faces;

  int region_of_dart(int d) const { return region_of_face[face_of_dart[d]]; }
  /// Region containing the vertex.
  int vertex_region() const;

  // --- boundary circuits ----------------------------------------------------
  struct Circuit {
    int region;
    std::vector<int> darts;    // chord darts in boundary order
    std::vector<int> corners;  // positions i where darts[i] ENDS at a crossing node
  };
  std::vector<Circuit> circuits;
  std::vector<std::vector<int>> region_circuits;

  // --- derived queries ------------------------------------------------------
  struct Bigon {
    int region;
    // Side runs: contiguous dart runs between the two corners.
    int curve_a, curve_b;
    std::vector<int> darts_a, darts_b;  // each run in boundary order
    int corner_entry_a = -1;  // crossing id where run A begins (circuit order)
    int corner_entry_b = -1;  // crossing id where run B begins
  };
  /// All bigon regions (χ=1, one circuit, exactly two corners).
  std::vector<Bigon> bigons() const;

  /// The node id of a slot / crossing.
  int slot_node(int slot) const { return 1 + slot; }
  int crossing_node(int x) const { return 1 + slot_count_ + x; }
  bool node_is_crossing(int n) const { return n > slot_count_; }
  bool node_is_slot(int n) const { return n >= 1 && n <= slot_count_; }
  int node_slot(int n) const { return n - 1; }
  int node_crossing(int n) const { return n - 1 - slot_count_; }

  int slot_pos(int slot) const { return slot_pos_[slot]; }

  /// Euler characteristic of the whole map (must equal 2-2g). Checked at
  /// construction.
  int map_euler() const;

  /// The fragment gap of edge `e` adjacent to slot (by position) on the given
  /// side: returns the fragment id between pos and pos+1 (after=true) or
  /// pos-1 and pos (after=false).
  int edge_gap_fragment(int edge, int pos, bool after) const;

  /// For the chord fragment dart d (a chord dart), the circuit/side context:
  int curve_of_dart(int d) const { return chords[fragments[frag_of(d)].owner].curve; }

  /// Next dart along the face boundary (the face lies on the darts' left).
  int face_next(int d) const;

 private:
  int slot_count_ = 0;
  std::vector<int> slot_pos_;
  std::vector<std::vector<int>> edge_frag_ids_;  // per edge: fragment ids in order
  std::vector<std::vector<int>> rotations_;      // per node: outgoing darts ccw
  std::vector<int> rot_pos_;                     // position of dart in its from-node rotation

  // Chord geometry: a chord with both endpoints on one side ("hugger") is
  // modelled as a thin trapezoid hugging that side at an infinitesimal
  // height; heights are ranked so wider huggers run above narrower ones.
  struct ChordGeom {
    bool hugger = false;
    int side = -1;        // side index in the chord's triangle (hugger only)
    long long p_from = 0, p_to = 0;  // side positions of the endpoints
    long long height = 0;            // hugger height rank (wider = higher)
  };
  std::vector<ChordGeom> cgeom_;
  void build_crossings();
  void build_map();
  void build_regions();
  void build_circuits();
};

}  // namespace hdk
