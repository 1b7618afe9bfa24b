#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hdk/cut.hpp"
#include "hdk/graphs.hpp"
#include "hdk/multicurve.hpp"

namespace hdk {

enum class Side { V, W };
inline const char* side_name(Side s) { return s == Side::V ? "V" : "W"; }

/// g disjoint essential curves cutting the handlebody on `side` to a ball:
/// equivalently, the complement in the surface is a single planar piece.
struct CutSystem {
  Multicurve curves;  // g components
  Side side = Side::V;
  int genus() const { return curves.component_count(); }
};

/// Validates the cut-system condition and returns the report.
struct CutSystemReport {
  bool component_count_ok = false;
  bool disjoint_ok = true;  // always true for a single normal multicurve
  bool connected_complement = false;
  bool planar_complement = false;
  bool ok() const { return component_count_ok && connected_complement && planar_complement; }
};
CutSystemReport validate_cut_system(const CutSystem& c);
CutSystem make_cut_system(const Multicurve& m, Side side);

struct HeegaardDiagram {
  const Surface* surf = nullptr;
  CutSystem d;  // side V
  CutSystem e;  // side W
  bool bigon_free = false;
};

HeegaardDiagram make_diagram(const Surface& s, const Multicurve& dv, const Multicurve& ew);

/// Isotopes the V-side curves across bigons until the diagram is bigon-free.
HeegaardDiagram remove_bigons(const HeegaardDiagram& diag);

/// Pushoff of the loop formed by edge `e` and the vertex: one of the two
/// boundary circles of a neighborhood, both isotopic to the loop's free
/// homotopy class. `side` selects the circle (0 or 1).
Multicurve edge_loop_pushoff(const Surface& s, int edge, int side = 0);

/// Cyclic word of signed crossings of alpha through the cut system's
/// components (letters 1..g, sign = crossing direction).
struct FreeWord {
  std::vector<int> letters;  // nonzero; |letter| in 1..g

  FreeWord() = default;
  explicit FreeWord(std::vector<int> l) : letters(std::move(l)) {}
  int length() const { return static_cast<int>(letters.size()); }
  /// Free reduction (adjacent inverse cancellation).
  FreeWord reduced() const;
  /// Free + cyclic reduction.
  FreeWord cyclically_reduced() const;
  bool trivial() const { return cyclically_reduced().length() == 0; }
  std::string to_string() const;
};

FreeWord curve_word(const Multicurve& alpha, const CutSystem& c);

struct DiskCertificate {
  bool bounds = false;
  FreeWord word;          // as read off
  FreeWord reduced_word;  // after free+cyclic reduction (empty iff bounds)
};

/// True (with certificate) iff alpha bounds a disk on the cut system's side:
/// the crossing word reduces to the trivial word.
DiskCertificate bounds_disk(const Multicurve& alpha, const CutSystem& c);

/// How a band for a band sum is specified.
struct BandSpec {
  enum class Kind {
    Corridor,     // shortest embedded arc inside one complementary region
    GuideSubarc,  // runs parallel to a guide curve between its crossings
  };
  Kind kind = Kind::Corridor;
  // GuideSubarc: the band follows `guide` from its from_hit-th crossing with
  // a/b (counted along the guide among crossings with a and b only) to the
  // next one; those two crossings must be with the two different curves.
  Multicurve guide;
  int from_hit = 0;
};

/// Boundary of a regular neighborhood of a ∪ band ∪ b. Inputs must be
/// disjoint; the band's interior must avoid both.
Curve band_sum(const Curve& a, const Curve& b, const BandSpec& band);

/// Whitehead graph of a bigon-free diagram: vertices are the 2g boundary
/// circles of S cut along the W-side system (x_i^+ = side 0 of curve i,
/// vertex index 2i; x_i^- = side 1, index 2i+1); edges are the arcs of the
/// V-side curves. A rotation system from the cut pieces is attached, and
/// edge_arcs[j] records which V-curve carries arc j (curve, arc position).
struct WhiteheadGraph {
  Multigraph graph;
  struct ArcRef {
    int d_component;  // which V-side curve the arc lies on
    int index;        // position among that curve's arcs
  };
  std::vector<ArcRef> edge_arcs;
  static int vertex_of(int e_component, int side) { return 2 * e_component + side; }
};

WhiteheadGraph whitehead_graph(const HeegaardDiagram& diag);

struct IrreducibilitySignal {
  bool graph_connected = false;
  bool graph_2_connected = false;
  /// A separating witness when not 2-connected: -1 if disconnected, else the
  /// cut vertex index.
  int cut_vertex = -1;
};

/// Necessary-condition signal: a 2-connected Whitehead graph is required for
/// the pants builder; failure blocks it (it does not prove reducibility).
IrreducibilitySignal check_irreducibility_signal(const HeegaardDiagram& diag);

/// Replaces d-curve `slider` by its band sum with a parallel copy of
/// d-curve `over`, banding along an arc of the W-side system (a subarc of
/// e-curve `guide_e` between consecutive crossings with the two curves,
/// `hit` selecting which). The result is a cut system for the same
/// handlebody.
HeegaardDiagram handle_slide(const HeegaardDiagram& diag, int slider, int over, int guide_e,
                             int hit);

/// All valid (guide_e, hit) slide arcs for the given slider/over pair.
std::vector<std::pair<int, int>> enumerate_slide_arcs(const HeegaardDiagram& diag, int slider,
                                                      int over);

struct PantsDecomposition {
  Multicurve curves;  // 3g-3 components (genus >= 2) or 1 (genus 1)
  Side side = Side::V;
  std::vector<DiskCertificate> certificates;  // one per component
};

/// Checks complement-are-pants and per-component disk certificates against
/// the given cut system.
bool verify_pants(const PantsDecomposition& p, const CutSystem& c);

}  // namespace hdk
