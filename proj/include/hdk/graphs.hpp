#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hdk {

/// Undirected multigraph. Loops (u == v) and parallel edges are allowed.
/// Vertices are 0..vertex_count-1; edges are indexed by position in `edges`.
/// An optional rotation system (cyclic order of edge-ends at each vertex)
/// can be attached when the graph comes from a planar picture.
struct Multigraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  // Edge-end identifier: 2*edge for the endpoint at edges[e].first,
  // 2*edge+1 for the endpoint at edges[e].second.
  // rotation[v], when nonempty, lists each edge-end incident to v once.
  std::vector<std::vector<int>> rotation;

  int add_vertex();
  int add_edge(int u, int v);
  bool is_loop(int e) const;
  int degree(int v) const;  // loops count twice
  std::string to_string() const;
};

bool is_connected(const Multigraph& g);

/// True iff the graph has more than two vertices, is connected, and no
/// single vertex removal disconnects it. Loops are ignored throughout.
bool is_2_connected(const Multigraph& g);

Multigraph delete_edge(const Multigraph& g, int e);

/// Removes e and identifies its endpoints. Loops and parallels produced by
/// the identification are kept. Contracting a loop just deletes it.
/// The surviving vertex is min(u,v); vertices above max(u,v) shift down.
Multigraph contract_edge(const Multigraph& g, int e);

/// Lowest-index non-loop edge e with contract_edge(g,e) 2-connected.
/// Requires g 2-connected with at least 4 vertices; throws otherwise, and
/// throws if no edge qualifies (impossible when the preconditions hold).
int find_contractible_edge(const Multigraph& g);

struct EdgeMoveReport {
  int edge = -1;
  bool minus_connected = false;
  bool contract_connected = false;
  bool minus_2_connected = false;
  bool contract_2_connected = false;
  /// The dichotomy: deleting or contracting e keeps the graph 2-connected.
  bool dichotomy_holds() const { return minus_2_connected || contract_2_connected; }
};

/// Evaluates connectivity of g-e and g/e for a 2-connected g. Used by the
/// property suites that check the edge deletion/contraction dichotomy.
EdgeMoveReport edge_move_report(const Multigraph& g, int e);

/// Canonical string invariant under vertex relabeling (brute force over
/// permutations, intended for graphs with at most ~8 vertices).
std::string canonical_form(const Multigraph& g);

/// All connected multigraphs with `max_vertices` vertices or fewer and
/// `max_edges` edges or fewer whose support is 2-connected, one per
/// isomorphism class. Enumerates simple 2-connected supports and then
/// distributes parallel multiplicities and loops.
std::vector<Multigraph> enumerate_2_connected_multigraphs(int max_vertices, int max_edges);

}  // namespace hdk
