#include "hdk/graphs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hdk {

int Multigraph::add_vertex() { return vertex_count++; }

int Multigraph::add_edge(int u, int v) {
  if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
    throw std::out_of_range("Multigraph::add_edge: vertex out of range");
  edges.emplace_back(u, v);
  return static_cast<int>(edges.size()) - 1;
}

bool Multigraph::is_loop(int e) const { return edges.at(e).first == edges.at(e).second; }

int Multigraph::degree(int v) const {
  int d = 0;
  for (const auto& [a, b] : edges) {
    if (a == v) d++;
    if (b == v) d++;
  }
  return d;
}

std::string Multigraph::to_string() const {
  std::ostringstream os;
  os << "V=" << vertex_count << " E={";
  for (size_t i = 0; i < edges.size(); i++) {
    if (i) os << ",";
    os << edges[i].first << "-" << edges[i].second;
  }
  os << "}";
  return os.str();
}

namespace {

// Connectivity on the non-loop support, skipping vertices in `removed`.
bool connected_excluding(const Multigraph& g, const std::vector<bool>& removed) {
  int n = g.vertex_count;
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : g.edges) {
    if (u == v) continue;
    if (removed[u] || removed[v]) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  int start = -1, alive = 0;
  for (int v = 0; v < n; v++)
    if (!removed[v]) {
      alive++;
      if (start < 0) start = v;
    }
  if (alive == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{start};
  seen[start] = true;
  int count = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    count++;
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return count == alive;
}

}  // namespace

bool is_connected(const Multigraph& g) {
  std::vector<bool> removed(g.vertex_count, false);
  return connected_excluding(g, removed);
}

bool is_2_connected(const Multigraph& g) {
  if (g.vertex_count <= 2) return false;
  std::vector<bool> removed(g.vertex_count, false);
  if (!connected_excluding(g, removed)) return false;
  for (int v = 0; v < g.vertex_count; v++) {
    removed[v] = true;
    if (!connected_excluding(g, removed)) return false;
    removed[v] = false;
  }
  return true;
}

Multigraph delete_edge(const Multigraph& g, int e) {
  if (e < 0 || e >= static_cast<int>(g.edges.size()))
    throw std::out_of_range("delete_edge: no such edge");
  Multigraph out;
  out.vertex_count = g.vertex_count;
  for (int i = 0; i < static_cast<int>(g.edges.size()); i++)
    if (i != e) out.edges.push_back(g.edges[i]);
  return out;
}

Multigraph contract_edge(const Multigraph& g, int e) {
  if (e < 0 || e >= static_cast<int>(g.edges.size()))
    throw std::out_of_range("contract_edge: no such edge");
  auto [u, v] = g.edges[e];
  if (u > v) std::swap(u, v);
  Multigraph out;
  if (u == v) {  // contracting a loop deletes it
    out.vertex_count = g.vertex_count;
    for (int i = 0; i < static_cast<int>(g.edges.size()); i++)
      if (i != e) out.edges.push_back(g.edges[i]);
    return out;
  }
  out.vertex_count = g.vertex_count - 1;
  auto remap = [&](int x) {
    if (x == v) return u;
    return x > v ? x - 1 : x;
  };
  for (int i = 0; i < static_cast<int>(g.edges.size()); i++) {
    if (i == e) continue;
    out.edges.emplace_back(remap(g.edges[i].first), remap(g.edges[i].second));
  }
  return out;
}

int find_contractible_edge(const Multigraph& g) {
  if (g.vertex_count < 4)
    throw std::invalid_argument("find_contractible_edge: need at least 4 vertices");
  if (!is_2_connected(g))
    throw std::invalid_argument("find_contractible_edge: graph is not 2-connected");
  for (int e = 0; e < static_cast<int>(g.edges.size()); e++) {
    if (g.is_loop(e)) continue;
    if (is_2_connected(contract_edge(g, e))) return e;
  }
  throw std::logic_error("find_contractible_edge: exhaustive search failed on a 2-connected graph");
}

EdgeMoveReport edge_move_report(const Multigraph& g, int e) {
  EdgeMoveReport r;
  r.edge = e;
  Multigraph minus = delete_edge(g, e);
  Multigraph slash = contract_edge(g, e);
  r.minus_connected = is_connected(minus);
  r.contract_connected = is_connected(slash);
  r.minus_2_connected = is_2_connected(minus);
  r.contract_2_connected = is_2_connected(slash);
  return r;
}

namespace {

std::string form_under(const Multigraph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> es;
  es.reserve(g.edges.size());
  for (const auto& [u, v] : g.edges) {
    int a = perm[u], b = perm[v];
    if (a > b) std::swap(a, b);
    es.emplace_back(a, b);
  }
  std::sort(es.begin(), es.end());
  std::ostringstream os;
  os << g.vertex_count << ":";
  for (const auto& [a, b] : es) os << a << "," << b << ";";
  return os.str();
}

}  // namespace

std::string canonical_form(const Multigraph& g) {
  // Only permutations preserving (degree, loop count) classes can realize
  // an isomorphism, so permute within classes.
  int n = g.vertex_count;
  std::vector<std::pair<int, int>> profile(n);
  for (int v = 0; v < n; v++) {
    int loops = 0;
    for (const auto& [a, b] : g.edges)
      if (a == v && b == v) loops++;
    profile[v] = {g.degree(v), loops};
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return profile[a] < profile[b]; });
  std::string best;
  std::vector<int> perm(n);
  // order[] lists vertices grouped by class; permute positions within each
  // class block only.
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      std::string s = form_under(g, perm);
      if (best.empty() || s < best) best = s;
      return;
    }
    int j = i;
    while (j < n && profile[order[j]] == profile[order[i]]) j++;
    std::vector<int> block(order.begin() + i, order.begin() + j);
    std::sort(block.begin(), block.end());
    do {
      for (int k = i; k < j; k++) perm[block[k - i]] = k;
      rec(j);
    } while (std::next_permutation(block.begin(), block.end()));
  };
  rec(0);
  return best;
}

namespace {

// Simple 2-connected graphs on exactly n labeled vertices, deduplicated up
// to isomorphism, with at most max_edges edges.
std::vector<Multigraph> simple_2_connected(int n, int max_edges) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++) slots.emplace_back(u, v);
  int m = static_cast<int>(slots.size());
  std::vector<Multigraph> out;
  std::set<std::string> seen;
  for (long mask = 0; mask < (1L << m); mask++) {
    int bits = __builtin_popcountl(mask);
    if (bits < n || bits > max_edges) continue;  // 2-connected needs >= n edges
    Multigraph g;
    g.vertex_count = n;
    for (int i = 0; i < m; i++)
      if (mask & (1L << i)) g.edges.push_back(slots[i]);
    bool min_deg_ok = true;
    for (int v = 0; v < n && min_deg_ok; v++)
      if (g.degree(v) < 2) min_deg_ok = false;
    if (!min_deg_ok) continue;
    if (!is_2_connected(g)) continue;
    std::string c = canonical_form(g);
    if (seen.insert(c).second) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

std::vector<Multigraph> enumerate_2_connected_multigraphs(int max_vertices, int max_edges) {
  std::vector<Multigraph> out;
  std::set<std::string> seen;
  for (int n = 3; n <= max_vertices; n++) {
    for (const Multigraph& support : simple_2_connected(n, max_edges)) {
      int s = static_cast<int>(support.edges.size());
      // Distribute extra parallel copies over support edges and loops over
      // vertices, keeping the total edge count within max_edges.
      int spare = max_edges - s;
      std::vector<int> extra(s + n, 0);
      // Iterate over all assignments of at most `spare` units to s+n slots.
      std::function<void(int, int)> rec = [&](int idx, int left) {
        if (idx == s + n) {
          Multigraph g;
          g.vertex_count = n;
          for (int i = 0; i < s; i++)
            for (int k = 0; k <= extra[i]; k++) g.edges.push_back(support.edges[i]);
          for (int v = 0; v < n; v++)
            for (int k = 0; k < extra[s + v]; k++) g.edges.emplace_back(v, v);
          std::string c = canonical_form(g);
          if (seen.insert(c).second) out.push_back(std::move(g));
          return;
        }
        for (int take = 0; take <= left; take++) {
          extra[idx] = take;
          rec(idx + 1, left - take);
        }
        extra[idx] = 0;
      };
      rec(0, spare);
    }
  }
  return out;
}

}  // namespace hdk
