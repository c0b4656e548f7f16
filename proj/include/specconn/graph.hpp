#pragma once
// Simple undirected graphs of order <= 62, one 64-bit neighbor mask per
// vertex. Values are cheap to copy; combinators return fresh graphs and
// never mutate their arguments.

#include <bit>
#include <cstdint>
#include <vector>

namespace specconn {

inline constexpr int max_order = 62;

struct Graph {
  int n = 0;
  int m = 0;
  std::vector<std::uint64_t> adj;  // adj[v] bit u set <=> edge uv; symmetric, loop-free

  static Graph empty(int n);
  static Graph complete(int n);
  static Graph complete_bipartite(int a, int b);  // side A = 0..a-1, side B = a..a+b-1
  static Graph cycle(int n);                      // n >= 3

  bool has_edge(int u, int v) const { return adj[u] >> v & 1u; }
  int degree(int v) const { return std::popcount(adj[v]); }
  std::uint64_t vertex_mask() const { return (std::uint64_t{1} << n) - 1; }

  // Construction-time helper; rejects loops, duplicates and out-of-range ids.
  void add_edge(int u, int v);

  bool operator==(const Graph&) const = default;
};

struct DegreeProfile {
  std::vector<int> degrees;  // indexed by vertex
  int delta = 0;             // minimum degree
};

Graph join(const Graph& g, const Graph& h);            // h's vertices shifted by g.n
Graph disjoint_union(const Graph& g, const Graph& h);  // h's vertices shifted by g.n
Graph complement(const Graph& g);
Graph delete_edge(const Graph& g, int u, int v);  // throws if edge absent

DegreeProfile min_degree(const Graph& g);
bool is_connected(const Graph& g);
// Vertex sets of the connected components as bitmasks, sorted by size
// ascending, ties by smallest contained vertex.
std::vector<std::uint64_t> components(const Graph& g);
bool is_triangle_free(const Graph& g);

std::vector<int> mask_to_vertices(std::uint64_t mask);

}  // namespace specconn
