#include "specconn/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace specconn {

namespace {

void check_order(int n) {
  if (n < 1 || n > max_order)
    throw std::invalid_argument("graph order must be in [1, " +
                                std::to_string(max_order) + "], got " +
                                std::to_string(n));
}

}  // namespace

Graph Graph::empty(int n) {
  check_order(n);
  Graph g;
  g.n = n;
  g.adj.assign(n, 0);
  return g;
}

Graph Graph::complete(int n) {
  Graph g = empty(n);
  const std::uint64_t all = g.vertex_mask();
  for (int v = 0; v < n; ++v) g.adj[v] = all ^ (std::uint64_t{1} << v);
  g.m = n * (n - 1) / 2;
  return g;
}

Graph Graph::complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("bipartite sides must be >= 1");
  Graph g = empty(a + b);
  const std::uint64_t side_a = (std::uint64_t{1} << a) - 1;
  const std::uint64_t side_b = g.vertex_mask() ^ side_a;
  for (int v = 0; v < a; ++v) g.adj[v] = side_b;
  for (int v = a; v < a + b; ++v) g.adj[v] = side_a;
  g.m = a * b;
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs order >= 3");
  Graph g = empty(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  if (has_edge(u, v)) throw std::invalid_argument("duplicate edge");
  adj[u] |= std::uint64_t{1} << v;
  adj[v] |= std::uint64_t{1} << u;
  ++m;
}

Graph join(const Graph& g, const Graph& h) {
  if (g.n + h.n > max_order) throw std::invalid_argument("join exceeds max order");
  Graph r = Graph::empty(g.n + h.n);
  const std::uint64_t g_mask = (std::uint64_t{1} << g.n) - 1;
  const std::uint64_t h_mask = r.vertex_mask() ^ g_mask;
  for (int v = 0; v < g.n; ++v) r.adj[v] = g.adj[v] | h_mask;
  for (int v = 0; v < h.n; ++v) r.adj[g.n + v] = (h.adj[v] << g.n) | g_mask;
  r.m = g.m + h.m + g.n * h.n;
  return r;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  if (g.n + h.n > max_order)
    throw std::invalid_argument("disjoint union exceeds max order");
  Graph r = Graph::empty(g.n + h.n);
  for (int v = 0; v < g.n; ++v) r.adj[v] = g.adj[v];
  for (int v = 0; v < h.n; ++v) r.adj[g.n + v] = h.adj[v] << g.n;
  r.m = g.m + h.m;
  return r;
}

Graph complement(const Graph& g) {
  Graph r = Graph::empty(g.n);
  const std::uint64_t all = g.vertex_mask();
  for (int v = 0; v < g.n; ++v)
    r.adj[v] = all & ~(g.adj[v] | (std::uint64_t{1} << v));
  r.m = g.n * (g.n - 1) / 2 - g.m;
  return r;
}

Graph delete_edge(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.n || v >= g.n)
    throw std::invalid_argument("edge endpoint out of range");
  if (!g.has_edge(u, v)) throw std::invalid_argument("edge not present");
  Graph r = g;
  r.adj[u] &= ~(std::uint64_t{1} << v);
  r.adj[v] &= ~(std::uint64_t{1} << u);
  --r.m;
  return r;
}

DegreeProfile min_degree(const Graph& g) {
  DegreeProfile p;
  p.degrees.resize(g.n);
  p.delta = g.n;
  for (int v = 0; v < g.n; ++v) {
    p.degrees[v] = g.degree(v);
    p.delta = std::min(p.delta, p.degrees[v]);
  }
  return p;
}

namespace {

std::uint64_t reach_from(const Graph& g, int start, std::uint64_t allowed) {
  std::uint64_t seen = std::uint64_t{1} << start;
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    std::uint64_t f = frontier;
    while (f) {
      const int v = std::countr_zero(f);
      f &= f - 1;
      next |= g.adj[v] & allowed;
    }
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen;
}

}  // namespace

bool is_connected(const Graph& g) {
  return reach_from(g, 0, g.vertex_mask()) == g.vertex_mask();
}

std::vector<std::uint64_t> components(const Graph& g) {
  std::vector<std::uint64_t> comps;
  std::uint64_t rest = g.vertex_mask();
  while (rest) {
    const int v = std::countr_zero(rest);
    const std::uint64_t c = reach_from(g, v, rest);
    comps.push_back(c);
    rest &= ~c;
  }
  std::sort(comps.begin(), comps.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return std::countr_zero(a) < std::countr_zero(b);
  });
  return comps;
}

bool is_triangle_free(const Graph& g) {
  for (int v = 0; v < g.n; ++v) {
    std::uint64_t nb = g.adj[v] & ~((std::uint64_t{2} << v) - 1);  // neighbors > v
    while (nb) {
      const int u = std::countr_zero(nb);
      nb &= nb - 1;
      if (g.adj[v] & g.adj[u]) return false;
    }
  }
  return true;
}

std::vector<int> mask_to_vertices(std::uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace specconn
