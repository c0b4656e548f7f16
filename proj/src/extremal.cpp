#include "specconn/extremal.hpp"

#include <algorithm>
#include <stdexcept>

#include "specconn/connectivity.hpp"
#include "specconn/isomorphism.hpp"

namespace specconn {

Graph build_join_split(const FamilyParams& p) {
  if (!p.valid()) throw std::invalid_argument("invalid join-split parameters");
  if (p.b() < p.a())
    throw std::invalid_argument(
        "join-split family needs b >= a to have minimum degree delta");
  return join(Graph::complete(p.cut()),
              disjoint_union(Graph::complete(p.a()), Graph::complete(p.b())));
}

Graph build_super_exception(int n, int delta) {
  if (n < 5 || delta < 1 || delta > n - 3)
    throw std::invalid_argument("need n >= 5 and 1 <= delta <= n - 3");
  const Graph host = join(Graph::complete(delta),
                          disjoint_union(Graph::complete(2), Graph::complete(n - delta - 2)));
  return delete_edge(host, delta, 0);  // first K_2 vertex loses one cut neighbor
}

Graph build_tf_exception(const TfExtremalSpec& spec) {
  if (!spec.valid())
    throw std::invalid_argument("invalid bipartite-blocks parameters");
  const int d = spec.delta, k = spec.k, n = spec.n;
  // Vertex layout: P = 0..d-1 (one side of block 1), QX = d..2d-k (rest of
  // block 1's other side), S = 2d-k+1..2d-1, then Y vertices. Block 2's
  // larger side is S plus the first block2_large - (k-1) Y vertices.
  Graph g = Graph::empty(n);
  const int s_lo = 2 * d - k + 1, s_hi = 2 * d;  // S = [s_lo, s_hi)
  const int ya_count = spec.block2_large() - spec.s_size();
  const int ya_hi = 2 * d + ya_count;
  for (int p = 0; p < d; ++p)
    for (int q = d; q < s_hi; ++q) g.add_edge(p, q);  // block 1 = K_{d,d}
  for (int u = s_lo; u < ya_hi; ++u)
    for (int v = ya_hi; v < n; ++v) g.add_edge(u, v);  // block 2
  return g;
}

Graph build_tf_sharpness(int delta) {
  if (delta < 2) throw std::invalid_argument("need delta >= 2");
  const int n = 3 * delta + 3;
  if (n > max_order) throw std::invalid_argument("order exceeds max order");
  // P = 0..delta-1, x0 = delta, S = delta+1..2delta, y0 = 2delta+1, rest YB.
  Graph g = Graph::empty(n);
  const int x0 = delta, y0 = 2 * delta + 1;
  for (int p = 0; p < delta; ++p) {
    g.add_edge(p, x0);
    for (int s = delta + 1; s <= 2 * delta; ++s) g.add_edge(p, s);
  }
  for (int v = 2 * delta + 2; v < n; ++v) {
    g.add_edge(y0, v);
    for (int s = delta + 1; s <= 2 * delta; ++s) g.add_edge(s, v);
  }
  return g;
}

bool matches_join_split(const Graph& g, const FamilyParams& p) {
  if (g.n != p.n) throw std::invalid_argument("order mismatch");
  if (!p.valid() || p.b() < p.a()) return false;
  if (static_cast<long>(g.m) != p.edges()) return false;
  // Degree screen: cut vertices n-1, small clique delta, large clique
  // b - 1 + k - 1.
  std::vector<int> want;
  want.insert(want.end(), p.cut(), p.n - 1);
  want.insert(want.end(), p.a(), p.delta);
  want.insert(want.end(), p.b(), p.b() + p.k - 2);
  std::sort(want.begin(), want.end());
  std::vector<int> have(g.n);
  for (int v = 0; v < g.n; ++v) have[v] = g.degree(v);
  std::sort(have.begin(), have.end());
  if (want != have) return false;
  return are_isomorphic(g, build_join_split(p));
}

bool is_spanning_subgraph_of_join_split(const Graph& g, const FamilyParams& p) {
  if (g.n != p.n) throw std::invalid_argument("order mismatch");
  if (!p.valid()) return false;
  // g fits inside K_{k-1} v (K_a u K_b) iff some a-set (equivalently some
  // b-set) has at most k-1 outside neighbors; the leftover vertices can
  // always be absorbed by the other clique.
  const int a = p.a(), b = p.b();
  int pick_size = a;
  double combos_a = 1, combos_b = 1;
  for (int i = 1; i <= a; ++i) combos_a *= double(p.n - a + i) / i;
  for (int i = 1; i <= b; ++i) combos_b *= double(p.n - b + i) / i;
  if (combos_b < combos_a) pick_size = b;
  if (std::min(combos_a, combos_b) > 1e6)
    throw std::runtime_error("subgraph search infeasible: too many subsets");

  std::vector<int> pick(pick_size);
  for (int i = 0; i < pick_size; ++i) pick[i] = i;
  for (;;) {
    std::uint64_t mask = 0;
    for (int v : pick) mask |= std::uint64_t{1} << v;
    std::uint64_t outside = 0;
    for (int v : pick) outside |= g.adj[v];
    outside &= ~mask;
    if (std::popcount(outside) <= p.k - 1) return true;
    int i = pick_size - 1;
    while (i >= 0 && pick[i] == g.n - pick_size + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < pick_size; ++j) pick[j] = pick[j - 1] + 1;
  }
  return false;
}

namespace {

// Induced subgraph on `mask` must be the complete bipartite graph with side
// sizes {c, d} (as a multiset).
bool induced_complete_bipartite(const Graph& g, std::uint64_t mask, int c, int d) {
  if (std::popcount(mask) != c + d) return false;
  const int v0 = std::countr_zero(mask);
  std::uint64_t side0 = std::uint64_t{1} << v0, side1 = 0;
  std::uint64_t frontier = side0;
  int parity = 0;
  while (frontier) {
    std::uint64_t next = 0;
    std::uint64_t f = frontier;
    while (f) {
      const int v = std::countr_zero(f);
      f &= f - 1;
      next |= g.adj[v] & mask;
    }
    next &= ~(side0 | side1);
    parity ^= 1;
    (parity ? side1 : side0) |= next;
    frontier = next;
  }
  if ((side0 | side1) != mask) return false;  // disconnected within mask
  const int s0 = std::popcount(side0), s1 = std::popcount(side1);
  if (!((s0 == c && s1 == d) || (s0 == d && s1 == c))) return false;
  for (std::uint64_t f = side0; f;) {
    const int v = std::countr_zero(f);
    f &= f - 1;
    if ((g.adj[v] & mask) != side1) return false;
  }
  for (std::uint64_t f = side1; f;) {
    const int v = std::countr_zero(f);
    f &= f - 1;
    if ((g.adj[v] & mask) != side0) return false;
  }
  return true;
}

}  // namespace

bool matches_tf_exception(const Graph& g, const TfExtremalSpec& spec) {
  if (g.n != spec.n) throw std::invalid_argument("order mismatch");
  if (!is_triangle_free(g))
    throw std::invalid_argument("input must be triangle-free");
  if (!is_connected(g)) throw std::invalid_argument("input must be connected");
  if (!spec.valid()) return false;
  if (vertex_connectivity(g) != spec.k - 1) return false;

  // In the family, X induces the connected graph K_{delta, delta-k+1}, so X
  // must be a single component of G - S for a minimum cut S.
  for (const CutCertificate& cert : minimum_cuts(g)) {
    std::uint64_t s_mask = 0;
    for (int v : cert.cut) s_mask |= std::uint64_t{1} << v;
    bool s_independent = true;
    for (int v : cert.cut)
      if (g.adj[v] & s_mask) {
        s_independent = false;
        break;
      }
    if (!s_independent) continue;
    for (const std::vector<int>& part : cert.parts) {
      if (static_cast<int>(part.size()) != spec.x_size()) continue;
      std::uint64_t x_mask = 0;
      for (int v : part) x_mask |= std::uint64_t{1} << v;
      const std::uint64_t y_mask = g.vertex_mask() & ~(x_mask | s_mask);
      if (induced_complete_bipartite(g, x_mask | s_mask, spec.delta, spec.delta) &&
          induced_complete_bipartite(g, y_mask | s_mask, spec.block2_large(),
                                     spec.block2_small()))
        return true;
    }
  }
  return false;
}

bool complement_has_biclique_component(const Graph& g, int a, int b) {
  if (a < 1 || b < 1 || a + b > g.n) return false;
  const Graph cg = complement(g);
  for (const std::uint64_t mask : components(cg))
    if (std::popcount(mask) == a + b &&
        induced_complete_bipartite(cg, mask, a, b))
      return true;
  return false;
}

}  // namespace specconn
