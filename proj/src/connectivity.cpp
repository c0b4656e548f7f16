#include "specconn/connectivity.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace specconn {

namespace {

bool complete_graph(const Graph& g) { return g.m == g.n * (g.n - 1) / 2; }

// Max number of internally vertex-disjoint s-t paths for nonadjacent s, t,
// via augmenting paths on the vertex-split digraph: node 2v is "v in", node
// 2v+1 is "v out", arc in->out has capacity 1 (infinite for s and t), each
// edge uv gives arcs u_out->v_in and v_out->u_in of capacity 1. Residual
// arcs are tracked in an explicit capacity map over node pairs. Stops early
// once the flow reaches `cutoff` (the caller's best kappa so far cannot
// improve past it).
int disjoint_paths(const Graph& g, int s, int t, int cutoff) {
  const int nodes = 2 * g.n;
  std::vector<std::int8_t> cap(static_cast<std::size_t>(nodes) * nodes, 0);
  auto at = [nodes](int a, int b) -> std::size_t {
    return static_cast<std::size_t>(a) * nodes + b;
  };
  for (int v = 0; v < g.n; ++v) {
    cap[at(2 * v, 2 * v + 1)] = (v == s || v == t) ? 2 : 1;  // 2 acts as infinity
    std::uint64_t a = g.adj[v];
    while (a) {
      const int u = std::countr_zero(a);
      a &= a - 1;
      cap[at(2 * v + 1, 2 * u)] = 1;
    }
  }
  int flow = 0;
  std::vector<int> prev(nodes);
  while (flow < cutoff) {
    std::fill(prev.begin(), prev.end(), -1);
    std::vector<int> queue{2 * s + 1};
    prev[2 * s + 1] = 2 * s + 1;
    for (std::size_t qi = 0; qi < queue.size() && prev[2 * t] < 0; ++qi) {
      const int a = queue[qi];
      for (int b = 0; b < nodes; ++b)
        if (prev[b] < 0 && cap[at(a, b)] > 0) {
          prev[b] = a;
          queue.push_back(b);
        }
    }
    if (prev[2 * t] < 0) break;
    for (int b = 2 * t; b != 2 * s + 1; b = prev[b]) {
      --cap[at(prev[b], b)];
      ++cap[at(b, prev[b])];
    }
    ++flow;
  }
  return flow;
}

void append_cut_if_separating(const Graph& g, std::uint64_t cut_mask, int kappa,
                              std::vector<CutCertificate>& out) {
  Graph h = g;
  h.m = 0;  // edge count not used below
  std::uint64_t keep = g.vertex_mask() & ~cut_mask;
  for (int v = 0; v < g.n; ++v)
    h.adj[v] = (cut_mask >> v & 1) ? 0 : g.adj[v] & keep;
  // Components of g - cut: reuse the public helper on the masked graph by
  // scanning `keep` directly.
  std::vector<std::uint64_t> comps;
  std::uint64_t rest = keep;
  while (rest) {
    const int v0 = std::countr_zero(rest);
    std::uint64_t seen = std::uint64_t{1} << v0;
    std::uint64_t frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      std::uint64_t f = frontier;
      while (f) {
        const int v = std::countr_zero(f);
        f &= f - 1;
        next |= h.adj[v];
      }
      frontier = next & ~seen;
      seen |= frontier;
    }
    comps.push_back(seen);
    rest &= ~seen;
  }
  if (comps.size() < 2) return;
  std::sort(comps.begin(), comps.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return std::countr_zero(a) < std::countr_zero(b);
  });
  CutCertificate cert;
  cert.cut = mask_to_vertices(cut_mask);
  cert.kappa = kappa;
  for (std::uint64_t c : comps) cert.parts.push_back(mask_to_vertices(c));
  cert.p = static_cast<int>(cert.parts.size());
  out.push_back(std::move(cert));
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("graph is disconnected");
  if (complete_graph(g)) return g.n - 1;
  int best = g.n - 1;
  for (int s = 0; s < g.n; ++s)
    for (int t = s + 1; t < g.n; ++t)
      if (!g.has_edge(s, t)) best = std::min(best, disjoint_paths(g, s, t, best));
  return best;
}

std::vector<CutCertificate> minimum_cuts(const Graph& g) {
  const int kappa = vertex_connectivity(g);
  if (complete_graph(g))
    throw std::invalid_argument("complete graph has no vertex cut");
  // C(n, kappa) enumeration guard.
  double combos = 1;
  for (int i = 1; i <= kappa; ++i) combos *= double(g.n - kappa + i) / i;
  if (combos > 1e7)
    throw std::runtime_error("minimum cut enumeration infeasible: C(n, kappa) > 10^7");

  std::vector<CutCertificate> cuts;
  // Lexicographically ordered kappa-subsets of the vertex set.
  std::vector<int> pick(kappa);
  for (int i = 0; i < kappa; ++i) pick[i] = i;
  for (;;) {
    std::uint64_t mask = 0;
    for (int v : pick) mask |= std::uint64_t{1} << v;
    append_cut_if_separating(g, mask, kappa, cuts);
    int i = kappa - 1;
    while (i >= 0 && pick[i] == g.n - kappa + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < kappa; ++j) pick[j] = pick[j - 1] + 1;
  }
  return cuts;
}

bool is_k_connected(const Graph& g, int k) {
  if (k <= 0) return true;
  return vertex_connectivity(g) >= k;
}

bool is_maximally_connected(const Graph& g) {
  return vertex_connectivity(g) == min_degree(g).delta;
}

bool is_super_kappa(const Graph& g) {
  return analyze_connectivity(g).super_kappa;
}

ConnectivityReport analyze_connectivity(const Graph& g) {
  ConnectivityReport r;
  r.kappa = vertex_connectivity(g);
  const int delta = min_degree(g).delta;
  r.maximally_connected = r.kappa == delta;
  if (complete_graph(g) || g.n <= 4) {
    if (!complete_graph(g)) r.min_cuts = minimum_cuts(g);
    r.super_kappa = true;  // by convention for complete graphs and order <= 4
    return r;
  }
  r.min_cuts = minimum_cuts(g);
  if (r.kappa != delta) return r;
  r.super_kappa = true;
  for (const CutCertificate& c : r.min_cuts)
    if (c.parts.front().size() != 1) {
      r.super_kappa = false;
      break;
    }
  return r;
}

}  // namespace specconn
