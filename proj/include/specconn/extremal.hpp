#pragma once
// The extremal graphs that sit on the boundary of every sufficient
// condition in this library, plus recognizers for them.
//
//   join-split family   K_{k-1} v (K_{delta-k+2} u K_{n-delta-1})
//     layout: cut vertices 0..k-2, small clique next, large clique last.
//     It has minimum degree delta (when b >= a) and connectivity k - 1.
//
//   near-boundary super family   K_delta v (K_2 u K_{n-delta-2}) minus one
//     edge between the first cut vertex and the first K_2 vertex.
//
//   bipartite-blocks family (triangle-free): X u S u Y with |X| = 2delta-k+1,
//     |S| = k-1 independent, |Y| = n-2delta; G[X u S] = K_{delta,delta} and
//     G[Y u S] = complete bipartite on n-2delta+k-1 vertices with balanced
//     sides, S inside the larger side. kappa = k - 1.
//
//   bipartite sharpness family: for minimum degree delta, the graph on
//     n = 3delta+3 vertices built from blocks K_{delta,delta+1} and
//     K_{delta+1,delta+1} overlapping in an independent set of size delta;
//     it has one edge fewer than the super-kappa edge bound yet fails it.

#include <vector>

#include "specconn/graph.hpp"

namespace specconn {

struct FamilyParams {
  int n = 0, delta = 0, k = 0;

  int a() const { return delta - k + 2; }    // small clique
  int b() const { return n - delta - 1; }    // large clique
  int cut() const { return k - 1; }
  long edges() const {
    return static_cast<long>(n) * (n - 1) / 2 - static_cast<long>(a()) * b();
  }
  bool valid() const {
    return 2 <= k && k <= delta && delta <= n - 3 && n <= max_order;
  }
};

struct TfExtremalSpec {
  int n = 0, delta = 0, k = 0;

  int x_size() const { return 2 * delta - k + 1; }
  int s_size() const { return k - 1; }
  int y_size() const { return n - 2 * delta; }
  int block2_total() const { return n - 2 * delta + k - 1; }  // Y plus S
  int block2_large() const { return (block2_total() + 1) / 2; }
  int block2_small() const { return block2_total() / 2; }
  bool valid() const {
    return 2 <= k && k <= delta && y_size() >= 1 && block2_small() >= 1 &&
           s_size() <= block2_large() && n <= max_order;
  }
};

// Requires p.valid() and p.b() >= p.a() (otherwise the result would not have
// minimum degree p.delta); throws std::invalid_argument.
Graph build_join_split(const FamilyParams& p);

// Requires n >= 5 and 1 <= delta <= n - 3.
Graph build_super_exception(int n, int delta);

Graph build_tf_exception(const TfExtremalSpec& spec);

// Requires delta >= 2 (order 3*delta + 3 must stay within max_order).
Graph build_tf_sharpness(int delta);

// Isomorphism test against build_join_split(p); false when p cannot be
// built. Throws std::invalid_argument when g.n != p.n.
bool matches_join_split(const Graph& g, const FamilyParams& p);

// Whether g is a spanning subgraph of the join-split family up to
// relabeling, i.e. some vertex set A with |A| = p.a() has at most p.k - 1
// neighbors outside A. Enumerates the smaller of C(n, a) and C(n, b)
// subsets; throws std::runtime_error beyond 10^6 subsets.
bool is_spanning_subgraph_of_join_split(const Graph& g, const FamilyParams& p);

// Isomorphism test against the bipartite-blocks family with the given
// parameters, via its structural characterization (no backtracking).
// Requires g triangle-free and connected; throws std::invalid_argument
// otherwise or when g.n != spec.n.
bool matches_tf_exception(const Graph& g, const TfExtremalSpec& spec);

// Whether the complement of g has a connected component that is exactly
// K_{a,b}. Then g = F v (K_a u K_b) for some graph F on the remaining
// vertices, so g has a cutset of size n - a - b. Together with
// rho(complement) <= sqrt(ab) this is the full equality set of the
// complement-radius rules; the join-split family is the member with F
// complete (complement remainder edgeless).
bool complement_has_biclique_component(const Graph& g, int a, int b);

}  // namespace specconn
