#pragma once
// Exact vertex connectivity and minimum vertex cuts. kappa comes from
// Menger's theorem: unit-capacity max-flow on the vertex-split digraph,
// minimized over nonadjacent pairs. Complete graphs have kappa = n - 1 and
// no vertex cut.

#include <vector>

#include "specconn/graph.hpp"

namespace specconn {

struct CutCertificate {
  std::vector<int> cut;                 // the removed vertices, ascending
  int kappa = 0;                        // |cut|
  std::vector<std::vector<int>> parts;  // leftover components, size ascending
  int p = 0;                            // number of parts (>= 2)
};

struct ConnectivityReport {
  int kappa = 0;
  std::vector<CutCertificate> min_cuts;  // empty for complete graphs
  bool maximally_connected = false;      // kappa == min degree
  bool super_kappa = false;  // every minimum cut isolates a minimum-degree vertex
};

// Throws std::invalid_argument on disconnected input.
int vertex_connectivity(const Graph& g);

// All vertex cuts of minimum size, in lexicographic order of the cut set.
// Throws std::invalid_argument for complete graphs (no cut exists) and
// std::runtime_error when C(n, kappa) exceeds the enumeration cap (10^7).
std::vector<CutCertificate> minimum_cuts(const Graph& g);

bool is_k_connected(const Graph& g, int k);  // kappa(g) >= k; k <= 0 is always true
bool is_maximally_connected(const Graph& g);
// Complete graphs and all connected graphs of order <= 4 count as super-kappa.
bool is_super_kappa(const Graph& g);

ConnectivityReport analyze_connectivity(const Graph& g);

}  // namespace specconn
