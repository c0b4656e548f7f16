#pragma once
// Exhaustive verification over all small connected graphs. Labeled graphs
// of order n are enumerated as edge subsets; every verdict from the rule
// catalog is checked for consistency, boundary (sharp) cases are collected,
// and the whole report serializes deterministically: identical
// configurations produce byte-identical JSON regardless of worker count.
// Wall time is kept out of the serialized report for that reason.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "specconn/graph.hpp"
#include "specconn/theorems.hpp"

namespace specconn {

// Edge bit i<j at index j(j-1)/2 + i, the same pair order graph6 uses.
Graph graph_from_edge_mask(int n, std::uint64_t mask);

// Streams every connected labeled graph of order n in edge-mask order
// (triangle-free ones only when tf is set). 1 <= n <= 7 by default; order 8
// only with the explicit override; larger orders are refused.
void enumerate_connected(
    int n, bool triangle_free,
    const std::function<void(const Graph&, std::uint64_t)>& visit,
    bool allow_order_8 = false);

// Lexicographically smallest graph6 string over all relabelings (n <= 7).
std::string canonical_graph6(const Graph& g);

// One representative per isomorphism class, each in canonical labeling,
// sorted by canonical graph6 string (n <= 7).
std::vector<Graph> enumerate_connected_dedup(int n, bool triangle_free);

enum class DedupMode { none, iso_canonical };

struct SweepConfig {
  int n_min = 5, n_max = 7;
  bool triangle_free = false;
  std::vector<TheoremId> theorem_ids;  // empty = the full catalog
  KPolicy k_policy = KPolicy::all_k;
  int workers = 1;
  DedupMode dedup = DedupMode::none;
  bool allow_order_8 = false;
  CheckOptions check;
};

struct Inconsistency {
  int n = 0;
  std::string graph6;
  TheoremVerdict verdict;
};

// A verdict whose hypothesis sits exactly on its boundary while the named
// exception family is realized: evidence the bound cannot be weakened.
struct SharpnessHit {
  int n = 0;
  std::string graph6;
  TheoremId id{};
  int k = 0;
  double margin = 0;
};

struct SweepReport {
  long long graphs_checked = 0;
  long long verdicts_checked = 0;
  std::vector<Inconsistency> inconsistencies;
  std::vector<SharpnessHit> sharpness_hits;
  double wall_seconds = 0;  // informational only; never serialized
};

SweepReport run_sweep(const SweepConfig& cfg);

struct SharpnessRow {
  TheoremId id{};
  int n = 0, delta = 0, k = 0;
  double bound = 0, observed = 0, margin = 0;
  bool conclusion = false;
};

// Witness families pinned to the order thresholds: for T3.4 the join-split
// family at n = delta^2 - 2delta + 6 (one below the rule's threshold) has
// spectral radius above n - 3 yet kappa < delta; for T5.4 the bipartite
// sharpness family at n = 3delta + 3 sits one edge below the bound and is
// not super-kappa.
std::vector<SharpnessRow> sharpness_scan(TheoremId id, int delta_min,
                                         int delta_max,
                                         double tol = default_rho_tol);

std::string verdict_json_line(const TheoremVerdict& v);  // one-line JSON object
std::string sweep_report_json(const SweepReport& report, const SweepConfig& cfg);
std::string sweep_summary_tsv(const SweepReport& report);
std::string sharpness_tsv(const std::vector<SharpnessRow>& rows);

}  // namespace specconn
