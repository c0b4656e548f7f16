#include "specconn/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <utility>

#include <json.hpp>

#include "specconn/extremal.hpp"
#include "specconn/graph6.hpp"
#include "specconn/isomorphism.hpp"
#include "specconn/spectral.hpp"

namespace specconn {

namespace {

using nlohmann::ordered_json;

void build_from_mask(int n, std::uint64_t mask, Graph& g) {
  g.n = n;
  g.m = std::popcount(mask);
  g.adj.assign(n, 0);
  int i = 0, j = 1;
  while (mask) {
    const int bit = std::countr_zero(mask);
    mask &= mask - 1;
    while (true) {  // advance (i, j) to pair index `bit`
      const int base = j * (j - 1) / 2;
      if (bit < base + j) {
        i = bit - base;
        break;
      }
      ++j;
    }
    g.adj[i] |= std::uint64_t{1} << j;
    g.adj[j] |= std::uint64_t{1} << i;
  }
}

double round12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

ordered_json verdict_obj(const TheoremVerdict& v) {
  ordered_json j;
  j["theorem"] = theorem_name(v.id);
  j["k"] = v.k;
  j["applicable"] = v.applicable;
  j["hypothesis"] = v.hypothesis;
  j["conclusion"] = v.conclusion;
  j["exception"] = v.exception;
  j["consistent"] = v.consistent;
  j["witness"] = v.witness;
  return j;
}

struct BatchOutput {
  long long graphs = 0;
  long long verdicts = 0;
  std::vector<Inconsistency> inconsistencies;
  std::vector<SharpnessHit> hits;
};

void check_one(const Graph& g, int n, const SweepConfig& cfg,
               const std::string& g6, BatchOutput& out) {
  GraphFacts facts(g, cfg.check.tol);
  const std::vector<TheoremVerdict> verdicts =
      check_all(facts, cfg.k_policy, cfg.theorem_ids, cfg.check);
  ++out.graphs;
  out.verdicts += static_cast<long long>(verdicts.size());
  for (const TheoremVerdict& v : verdicts) {
    if (!v.consistent) out.inconsistencies.push_back({n, g6, v});
    if (v.applicable && v.hypothesis && v.exception && v.has_margin &&
        std::fabs(v.margin) <= 10 * cfg.check.slack)
      out.hits.push_back({n, g6, v.id, v.k, v.margin});
  }
}

}  // namespace

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  if (n < 1 || n > max_order) throw std::invalid_argument("order out of range");
  const int pairs = n * (n - 1) / 2;
  if (pairs < 64 && mask >> pairs)
    throw std::invalid_argument("edge mask has bits beyond the last pair");
  Graph g;
  build_from_mask(n, mask, g);
  return g;
}

void enumerate_connected(
    int n, bool triangle_free,
    const std::function<void(const Graph&, std::uint64_t)>& visit,
    bool allow_order_8) {
  if (n < 1 || n > 8 || (n == 8 && !allow_order_8))
    throw std::invalid_argument(
        n == 8 ? "order 8 enumeration needs the explicit override"
               : "enumeration supports orders 1 through 7 (8 with override)");
  const int pairs = n * (n - 1) / 2;
  Graph g;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    if (std::popcount(mask) < n - 1) continue;
    build_from_mask(n, mask, g);
    if (!is_connected(g)) continue;
    if (triangle_free && !is_triangle_free(g)) continue;
    visit(g, mask);
  }
}

std::string canonical_graph6(const Graph& g) {
  if (g.n > 7)
    throw std::invalid_argument("canonical form supports orders up to 7");
  std::vector<int> perm(g.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  Graph h = Graph::empty(g.n);
  h.m = g.m;
  do {
    for (int v = 0; v < g.n; ++v) {
      std::uint64_t row = 0;
      std::uint64_t a = g.adj[v];
      while (a) {
        row |= std::uint64_t{1} << perm[std::countr_zero(a)];
        a &= a - 1;
      }
      h.adj[perm[v]] = row;
    }
    std::string enc = graph6_encode(h);
    if (best.empty() || enc < best) best = std::move(enc);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Graph> enumerate_connected_dedup(int n, bool triangle_free) {
  if (n > 7)
    throw std::invalid_argument("dedup enumeration supports orders up to 7");
  // Bucket by cheap invariants, then settle membership with isomorphism
  // tests against the bucket's representatives.
  std::map<std::pair<int, std::vector<int>>, std::vector<Graph>> buckets;
  enumerate_connected(n, triangle_free, [&](const Graph& g, std::uint64_t) {
    std::vector<int> degs(g.n);
    for (int v = 0; v < g.n; ++v) degs[v] = g.degree(v);
    std::sort(degs.begin(), degs.end());
    std::vector<Graph>& reps = buckets[{g.m, std::move(degs)}];
    for (const Graph& r : reps)
      if (are_isomorphic(g, r)) return;
    reps.push_back(g);
  });
  std::vector<std::string> canon;
  for (const auto& [key, reps] : buckets)
    for (const Graph& r : reps) canon.push_back(canonical_graph6(r));
  std::sort(canon.begin(), canon.end());
  std::vector<Graph> out;
  out.reserve(canon.size());
  for (const std::string& s : canon) out.push_back(graph6_decode(s));
  return out;
}

SweepReport run_sweep(const SweepConfig& cfg) {
  if (cfg.n_min < 1 || cfg.n_min > cfg.n_max)
    throw std::invalid_argument("bad order range");
  if (cfg.n_max > 8 || (cfg.n_max == 8 && !cfg.allow_order_8))
    throw std::invalid_argument(
        cfg.n_max == 8 ? "order 8 sweeps need the explicit override"
                       : "sweeps support orders up to 7 (8 with override)");
  if (cfg.workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (cfg.dedup == DedupMode::iso_canonical && cfg.n_max > 7)
    throw std::invalid_argument("dedup sweeps support orders up to 7");

  const auto start = std::chrono::steady_clock::now();
  SweepReport report;

  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    std::vector<BatchOutput> results;
    auto run_batches = [&](long long total, auto&& process_batch) {
      const long long batch_size = 1 << 14;
      const long long nbatches = (total + batch_size - 1) / batch_size;
      results.assign(static_cast<std::size_t>(nbatches), {});
      std::atomic<long long> next{0};
      auto worker = [&] {
        long long b;
        while ((b = next.fetch_add(1)) < nbatches)
          process_batch(b * batch_size, std::min(total, (b + 1) * batch_size),
                        results[static_cast<std::size_t>(b)]);
      };
      const int threads =
          static_cast<int>(std::min<long long>(cfg.workers, nbatches));
      if (threads <= 1) {
        worker();
      } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
      }
    };

    if (cfg.dedup == DedupMode::iso_canonical) {
      const std::vector<Graph> classes =
          enumerate_connected_dedup(n, cfg.triangle_free);
      run_batches(static_cast<long long>(classes.size()),
                  [&](long long lo, long long hi, BatchOutput& out) {
                    for (long long i = lo; i < hi; ++i) {
                      const Graph& g = classes[static_cast<std::size_t>(i)];
                      check_one(g, n, cfg, graph6_encode(g), out);
                    }
                  });
    } else {
      const int pairs = n * (n - 1) / 2;
      run_batches(std::int64_t{1} << pairs,
                  [&](long long lo, long long hi, BatchOutput& out) {
                    Graph scratch;
                    for (long long mask = lo; mask < hi; ++mask) {
                      if (std::popcount(static_cast<std::uint64_t>(mask)) < n - 1)
                        continue;
                      build_from_mask(n, static_cast<std::uint64_t>(mask), scratch);
                      if (!is_connected(scratch)) continue;
                      if (cfg.triangle_free && !is_triangle_free(scratch)) continue;
                      check_one(scratch, n, cfg, graph6_encode(scratch), out);
                    }
                  });
    }

    for (BatchOutput& out : results) {
      report.graphs_checked += out.graphs;
      report.verdicts_checked += out.verdicts;
      std::move(out.inconsistencies.begin(), out.inconsistencies.end(),
                std::back_inserter(report.inconsistencies));
      std::move(out.hits.begin(), out.hits.end(),
                std::back_inserter(report.sharpness_hits));
    }
  }

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

std::vector<SharpnessRow> sharpness_scan(TheoremId id, int delta_min,
                                         int delta_max, double tol) {
  if (delta_min < 2 || delta_min > delta_max)
    throw std::invalid_argument("bad delta range (need 2 <= min <= max)");
  std::vector<SharpnessRow> rows;
  if (id == TheoremId::T3_4) {
    for (int delta = delta_min; delta <= delta_max; ++delta) {
      const int n = delta * delta - 2 * delta + 6;
      if (n > max_order)
        throw std::invalid_argument("delta too large: order would exceed 62");
      const Graph fam = build_join_split({n, delta, delta});
      SharpnessRow r;
      r.id = id, r.n = n, r.delta = delta, r.k = delta;
      r.bound = n - 3;
      r.observed = spectral_radius(fam, tol).rho;
      r.margin = r.observed - r.bound;
      r.conclusion = is_maximally_connected(fam);
      rows.push_back(r);
    }
  } else if (id == TheoremId::T5_4) {
    for (int delta = delta_min; delta <= delta_max; ++delta) {
      const int n = 3 * delta + 3;
      if (n > max_order)
        throw std::invalid_argument("delta too large: order would exceed 62");
      const Graph fam = build_tf_sharpness(delta);
      SharpnessRow r;
      r.id = id, r.n = n, r.delta = delta, r.k = delta;
      const long t = n - delta;
      r.bound = double(delta) * delta + double(t * t / 4);
      r.observed = fam.m;
      r.margin = r.observed - r.bound;
      r.conclusion = is_super_kappa(fam);
      rows.push_back(r);
    }
  } else {
    throw std::invalid_argument("sharpness scan covers rules T3.4 and T5.4");
  }
  return rows;
}

std::string verdict_json_line(const TheoremVerdict& v) {
  return verdict_obj(v).dump();
}

std::string sweep_report_json(const SweepReport& report, const SweepConfig& cfg) {
  ordered_json j;
  ordered_json config;
  config["n_min"] = cfg.n_min;
  config["n_max"] = cfg.n_max;
  config["triangle_free"] = cfg.triangle_free;
  ordered_json names = ordered_json::array();
  for (TheoremId id :
       cfg.theorem_ids.empty() ? all_theorem_ids() : cfg.theorem_ids)
    names.push_back(theorem_name(id));
  config["theorems"] = std::move(names);
  config["k_policy"] = cfg.k_policy == KPolicy::all_k ? "all-k" : "delta-only";
  config["dedup"] = cfg.dedup == DedupMode::iso_canonical ? "iso-canonical" : "none";
  config["tol"] = round12(cfg.check.tol);
  config["slack"] = round12(cfg.check.slack);
  j["config"] = std::move(config);
  j["graphs_checked"] = report.graphs_checked;
  j["verdicts_checked"] = report.verdicts_checked;
  ordered_json incs = ordered_json::array();
  for (const Inconsistency& inc : report.inconsistencies) {
    ordered_json e;
    e["n"] = inc.n;
    e["graph6"] = inc.graph6;
    e["verdict"] = verdict_obj(inc.verdict);
    incs.push_back(std::move(e));
  }
  j["inconsistencies"] = std::move(incs);
  ordered_json hits = ordered_json::array();
  for (const SharpnessHit& h : report.sharpness_hits) {
    ordered_json e;
    e["n"] = h.n;
    e["graph6"] = h.graph6;
    e["theorem"] = theorem_name(h.id);
    e["k"] = h.k;
    e["margin"] = round12(h.margin);
    hits.push_back(std::move(e));
  }
  j["sharpness_hits"] = std::move(hits);
  return j.dump(2) + "\n";
}

std::string sweep_summary_tsv(const SweepReport& report) {
  std::string out =
      "graphs_checked\tverdicts_checked\tinconsistencies\tsharpness_hits\n";
  out += std::to_string(report.graphs_checked) + "\t" +
         std::to_string(report.verdicts_checked) + "\t" +
         std::to_string(report.inconsistencies.size()) + "\t" +
         std::to_string(report.sharpness_hits.size()) + "\n";
  return out;
}

std::string sharpness_tsv(const std::vector<SharpnessRow>& rows) {
  std::string out = "id\tn\tdelta\tk\tbound\tobserved\tmargin\tconclusion\n";
  char buf[160];
  for (const SharpnessRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%s\t%d\t%d\t%d\t%.12g\t%.12g\t%.12g\t%s\n",
                  theorem_name(r.id), r.n, r.delta, r.k, r.bound, r.observed,
                  r.margin, r.conclusion ? "true" : "false");
    out += buf;
  }
  return out;
}

}  // namespace specconn
