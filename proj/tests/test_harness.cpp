#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "specconn/extremal.hpp"
#include "specconn/graph.hpp"
#include "specconn/graph6.hpp"
#include "specconn/harness.hpp"
#include "specconn/isomorphism.hpp"

using namespace specconn;
using doctest::Approx;

TEST_CASE("graph_from_edge_mask") {
  CHECK(graph_from_edge_mask(3, 0b011).m == 2);  // edges (0,1), (0,2)
  CHECK(graph_from_edge_mask(4, 0b111111) == Graph::complete(4));
  CHECK(graph_from_edge_mask(2, 0).m == 0);
  CHECK_THROWS_AS(graph_from_edge_mask(3, 0b1000), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_edge_mask(0, 0), std::invalid_argument);
}

TEST_CASE("labeled connected counts") {
  const long long expected[] = {0, 1, 1, 4, 38, 728, 26704};
  for (int n = 1; n <= 6; ++n) {
    long long count = 0;
    enumerate_connected(n, false, [&](const Graph&, std::uint64_t) { ++count; });
    CHECK(count == expected[n]);
  }
}

TEST_CASE("labeled triangle-free connected counts") {
  const long long expected[] = {0, 1, 1, 3, 19, 207, 3571};
  for (int n = 1; n <= 6; ++n) {
    long long count = 0;
    enumerate_connected(n, true, [&](const Graph& g, std::uint64_t) {
      CHECK(is_triangle_free(g));
      ++count;
    });
    CHECK(count == expected[n]);
  }
}

TEST_CASE("enumeration refusals") {
  auto nop = [](const Graph&, std::uint64_t) {};
  CHECK_THROWS_AS(enumerate_connected(0, false, nop), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_connected(8, false, nop), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_connected(9, false, nop, true), std::invalid_argument);
}

TEST_CASE("isomorphism-class enumeration") {
  CHECK(enumerate_connected_dedup(4, false).size() == 6);
  CHECK(enumerate_connected_dedup(5, false).size() == 21);
  CHECK(enumerate_connected_dedup(6, false).size() == 112);

  const auto tf5 = enumerate_connected_dedup(5, true);
  CHECK(tf5.size() == 6);
  // The unique 6-edge member is the balanced biclique.
  int six_edges = 0;
  for (const Graph& g : tf5)
    if (g.m == 6) {
      ++six_edges;
      CHECK(are_isomorphic(g, Graph::complete_bipartite(2, 3)));
    }
  CHECK(six_edges == 1);

  // Representatives are canonically labeled and strictly ordered.
  const auto reps = enumerate_connected_dedup(5, false);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    CHECK(canonical_graph6(reps[i]) == graph6_encode(reps[i]));
    if (i) CHECK(graph6_encode(reps[i - 1]) < graph6_encode(reps[i]));
  }
}

TEST_CASE("canonical form is relabeling-invariant") {
  const Graph bow = build_join_split({5, 2, 2});
  Graph moved = Graph::empty(5);
  const int perm[] = {3, 0, 4, 1, 2};
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v)
      if (bow.has_edge(u, v)) moved.add_edge(perm[u], perm[v]);
  CHECK(canonical_graph6(bow) == canonical_graph6(moved));
  CHECK(canonical_graph6(bow) != canonical_graph6(Graph::cycle(5)));
}

TEST_CASE("sweep certifies small orders with zero inconsistencies") {
  SweepConfig cfg;
  cfg.n_min = 5;
  cfg.n_max = 6;
  const SweepReport r = run_sweep(cfg);
  CHECK(r.graphs_checked == 728 + 26704);
  CHECK(r.inconsistencies.empty());
  CHECK(r.verdicts_checked > 20 * r.graphs_checked);  // all-k adds verdicts
  CHECK(!r.sharpness_hits.empty());
  CHECK(r.wall_seconds > 0);
}

TEST_CASE("sweep is byte-deterministic across worker counts") {
  SweepConfig cfg;
  cfg.n_min = 5;
  cfg.n_max = 5;
  cfg.workers = 1;
  const SweepReport r1 = run_sweep(cfg);
  cfg.workers = 3;
  const SweepReport r3 = run_sweep(cfg);
  CHECK(sweep_report_json(r1, cfg) == sweep_report_json(r3, cfg));
  CHECK(sweep_summary_tsv(r1) == sweep_summary_tsv(r3));
}

TEST_CASE("triangle-free sweep finds the Mantel boundary copies") {
  SweepConfig cfg;
  cfg.n_min = 5;
  cfg.n_max = 6;
  cfg.triangle_free = true;
  cfg.theorem_ids = {TheoremId::T5_1};
  const SweepReport r = run_sweep(cfg);
  CHECK(r.inconsistencies.empty());
  // Labeled copies of the balanced biclique: 10 at n=5 and 10 at n=6.
  long long hits5 = 0, hits6 = 0;
  for (const SharpnessHit& h : r.sharpness_hits) {
    REQUIRE(h.id == TheoremId::T5_1);
    CHECK(h.margin == 0.0);
    (h.n == 5 ? hits5 : hits6) += 1;
    const Graph g = graph6_decode(h.graph6);
    const int half = h.n / 2;
    CHECK(are_isomorphic(g, Graph::complete_bipartite(h.n - half, half)));
  }
  CHECK(hits5 == 10);
  CHECK(hits6 == 10);
}

TEST_CASE("dedup sweep visits one representative per class") {
  SweepConfig cfg;
  cfg.n_min = 5;
  cfg.n_max = 6;
  cfg.dedup = DedupMode::iso_canonical;
  const SweepReport r = run_sweep(cfg);
  CHECK(r.graphs_checked == 21 + 112);
  CHECK(r.inconsistencies.empty());
}

TEST_CASE("sweep config validation") {
  SweepConfig cfg;
  cfg.n_min = 6;
  cfg.n_max = 5;
  CHECK_THROWS_AS(run_sweep(cfg), std::invalid_argument);
  cfg = {};
  cfg.n_max = 9;
  CHECK_THROWS_AS(run_sweep(cfg), std::invalid_argument);
  cfg = {};
  cfg.n_max = 8;  // needs the explicit override
  CHECK_THROWS_AS(run_sweep(cfg), std::invalid_argument);
  cfg = {};
  cfg.workers = 0;
  CHECK_THROWS_AS(run_sweep(cfg), std::invalid_argument);
  cfg = {};
  cfg.n_max = 8;
  cfg.dedup = DedupMode::iso_canonical;  // dedup is capped at order 7
  cfg.allow_order_8 = true;
  CHECK_THROWS_AS(run_sweep(cfg), std::invalid_argument);
}

TEST_CASE("empty theorem subset means the full catalog") {
  SweepConfig cfg;
  cfg.n_min = 5;
  cfg.n_max = 5;
  cfg.theorem_ids = {TheoremId::T5_4};
  const SweepReport one = run_sweep(cfg);
  CHECK(one.verdicts_checked == 728);
  cfg.theorem_ids.clear();
  const SweepReport full = run_sweep(cfg);
  CHECK(full.verdicts_checked == 14749);
}

TEST_CASE("sharpness scan freezes the boundary families") {
  const auto t34 = sharpness_scan(TheoremId::T3_4, 3, 5);
  REQUIRE(t34.size() == 3);
  const double excess[] = {0.2360679775, 0.1533263022, 0.1004313479};
  for (int i = 0; i < 3; ++i) {
    CHECK(t34[i].delta == i + 3);
    CHECK(t34[i].n == (i + 3) * (i + 3) - 2 * (i + 3) + 6);
    CHECK(t34[i].bound == t34[i].n - 3.0);
    CHECK(t34[i].margin == Approx(excess[i]).epsilon(1e-8));
    CHECK(t34[i].margin > 0);  // radius above the bound...
    CHECK(!t34[i].conclusion); // ...yet not maximally connected
  }

  const auto t54 = sharpness_scan(TheoremId::T5_4, 2, 4);
  REQUIRE(t54.size() == 3);
  for (const SharpnessRow& row : t54) {
    CHECK(row.n == 3 * row.delta + 3);
    CHECK(row.observed == row.bound - 1);  // one edge short of the bound
    CHECK(row.margin == -1.0);
    CHECK(!row.conclusion);  // and indeed not super-kappa
  }
  CHECK(t54[0].bound == 16.0);
  CHECK(t54[1].bound == 29.0);
  CHECK(t54[2].bound == 46.0);

  CHECK_THROWS_AS(sharpness_scan(TheoremId::T2_1a, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(sharpness_scan(TheoremId::T3_4, 4, 3), std::invalid_argument);
  CHECK_THROWS_AS(sharpness_scan(TheoremId::T3_4, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(sharpness_scan(TheoremId::T3_4, 3, 9), std::invalid_argument);  // n = 69 > 62
}

TEST_CASE("verdict json schema") {
  const TheoremVerdict v = check(TheoremId::T5_1, Graph::complete_bipartite(2, 3));
  const std::string line = verdict_json_line(v);
  CHECK(line.find("\"theorem\":\"T5.1\"") != std::string::npos);
  CHECK(line.find("\"k\":0") != std::string::npos);
  CHECK(line.find("\"applicable\":true") != std::string::npos);
  CHECK(line.find("\"hypothesis\":true") != std::string::npos);
  CHECK(line.find("\"conclusion\":true") != std::string::npos);
  CHECK(line.find("\"exception\":true") != std::string::npos);
  CHECK(line.find("\"consistent\":true") != std::string::npos);
  CHECK(line.find("\"witness\":") != std::string::npos);
  CHECK(line.find('\n') == std::string::npos);  // single line
}

TEST_CASE("report serialization is stable and wall-time free") {
  SweepConfig cfg;
  cfg.n_min = 5;
  cfg.n_max = 5;
  cfg.triangle_free = true;
  cfg.theorem_ids = {TheoremId::T5_1};
  SweepReport r = run_sweep(cfg);
  const std::string a = sweep_report_json(r, cfg);
  r.wall_seconds = 99.0;  // must not affect bytes
  const std::string b = sweep_report_json(r, cfg);
  CHECK(a == b);
  CHECK(a.back() == '\n');
  CHECK(a.find("wall") == std::string::npos);
  CHECK(a.find("workers") == std::string::npos);
  CHECK(a.find("\"triangle_free\": true") != std::string::npos);
  CHECK(a.find("\"theorems\": [") != std::string::npos);
  CHECK(a.find("\"T5.1\"") != std::string::npos);

  const std::string tsv = sweep_summary_tsv(r);
  CHECK(tsv.find("graphs_checked\tverdicts_checked\tinconsistencies\tsharpness_hits\n") == 0);
  CHECK(tsv.find("207\t") != std::string::npos);

  const std::string sharp = sharpness_tsv(sharpness_scan(TheoremId::T5_4, 2, 2));
  CHECK(sharp.find("id\tn\tdelta\tk\tbound\tobserved\tmargin\tconclusion\n") == 0);
  CHECK(sharp.find("T5.4\t9\t2\t2\t16\t15\t-1\tfalse\n") != std::string::npos);
}
