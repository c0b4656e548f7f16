#include <doctest.h>

#include <stdexcept>
#include <string>

#include "specconn/extremal.hpp"
#include "specconn/graph.hpp"
#include "specconn/theorems.hpp"

using namespace specconn;
using doctest::Approx;

namespace {

bool witness_mentions(const TheoremVerdict& v, const char* needle) {
  return v.witness.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("theorem id naming roundtrip") {
  CHECK(all_theorem_ids().size() == theorem_count);
  for (TheoremId id : all_theorem_ids()) {
    const auto back = parse_theorem_id(theorem_name(id));
    REQUIRE(back.has_value());
    CHECK(*back == id);
  }
  CHECK(!parse_theorem_id("T9.9").has_value());
  CHECK(!parse_theorem_id("").has_value());
  CHECK(parse_theorem_id("T2.1a") == TheoremId::T2_1a);
  CHECK(theorem_takes_k(TheoremId::T2_6));
  CHECK(theorem_takes_k(TheoremId::T5_2));
  CHECK(!theorem_takes_k(TheoremId::T3_4));
  CHECK(!theorem_takes_k(TheoremId::T5_1));
}

TEST_CASE("edge-count rule at its boundary family") {
  // K_2 v (K_2 u K_5): m = 26 = bound at k = 3, kappa = 2.
  const TheoremVerdict v = check(TheoremId::T2_1a, build_join_split({9, 3, 3}), 3);
  CHECK(v.applicable);
  CHECK(v.hypothesis);
  CHECK(!v.conclusion);
  CHECK(v.exception);
  CHECK(v.consistent);
  CHECK(v.k == 3);
  CHECK(v.has_margin);
  CHECK(v.margin == 0.0);
  CHECK(v.marginal);
  CHECK(witness_mentions(v, "m=26"));

  // One edge above the family the hypothesis still holds but kappa jumps.
  Graph plus = build_join_split({9, 3, 3});
  plus.add_edge(2, 4);
  const TheoremVerdict vp = check(TheoremId::T2_1a, plus, 3);
  CHECK(vp.hypothesis);
  CHECK(!vp.exception);
  CHECK(vp.consistent);  // conclusion must now be true
  CHECK(vp.conclusion);
}

TEST_CASE("bowtie is the k=2 boundary case") {
  const Graph bow = build_join_split({5, 2, 2});
  const TheoremVerdict v = check(TheoremId::T2_1a, bow, 2);
  CHECK(v.hypothesis);
  CHECK(v.margin == 0.0);
  CHECK(!v.conclusion);  // kappa = 1
  CHECK(v.exception);
  CHECK(v.consistent);
}

TEST_CASE("complete graphs never trip the catalog") {
  for (const TheoremVerdict& v : check_all(Graph::complete(5)))
    CHECK(v.consistent);
  // K_n: kappa = n-1 = delta, super; b() = 0 edge cases everywhere.
  for (const TheoremVerdict& v : check_all(Graph::complete(7), KPolicy::all_k))
    CHECK(v.consistent);
}

TEST_CASE("cycle hypotheses fail cleanly") {
  for (const TheoremVerdict& v : check_all(Graph::cycle(6))) {
    CHECK(v.consistent);
    if (v.id == TheoremId::T3_1a) {
      CHECK(v.applicable);
      CHECK(!v.hypothesis);  // m = 6 < C(4,2) + 3
    }
  }
}

TEST_CASE("spectral rule on its own family") {
  // T2.2: rho >= rho(K_{k-1} v (K_a u K_b)) forces kappa >= k unless equal.
  const Graph fam = build_join_split({9, 3, 3});
  const TheoremVerdict v = check(TheoremId::T2_2, fam, 3);
  CHECK(v.applicable);
  CHECK(v.hypothesis);  // equality
  CHECK(v.marginal);
  CHECK(!v.conclusion);
  CHECK(v.exception);
  CHECK(v.consistent);
}

TEST_CASE("complement rule catches the edgeless-joiner variant") {
  // 2K_1 v (K_2 u K_2): complement is K_{2,2} u K_2, radius 2 = sqrt(ab) at
  // (n, delta, k) = (6, 3, 3). Not the join-split graph, but in the rule's
  // true equality set; the verdict must be consistent via the exception leg.
  const Graph f = join(Graph::empty(2),
                       disjoint_union(Graph::complete(2), Graph::complete(2)));
  const TheoremVerdict v26 = check(TheoremId::T2_6, f, 3);
  CHECK(v26.applicable);
  CHECK(v26.hypothesis);
  CHECK(!v26.conclusion);  // kappa = 2 < 3
  CHECK(v26.exception);
  CHECK(v26.consistent);
  CHECK(witness_mentions(v26, "K_{a,b}"));

  const TheoremVerdict v36 = check(TheoremId::T3_6, f);
  CHECK(v36.hypothesis);
  CHECK(!v36.conclusion);  // kappa = 2 != delta = 3
  CHECK(v36.exception);
  CHECK(v36.consistent);

  // The complete-joiner member also matches via the same leg.
  const TheoremVerdict vfam = check(TheoremId::T2_6, build_join_split({9, 3, 3}), 3);
  CHECK(vfam.hypothesis);
  CHECK(vfam.exception);
  CHECK(vfam.consistent);
}

TEST_CASE("super-kappa edge rule and its deleted-edge exception") {
  const Graph exc = build_super_exception(9, 3);
  const TheoremVerdict v = check(TheoremId::T4_1, exc);
  CHECK(v.applicable);
  CHECK(v.hypothesis);  // m = 27 = C(7,2) + 6
  CHECK(v.margin == 0.0);
  CHECK(!v.conclusion);  // maximally connected but not super
  CHECK(v.exception);
  CHECK(v.consistent);

  // Restoring the deleted edge gives the join itself: super-kappa, no
  // exception needed.
  Graph host = exc;
  host.add_edge(0, 3);  // delta = 3: deleted edge was (delta, 0) pre-shift
  REQUIRE(host.m == 28);
}

TEST_CASE("triangle-free Mantel rule folds equality into the conclusion") {
  const TheoremVerdict eq = check(TheoremId::T5_1, Graph::complete_bipartite(2, 3));
  CHECK(eq.applicable);
  CHECK(eq.hypothesis);
  CHECK(eq.conclusion);  // equality attained by the balanced biclique
  CHECK(eq.exception);
  CHECK(eq.consistent);
  CHECK(eq.marginal);

  const TheoremVerdict lt = check(TheoremId::T5_1, Graph::cycle(5));
  CHECK(lt.hypothesis);
  CHECK(lt.conclusion);  // strict inequality
  CHECK(!lt.exception);

  const TheoremVerdict na = check(TheoremId::T5_1, build_join_split({5, 2, 2}));
  CHECK(!na.applicable);  // not triangle-free
  CHECK(na.consistent);
}

TEST_CASE("triangle-free connectivity rule uses the graph's own delta") {
  // The bipartite-blocks family built for delta=3 has actual minimum degree
  // 2, so at k=2 the checker's bound uses delta=2: 4 + floor(49/4) = 16 > 15
  // = m. Hypothesis false, trivially consistent.
  const Graph fam = build_tf_exception({10, 3, 2});
  const TheoremVerdict v = check(TheoremId::T5_2, fam, 2);
  CHECK(v.applicable);
  CHECK(!v.hypothesis);
  CHECK(v.consistent);

  // A true boundary member: delta matches the parameter.
  const Graph g7 = build_tf_exception({7, 2, 2});
  REQUIRE(min_degree(g7).delta == 2);
  const TheoremVerdict v7 = check(TheoremId::T5_2, g7, 2);
  CHECK(v7.applicable);
  CHECK(v7.hypothesis);  // m = 8 = delta^2 + floor((n-2delta+k-1)^2/4)
  CHECK(v7.margin == 0.0);
  CHECK(!v7.conclusion);  // kappa = 1 < 2
  CHECK(v7.exception);
  CHECK(v7.consistent);
}

TEST_CASE("errors propagate") {
  CHECK_THROWS_AS(check(TheoremId::T2_1a, disjoint_union(Graph::complete(2), Graph::complete(3))),
                  std::invalid_argument);
  CHECK_THROWS_AS(check(TheoremId::T2_1a, Graph::cycle(5), 3),
                  std::invalid_argument);  // k > delta
}

TEST_CASE("check_all respects policy and subset") {
  GraphFacts facts(Graph::complete_bipartite(3, 3));
  const auto all = check_all(facts, KPolicy::all_k);
  const auto only_delta = check_all(facts, KPolicy::delta_only);
  CHECK(all.size() > only_delta.size());  // delta = 3 adds k = 2 variants
  CHECK(only_delta.size() == theorem_count);

  const auto subset = check_all(facts, KPolicy::delta_only,
                                {TheoremId::T5_1, TheoremId::T5_4});
  REQUIRE(subset.size() == 2);
  CHECK(subset[0].id == TheoremId::T5_1);
  CHECK(subset[1].id == TheoremId::T5_4);
  for (const auto& v : subset) CHECK(v.consistent);
}

TEST_CASE("verdict k mirrors the parameter actually used") {
  GraphFacts facts(Graph::complete_bipartite(3, 3));
  CHECK(check(TheoremId::T2_1a, facts, 2).k == 2);
  CHECK(check(TheoremId::T2_1a, facts).k == 3);      // defaults to delta
  CHECK(check(TheoremId::T3_1a, facts).k == 3);      // k = delta rules report delta
  CHECK(check(TheoremId::T5_1, facts).k == 0);       // no parameter
  CHECK(check(TheoremId::T4_2, facts).k == 0);
}
