#include "specconn/theorems.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>

#include "specconn/extremal.hpp"
#include "specconn/isomorphism.hpp"

namespace specconn {

namespace {

constexpr std::pair<TheoremId, const char*> kNames[theorem_count] = {
    {TheoremId::T2_1a, "T2.1a"}, {TheoremId::T2_1b, "T2.1b"},
    {TheoremId::T2_2, "T2.2"},   {TheoremId::T2_3, "T2.3"},
    {TheoremId::T2_5, "T2.5"},   {TheoremId::T2_6, "T2.6"},
    {TheoremId::T3_1a, "T3.1a"}, {TheoremId::T3_1b, "T3.1b"},
    {TheoremId::T3_2, "T3.2"},   {TheoremId::T3_3, "T3.3"},
    {TheoremId::T3_4, "T3.4"},   {TheoremId::T3_6, "T3.6"},
    {TheoremId::T4_1, "T4.1"},   {TheoremId::T4_2, "T4.2"},
    {TheoremId::T4_3, "T4.3"},   {TheoremId::T4_4, "T4.4"},
    {TheoremId::T5_1, "T5.1"},   {TheoremId::T5_2, "T5.2"},
    {TheoremId::T5_3, "T5.3"},   {TheoremId::T5_4, "T5.4"},
};

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

const char* theorem_name(TheoremId id) {
  for (const auto& [tid, name] : kNames)
    if (tid == id) return name;
  return "?";
}

std::optional<TheoremId> parse_theorem_id(std::string_view text) {
  for (const auto& [tid, name] : kNames)
    if (text == name) return tid;
  return std::nullopt;
}

const std::vector<TheoremId>& all_theorem_ids() {
  static const std::vector<TheoremId> ids = [] {
    std::vector<TheoremId> v;
    for (const auto& [tid, name] : kNames) v.push_back(tid);
    return v;
  }();
  return ids;
}

bool theorem_takes_k(TheoremId id) {
  switch (id) {
    case TheoremId::T2_1a:
    case TheoremId::T2_1b:
    case TheoremId::T2_2:
    case TheoremId::T2_3:
    case TheoremId::T2_5:
    case TheoremId::T2_6:
    case TheoremId::T5_2:
      return true;
    default:
      return false;
  }
}

GraphFacts::GraphFacts(Graph g, double tol)
    : g_(std::move(g)), tol_(tol), profile_(min_degree(g_)) {
  if (!is_connected(g_)) throw std::invalid_argument("graph is disconnected");
}

bool GraphFacts::triangle_free() {
  if (!tf_) tf_ = is_triangle_free(g_);
  return *tf_;
}

int GraphFacts::kappa() {
  if (!kappa_) kappa_ = vertex_connectivity(g_);
  return *kappa_;
}

const std::vector<CutCertificate>& GraphFacts::min_cuts() {
  if (!cuts_) {
    if (g_.m == g_.n * (g_.n - 1) / 2)
      cuts_.emplace();  // complete graph: no cuts
    else
      cuts_ = minimum_cuts(g_);
  }
  return *cuts_;
}

bool GraphFacts::maximally_connected() { return kappa() == delta(); }

bool GraphFacts::super_kappa() {
  if (!super_) {
    if (g_.m == g_.n * (g_.n - 1) / 2 || g_.n <= 4) {
      super_ = true;
    } else if (!maximally_connected()) {
      super_ = false;
    } else {
      bool ok = true;
      for (const CutCertificate& c : min_cuts())
        if (c.parts.front().size() != 1) {
          ok = false;
          break;
        }
      super_ = ok;
    }
  }
  return *super_;
}

double GraphFacts::rho() {
  if (!rho_) rho_ = spectral_radius(g_, tol_).rho;
  return *rho_;
}

double GraphFacts::rho_complement() {
  if (!rho_comp_) rho_comp_ = spectral_radius(complement(g_), tol_).rho;
  return *rho_comp_;
}

namespace {

long choose2(long x) { return x >= 2 ? x * (x - 1) / 2 : 0; }

struct VerdictBuilder {
  TheoremVerdict v;
  GraphFacts& facts;
  const CheckOptions& opts;

  VerdictBuilder(TheoremId id, int k, GraphFacts& f, const CheckOptions& o)
      : facts(f), opts(o) {
    v.id = id;
    v.k = k;
  }

  void not_applicable() {
    char buf[96];
    std::snprintf(buf, sizeof buf,
                  "not applicable (n=%d, m=%ld, delta=%d, k=%d)", facts.n(),
                  facts.m(), facts.delta(), v.k);
    v.witness = buf;
  }

  void margin(double value) {
    v.has_margin = true;
    v.margin = value;
    v.marginal = std::fabs(value) <= 10 * opts.slack;
  }

  TheoremVerdict finish(std::string detail) {
    v.consistent =
        !(v.applicable && v.hypothesis && !v.conclusion && !v.exception);
    if (v.applicable) {
      v.witness = std::move(detail);
      if (v.marginal) v.witness += " [marginal]";
    }
    return std::move(v);
  }
};

std::string edge_detail(long m, double bound, const std::string& concl,
                        bool exception, const char* family) {
  return "m=" + num(double(m)) + " vs bound=" + num(bound) + "; " + concl +
         (exception ? std::string("; exception: ") + family + " matched"
                    : std::string());
}

std::string rho_detail(const char* lhs, double rho_value, const char* rel,
                       double bound, const std::string& concl, bool exception,
                       const char* family) {
  return std::string(lhs) + "=" + num(rho_value) + " " + rel +
         " bound=" + num(bound) + "; " + concl +
         (exception ? std::string("; exception: ") + family + " matched"
                    : std::string());
}

}  // namespace

TheoremVerdict check(TheoremId id, GraphFacts& facts, std::optional<int> k_opt,
                     const CheckOptions& opts) {
  const int n = facts.n();
  const long m = facts.m();
  const int delta = facts.delta();
  if (k_opt && *k_opt > delta)
    throw std::invalid_argument("k exceeds the minimum degree");
  const int k = k_opt.value_or(delta);
  const double s = opts.slack;

  const bool takes_k = theorem_takes_k(id);
  const bool delta_rule =  // rules pinned to k = delta
      id == TheoremId::T3_1a || id == TheoremId::T3_1b ||
      id == TheoremId::T3_2 || id == TheoremId::T3_3 ||
      id == TheoremId::T3_4 || id == TheoremId::T3_6 ||
      id == TheoremId::T5_3;
  VerdictBuilder b(id, takes_k ? k : (delta_rule ? delta : 0), facts, opts);
  TheoremVerdict& v = b.v;
  const Graph& g = facts.graph();

  auto kappa_at_least = [&](int kk) {
    return "kappa=" + std::to_string(facts.kappa()) +
           (facts.kappa() >= kk ? " >= " : " < ") + "k=" + std::to_string(kk);
  };
  auto maximal_str = [&] {
    return "kappa=" + std::to_string(facts.kappa()) +
           (facts.maximally_connected() ? " == " : " != ") +
           "delta=" + std::to_string(delta);
  };
  auto super_str = [&] {
    return std::string("super-kappa=") + (facts.super_kappa() ? "yes" : "no");
  };

  switch (id) {
    case TheoremId::T2_1a: {
      v.applicable = n >= 5 && 2 <= k && k <= delta;
      if (!v.applicable) break;
      const FamilyParams fp{n, delta, k};
      const double bound = double(n) * (n - 1) / 2 - double(fp.a()) * fp.b();
      v.hypothesis = double(m) >= bound;
      b.margin(double(m) - bound);
      v.conclusion = facts.kappa() >= k;
      v.exception = matches_join_split(g, fp);
      return b.finish(edge_detail(m, bound, kappa_at_least(k), v.exception,
                                  "join-split family"));
    }
    case TheoremId::T2_1b: {
      v.applicable = n >= 5 && 2 <= k && k <= delta &&
                     2 * n >= (k + 1) * (delta - k + 2) + 2 * delta + 4;
      if (!v.applicable) break;
      const FamilyParams fp{n, delta, k};
      const double bound =
          (double(n) * (n - 1) -
           double(delta - k + 2) * (2 * n - 2 * delta + k - 3)) /
          2;
      v.hypothesis = double(m) >= bound;
      b.margin(double(m) - bound);
      v.conclusion = facts.kappa() >= k;
      v.exception = is_spanning_subgraph_of_join_split(g, fp);
      return b.finish(edge_detail(m, bound, kappa_at_least(k), v.exception,
                                  "join-split spanning supergraph"));
    }
    case TheoremId::T2_2: {
      v.applicable = 2 <= k && k <= delta;
      if (!v.applicable) break;
      const FamilyParams fp{n, delta, k};
      const double bound = join_split_rho(n, fp.a(), fp.b(), k - 1);
      v.hypothesis = facts.rho() >= bound - s;
      b.margin(facts.rho() - bound);
      v.conclusion = facts.kappa() >= k;
      v.exception = matches_join_split(g, fp);
      return b.finish(rho_detail("rho", facts.rho(), ">=?", bound,
                                 kappa_at_least(k), v.exception,
                                 "join-split family"));
    }
    case TheoremId::T2_3: {
      v.applicable = 3 <= k && k <= delta &&
                     2 * n >= (delta - k + 2) * (k * k - 2 * k + 7);
      if (!v.applicable) break;
      const FamilyParams fp{n, delta, k};
      const double bound = n - delta + k - 3;
      v.hypothesis = is_spanning_subgraph_of_join_split(g, fp);
      v.conclusion = facts.rho() < bound + s;
      b.margin(bound - facts.rho());
      v.exception = matches_join_split(g, fp);
      return b.finish(
          std::string("spanning-subgraph hypothesis ") +
          (v.hypothesis ? "holds" : "fails") + "; rho=" + num(facts.rho()) +
          " <? bound=" + num(bound) +
          (v.exception ? "; exception: join-split family matched" : ""));
    }
    case TheoremId::T2_5: {
      v.applicable = 3 <= k && k <= delta &&
                     2 * n >= (delta - k + 2) * (k * k - 2 * k + 7);
      if (!v.applicable) break;
      const FamilyParams fp{n, delta, k};
      const double bound = n - delta + k - 3;
      v.hypothesis = facts.rho() >= bound - s;
      b.margin(facts.rho() - bound);
      v.conclusion = facts.kappa() >= k;
      v.exception = matches_join_split(g, fp);
      return b.finish(rho_detail("rho", facts.rho(), ">=?", bound,
                                 kappa_at_least(k), v.exception,
                                 "join-split family"));
    }
    case TheoremId::T2_6: {
      v.applicable = n >= 5 && 2 <= k && k <= delta;
      if (!v.applicable) break;
      const FamilyParams fp{n, delta, k};
      const double bound = std::sqrt(double(fp.a()) * fp.b());
      v.hypothesis = facts.rho_complement() <= bound + s;
      b.margin(bound - facts.rho_complement());
      v.conclusion = facts.kappa() >= k;
      // Equality set: complement = K_{a,b} plus a remainder on the k-1 cut
      // vertices whose radius stays below sqrt(ab). The join-split family is
      // the remainder-edgeless member; demanding it alone misses graphs like
      // 2K_1 v (K_2 u K_2) at n=6, whose complement is K_{2,2} u K_2.
      v.exception = facts.rho_complement() <= bound + s &&
                    complement_has_biclique_component(g, fp.a(), fp.b());
      return b.finish(rho_detail("rho(complement)", facts.rho_complement(),
                                 "<=?", bound, kappa_at_least(k), v.exception,
                                 "complement splits off a K_{a,b} component"));
    }
    case TheoremId::T3_1a: {
      v.applicable = n >= 5 && delta >= 2;
      if (!v.applicable) break;
      const double bound = double(choose2(n - 2)) + 2 * delta - 1;
      v.hypothesis = double(m) >= bound;
      b.margin(double(m) - bound);
      v.conclusion = facts.maximally_connected();
      v.exception = matches_join_split(g, {n, delta, delta});
      return b.finish(edge_detail(m, bound, maximal_str(), v.exception,
                                  "join-split family"));
    }
    case TheoremId::T3_1b: {
      v.applicable = n >= 5 && delta >= 2 && n >= 2 * delta + 3;
      if (!v.applicable) break;
      const double bound = double(choose2(n - 2)) + delta;
      v.hypothesis = double(m) >= bound;
      b.margin(double(m) - bound);
      v.conclusion = facts.maximally_connected();
      v.exception = is_spanning_subgraph_of_join_split(g, {n, delta, delta});
      return b.finish(edge_detail(m, bound, maximal_str(), v.exception,
                                  "join-split spanning supergraph"));
    }
    case TheoremId::T3_2: {
      v.applicable = n >= 5 && delta >= 2;
      if (!v.applicable) break;
      const double bound =
          (delta - 1.0) / 2 +
          std::sqrt(double(n - delta - 1) * (n - 4) +
                    (delta + 1.0) * (delta + 1.0) / 4);
      v.hypothesis = facts.rho() >= bound - s;
      b.margin(facts.rho() - bound);
      v.conclusion = facts.maximally_connected();
      v.exception = matches_join_split(g, {n, n - 3, n - 3});
      return b.finish(rho_detail("rho", facts.rho(), ">=?", bound,
                                 maximal_str(), v.exception,
                                 "two-triangle join family"));
    }
    case TheoremId::T3_3: {
      v.applicable = n >= 5 && delta >= 2;
      if (!v.applicable) break;
      const double bound = join_split_rho(n, 2, n - delta - 1, delta - 1);
      v.hypothesis = facts.rho() >= bound - s;
      b.margin(facts.rho() - bound);
      v.conclusion = facts.maximally_connected();
      v.exception = matches_join_split(g, {n, delta, delta});
      return b.finish(rho_detail("rho", facts.rho(), ">=?", bound,
                                 maximal_str(), v.exception,
                                 "join-split family"));
    }
    case TheoremId::T3_4: {
      v.applicable = delta >= 2 && n >= delta * delta - 2 * delta + 7;
      if (!v.applicable) break;
      const double bound = n - 3;
      v.hypothesis = facts.rho() >= bound - s;
      b.margin(facts.rho() - bound);
      v.conclusion = facts.maximally_connected();
      v.exception = matches_join_split(g, {n, delta, delta});
      return b.finish(rho_detail("rho", facts.rho(), ">=?", bound,
                                 maximal_str(), v.exception,
                                 "join-split family"));
    }
    case TheoremId::T3_6: {
      v.applicable = n >= 5 && delta >= 2;
      if (!v.applicable) break;
      const double bound = std::sqrt(2.0 * (n - delta - 1));
      v.hypothesis = facts.rho_complement() <= bound + s;
      b.margin(bound - facts.rho_complement());
      v.conclusion = facts.maximally_connected();
      // Same equality set as the k-connectivity complement rule at k = delta:
      // complement = K_{2, n-delta-1} plus a low-radius remainder.
      v.exception = facts.rho_complement() <= bound + s &&
                    complement_has_biclique_component(g, 2, n - delta - 1);
      return b.finish(rho_detail("rho(complement)", facts.rho_complement(),
                                 "<=?", bound, maximal_str(), v.exception,
                                 "complement splits off a K_{a,b} component"));
    }
    case TheoremId::T4_1: {
      v.applicable = n >= 5;
      if (!v.applicable) break;
      const double bound = double(choose2(n - 2)) + 2 * delta;
      v.hypothesis = double(m) >= bound;
      b.margin(double(m) - bound);
      v.conclusion = facts.super_kappa();
      v.exception = delta <= n - 3 &&
                    are_isomorphic(g, build_super_exception(n, delta));
      return b.finish(edge_detail(m, bound, super_str(), v.exception,
                                  "near-boundary super family"));
    }
    case TheoremId::T4_2: {
      v.applicable = n >= 5;
      if (!v.applicable) break;
      const double bound =
          (delta - 1.0) / 2 +
          std::sqrt(2.0 + double(n - delta - 1) * (n - 4) +
                    (delta + 1.0) * (delta + 1.0) / 4);
      v.hypothesis = facts.rho() >= bound - s;
      b.margin(facts.rho() - bound);
      v.conclusion = facts.super_kappa();
      v.exception = false;
      return b.finish(rho_detail("rho", facts.rho(), ">=?", bound, super_str(),
                                 false, ""));
    }
    case TheoremId::T4_3: {
      v.applicable = n >= 5 && delta <= n - 2;
      if (!v.applicable) break;
      const double bound = join_split_rho(n, 2, n - delta - 2, delta);
      v.hypothesis = facts.rho() >= bound - s;
      b.margin(facts.rho() - bound);
      v.conclusion = facts.super_kappa();
      v.exception = false;
      return b.finish(rho_detail("rho", facts.rho(), ">=?", bound, super_str(),
                                 false, ""));
    }
    case TheoremId::T4_4: {
      v.applicable = n >= 5 && delta <= n - 2;
      if (!v.applicable) break;
      const double bound = std::sqrt(2.0 * (n - delta - 2));
      v.hypothesis = facts.rho_complement() <= bound + s;
      b.margin(bound - facts.rho_complement());
      v.conclusion = facts.super_kappa();
      v.exception = false;
      return b.finish(rho_detail("rho(complement)", facts.rho_complement(),
                                 "<=?", bound, super_str(), false, ""));
    }
    case TheoremId::T5_1: {
      v.applicable = facts.triangle_free();
      if (!v.applicable) break;
      const long bound = static_cast<long>(n) * n / 4;
      v.hypothesis = true;
      b.margin(double(m) - double(bound));
      const Graph balanced =
          n == 1 ? Graph::empty(1) : Graph::complete_bipartite((n + 1) / 2, n / 2);
      v.exception = m == bound && are_isomorphic(g, balanced);
      v.conclusion = m < bound || v.exception;
      return b.finish("m=" + std::to_string(m) +
                      " vs bound=" + std::to_string(bound) +
                      (v.exception ? "; equality: balanced complete bipartite"
                                   : ""));
    }
    case TheoremId::T5_2: {
      v.applicable = facts.triangle_free() && 2 <= k && k <= delta;
      if (!v.applicable) break;
      const long t = n - 2 * delta + k - 1;
      const double bound = double(delta) * delta + double(t * t / 4);
      v.hypothesis = double(m) >= bound;
      b.margin(double(m) - bound);
      v.conclusion = facts.kappa() >= k;
      v.exception = matches_tf_exception(g, {n, delta, k});
      return b.finish(edge_detail(m, bound, kappa_at_least(k), v.exception,
                                  "bipartite-blocks family"));
    }
    case TheoremId::T5_3: {
      v.applicable = facts.triangle_free() && delta >= 2;
      if (!v.applicable) break;
      const long t = n - delta - 1;
      const double bound = double(delta) * delta + double(t * t / 4);
      v.hypothesis = double(m) >= bound;
      b.margin(double(m) - bound);
      v.conclusion = facts.maximally_connected();
      v.exception = matches_tf_exception(g, {n, delta, delta});
      return b.finish(edge_detail(m, bound, maximal_str(), v.exception,
                                  "bipartite-blocks family"));
    }
    case TheoremId::T5_4: {
      v.applicable = facts.triangle_free() && delta >= 2;
      if (!v.applicable) break;
      const long t = n - delta;
      const double bound = double(delta) * delta + double(t * t / 4);
      v.hypothesis = double(m) >= bound;
      b.margin(double(m) - bound);
      v.conclusion = facts.super_kappa();
      v.exception = false;
      return b.finish(edge_detail(m, bound, super_str(), false, ""));
    }
  }
  b.not_applicable();
  return b.finish("");
}

TheoremVerdict check(TheoremId id, const Graph& g, std::optional<int> k_opt,
                     const CheckOptions& opts) {
  GraphFacts facts(g, opts.tol);
  return check(id, facts, k_opt, opts);
}

std::vector<TheoremVerdict> check_all(GraphFacts& facts, KPolicy policy,
                                      const std::vector<TheoremId>& ids_in,
                                      const CheckOptions& opts) {
  const std::vector<TheoremId>& ids =
      ids_in.empty() ? all_theorem_ids() : ids_in;
  std::vector<TheoremVerdict> out;
  for (TheoremId id : ids) {
    if (theorem_takes_k(id) && policy == KPolicy::all_k && facts.delta() >= 2) {
      for (int k = 2; k <= facts.delta(); ++k)
        out.push_back(check(id, facts, k, opts));
    } else if (theorem_takes_k(id)) {
      out.push_back(check(id, facts, facts.delta(), opts));
    } else {
      out.push_back(check(id, facts, std::nullopt, opts));
    }
  }
  return out;
}

std::vector<TheoremVerdict> check_all(const Graph& g, KPolicy policy,
                                      const std::vector<TheoremId>& ids,
                                      const CheckOptions& opts) {
  GraphFacts facts(g, opts.tol);
  return check_all(facts, policy, ids, opts);
}

}  // namespace specconn
