#pragma once
// Rule catalog: twenty sufficient conditions for k-connectivity, maximal
// connectivity (kappa = delta) and super-kappa, each checked against the
// graph's actual behavior. A verdict records whether the rule applied,
// whether its hypothesis held, whether its conclusion held, whether the
// graph matches the rule's named exception family, and whether everything
// is consistent: applicable && hypothesis && !conclusion && !exception is
// the only inconsistent combination.
//
// Rules T2.* take an explicit parameter k (2 <= k <= min degree); T3.* are
// their k = delta specializations; T4.* certify super-kappa; T5.* are the
// triangle-free variants. T5.1 is the classic edge bound for triangle-free
// graphs, m <= floor(n^2/4), with equality exactly for the balanced
// complete bipartite graph; its verdict folds the equality
// characterization into the conclusion.

#include <optional>
#include <string>
#include <vector>

#include "specconn/connectivity.hpp"
#include "specconn/graph.hpp"
#include "specconn/spectral.hpp"

namespace specconn {

enum class TheoremId : int {
  T2_1a, T2_1b, T2_2, T2_3, T2_5, T2_6,
  T3_1a, T3_1b, T3_2, T3_3, T3_4, T3_6,
  T4_1, T4_2, T4_3, T4_4,
  T5_1, T5_2, T5_3, T5_4,
};

inline constexpr int theorem_count = 20;

const char* theorem_name(TheoremId id);                       // e.g. "T2.1a"
std::optional<TheoremId> parse_theorem_id(std::string_view);  // inverse of the above
const std::vector<TheoremId>& all_theorem_ids();
bool theorem_takes_k(TheoremId id);  // T2.* and T5.2 take an explicit k

struct CheckOptions {
  double tol = default_rho_tol;     // spectral residual target
  double slack = comparison_slack;  // numeric slack on rho comparisons
};

struct TheoremVerdict {
  TheoremId id{};
  int k = 0;  // parameter used; min degree for the k = delta rules, 0 if none
  bool applicable = false;
  bool hypothesis = false;
  bool conclusion = false;
  bool exception = false;
  bool consistent = true;
  bool has_margin = false;
  double margin = 0;  // signed distance of the hypothesis from its boundary
  bool marginal = false;  // |margin| <= 10 * slack: boundary case
  std::string witness;
};

// Lazily computed per-graph facts shared by all checkers.
class GraphFacts {
 public:
  explicit GraphFacts(Graph g, double tol = default_rho_tol);

  const Graph& graph() const { return g_; }
  int n() const { return g_.n; }
  long m() const { return g_.m; }
  int delta() const { return profile_.delta; }
  bool triangle_free();
  int kappa();
  const std::vector<CutCertificate>& min_cuts();  // empty for complete graphs
  bool maximally_connected();
  bool super_kappa();
  double rho();             // spectral radius of the graph
  double rho_complement();  // spectral radius of the complement

 private:
  Graph g_;
  double tol_;
  DegreeProfile profile_;
  std::optional<bool> tf_;
  std::optional<int> kappa_;
  std::optional<std::vector<CutCertificate>> cuts_;
  std::optional<bool> super_;
  std::optional<double> rho_, rho_comp_;
};

// Checks one rule. k is the explicit parameter for the rules that take one
// (defaults to the minimum degree) and is ignored by the others. Throws
// std::invalid_argument on disconnected input or k > min degree.
TheoremVerdict check(TheoremId id, GraphFacts& facts,
                     std::optional<int> k = std::nullopt,
                     const CheckOptions& opts = {});
TheoremVerdict check(TheoremId id, const Graph& g,
                     std::optional<int> k = std::nullopt,
                     const CheckOptions& opts = {});

enum class KPolicy {
  all_k,      // parameterized rules run for every k in [2, min degree]
  delta_only  // parameterized rules run only at k = min degree
};

std::vector<TheoremVerdict> check_all(GraphFacts& facts,
                                      KPolicy policy = KPolicy::all_k,
                                      const std::vector<TheoremId>& ids = {},
                                      const CheckOptions& opts = {});
std::vector<TheoremVerdict> check_all(const Graph& g,
                                      KPolicy policy = KPolicy::all_k,
                                      const std::vector<TheoremId>& ids = {},
                                      const CheckOptions& opts = {});

}  // namespace specconn
