// specconn: certify k-connectivity, maximal connectivity and super-kappa of
// small graphs via edge-count and spectral-radius rules, build the extremal
// families sitting on those rules' boundaries, and exhaustively verify the
// whole catalog over all small connected graphs.
//
// Exit codes: 0 success / all verdicts consistent, 1 inconsistency found,
// 2 usage or input error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "specconn/connectivity.hpp"
#include "specconn/extremal.hpp"
#include "specconn/graph6.hpp"
#include "specconn/harness.hpp"
#include "specconn/spectral.hpp"
#include "specconn/theorems.hpp"

namespace {

using nlohmann::ordered_json;
using namespace specconn;

double round12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::vector<Graph> read_graphs(const std::string& g6_flag) {
  std::vector<Graph> graphs;
  if (!g6_flag.empty()) {
    graphs.push_back(graph6_decode(g6_flag));
    return graphs;
  }
  std::string line;
  while (std::getline(std::cin, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    graphs.push_back(graph6_decode(line));
  }
  if (graphs.empty())
    throw std::invalid_argument(
        "no graphs given: pass --g6 or one graph6 line per graph on stdin");
  return graphs;
}

std::vector<TheoremId> parse_theorem_list(const std::string& text) {
  std::vector<TheoremId> ids;
  if (text == "all") return ids;  // empty list = the full catalog
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string item =
        text.substr(pos, comma == std::string::npos ? std::string::npos
                                                    : comma - pos);
    const auto id = parse_theorem_id(item);
    if (!id) throw std::invalid_argument("unknown theorem id: " + item);
    ids.push_back(*id);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (ids.empty()) throw std::invalid_argument("empty theorem list");
  return ids;
}

KPolicy parse_k_policy(const std::string& text) {
  if (text == "all" || text == "all-k") return KPolicy::all_k;
  if (text == "delta" || text == "delta-only") return KPolicy::delta_only;
  throw std::invalid_argument("k policy must be 'all' or 'delta-only'");
}

std::pair<int, int> parse_delta_range(const std::string& text) {
  const std::size_t dots = text.find("..");
  std::size_t used = 0;
  if (dots == std::string::npos) {
    const int d = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument("bad delta range");
    return {d, d};
  }
  const int lo = std::stoi(text.substr(0, dots), &used);
  if (used != dots) throw std::invalid_argument("bad delta range");
  const std::string rest = text.substr(dots + 2);
  const int hi = std::stoi(rest, &used);
  if (used != rest.size()) throw std::invalid_argument("bad delta range");
  return {lo, hi};
}

double env_tolerance() {
  const char* env = std::getenv("SPECCONN_TOL");
  if (!env || !*env) return default_rho_tol;
  char* end = nullptr;
  const double tol = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(tol > 0))
    throw std::invalid_argument("SPECCONN_TOL must be a positive number");
  return tol;
}

int cmd_construct(const std::string& family, std::optional<int> n,
                  std::optional<int> delta, std::optional<int> k) {
  auto need = [](std::optional<int> v, const char* flag) {
    if (!v) throw std::invalid_argument(std::string("missing ") + flag);
    return *v;
  };
  Graph g = [&] {
    if (family == "join-split")
      return build_join_split(
          {need(n, "--n"), need(delta, "--delta"), need(k, "--k")});
    if (family == "super-exception")
      return build_super_exception(need(n, "--n"), need(delta, "--delta"));
    if (family == "tf-exception")
      return build_tf_exception(
          {need(n, "--n"), need(delta, "--delta"), need(k, "--k")});
    if (family == "tf-sharpness")
      return build_tf_sharpness(need(delta, "--delta"));
    throw std::invalid_argument("unknown family: " + family);
  }();
  std::cout << graph6_encode(g) << "\n";
  return 0;
}

int cmd_check(const std::string& theorem, const std::string& k_text,
              const std::string& g6, double tol) {
  CheckOptions opts;
  opts.tol = tol;
  std::optional<int> k;
  if (k_text != "auto") {
    std::size_t used = 0;
    k = std::stoi(k_text, &used);
    if (used != k_text.size())
      throw std::invalid_argument("--k must be an integer or 'auto'");
  }
  std::optional<TheoremId> id;
  if (theorem != "all") {
    id = parse_theorem_id(theorem);
    if (!id) throw std::invalid_argument("unknown theorem id: " + theorem);
  }
  bool all_consistent = true;
  for (const Graph& g : read_graphs(g6)) {
    GraphFacts facts(g, opts.tol);
    std::vector<TheoremVerdict> verdicts;
    if (id) {
      verdicts.push_back(check(*id, facts, k, opts));
    } else if (k) {
      for (TheoremId tid : all_theorem_ids())
        verdicts.push_back(check(
            tid, facts, theorem_takes_k(tid) ? k : std::nullopt, opts));
    } else {
      verdicts = check_all(facts, KPolicy::delta_only, {}, opts);
    }
    for (const TheoremVerdict& v : verdicts) {
      std::cout << verdict_json_line(v) << "\n";
      all_consistent = all_consistent && v.consistent;
    }
  }
  return all_consistent ? 0 : 1;
}

int cmd_kappa(const std::string& g6) {
  for (const Graph& g : read_graphs(g6)) {
    const ConnectivityReport r = analyze_connectivity(g);
    ordered_json j;
    j["kappa"] = r.kappa;
    j["min_cut_count"] = r.min_cuts.size();
    j["maximally_connected"] = r.maximally_connected;
    j["super_kappa"] = r.super_kappa;
    std::cout << j.dump() << "\n";
  }
  return 0;
}

int cmd_spectral(const std::string& g6, bool use_complement, double tol) {
  for (Graph g : read_graphs(g6)) {
    if (use_complement) g = complement(g);
    const SpectralEstimate est = spectral_radius(g, tol);
    ordered_json j;
    j["rho"] = round12(est.rho);
    j["method"] = method_name(est.method);
    j["error_bound"] = round12(est.error_bound);
    std::cout << j.dump() << "\n";
  }
  return 0;
}

int cmd_polyroot(const std::string& poly, std::optional<int> n,
                 std::optional<int> a, std::optional<int> b,
                 std::optional<int> kappa, std::optional<int> delta,
                 std::optional<int> k) {
  auto need = [](std::optional<int> v, const char* flag) {
    if (!v) throw std::invalid_argument(std::string("missing ") + flag);
    return *v;
  };
  BracketedRoot r;
  if (poly == "quotient-cubic") {
    r = cubic_largest_root_bracketed(
        quotient_cubic(need(n, "--n"), need(a, "--a"), need(b, "--b"),
                       need(kappa, "--kappa")));
  } else if (poly == "super-quartic") {
    r = quartic_largest_root_bracketed(
        super_quartic(need(n, "--n"), need(delta, "--delta"), need(k, "--k")));
  } else {
    throw std::invalid_argument("--poly must be quotient-cubic or super-quartic");
  }
  ordered_json j;
  j["root"] = round12(r.root);
  j["bracket"] = {round12(r.lo), round12(r.hi)};
  std::cout << j.dump() << "\n";
  return 0;
}

int cmd_verify(const SweepConfig& cfg, const std::string& out_path) {
  const SweepReport report = run_sweep(cfg);
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write to " + out_path);
  out << sweep_report_json(report, cfg);
  out.close();
  std::cout << sweep_summary_tsv(report);
  std::fprintf(stderr, "wall_time_sec=%.3f\n", report.wall_seconds);
  return report.inconsistencies.empty() ? 0 : 1;
}

int cmd_sharpness(const std::string& theorem, const std::string& range,
                  double tol) {
  const auto id = parse_theorem_id(theorem);
  if (!id) throw std::invalid_argument("unknown theorem id: " + theorem);
  const auto [lo, hi] = parse_delta_range(range);
  std::cout << sharpness_tsv(sharpness_scan(*id, lo, hi, tol));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "specconn: connectivity certificates for small graphs via edge and "
      "spectral bounds"};
  app.require_subcommand(1);

  auto* construct = app.add_subcommand(
      "construct", "Emit an extremal family graph as graph6");
  std::string family;
  int c_n = 0, c_delta = 0, c_k = 0;
  construct->add_option("--family", family,
                        "join-split | super-exception | tf-exception | "
                        "tf-sharpness")
      ->required();
  auto* c_n_opt = construct->add_option("--n", c_n, "order");
  auto* c_delta_opt = construct->add_option("--delta", c_delta, "minimum degree");
  auto* c_k_opt = construct->add_option("--k", c_k, "connectivity parameter");

  auto* check_cmd = app.add_subcommand(
      "check", "Check rules against graphs; one JSON verdict per line");
  std::string ch_theorem = "all", ch_k = "auto", ch_g6;
  check_cmd->add_option("--theorem", ch_theorem, "rule id (e.g. T2.1a) or 'all'");
  check_cmd->add_option("--k", ch_k, "connectivity parameter or 'auto'");
  check_cmd->add_option("--g6", ch_g6, "graph6 string (default: read stdin)");

  auto* kappa_cmd = app.add_subcommand(
      "kappa", "Vertex connectivity, minimum cuts, super-kappa");
  std::string ka_g6;
  kappa_cmd->add_option("--g6", ka_g6, "graph6 string (default: read stdin)");

  auto* spectral_cmd =
      app.add_subcommand("spectral", "Adjacency spectral radius");
  std::string sp_g6;
  bool sp_complement = false;
  double sp_tol = 0;
  spectral_cmd->add_option("--g6", sp_g6, "graph6 string (default: read stdin)");
  spectral_cmd->add_flag("--complement", sp_complement,
                         "use the complement graph");
  auto* sp_tol_opt =
      spectral_cmd->add_option("--tol", sp_tol, "residual tolerance");

  auto* polyroot_cmd = app.add_subcommand(
      "polyroot", "Largest root of the family polynomials");
  std::string poly;
  int p_n = 0, p_a = 0, p_b = 0, p_kappa = 0, p_delta = 0, p_k = 0;
  polyroot_cmd->add_option("--poly", poly, "quotient-cubic | super-quartic")
      ->required();
  auto* p_n_opt = polyroot_cmd->add_option("--n", p_n, "order");
  auto* p_a_opt = polyroot_cmd->add_option("--a", p_a, "small clique");
  auto* p_b_opt = polyroot_cmd->add_option("--b", p_b, "large clique");
  auto* p_kappa_opt = polyroot_cmd->add_option("--kappa", p_kappa, "cut size");
  auto* p_delta_opt =
      polyroot_cmd->add_option("--delta", p_delta, "minimum degree");
  auto* p_k_opt = polyroot_cmd->add_option("--k", p_k, "connectivity parameter");

  auto* verify_cmd = app.add_subcommand(
      "verify", "Exhaustively check rules over all small connected graphs");
  SweepConfig cfg;
  std::string v_theorems = "all", v_k_policy = "all", v_dedup = "none", v_out;
  verify_cmd->add_option("--n-min", cfg.n_min, "smallest order")->required();
  verify_cmd->add_option("--n-max", cfg.n_max, "largest order")->required();
  verify_cmd->add_flag("--triangle-free", cfg.triangle_free,
                       "restrict to triangle-free graphs");
  verify_cmd->add_option("--theorems", v_theorems,
                         "'all' or comma-separated rule ids");
  verify_cmd->add_option("--k-policy", v_k_policy, "'all' or 'delta-only'");
  verify_cmd->add_option("--workers", cfg.workers, "worker thread count");
  verify_cmd->add_option("--dedup", v_dedup, "'none' or 'iso-canonical'");
  verify_cmd->add_flag("--allow-order-8", cfg.allow_order_8,
                       "permit the 2^28-subset order-8 sweep");
  verify_cmd->add_option("--out", v_out, "report JSON path")->required();

  auto* sharpness_cmd = app.add_subcommand(
      "sharpness", "Boundary families at the rules' order thresholds (TSV)");
  std::string sh_theorem, sh_range;
  sharpness_cmd->add_option("--theorem", sh_theorem, "T3.4 or T5.4")->required();
  sharpness_cmd->add_option("--delta-range", sh_range, "e.g. 3..5")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const double tol = env_tolerance();
    auto opt = [](const CLI::Option* o, int value) {
      return o->count() ? std::optional<int>(value) : std::nullopt;
    };
    if (*construct)
      return cmd_construct(family, opt(c_n_opt, c_n), opt(c_delta_opt, c_delta),
                           opt(c_k_opt, c_k));
    if (*check_cmd) return cmd_check(ch_theorem, ch_k, ch_g6, tol);
    if (*kappa_cmd) return cmd_kappa(ka_g6);
    if (*spectral_cmd)
      return cmd_spectral(sp_g6, sp_complement,
                          sp_tol_opt->count() ? sp_tol : tol);
    if (*polyroot_cmd)
      return cmd_polyroot(poly, opt(p_n_opt, p_n), opt(p_a_opt, p_a),
                          opt(p_b_opt, p_b), opt(p_kappa_opt, p_kappa),
                          opt(p_delta_opt, p_delta), opt(p_k_opt, p_k));
    if (*verify_cmd) {
      cfg.theorem_ids = parse_theorem_list(v_theorems);
      cfg.k_policy = parse_k_policy(v_k_policy);
      cfg.dedup = v_dedup == "iso-canonical"
                      ? DedupMode::iso_canonical
                      : (v_dedup == "none"
                             ? DedupMode::none
                             : throw std::invalid_argument(
                                   "--dedup must be none or iso-canonical"));
      cfg.check.tol = tol;
      return cmd_verify(cfg, v_out);
    }
    if (*sharpness_cmd) return cmd_sharpness(sh_theorem, sh_range, tol);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
