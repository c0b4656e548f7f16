#include "specconn/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace specconn {

namespace {

// One round of color refinement: new color = (old color, sorted multiset of
// neighbor colors), renumbered in signature order so labels are canonical.
std::vector<int> refine_once(const Graph& g, const std::vector<int>& color) {
  using Sig = std::pair<int, std::vector<int>>;
  std::vector<Sig> sigs(g.n);
  for (int v = 0; v < g.n; ++v) {
    std::vector<int> nb;
    std::uint64_t a = g.adj[v];
    while (a) {
      nb.push_back(color[std::countr_zero(a)]);
      a &= a - 1;
    }
    std::sort(nb.begin(), nb.end());
    sigs[v] = {color[v], std::move(nb)};
  }
  std::map<Sig, int> ids;
  for (const Sig& s : sigs) ids.emplace(s, 0);
  int next = 0;
  for (auto& [sig, id] : ids) id = next++;
  std::vector<int> out(g.n);
  for (int v = 0; v < g.n; ++v) out[v] = ids[sigs[v]];
  return out;
}

// Stable colors, plus the per-color class sizes for quick comparison.
std::vector<int> stable_colors(const Graph& g) {
  std::vector<int> color(g.n);
  for (int v = 0; v < g.n; ++v) color[v] = g.degree(v);
  int classes = 0;
  for (;;) {
    std::vector<int> next = refine_once(g, color);
    const int count = *std::max_element(next.begin(), next.end()) + 1;
    color = std::move(next);
    if (count == classes) return color;
    classes = count;
  }
}

std::vector<int> class_size_histogram(const std::vector<int>& color) {
  const int count = *std::max_element(color.begin(), color.end()) + 1;
  std::vector<int> sizes(count, 0);
  for (int c : color) ++sizes[c];
  return sizes;
}

bool extend(const Graph& g, const Graph& h, const std::vector<int>& cg,
            const std::vector<int>& ch, std::vector<int>& map,
            std::uint64_t used, int v) {
  if (v == g.n) return true;
  for (int w = 0; w < h.n; ++w) {
    if (used >> w & 1) continue;
    if (ch[w] != cg[v]) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      ok = g.has_edge(u, v) == h.has_edge(map[u], w);
    if (!ok) continue;
    map[v] = w;
    if (extend(g, h, cg, ch, map, used | std::uint64_t{1} << w, v + 1))
      return true;
  }
  return false;
}

}  // namespace

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.n != h.n || g.m != h.m) return false;
  if (g.n == 0) return true;
  std::vector<int> dg(g.n), dh(h.n);
  for (int v = 0; v < g.n; ++v) dg[v] = g.degree(v), dh[v] = h.degree(v);
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;

  const std::vector<int> cg = stable_colors(g);
  const std::vector<int> ch = stable_colors(h);
  if (class_size_histogram(cg) != class_size_histogram(ch)) return false;

  std::vector<int> map(g.n, -1);
  return extend(g, h, cg, ch, map, 0, 0);
}

}  // namespace specconn
