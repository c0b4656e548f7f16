#include "specconn/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace specconn {

const char* method_name(SpectralMethod m) {
  switch (m) {
    case SpectralMethod::power_iteration: return "power-iteration";
    case SpectralMethod::closed_form_bipartite: return "closed-form-bipartite";
    case SpectralMethod::polynomial_root: return "polynomial-root";
  }
  return "?";
}

namespace {

// If the component induced on `mask` is a complete bipartite graph, return
// its side sizes.
bool complete_bipartite_component(const Graph& g, std::uint64_t mask, int* a,
                                  int* b) {
  const int v0 = std::countr_zero(mask);
  std::uint64_t side[2] = {std::uint64_t{1} << v0, 0};
  std::uint64_t frontier = side[0];
  int parity = 0;
  while (frontier) {
    std::uint64_t next = 0;
    std::uint64_t f = frontier;
    while (f) {
      const int v = std::countr_zero(f);
      f &= f - 1;
      next |= g.adj[v] & mask;
    }
    next &= ~(side[0] | side[1]);
    parity ^= 1;
    side[parity] |= next;
    frontier = next;
  }
  for (int s = 0; s < 2; ++s) {
    std::uint64_t f = side[s];
    while (f) {
      const int v = std::countr_zero(f);
      f &= f - 1;
      if ((g.adj[v] & mask) != side[s ^ 1]) return false;  // exactly the other side
    }
  }
  *a = std::popcount(side[0]);
  *b = std::popcount(side[1]);
  return *a >= 1 && *b >= 1;
}

struct ComponentEstimate {
  double rho = 0;
  SpectralMethod method = SpectralMethod::power_iteration;
  double error = 0;
};

ComponentEstimate component_rho(const Graph& g, std::uint64_t mask, double tol) {
  ComponentEstimate est;
  if (std::popcount(mask) == 1) return est;  // isolated vertex: rho = 0 exactly
  int a = 0, b = 0;
  if (complete_bipartite_component(g, mask, &a, &b)) {
    est.rho = std::sqrt(double(a) * b);
    est.method = SpectralMethod::closed_form_bipartite;
    return est;
  }
  const std::vector<int> verts = mask_to_vertices(mask);
  const int nc = static_cast<int>(verts.size());
  std::vector<int> local(g.n, -1);
  for (int i = 0; i < nc; ++i) local[verts[i]] = i;

  std::vector<double> x(nc), y(nc);
  for (int i = 0; i < nc; ++i) x[i] = 1.0 + 1e-3 * i;
  double norm = 0;
  for (double v : x) norm += v * v;
  norm = std::sqrt(norm);
  for (double& v : x) v /= norm;

  double mu_prev = 0;
  for (long iter = 0; iter < 1000000; ++iter) {
    // y = (A + I) x on the component
    for (int i = 0; i < nc; ++i) {
      double s = x[i];
      std::uint64_t nb = g.adj[verts[i]] & mask;
      while (nb) {
        s += x[local[std::countr_zero(nb)]];
        nb &= nb - 1;
      }
      y[i] = s;
    }
    double mu = 0;
    for (int i = 0; i < nc; ++i) mu += x[i] * y[i];  // Rayleigh quotient of A + I
    double resid = 0;
    for (int i = 0; i < nc; ++i) {
      const double r = y[i] - mu * x[i];
      resid += r * r;
    }
    resid = std::sqrt(resid);
    if (resid <= tol && std::abs(mu - mu_prev) <= tol) {
      est.rho = mu - 1;
      est.error = resid;
      return est;
    }
    mu_prev = mu;
    double ny = 0;
    for (double v : y) ny += v * v;
    ny = std::sqrt(ny);
    for (int i = 0; i < nc; ++i) x[i] = y[i] / ny;
  }
  throw std::runtime_error("power iteration did not converge");
}

}  // namespace

SpectralEstimate spectral_radius(const Graph& g, double tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  SpectralEstimate best;
  bool first = true;
  for (std::uint64_t comp : components(g)) {
    const ComponentEstimate est = component_rho(g, comp, tol);
    if (first || est.rho > best.rho) {
      best.rho = est.rho;
      best.method = est.method;
      best.error_bound = est.error;
      first = false;
    }
  }
  return best;
}

double hong_bound(int n, long m, int delta) {
  if (n < 2 || delta < 1 || delta > n - 1)
    throw std::invalid_argument("need 1 <= delta <= n - 1");
  if (2 * m < static_cast<long>(delta) * n)
    throw std::invalid_argument("degree sum violation: 2m < delta * n");
  const double radicand = 2.0 * m - double(delta) * n + (delta + 1.0) * (delta + 1.0) / 4.0;
  return (delta - 1.0) / 2.0 + std::sqrt(radicand);
}

QuotientCubic quotient_cubic(int n, int a, int b, int kappa) {
  if (a < 1 || b < a) throw std::invalid_argument("need 1 <= a <= b");
  if (kappa < 1) throw std::invalid_argument("need kappa >= 1");
  if (a + b + kappa != n) throw std::invalid_argument("need a + b + kappa == n");
  QuotientCubic c;
  c.n = n, c.a = a, c.b = b, c.kappa = kappa;
  const double ab = double(a) * b;
  c.c2 = -(n - 3.0);
  c.c1 = ab - 2.0 * n + 3.0;
  c.c0 = ab * (kappa + 1.0) - n + 1.0;
  return c;
}

SuperQuartic super_quartic(int n, int delta, int k) {
  if (k < 3 || delta < k || delta > n - 3)
    throw std::invalid_argument("need 3 <= k <= delta <= n - 3");
  if (2 * n < (delta - k + 2) * (k * k - 2 * k + 7))
    throw std::invalid_argument("order below the quartic's bracket threshold");
  SuperQuartic q;
  q.n = n, q.delta = delta, q.k = k;
  const double nd = n, dd = delta, kd = k;
  q.c3 = -(nd - 5.0);
  q.c2 = (nd - dd - 1.0) * (dd - kd - 2.0) - 4.0 * dd + 7.0;
  q.c1 = (dd * kd + 2.0 * dd + 2.0) * (nd - dd + kd - 3.0) -
         (kd * kd + 3.0) * (nd - 1.0) + 6.0;
  q.c0 = 2.0 * ((dd - kd + 1.0) * (kd * (nd - dd - 2.0) - 1.0) +
                (kd - 1.0) * (nd - dd - 3.0));
  return q;
}

namespace {

double bisect(double lo, double hi, double flo, const auto& f, double tol) {
  // invariant: f(lo) <= 0 < f(hi)  (flo = f(lo))
  if (flo == 0) return lo;
  for (int it = 0; it < 400 && hi - lo > tol; ++it) {
    const double mid = lo + (hi - lo) / 2;
    if (f(mid) <= 0)
      lo = mid;
    else
      hi = mid;
  }
  return lo + (hi - lo) / 2;
}

}  // namespace

BracketedRoot cubic_largest_root_bracketed(const QuotientCubic& c, double tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  auto f = [&](double x) { return ((x + c.c2) * x + c.c1) * x + c.c0; };
  double hi = c.n - 1.0;
  while (f(hi) <= 0) hi += 1.0;  // rho < n - 1 for valid parameters; belt and braces
  // Largest critical point of the cubic brackets the largest root from below
  // whenever the cubic is negative there.
  double lo = 0;
  const double disc = 4.0 * c.c2 * c.c2 - 12.0 * c.c1;
  bool have_lo = false;
  if (disc > 0) {
    lo = (-2.0 * c.c2 + std::sqrt(disc)) / 6.0;
    have_lo = f(lo) <= 0;
  }
  if (!have_lo) {
    // No usable critical point: walk down in unit steps until the sign flips.
    lo = hi - 1.0;
    int steps = 0;
    while (f(lo) > 0) {
      lo -= 1.0;
      if (++steps > 4 * c.n + 16)
        throw std::runtime_error("cubic bracketing failed");
    }
  }
  BracketedRoot r;
  r.lo = lo, r.hi = hi;
  r.root = bisect(lo, hi, f(lo), f, tol);
  return r;
}

double cubic_largest_root(const QuotientCubic& c, double tol) {
  return cubic_largest_root_bracketed(c, tol).root;
}

BracketedRoot quartic_largest_root_bracketed(const SuperQuartic& q, double tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  auto f = [&](double x) {
    return (((x + q.c3) * x + q.c2) * x + q.c1) * x + q.c0;
  };
  const double lo = q.n - q.delta + q.k - 4.0;
  const double hi = q.n - q.delta + q.k - 3.0;
  const double flo = f(lo), fhi = f(hi);
  if (!(flo < 0) || !(fhi > 0))
    throw std::runtime_error("quartic bracket sign check failed");
  BracketedRoot r;
  r.lo = lo, r.hi = hi;
  r.root = bisect(lo, hi, flo, f, tol);
  return r;
}

double quartic_largest_root(const SuperQuartic& q, double tol) {
  return quartic_largest_root_bracketed(q, tol).root;
}

double threshold_g(double x, int delta, int k) {
  const double dk2 = delta - k + 2.0;
  return 2.0 * x * x - dk2 * (k * k - 2.0 * k + 7.0) * x +
         dk2 * ((delta - k + 1.0) * (double(k) * k - 2.0 * k + 5.0) - 2.0 * (k - 3.0));
}

double join_split_rho(int n, int a, int b, int kappa, double tol) {
  if (a > b) std::swap(a, b);
  if (a < 0 || kappa < 1 || a + b + kappa != n)
    throw std::invalid_argument("invalid split parameters");
  if (a == 0) return n - 1.0;  // K_kappa v K_b == K_n
  return cubic_largest_root(quotient_cubic(n, a, b, kappa), tol);
}

}  // namespace specconn
