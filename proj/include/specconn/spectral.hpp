#pragma once
// Adjacency spectral radius and the polynomial machinery behind the
// eigenvalue-based sufficient conditions. The power iteration runs on
// A + I per component (the shift keeps bipartite components converging),
// reports a Rayleigh-quotient estimate, and certifies it with the residual
// norm ||A x - rho x||. Complete bipartite components short-circuit to the
// exact closed form sqrt(a*b).

#include <string>

#include "specconn/graph.hpp"

namespace specconn {

inline constexpr double default_rho_tol = 1e-10;   // residual target for rho
inline constexpr double default_root_tol = 1e-12;  // bisection width target
inline constexpr double comparison_slack = 1e-7;   // numeric slack in checkers

enum class SpectralMethod { power_iteration, closed_form_bipartite, polynomial_root };
const char* method_name(SpectralMethod m);

struct SpectralEstimate {
  double rho = 0;
  SpectralMethod method = SpectralMethod::power_iteration;
  double error_bound = 0;  // residual norm certificate; 0 for closed forms
};

SpectralEstimate spectral_radius(const Graph& g, double tol = default_rho_tol);

// (delta - 1)/2 + sqrt(2m - delta*n + (delta + 1)^2 / 4); requires a
// realizable degree sum, i.e. 2m >= delta * n, and 1 <= delta <= n - 1.
double hong_bound(int n, long m, int delta);

// Characteristic cubic of the degree partition of K_kappa v (K_a u K_b):
//   x^3 + c2 x^2 + c1 x + c0  with
//   c2 = -(n - 3)
//   c1 = ab - 2n + 3
//   c0 = ab (kappa + 1) - n + 1
// Its largest root equals the spectral radius of that graph.
struct QuotientCubic {
  int n = 0, a = 0, b = 0, kappa = 0;
  double c2 = 0, c1 = 0, c0 = 0;
};
QuotientCubic quotient_cubic(int n, int a, int b, int kappa);  // a+b+kappa == n, 1 <= a <= b

// Quartic controlling the deleted-edge family K_{k-1} v (K_{delta-k+2} u
// K_{n-delta-1}) minus one edge inside the larger clique:
//   x^4 + c3 x^3 + c2 x^2 + c1 x + c0  with
//   c3 = -(n - 5)
//   c2 = (n - delta - 1)(delta - k - 2) - 4 delta + 7
//   c1 = (delta k + 2 delta + 2)(n - delta + k - 3) - (k^2 + 3)(n - 1) + 6
//   c0 = 2 ((delta - k + 1)(k (n - delta - 2) - 1) + (k - 1)(n - delta - 3))
// Its largest root lies in (n - delta + k - 4, n - delta + k - 3) whenever
// 3 <= k <= delta <= n - 3 and 2n >= (delta - k + 2)(k^2 - 2k + 7).
struct SuperQuartic {
  int n = 0, delta = 0, k = 0;
  double c3 = 0, c2 = 0, c1 = 0, c0 = 0;
};
SuperQuartic super_quartic(int n, int delta, int k);

struct BracketedRoot {
  double root = 0, lo = 0, hi = 0;  // [lo, hi] is the isolating bracket used
};

double cubic_largest_root(const QuotientCubic& c, double tol = default_root_tol);
BracketedRoot cubic_largest_root_bracketed(const QuotientCubic& c,
                                           double tol = default_root_tol);
double quartic_largest_root(const SuperQuartic& q, double tol = default_root_tol);
BracketedRoot quartic_largest_root_bracketed(const SuperQuartic& q,
                                             double tol = default_root_tol);

// g(x) = 2x^2 - (delta - k + 2)(k^2 - 2k + 7) x
//        + (delta - k + 2)((delta - k + 1)(k^2 - 2k + 5) - 2(k - 3));
// the quartic above evaluated at n - delta + k - 3 equals g(n).
double threshold_g(double x, int delta, int k);

// Spectral radius of K_kappa v (K_a u K_b) with the sides given in either
// order; b == 0 degenerates to the complete graph K_n (radius n - 1).
double join_split_rho(int n, int a, int b, int kappa,
                      double tol = default_root_tol);

}  // namespace specconn
