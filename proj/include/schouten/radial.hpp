#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "schouten/fields.hpp"
#include "schouten/linalg.hpp"

namespace schouten {

struct RadialState {
  double r;
  double u;
  double up;  // u'(r)
};

enum class ProfileStop {
  completed,
  cone_violation,
  degenerate_closure,
  underflow,          // u fell below 1e-12
  curvature_blowup,   // |u''| exceeded 1e12
};

const char* to_string(ProfileStop s);

/// Discretized radial solution. `upp[i]` is u''(r_i) as used by the
/// integrator (the ODE closure for shot profiles, the closed form for
/// synthetic ones).
struct RadialProfile {
  int n = 0;
  int k = 0;
  std::vector<RadialState> states;
  Vec upp;
  ProfileStop stop = ProfileStop::completed;
  std::string stop_detail;

  double r_front() const { return states.front().r; }
  double r_back() const { return states.back().r; }
};

/// Eigenvalues of A^u for a radial field at radius r:
/// A^u = diag(lambda1, lambda2, ..., lambda2).
std::pair<double, double> radial_eigs(const RadialState& s, double upp, int n);

/// lambda2 alone (does not need u'').
double radial_lambda2(const RadialState& s, int n);

/// u'' that closes sigma_k(lambda(A^u)) = 1 in the radial ansatz:
/// sigma_k(l1, l2 * 1) = l1 C(n-1,k-1) l2^{k-1} + C(n-1,k) l2^k is solved
/// linearly for l1, then inverted for u''. Throws degenerate_closure when
/// the l1-coefficient vanishes and cone_violation when the closed
/// eigenvalues leave Gamma_k.
double close_u2prime(const RadialState& s, int n, int k);

/// Classical 4th-order fixed-step integration of u'' = close_u2prime in
/// t = log r, from init.r to r_target (either direction). Aborts cleanly
/// (truncated profile + flag) at cone exit, closure degeneracy, u -> 0, or
/// curvature blow-up.
RadialProfile shoot(const RadialState& init, double r_target, int steps, int n, int k);

/// Least-squares slope of log u against log r over nodes with
/// r in [r_lo, r_hi]; needs at least 10 nodes.
double exponent_fit(const RadialProfile& p, double r_lo, double r_hi);

struct XiDiagnostics {
  double holder_seminorm;
  double lipschitz_seminorm;
  double convexity_min;  // min over nodes of xi'' minus the A^u > 0 bound
};

/// Diagnostics of xi = u^{-2/(n-2)}: the alpha-Holder seminorm over node
/// pairs at least 2 grid steps apart, the same at alpha = 1, and the
/// margin of the convexity inequality
///   xi'' >= 2/(n-2)^2 u^{(2-2n)/(n-2)} (u')^2
/// (valid when A^u is positive definite, i.e. the k = n cone).
XiDiagnostics xi_diagnostics(const RadialProfile& p, double alpha);

/// Window-restricted alpha-seminorm (same pair rule).
double holder_seminorm(const RadialProfile& p, double alpha, double r_lo, double r_hi);

struct ExactPowerSolution {
  int n;
  int k;
  double amplitude;
  double exponent;  // -(n-2)/2
};

/// The singular solution u = a |x|^{-(n-2)/2} with F_k(A^u) = 1:
/// a = (2^{-k} sigma_k(-1,1,...,1))^{(n-2)/(4k)}. Only exists for
/// k < n/2 (cone_violation otherwise). Self-checks F_k = 1 at 20 radii.
ExactPowerSolution exact_power(int n, int k);

Field field_of(const ExactPowerSolution& sol);

/// Closed-form power profile u = amplitude * r^exponent on a log-spaced
/// grid (test/synthetic input for the Holder estimators).
RadialProfile synthetic_power_profile(int n, int k, double amplitude, double exponent,
                                      double r_lo, double r_hi, int nodes);

/// CSV with header r,u,up,lambda1,lambda2 at 17 significant digits.
void write_profile_csv(const RadialProfile& p, std::ostream& os);

}  // namespace schouten
