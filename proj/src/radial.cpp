#include "schouten/radial.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "schouten/errors.hpp"
#include "schouten/symfunc.hpp"

namespace schouten {

namespace {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void check_state(const RadialState& s) {
  if (!(s.r > 0.0)) throw std::invalid_argument("radial state: r must be positive");
  if (!(s.u > 0.0)) throw positivity_error("radial state: u must be positive");
}

}  // namespace

const char* to_string(ProfileStop s) {
  switch (s) {
    case ProfileStop::completed: return "completed";
    case ProfileStop::cone_violation: return "cone_violation";
    case ProfileStop::degenerate_closure: return "degenerate_closure";
    case ProfileStop::underflow: return "underflow";
    case ProfileStop::curvature_blowup: return "curvature_blowup";
  }
  return "unknown";
}

std::pair<double, double> radial_eigs(const RadialState& s, double upp, int n) {
  check_state(s);
  const double c1 = 2.0 / (n - 2);
  const double c3 = 2.0 / ((n - 2.0) * (n - 2.0));
  const double um = std::pow(s.u, -(n + 2.0) / (n - 2.0));
  const double um2 = std::pow(s.u, -2.0 * n / (n - 2.0));
  double l1 = -c1 * um * upp + (n - 1.0) * c3 * um2 * s.up * s.up;
  double l2 = -c1 * um * s.up / s.r - c3 * um2 * s.up * s.up;
  return {l1, l2};
}

double radial_lambda2(const RadialState& s, int n) {
  check_state(s);
  const double c1 = 2.0 / (n - 2);
  const double c3 = 2.0 / ((n - 2.0) * (n - 2.0));
  return -c1 * std::pow(s.u, -(n + 2.0) / (n - 2.0)) * s.up / s.r -
         c3 * std::pow(s.u, -2.0 * n / (n - 2.0)) * s.up * s.up;
}

double close_u2prime(const RadialState& s, int n, int k) {
  check_state(s);
  if (k < 1 || k > n) throw std::invalid_argument("close_u2prime: k out of range");

  const double l2 = radial_lambda2(s, n);
  const double coef = binomial(n - 1, k - 1) * std::pow(l2, k - 1);
  if (std::abs(coef) <= 1e-12)
    throw degenerate_closure("close_u2prime: vanishing lambda1-coefficient (lambda2 ~ 0, k >= 2)");

  const double l1 = (1.0 - binomial(n - 1, k) * std::pow(l2, k)) / coef;

  Vec lambda(n, l2);
  lambda[0] = l1;
  int bad = first_cone_failure(lambda, Cone{n, k});
  if (bad != 0)
    throw cone_violation("close_u2prime: closed eigenvalues left Gamma_" + std::to_string(k),
                         bad);

  const double c3 = 2.0 / ((n - 2.0) * (n - 2.0));
  const double um2 = std::pow(s.u, -2.0 * n / (n - 2.0));
  return ((n - 1.0) * c3 * um2 * s.up * s.up - l1) * ((n - 2.0) / 2.0) *
         std::pow(s.u, (n + 2.0) / (n - 2.0));
}

namespace {

struct Deriv {
  double du;  // du/dt
  double dw;  // dw/dt, w = r u'
  double upp;
};

// t = log r; state (u, w) with w = r u'(r); u'' from the sigma_k closure.
Deriv ode_rhs(double t, double u, double w, int n, int k) {
  double r = std::exp(t);
  RadialState s{r, u, w / r};
  if (!(u > 1e-12)) throw positivity_error("shoot: u underflow");
  double upp = close_u2prime(s, n, k);
  if (std::abs(upp) > 1e12)
    throw std::overflow_error("shoot: |u''| exceeded 1e12");
  return {w, w + r * r * upp, upp};
}

}  // namespace

RadialProfile shoot(const RadialState& init, double r_target, int steps, int n, int k) {
  check_state(init);
  if (!(r_target > 0.0)) throw std::invalid_argument("shoot: r_target must be positive");
  if (steps < 100) throw std::invalid_argument("shoot: at least 100 steps required");
  if (r_target == init.r) throw std::invalid_argument("shoot: r_target equals initial radius");

  RadialProfile prof;
  prof.n = n;
  prof.k = k;

  const double t0 = std::log(init.r);
  const double t1 = std::log(r_target);
  const double dt = (t1 - t0) / steps;
  if (!std::isfinite(dt) || dt == 0.0)
    throw std::invalid_argument("shoot: step size underflow");

  double u = init.u;
  double w = init.r * init.up;

  auto record = [&](double t, double uu, double ww, double upp) {
    double r = std::exp(t);
    prof.states.push_back(RadialState{r, uu, ww / r});
    prof.upp.push_back(upp);
  };

  auto stop_with = [&](ProfileStop why, const std::string& detail) {
    prof.stop = why;
    prof.stop_detail = detail;
  };

  try {
    Deriv d0 = ode_rhs(t0, u, w, n, k);
    record(t0, u, w, d0.upp);
  } catch (const cone_violation& e) {
    throw cone_violation(std::string("shoot: initial state violates the cone: ") + e.what(),
                         e.failing_sigma);
  }

  for (int i = 0; i < steps; ++i) {
    const double t = t0 + i * dt;
    try {
      Deriv k1 = ode_rhs(t, u, w, n, k);
      Deriv k2 = ode_rhs(t + 0.5 * dt, u + 0.5 * dt * k1.du, w + 0.5 * dt * k1.dw, n, k);
      Deriv k3 = ode_rhs(t + 0.5 * dt, u + 0.5 * dt * k2.du, w + 0.5 * dt * k2.dw, n, k);
      Deriv k4 = ode_rhs(t + dt, u + dt * k3.du, w + dt * k3.dw, n, k);
      u += dt / 6.0 * (k1.du + 2.0 * k2.du + 2.0 * k3.du + k4.du);
      w += dt / 6.0 * (k1.dw + 2.0 * k2.dw + 2.0 * k3.dw + k4.dw);
      Deriv dn = ode_rhs(t + dt, u, w, n, k);
      record(t + dt, u, w, dn.upp);
    } catch (const cone_violation& e) {
      stop_with(ProfileStop::cone_violation, e.what());
      return prof;
    } catch (const degenerate_closure& e) {
      stop_with(ProfileStop::degenerate_closure, e.what());
      return prof;
    } catch (const positivity_error& e) {
      stop_with(ProfileStop::underflow, e.what());
      return prof;
    } catch (const std::overflow_error& e) {
      stop_with(ProfileStop::curvature_blowup, e.what());
      return prof;
    }
  }
  return prof;
}

double exponent_fit(const RadialProfile& p, double r_lo, double r_hi) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (const RadialState& s : p.states) {
    if (s.r < r_lo || s.r > r_hi) continue;
    double x = std::log(s.r), y = std::log(s.u);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
    ++m;
  }
  if (m < 10)
    throw std::invalid_argument("exponent_fit: window holds fewer than 10 nodes");
  double denom = m * sxx - sx * sx;
  if (std::abs(denom) < 1e-30)
    throw std::invalid_argument("exponent_fit: degenerate abscissae");
  return (m * sxy - sx * sy) / denom;
}

namespace {

double pair_seminorm(const RadialProfile& p, double alpha, double r_lo, double r_hi) {
  const int m = static_cast<int>(p.states.size());
  std::vector<int> idx;
  for (int i = 0; i < m; ++i)
    if (p.states[i].r >= r_lo && p.states[i].r <= r_hi) idx.push_back(i);
  const double ex = -2.0 / (p.n - 2);
  double best = 0.0;
  for (size_t a = 0; a < idx.size(); ++a) {
    const double ra = p.states[idx[a]].r;
    const double xa = std::pow(p.states[idx[a]].u, ex);
    for (size_t b = a + 1; b < idx.size(); ++b) {
      if (idx[b] - idx[a] < 2) continue;  // skip adjacent nodes (differencing noise)
      const double rb = p.states[idx[b]].r;
      const double xb = std::pow(p.states[idx[b]].u, ex);
      double ratio = std::abs(xa - xb) / std::pow(std::abs(ra - rb), alpha);
      if (ratio > best) best = ratio;
    }
  }
  return best;
}

}  // namespace

double holder_seminorm(const RadialProfile& p, double alpha, double r_lo, double r_hi) {
  if (!(alpha > 0.0))
    throw std::invalid_argument("holder_seminorm: alpha must be positive");
  return pair_seminorm(p, alpha, r_lo, r_hi);
}

XiDiagnostics xi_diagnostics(const RadialProfile& p, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument("xi_diagnostics: alpha must lie in (0, 1]");
  const double inf = std::numeric_limits<double>::infinity();

  XiDiagnostics d;
  d.holder_seminorm = pair_seminorm(p, alpha, 0.0, inf);
  d.lipschitz_seminorm = pair_seminorm(p, 1.0, 0.0, inf);

  // Margin of xi'' >= 2/(n-2)^2 u^{(2-2n)/(n-2)} (u')^2, nonuniform
  // 3-point second difference.
  const double ex = -2.0 / (p.n - 2);
  const double cb = 2.0 / ((p.n - 2.0) * (p.n - 2.0));
  double worst = 0.0;
  bool any = false;
  for (size_t i = 1; i + 1 < p.states.size(); ++i) {
    const RadialState &a = p.states[i - 1], &b = p.states[i], &c = p.states[i + 1];
    double xa = std::pow(a.u, ex), xb = std::pow(b.u, ex), xc = std::pow(c.u, ex);
    double xi2 = 2.0 * ((xc - xb) / (c.r - b.r) - (xb - xa) / (b.r - a.r)) / (c.r - a.r);
    double bound = cb * std::pow(b.u, (2.0 - 2.0 * p.n) / (p.n - 2.0)) * b.up * b.up;
    double margin = xi2 - bound;
    if (!any || margin < worst) { worst = margin; any = true; }
  }
  d.convexity_min = any ? worst : 0.0;
  return d;
}

ExactPowerSolution exact_power(int n, int k) {
  if (k < 1) throw std::invalid_argument("exact_power: k must be >= 1");
  if (2 * k >= n)
    throw cone_violation("exact_power: no power solution for k >= n/2 (sigma_k(-1,1,...,1) <= 0)",
                         k);
  Vec bar(n, 1.0);
  bar[0] = -1.0;
  double sk = sigma(bar, k);  // > 0 for k < n/2
  ExactPowerSolution sol;
  sol.n = n;
  sol.k = k;
  sol.exponent = -(n - 2) / 2.0;
  sol.amplitude = std::pow(std::ldexp(sk, -k), (n - 2.0) / (4.0 * k));

  // Self-check: F_k(A^u) = 1 along the ray.
  for (int i = 0; i < 20; ++i) {
    double r = std::pow(10.0, -1.0 + 2.0 * i / 19.0);
    RadialState s{r, sol.amplitude * std::pow(r, sol.exponent),
                  sol.amplitude * sol.exponent * std::pow(r, sol.exponent - 1.0)};
    double upp = sol.amplitude * sol.exponent * (sol.exponent - 1.0) *
                 std::pow(r, sol.exponent - 2.0);
    auto [l1, l2] = radial_eigs(s, upp, n);
    Vec lambda(n, l2);
    lambda[0] = l1;
    double fk = f_k(lambda, Cone{n, k});
    if (std::abs(fk - 1.0) > 1e-12)
      throw std::logic_error("exact_power: self-check failed, |F_k - 1| > 1e-12");
  }
  return sol;
}

Field field_of(const ExactPowerSolution& sol) {
  return Field::power(sol.n, sol.amplitude, sol.exponent);
}

RadialProfile synthetic_power_profile(int n, int k, double amplitude, double exponent,
                                      double r_lo, double r_hi, int nodes) {
  if (nodes < 2 || !(0.0 < r_lo && r_lo < r_hi))
    throw std::invalid_argument("synthetic_power_profile: bad grid");
  RadialProfile p;
  p.n = n;
  p.k = k;
  const double lq = std::log(r_hi / r_lo) / (nodes - 1);
  for (int i = 0; i < nodes; ++i) {
    double r = r_lo * std::exp(i * lq);
    p.states.push_back(RadialState{r, amplitude * std::pow(r, exponent),
                                   amplitude * exponent * std::pow(r, exponent - 1.0)});
    p.upp.push_back(amplitude * exponent * (exponent - 1.0) * std::pow(r, exponent - 2.0));
  }
  return p;
}

void write_profile_csv(const RadialProfile& p, std::ostream& os) {
  os << "r,u,up,lambda1,lambda2\n";
  char buf[256];
  for (size_t i = 0; i < p.states.size(); ++i) {
    auto [l1, l2] = radial_eigs(p.states[i], p.upp[i], p.n);
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", p.states[i].r,
                  p.states[i].u, p.states[i].up, l1, l2);
    os << buf;
  }
}

}  // namespace schouten
