#include "schouten/movingsphere.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "schouten/errors.hpp"
#include "schouten/sampling.hpp"

namespace schouten {

SampledDomain SampledDomain::annulus(int n, int count, double r_min, double r_max) {
  if (!(0.0 < r_min && r_min < r_max))
    throw std::invalid_argument("SampledDomain: need 0 < r_min < r_max");
  SampledDomain d;
  d.n = n;
  d.r_min = r_min;
  d.r_max = r_max;
  d.points = annulus_points(n, count, r_min, r_max);
  return d;
}

SampledDomain SampledDomain::refined() const {
  SampledDomain d;
  d.n = n;
  d.r_min = r_min;
  d.r_max = r_max;
  d.points = annulus_points(n, 2 * static_cast<int>(points.size()), r_min, r_max);
  return d;
}

double SampledDomain::spacing() const {
  std::vector<double> radii;
  radii.reserve(points.size());
  for (const Vec& p : points) radii.push_back(norm(p));
  std::sort(radii.begin(), radii.end());
  double h = radii.empty() ? 0.0 : radii.front() - r_min;
  for (size_t i = 1; i < radii.size(); ++i) h = std::max(h, radii[i] - radii[i - 1]);
  return h;
}

double ms_value(const Field& field, const Vec& x, double lambda, const Vec& y) {
  if (!(lambda > 0.0)) throw std::invalid_argument("ms_value: lambda must be positive");
  Vec s = y - x;
  double rho = norm(s);
  if (rho < 1e-14) throw singular_point("ms_value: y coincides with the sphere center");
  const int n = field.dim();
  double scale = lambda * lambda / (rho * rho);
  return std::pow(lambda / rho, n - 2) * field.value(x + scale * s);
}

namespace {

// One sweep; fills only violations (no persistence logic).
void scan(const Field& field, const Vec& x, double lambda, const SampledDomain& domain,
          double tol, std::vector<Violation>* out, double* min_abs_deficit,
          const Vec** min_point) {
  for (const Vec& y : domain.points) {
    Vec s = y - x;
    double rho = norm(s);
    if (rho < lambda) continue;
    double deficit = field.value(y) - ms_value(field, x, lambda, y);
    if (deficit < -tol) out->push_back(Violation{y, -deficit});
    if (min_abs_deficit && std::abs(deficit) < *min_abs_deficit) {
      *min_abs_deficit = std::abs(deficit);
      *min_point = &y;
    }
  }
}

bool any_violation(const Field& field, const Vec& x, double lambda,
                   const SampledDomain& domain, double tol) {
  for (const Vec& y : domain.points) {
    Vec s = y - x;
    double rho = norm(s);
    if (rho < lambda) continue;
    if (field.value(y) - ms_value(field, x, lambda, y) < -tol) return true;
  }
  return false;
}

}  // namespace

SphereCheckResult ms_inequality(const Field& field, const Vec& x, double lambda,
                                const SampledDomain& domain, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("ms_inequality: tol must be positive");
  SphereCheckResult res;
  res.lambda_bar = lambda;

  double min_abs = std::numeric_limits<double>::infinity();
  const Vec* min_pt = nullptr;
  std::vector<Violation> candidates;
  scan(field, x, lambda, domain, tol, &candidates, &min_abs, &min_pt);

  if (!candidates.empty()) {
    // Violations must survive a 2x grid refinement before being reported.
    if (any_violation(field, x, lambda, domain.refined(), tol))
      res.violations = std::move(candidates);
  }
  if (min_pt && min_abs <= tol) res.touched_at = *min_pt;
  return res;
}

CriticalLambdaResult critical_lambda(const Field& field, const Vec& x,
                                     const SampledDomain& domain, double tol) {
  const double ax = norm(x);
  if (!(ax > 0.0)) throw std::invalid_argument("critical_lambda: |x| must be positive");
  if (!(tol > 0.0)) throw std::invalid_argument("critical_lambda: tol must be positive");

  const double viol_tol = 1e-10;
  CriticalLambdaResult res;

  double lo = domain.spacing();
  if (ax <= 2.0 * domain.r_min || lo >= 2.0 * ax) {
    res.degenerate = true;
    res.note = "no admissible probe radius for this |x| on this grid";
    return res;
  }
  if (!ms_inequality(field, x, lo, domain, viol_tol).violations.empty()) {
    res.degenerate = true;
    res.note = "violations already present at the smallest probe lambda";
    return res;
  }
  double hi = 2.0 * ax;
  if (ms_inequality(field, x, hi, domain, viol_tol).violations.empty()) {
    res.lambda_bar = hi;
    res.unbounded = true;
    res.note = "no violation found up to 2|x|";
    return res;
  }

  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (ms_inequality(field, x, mid, domain, viol_tol).violations.empty())
      lo = mid;
    else
      hi = mid;
  }
  res.lambda_bar = lo;
  return res;
}

std::vector<std::pair<double, double>> ratio_estimate(const Field& field,
                                                      const std::vector<double>& radii,
                                                      int samples_per_sphere) {
  const int n = field.dim();
  std::vector<Vec> dirs = sphere_points(n, samples_per_sphere);
  std::vector<std::pair<double, double>> out;
  out.reserve(radii.size());
  for (double r : radii) {
    if (!(r > 0.0 && r < 1.0))
      throw std::invalid_argument("ratio_estimate: radii must lie in (0,1)");
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (const Vec& d : dirs) {
      double v = field.value(r * d);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    out.emplace_back(r, hi / lo - 1.0);
  }
  return out;
}

std::string to_json(const SphereCheckResult& r) {
  nlohmann::json j;
  j["lambda_bar"] = r.lambda_bar;
  j["violations"] = nlohmann::json::array();
  for (const Violation& v : r.violations)
    j["violations"].push_back({{"point", v.point}, {"deficit", v.deficit}});
  if (r.touched_at)
    j["touched_at"] = *r.touched_at;
  else
    j["touched_at"] = nullptr;
  return j.dump();
}

}  // namespace schouten
