#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schouten/fields.hpp"
#include "schouten/linalg.hpp"

namespace schouten {

/// Low-discrepancy sample of the annulus {r_min <= |y| <= r_max}. Points
/// come from one fixed Halton sequence, so refined() extends the set and
/// keeps every existing point.
struct SampledDomain {
  int n = 0;
  double r_min = 0.0;
  double r_max = 0.0;
  std::vector<Vec> points;

  static SampledDomain annulus(int n, int count, double r_min, double r_max);

  /// Same sequence, twice the points.
  SampledDomain refined() const;

  /// Grid spacing h: the largest gap between consecutive sorted point
  /// radii (the coarsest radial scale the sample resolves).
  double spacing() const;
};

struct Violation {
  Vec point;
  double deficit;  // u_{x,lambda}(y) - u(y) > tol
};

struct SphereCheckResult {
  double lambda_bar = 0.0;
  std::vector<Violation> violations;
  std::optional<Vec> touched_at;
};

std::string to_json(const SphereCheckResult& r);

/// Moving-sphere transform value
///   u_{x,lambda}(y) = (lambda/|y-x|)^{n-2} u(x + lambda^2 (y-x)/|y-x|^2).
double ms_value(const Field& field, const Vec& x, double lambda, const Vec& y);

/// Checks u_{x,lambda}(y) <= u(y) at all domain points with |y-x| >= lambda.
/// A violation is recorded only when the deficit exceeds tol AND persists
/// on the 2x refined grid. touched_at reports the point of closest
/// approach when |u - u_{x,lambda}| <= tol somewhere.
SphereCheckResult ms_inequality(const Field& field, const Vec& x, double lambda,
                                const SampledDomain& domain, double tol);

struct CriticalLambdaResult {
  double lambda_bar = 0.0;
  bool degenerate = false;  // no admissible lambda at the smallest probe
  bool unbounded = false;   // no violation even at 2|x|
  std::string note;
};

/// Largest lambda in [spacing, 2|x|] with no violation on the grid,
/// located by bisection to width <= tol.
CriticalLambdaResult critical_lambda(const Field& field, const Vec& x,
                                     const SampledDomain& domain, double tol);

/// For each radius r: max over direction pairs of |u(x)/u(y) - 1| with
/// |x| = |y| = r.
std::vector<std::pair<double, double>> ratio_estimate(const Field& field,
                                                      const std::vector<double>& radii,
                                                      int samples_per_sphere);

}  // namespace schouten
