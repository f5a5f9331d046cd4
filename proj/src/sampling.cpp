#include "schouten/sampling.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace schouten {

double halton(uint64_t index, unsigned base) {
  double f = 1.0, r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * (index % base);
    index /= base;
  }
  return r;
}

double inverse_normal_cdf(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("inverse_normal_cdf: p in (0,1) required");
  // Acklam 2003 coefficients.
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425, phigh = 1 - plow;
  double q, r;
  if (p < plow) {
    q = std::sqrt(-2 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
  }
  if (p <= phigh) {
    q = p - 0.5;
    r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
  }
  q = std::sqrt(-2 * std::log(1 - p));
  return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
         ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
}

namespace {

const unsigned kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

Vec halton_direction(int n, uint64_t idx, int base_offset) {
  Vec dir(n);
  double len2 = 0.0;
  for (int d = 0; d < n; ++d) {
    double h = halton(idx, kPrimes[base_offset + d]);
    // Keep away from 0/1 so the inverse CDF stays finite.
    h = 0.5 + 0.9999 * (h - 0.5);
    dir[d] = inverse_normal_cdf(h);
    len2 += dir[d] * dir[d];
  }
  if (len2 < 1e-30) { dir[0] = 1.0; len2 = 1.0; }
  double inv = 1.0 / std::sqrt(len2);
  for (double& v : dir) v *= inv;
  return dir;
}

}  // namespace

std::vector<Vec> annulus_points(int n, int count, double r_min, double r_max,
                                uint64_t start_index) {
  assert(n >= 2 && static_cast<size_t>(n) + 1 <= sizeof(kPrimes) / sizeof(kPrimes[0]));
  assert(r_min > 0.0 && r_min < r_max);
  std::vector<Vec> pts;
  pts.reserve(count);
  const double lr = std::log(r_max / r_min);
  for (int i = 0; i < count; ++i) {
    uint64_t idx = start_index + i;
    double r = r_min * std::exp(lr * halton(idx, kPrimes[0]));
    Vec p = halton_direction(n, idx, 1);
    for (double& v : p) v *= r;
    pts.push_back(std::move(p));
  }
  return pts;
}

std::vector<Vec> sphere_points(int n, int count, uint64_t start_index) {
  std::vector<Vec> pts;
  pts.reserve(count);
  for (int i = 0; i < count; ++i)
    pts.push_back(halton_direction(n, start_index + i, 0));
  return pts;
}

std::vector<Vec> random_orthogonal(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Vec> q(n, Vec(n, 0.0));
  for (int i = 0; i < n; ++i) q[i][i] = 1.0;

  for (int rep = 0; rep < n; ++rep) {
    Vec v(n);
    double len2 = 0.0;
    for (int i = 0; i < n; ++i) { v[i] = gauss(rng); len2 += v[i] * v[i]; }
    if (len2 < 1e-20) continue;
    double inv = 1.0 / std::sqrt(len2);
    for (double& x : v) x *= inv;
    // rows <- rows (I - 2 v v^T)
    for (int i = 0; i < n; ++i) {
      double proj = dot(q[i], v);
      for (int j = 0; j < n; ++j) q[i][j] -= 2.0 * proj * v[j];
    }
  }
  return q;
}

Vec apply_matrix(const std::vector<Vec>& rows, const Vec& x) {
  Vec y(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) y[i] = dot(rows[i], x);
  return y;
}

}  // namespace schouten
