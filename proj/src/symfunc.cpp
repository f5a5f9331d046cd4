#include "schouten/symfunc.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>

#include <cmath>
#include <stdexcept>

namespace schouten {

namespace {

using bigint = boost::multiprecision::cpp_int;

void check_k(const Vec& lambda, int k) {
  const int n = static_cast<int>(lambda.size());
  if (k < 1 || k > n)
    throw std::invalid_argument("sigma: k must satisfy 1 <= k <= n, got k=" +
                                std::to_string(k) + ", n=" + std::to_string(n));
}

// Coefficients of prod_i (t + lambda_i): e[j] = sigma_j.
Vec expand_product(const Vec& lambda, int kmax) {
  Vec e(kmax + 1, 0.0);
  e[0] = 1.0;
  int used = 0;
  for (double li : lambda) {
    ++used;
    int top = std::min(kmax, used);
    for (int j = top; j >= 1; --j) e[j] += li * e[j - 1];
  }
  return e;
}

double enumerate_subsets(const Vec& lambda, int k) {
  const int n = static_cast<int>(lambda.size());
  // Lexicographic k-combinations.
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  double total = 0.0;
  while (true) {
    double prod = 1.0;
    for (int i : idx) prod *= lambda[i];
    total += prod;
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return total;
}

}  // namespace

double sigma(const Vec& lambda, int k) {
  check_k(lambda, k);
  const int n = static_cast<int>(lambda.size());
  // Canonical entry order makes permutation symmetry exact in floating
  // point, not just up to rounding.
  Vec sorted = lambda;
  std::sort(sorted.begin(), sorted.end());
  if (n <= 12) return enumerate_subsets(sorted, k);
  return expand_product(sorted, k)[k];
}

Vec sigma_all(const Vec& lambda) {
  Vec sorted = lambda;
  std::sort(sorted.begin(), sorted.end());
  return expand_product(sorted, static_cast<int>(sorted.size()));
}

Vec sigma_gradient(const Vec& lambda, int k) {
  check_k(lambda, k);
  const int n = static_cast<int>(lambda.size());
  Vec grad(n);
  Vec reduced(n - 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0, t = 0; j < n; ++j)
      if (j != i) reduced[t++] = lambda[j];
    grad[i] = (k == 1) ? 1.0 : sigma(reduced, k - 1);
  }
  return grad;
}

int first_cone_failure(const Vec& lambda, const Cone& cone) {
  check_k(lambda, cone.k);
  if (static_cast<int>(lambda.size()) != cone.n)
    throw std::invalid_argument("cone dimension does not match eigenvalue vector");
  for (int j = 1; j <= cone.k; ++j)
    if (!(sigma(lambda, j) > 0.0)) return j;
  return 0;
}

bool in_gamma_k(const Vec& lambda, const Cone& cone) {
  return first_cone_failure(lambda, cone) == 0;
}

double f_k(const Vec& lambda, const Cone& cone) {
  int bad = first_cone_failure(lambda, cone);
  if (bad != 0)
    throw cone_violation("f_k: eigenvalues outside Gamma_" + std::to_string(cone.k) +
                             " (sigma_" + std::to_string(bad) + " <= 0)",
                         bad);
  return std::pow(sigma(lambda, cone.k), 1.0 / cone.k);
}

std::vector<SignTableRow> sign_table(int n) {
  if (n < 2 || n > 64)
    throw std::invalid_argument("sign_table: n must lie in [2, 64]");

  // Route (a): integer product expansion of (t - 1)(t + 1)^{n-1}.
  std::vector<bigint> e(n + 1, 0);
  e[0] = 1;
  for (int used = 1; used <= n; ++used) {
    const int li = (used == 1) ? -1 : 1;
    for (int j = std::min(n, used); j >= 1; --j) e[j] += li * e[j - 1];
  }

  // Route (b): sigma_k * (n-k)! = (n-1)(n-2)...(k+1) * (n - 2k), from
  // d^m/dt^m f(0) = m! sigma_{n-m} with m = n - k.
  std::vector<SignTableRow> rows;
  rows.reserve(n);
  for (int k = 1; k <= n; ++k) {
    bigint poly;
    if (k == n) {
      poly = -1;  // zeroth derivative: f(0) = (0-1)(0+1)^{n-1}
    } else {
      bigint numer = n - 2 * k;
      for (int m = k + 1; m <= n - 1; ++m) numer *= m;
      bigint denom = 1;
      for (int m = 2; m <= n - k; ++m) denom *= m;
      if (numer % denom != 0)
        throw std::logic_error("sign_table: derivative identity produced a non-integer");
      poly = numer / denom;
    }

    if (poly != e[k])
      throw std::logic_error("sign_table: route disagreement at n=" + std::to_string(n) +
                             ", k=" + std::to_string(k));

    SignTableRow row;
    row.k = k;
    row.sign = (e[k] > 0) - (e[k] < 0);
    row.value_direct = e[k].str();
    row.value_poly = poly.str();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace schouten
