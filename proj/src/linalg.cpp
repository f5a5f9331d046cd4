#include "schouten/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

namespace schouten {

double dot(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

Vec operator+(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec operator*(double s, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) s += at(i, j) * at(i, j);
  return std::sqrt(s);
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& other) {
  assert(n_ == other.n_);
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += other.a_[i];
  return *this;
}

SymMatrix& SymMatrix::operator*=(double s) {
  for (double& v : a_) v *= s;
  return *this;
}

SymMatrix SymMatrix::identity(int n) {
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

SymMatrix SymMatrix::outer(const Vec& v, double s) {
  SymMatrix m(static_cast<int>(v.size()));
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j <= i; ++j) m.at(i, j) = s * v[i] * v[j];
  return m;
}

Vec SymMatrix::apply(const Vec& x) const {
  assert(static_cast<int>(x.size()) == n_);
  Vec y(n_, 0.0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) y[i] += at(i, j) * x[j];
  return y;
}

namespace {

double offdiag_norm2(const std::vector<std::vector<double>>& a) {
  const int n = static_cast<int>(a.size());
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s += a[i][j] * a[i][j];
  return s;
}

}  // namespace

EigenDecomposition jacobi_eigensystem(const SymMatrix& m) {
  const int n = m.size();
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  std::vector<std::vector<double>> q(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    q[i][i] = 1.0;
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
  }

  double total = m.frobenius_norm();
  const double stop = std::max(1e-300, 1e-30 * total * total);

  for (int sweep = 0; sweep < 64 && offdiag_norm2(a) > stop; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int r = p + 1; r < n; ++r) {
        double apr = a[p][r];
        if (std::abs(apr) < 1e-300) continue;
        double theta = (a[r][r] - a[p][p]) / (2.0 * apr);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        double tau = s / (1.0 + c);

        double app = a[p][p], arr = a[r][r];
        a[p][p] = app - t * apr;
        a[r][r] = arr + t * apr;
        a[p][r] = a[r][p] = 0.0;
        for (int i = 0; i < n; ++i) {
          if (i != p && i != r) {
            double aip = a[i][p], air = a[i][r];
            a[i][p] = a[p][i] = aip - s * (air + tau * aip);
            a[i][r] = a[r][i] = air + s * (aip - tau * air);
          }
          double qip = q[i][p], qir = q[i][r];
          q[i][p] = qip - s * (qir + tau * qip);
          q[i][r] = qir + s * (qip - tau * qir);
        }
      }
    }
  }

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a[i][i] < a[j][j]; });

  EigenDecomposition ed;
  ed.values.resize(n);
  ed.vectors.assign(n, Vec(n));
  for (int j = 0; j < n; ++j) {
    ed.values[j] = a[order[j]][order[j]];
    for (int i = 0; i < n; ++i) ed.vectors[j][i] = q[i][order[j]];
  }
  return ed;
}

Vec jacobi_eigenvalues(const SymMatrix& m) { return jacobi_eigensystem(m).values; }

}  // namespace schouten
