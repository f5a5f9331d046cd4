#pragma once

#include <cstddef>
#include <vector>

namespace schouten {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b);
double norm(const Vec& a);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(double s, const Vec& a);

/// Dense symmetric matrix, packed lower triangle. Symmetry is exact by
/// construction: (i,j) and (j,i) address the same slot.
class SymMatrix {
 public:
  SymMatrix() : n_(0) {}
  explicit SymMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * (n + 1) / 2, 0.0) {}

  int size() const { return n_; }
  double& at(int i, int j) { return a_[idx(i, j)]; }
  double at(int i, int j) const { return a_[idx(i, j)]; }

  double trace() const;
  double frobenius_norm() const;

  SymMatrix& operator+=(const SymMatrix& other);
  SymMatrix& operator*=(double s);

  static SymMatrix identity(int n);
  /// s * v v^T
  static SymMatrix outer(const Vec& v, double s = 1.0);

  /// y = M x
  Vec apply(const Vec& x) const;

 private:
  size_t idx(int i, int j) const {
    if (i < j) { int t = i; i = j; j = t; }
    return static_cast<size_t>(i) * (i + 1) / 2 + j;
  }
  int n_;
  std::vector<double> a_;
};

struct EigenDecomposition {
  Vec values;                            // ascending
  std::vector<Vec> vectors;              // vectors[j] pairs with values[j]
};

/// Cyclic Jacobi rotations; exact for the symmetric class at desk sizes.
/// Off-diagonal mass is driven below ~1e-15 * ||M||.
Vec jacobi_eigenvalues(const SymMatrix& m);
EigenDecomposition jacobi_eigensystem(const SymMatrix& m);

}  // namespace schouten
