#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "schouten/linalg.hpp"

namespace schouten {

/// Scalar samples on the uniform lattice {h*i : i integer vector,
/// 0 < |i| <= extent} (punctured ball, origin node excluded).
class GridField {
 public:
  GridField(int n, int extent, double h);

  static GridField from_function(int n, int extent, double h,
                                 const std::function<double(const Vec&)>& f);
  /// Rows i1,...,in,value. Dimension from the column count, extent from
  /// the largest index.
  static GridField from_csv(std::istream& is, double h);

  int dim() const { return n_; }
  int extent() const { return extent_; }
  double spacing() const { return h_; }

  bool has_node(const std::vector<int>& idx) const;
  double value(const std::vector<int>& idx) const;
  double& value(const std::vector<int>& idx);
  Vec coords(const std::vector<int>& idx) const;

  /// Visits every node index.
  void for_each_node(const std::function<void(const std::vector<int>&)>& fn) const;

 private:
  size_t linear(const std::vector<int>& idx) const;
  int n_;
  int extent_;
  int side_;
  double h_;
  std::vector<double> values_;
};

/// (2n+1)-point stencil sum_d (u(x+h e_d) + u(x-h e_d) - 2u(x)) / h^2.
/// Throws std::out_of_range when a neighbor is missing.
double discrete_laplacian(const GridField& f, const std::vector<int>& node);

struct SuperharmonicResult {
  bool ok = true;
  std::vector<int> worst_node;
  double worst_laplacian = 0.0;
  double worst_threshold = 0.0;
};

/// Checks discrete_laplacian <= threshold at every node whose full stencil
/// exists. With consistency_scaled the per-node threshold is
/// tol * (1 + h^2 |x|^{-(n+2)}), the stencil's own consistency envelope for
/// fields with an origin singularity; otherwise the threshold is tol flat.
SuperharmonicResult superharmonic_check(const GridField& f, double tol,
                                        bool consistency_scaled = true);

struct ShellReport {
  double r;       // shell is {r/2 <= |x| <= r}
  double inf_u;
  int nodes;
};

struct TwoPlaneResult {
  bool passes = false;
  std::vector<ShellReport> shells;  // decreasing r
};

std::string to_json(const TwoPlaneResult& r, double a);

/// Discrete illustration of the two-plane lemma: verifies
/// u >= max(a + p.x, a + q.x) - delta(|x|) at every node, then reports the
/// infimum over dyadic shells; passes when the last three shell infima sit
/// strictly above a with a non-decreasing margin toward the puncture.
/// Preconditions: p != q and a superharmonic_check pass at super_tol.
TwoPlaneResult two_plane_liminf(const GridField& f, double a, const Vec& p, const Vec& q,
                                const std::function<double(double)>& delta_bound,
                                double super_tol = 0.1);

}  // namespace schouten
