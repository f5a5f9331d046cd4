#include "schouten/gridcheck.hpp"

#include <json.hpp>

#include <cmath>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace schouten {

namespace {

std::string node_name(const std::vector<int>& idx) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
  os << ")";
  return os.str();
}

}  // namespace

GridField::GridField(int n, int extent, double h)
    : n_(n), extent_(extent), side_(2 * extent + 1), h_(h) {
  if (n < 1 || n > 4) throw std::invalid_argument("GridField: dimension must be 1..4");
  if (extent < 2) throw std::invalid_argument("GridField: extent must be >= 2");
  if (!(h > 0.0)) throw std::invalid_argument("GridField: spacing must be positive");
  double total = std::pow(static_cast<double>(side_), n_);
  if (total > 3.0e7) throw std::invalid_argument("GridField: grid too large");
  values_.assign(static_cast<size_t>(total), std::numeric_limits<double>::quiet_NaN());
}

size_t GridField::linear(const std::vector<int>& idx) const {
  size_t lin = 0;
  for (int d = 0; d < n_; ++d) {
    int shifted = idx[d] + extent_;
    lin = lin * side_ + static_cast<size_t>(shifted);
  }
  return lin;
}

bool GridField::has_node(const std::vector<int>& idx) const {
  if (static_cast<int>(idx.size()) != n_) return false;
  long long r2 = 0;
  bool origin = true;
  for (int d = 0; d < n_; ++d) {
    if (idx[d] < -extent_ || idx[d] > extent_) return false;
    r2 += static_cast<long long>(idx[d]) * idx[d];
    if (idx[d] != 0) origin = false;
  }
  return !origin && r2 <= static_cast<long long>(extent_) * extent_;
}

double GridField::value(const std::vector<int>& idx) const {
  if (!has_node(idx)) throw std::out_of_range("GridField: no node " + node_name(idx));
  return values_[linear(idx)];
}

double& GridField::value(const std::vector<int>& idx) {
  if (!has_node(idx)) throw std::out_of_range("GridField: no node " + node_name(idx));
  return values_[linear(idx)];
}

Vec GridField::coords(const std::vector<int>& idx) const {
  Vec x(n_);
  for (int d = 0; d < n_; ++d) x[d] = h_ * idx[d];
  return x;
}

void GridField::for_each_node(const std::function<void(const std::vector<int>&)>& fn) const {
  std::vector<int> idx(n_, -extent_);
  while (true) {
    if (has_node(idx)) fn(idx);
    int d = n_ - 1;
    while (d >= 0 && idx[d] == extent_) { idx[d] = -extent_; --d; }
    if (d < 0) break;
    ++idx[d];
  }
}

GridField GridField::from_function(int n, int extent, double h,
                                   const std::function<double(const Vec&)>& f) {
  GridField g(n, extent, h);
  g.for_each_node([&](const std::vector<int>& idx) {
    g.value(idx) = f(g.coords(idx));
  });
  return g;
}

GridField GridField::from_csv(std::istream& is, double h) {
  std::vector<std::vector<int>> indices;
  std::vector<double> vals;
  int n = -1;
  int extent = 0;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() < 2) throw std::invalid_argument("GridField csv: malformed row");
    if (!indices.empty() && static_cast<int>(cells.size()) - 1 != n)
      throw std::invalid_argument("GridField csv: inconsistent column count");
    n = static_cast<int>(cells.size()) - 1;
    std::vector<int> idx(n);
    for (int d = 0; d < n; ++d) {
      idx[d] = std::stoi(cells[d]);
      extent = std::max(extent, std::abs(idx[d]));
    }
    indices.push_back(std::move(idx));
    vals.push_back(std::stod(cells.back()));
  }
  if (indices.empty()) throw std::invalid_argument("GridField csv: no rows");
  GridField g(n, std::max(extent, 2), h);
  for (size_t i = 0; i < indices.size(); ++i)
    if (g.has_node(indices[i])) g.value(indices[i]) = vals[i];
  return g;
}

double discrete_laplacian(const GridField& f, const std::vector<int>& node) {
  if (!f.has_node(node)) throw std::out_of_range("discrete_laplacian: no node " + node_name(node));
  const double center = f.value(node);
  double acc = 0.0;
  std::vector<int> nb = node;
  for (int d = 0; d < f.dim(); ++d) {
    for (int step : {-1, 1}) {
      nb[d] = node[d] + step;
      if (!f.has_node(nb))
        throw std::out_of_range("discrete_laplacian: stencil leaves the grid at " +
                                node_name(nb));
      acc += f.value(nb) - center;
      nb[d] = node[d];
    }
  }
  return acc / (f.spacing() * f.spacing());
}

namespace {

bool stencil_complete(const GridField& f, const std::vector<int>& node) {
  std::vector<int> nb = node;
  for (int d = 0; d < f.dim(); ++d) {
    for (int step : {-1, 1}) {
      nb[d] = node[d] + step;
      if (!f.has_node(nb)) return false;
      nb[d] = node[d];
    }
  }
  return true;
}

}  // namespace

SuperharmonicResult superharmonic_check(const GridField& f, double tol,
                                        bool consistency_scaled) {
  SuperharmonicResult res;
  const double h2 = f.spacing() * f.spacing();
  double worst_excess = -std::numeric_limits<double>::infinity();
  f.for_each_node([&](const std::vector<int>& idx) {
    if (!stencil_complete(f, idx)) return;
    double lap = discrete_laplacian(f, idx);
    double threshold = tol;
    if (consistency_scaled) {
      double r = norm(f.coords(idx));
      threshold = tol * (1.0 + h2 * std::pow(r, -(f.dim() + 2.0)));
    }
    double excess = lap - threshold;
    if (excess > worst_excess) {
      worst_excess = excess;
      res.worst_node = idx;
      res.worst_laplacian = lap;
      res.worst_threshold = threshold;
    }
  });
  res.ok = worst_excess <= 0.0;
  return res;
}

TwoPlaneResult two_plane_liminf(const GridField& f, double a, const Vec& p, const Vec& q,
                                const std::function<double(double)>& delta_bound,
                                double super_tol) {
  if (p == q) throw std::invalid_argument("two_plane_liminf: the two planes must differ (p != q)");

  SuperharmonicResult sup = superharmonic_check(f, super_tol);
  if (!sup.ok)
    throw std::domain_error(
        "two_plane_liminf: superharmonicity precondition failed at node " +
        node_name(sup.worst_node) + " (discrete laplacian " +
        std::to_string(sup.worst_laplacian) + " > threshold " +
        std::to_string(sup.worst_threshold) + ")");

  // Hypothesis u >= max(a + p.x, a + q.x) - delta(|x|) at every node.
  f.for_each_node([&](const std::vector<int>& idx) {
    Vec x = f.coords(idx);
    double planes = a + std::max(dot(p, x), dot(q, x));
    double d = delta_bound(norm(x));
    if (d < 0.0)
      throw std::domain_error("two_plane_liminf: delta must be nonnegative");
    if (f.value(idx) < planes - d)
      throw std::domain_error("two_plane_liminf: lower-bound hypothesis fails at node " +
                              node_name(idx));
  });

  // Dyadic shells {r/2 <= |x| <= r}.
  TwoPlaneResult res;
  double r = f.extent() * f.spacing();
  while (true) {
    ShellReport shell{r, std::numeric_limits<double>::infinity(), 0};
    f.for_each_node([&](const std::vector<int>& idx) {
      double rr = norm(f.coords(idx));
      if (rr < 0.5 * r || rr > r) return;
      ++shell.nodes;
      shell.inf_u = std::min(shell.inf_u, f.value(idx));
    });
    if (shell.nodes < 20) break;
    res.shells.push_back(shell);
    r *= 0.5;
  }

  if (res.shells.size() >= 3) {
    const size_t m = res.shells.size();
    bool ok = true;
    for (size_t i = m - 3; i < m; ++i)
      if (!(res.shells[i].inf_u > a)) ok = false;
    // margin must not decay toward the puncture
    if (res.shells[m - 2].inf_u < res.shells[m - 3].inf_u - 1e-12) ok = false;
    if (res.shells[m - 1].inf_u < res.shells[m - 2].inf_u - 1e-12) ok = false;
    res.passes = ok;
  }
  return res;
}

std::string to_json(const TwoPlaneResult& r, double a) {
  nlohmann::json j;
  j["passes"] = r.passes;
  j["a"] = a;
  j["shells"] = nlohmann::json::array();
  for (const ShellReport& s : r.shells)
    j["shells"].push_back({{"r", s.r}, {"inf", s.inf_u}, {"nodes", s.nodes}});
  return j.dump();
}

}  // namespace schouten
