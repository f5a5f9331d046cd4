#include "schouten/conformal.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "schouten/errors.hpp"

namespace schouten {

SymMatrix conformal_hessian(const Jet& jet) {
  const int n = jet.dim();
  if (n < 3) throw std::invalid_argument("conformal_hessian: dimension must be >= 3");
  if (!(jet.u > 0.0))
    throw positivity_error("conformal_hessian: function value must be positive");

  const double c1 = 2.0 / (n - 2);
  const double c2 = 2.0 * n / ((n - 2.0) * (n - 2.0));
  const double c3 = 2.0 / ((n - 2.0) * (n - 2.0));
  const double um = std::pow(jet.u, -(n + 2.0) / (n - 2.0));
  const double um2 = std::pow(jet.u, -2.0 * n / (n - 2.0));
  const double g2 = dot(jet.grad, jet.grad);

  SymMatrix a = jet.hess;
  a *= -c1 * um;
  a += SymMatrix::outer(jet.grad, c2 * um2);
  SymMatrix id = SymMatrix::identity(n);
  id *= -c3 * um2 * g2;
  a += id;
  return a;
}

Vec eigenvalues(const SymMatrix& m) { return jacobi_eigenvalues(m); }

double fk_at(const Field& field, const Vec& x, const Cone& cone) {
  return f_k(eigenvalues(conformal_hessian(field.jet(x))), cone);
}

double fk_transformed_at(const Field& field, const MobiusMap& map, const Vec& y,
                         const Cone& cone) {
  return f_k(eigenvalues(conformal_hessian(transform_jet(field, map, y))), cone);
}

double invariance_residual_at(const Field& field, const MobiusMap& map,
                              const Vec& y, const Cone& cone) {
  double lhs = fk_transformed_at(field, map, y, cone);
  double rhs = fk_at(field, mobius_image(map, y), cone);
  return std::abs(lhs - rhs);
}

double invariance_residual(const Field& field, const MobiusMap& map,
                           const std::vector<Vec>& samples, const Cone& cone) {
  double worst = 0.0;
  for (const Vec& y : samples) {
    try {
      worst = std::max(worst, invariance_residual_at(field, map, y, cone));
    } catch (const cone_violation& cv) {
      std::ostringstream os;
      os << "invariance_residual: cone violation at sample (";
      for (size_t i = 0; i < y.size(); ++i) os << (i ? "," : "") << y[i];
      os << "): " << cv.what();
      throw cone_violation(os.str(), cv.failing_sigma);
    }
  }
  return worst;
}

}  // namespace schouten
