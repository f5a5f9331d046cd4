#pragma once

#include <vector>

#include "schouten/fields.hpp"
#include "schouten/jet.hpp"
#include "schouten/linalg.hpp"
#include "schouten/symfunc.hpp"

namespace schouten {

/// The conformal Hessian
///   A^u = -2/(n-2) u^{-(n+2)/(n-2)} D^2 u
///         + 2n/(n-2)^2 u^{-2n/(n-2)} grad u (x) grad u
///         - 2/(n-2)^2 u^{-2n/(n-2)} |grad u|^2 I.
/// Requires u > 0 and n >= 3.
SymMatrix conformal_hessian(const Jet& jet);

/// Ascending eigenvalues of a symmetric matrix (cyclic Jacobi).
Vec eigenvalues(const SymMatrix& m);

/// F_k(A^u) at x. Throws cone_violation off the cone.
double fk_at(const Field& field, const Vec& x, const Cone& cone);

/// F_k(A^(transformed field)) at y, transformed side of the invariance
/// identity.
double fk_transformed_at(const Field& field, const MobiusMap& map, const Vec& y,
                         const Cone& cone);

/// |F_k(A^{u_map})(y) - F_k(A^u)(map(y))| at one sample.
double invariance_residual_at(const Field& field, const MobiusMap& map,
                              const Vec& y, const Cone& cone);

/// Max residual over a sample list. Throws cone_violation naming the first
/// offending sample point (in the message) when A^u leaves the cone.
double invariance_residual(const Field& field, const MobiusMap& map,
                           const std::vector<Vec>& samples, const Cone& cone);

}  // namespace schouten
