#pragma once

#include "schouten/linalg.hpp"

namespace schouten {

/// 2-jet of a positive scalar field at a point: everything the conformal
/// Hessian consumes.
struct Jet {
  Vec point;
  double u = 0.0;
  Vec grad;
  SymMatrix hess;

  int dim() const { return static_cast<int>(point.size()); }
};

}  // namespace schouten
