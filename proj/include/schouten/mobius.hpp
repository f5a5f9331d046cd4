#pragma once

#include "schouten/linalg.hpp"

namespace schouten {

/// Sphere inversion y -> x + lambda^2 (y-x)/|y-x|^2 with conformal weight
/// (lambda/|y-x|)^{n-2}, or the scaling map y -> x + lambda y with weight
/// lambda^{(n-2)/2}. `exclusion` is the guard radius around the inversion
/// center inside which evaluation is refused.
struct MobiusMap {
  enum class Kind { inversion_sphere, dilation_translation };

  Kind kind = Kind::inversion_sphere;
  Vec center;
  double lambda = 1.0;
  double exclusion = 1e-6;

  static MobiusMap inversion(Vec center, double lambda, double exclusion = 1e-6);
  static MobiusMap dilation(Vec center, double lambda);
};

/// Image point of the map. Throws singular_point for the inversion kind
/// inside the exclusion radius. The inversion is an involution.
Vec mobius_image(const MobiusMap& map, const Vec& y);

}  // namespace schouten
