#pragma once

#include <memory>

#include "schouten/jet.hpp"
#include "schouten/linalg.hpp"
#include "schouten/mobius.hpp"

namespace schouten {

class FieldImpl;

/// Closed-form positive test field with exact first and second derivatives.
/// Value type; cheap to copy.
class Field {
 public:
  int dim() const;
  bool in_domain(const Vec& x) const;
  double value(const Vec& x) const;
  Jet jet(const Vec& x) const;

  /// amplitude * |x - center|^exponent
  static Field power(int n, double amplitude, double exponent, Vec center = {});
  /// (a / (1 + a^2 |x - center|^2))^{(n-2)/2}
  static Field bubble(int n, double a, Vec center = {});
  /// constant + slope . x
  static Field linear(int n, double constant, Vec slope);
  static Field constant(int n, double c);
  /// amplitude * |x|^exponent * (1 + coeff . x)
  static Field perturbed_power(int n, double amplitude, double exponent, Vec coeff);

  /// Pointwise sum (exact jets add).
  Field operator+(const Field& other) const;

  /// y -> out_scale * u(inner_center + inner_scale * y) + out_shift.
  /// Covers the scaling family phi(l) u(x + xi(l) y) + psi(l) at fixed l.
  Field affine(double out_scale, double out_shift, Vec inner_center,
               double inner_scale) const;

  /// Composition with a Mobius map, conformal weight included: the
  /// moving-sphere transform u_{x,lambda} for the inversion kind, the
  /// scaling transform u^{x,lambda} for the dilation kind.
  Field mobius(const MobiusMap& map) const;

  explicit Field(std::shared_ptr<const FieldImpl> impl) : impl_(std::move(impl)) {}

 private:
  std::shared_ptr<const FieldImpl> impl_;
};

/// 2-jet of the Mobius-transformed field at y, by exact chain rule through
/// the map's closed-form first and second derivatives.
Jet transform_jet(const Field& field, const MobiusMap& map, const Vec& y);

}  // namespace schouten
