#include "schouten/fields.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "schouten/errors.hpp"

namespace schouten {

MobiusMap MobiusMap::inversion(Vec center, double lambda, double exclusion) {
  if (!(lambda > 0.0)) throw std::invalid_argument("MobiusMap: lambda must be positive");
  MobiusMap m;
  m.kind = Kind::inversion_sphere;
  m.center = std::move(center);
  m.lambda = lambda;
  m.exclusion = exclusion;
  return m;
}

MobiusMap MobiusMap::dilation(Vec center, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("MobiusMap: lambda must be positive");
  MobiusMap m;
  m.kind = Kind::dilation_translation;
  m.center = std::move(center);
  m.lambda = lambda;
  return m;
}

Vec mobius_image(const MobiusMap& map, const Vec& y) {
  if (map.kind == MobiusMap::Kind::dilation_translation)
    return map.center + map.lambda * y;
  Vec s = y - map.center;
  double rho2 = dot(s, s);
  if (rho2 <= map.exclusion * map.exclusion)
    throw singular_point("mobius_image: point inside the exclusion radius of the inversion center");
  return map.center + (map.lambda * map.lambda / rho2) * s;
}

class FieldImpl {
 public:
  virtual ~FieldImpl() = default;
  virtual int dim() const = 0;
  virtual bool in_domain(const Vec& x) const = 0;
  virtual Jet jet(const Vec& x) const = 0;
  virtual double value(const Vec& x) const { return jet(x).u; }
};

int Field::dim() const { return impl_->dim(); }
bool Field::in_domain(const Vec& x) const { return impl_->in_domain(x); }
Jet Field::jet(const Vec& x) const {
  if (!impl_->in_domain(x))
    throw singular_point("field evaluation outside its domain");
  return impl_->jet(x);
}
double Field::value(const Vec& x) const {
  if (!impl_->in_domain(x))
    throw singular_point("field evaluation outside its domain");
  return impl_->value(x);
}

namespace {

class PowerField : public FieldImpl {
 public:
  PowerField(int n, double amplitude, double exponent, Vec center)
      : n_(n), a_(amplitude), p_(exponent), c_(std::move(center)) {
    if (c_.empty()) c_.assign(n_, 0.0);
    if (!(a_ > 0.0)) throw std::invalid_argument("power field: amplitude must be positive");
  }
  int dim() const override { return n_; }
  bool in_domain(const Vec& x) const override { return norm(x - c_) > 1e-14; }
  double value(const Vec& x) const override { return a_ * std::pow(norm(x - c_), p_); }
  Jet jet(const Vec& x) const override {
    Vec s = x - c_;
    double rho2 = dot(s, s);
    double rho = std::sqrt(rho2);
    Jet j;
    j.point = x;
    j.u = a_ * std::pow(rho, p_);
    double d1 = a_ * p_ * std::pow(rho, p_ - 2.0);        // u' / rho
    double d2 = d1 * (p_ - 2.0) / rho2;                   // radial curvature part
    j.grad = d1 * s;
    j.hess = SymMatrix::identity(n_);
    j.hess *= d1;
    j.hess += SymMatrix::outer(s, d2);
    return j;
  }

 private:
  int n_;
  double a_, p_;
  Vec c_;
};

class BubbleField : public FieldImpl {
 public:
  BubbleField(int n, double a, Vec center) : n_(n), a_(a), c_(std::move(center)) {
    if (c_.empty()) c_.assign(n_, 0.0);
    if (!(a_ > 0.0)) throw std::invalid_argument("bubble field: a must be positive");
  }
  int dim() const override { return n_; }
  bool in_domain(const Vec&) const override { return true; }
  double value(const Vec& x) const override {
    Vec s = x - c_;
    return std::pow(a_ / (1.0 + a_ * a_ * dot(s, s)), (n_ - 2) / 2.0);
  }
  Jet jet(const Vec& x) const override {
    const double q = (n_ - 2) / 2.0;
    Vec s = x - c_;
    double D = 1.0 + a_ * a_ * dot(s, s);
    double g = a_ / D;
    double gp = -2.0 * a_ * a_ * a_ / (D * D);            // dg/ds_i = gp * s_i
    double gpp = 8.0 * std::pow(a_, 5) / (D * D * D);     // mixed second part

    double u = std::pow(g, q);
    double uq1 = q * std::pow(g, q - 1.0);
    double uq2 = q * (q - 1.0) * std::pow(g, q - 2.0);

    Jet j;
    j.point = x;
    j.u = u;
    j.grad = (uq1 * gp) * s;
    j.hess = SymMatrix::identity(n_);
    j.hess *= uq1 * gp;
    j.hess += SymMatrix::outer(s, uq2 * gp * gp + uq1 * gpp);
    return j;
  }

 private:
  int n_;
  double a_;
  Vec c_;
};

class LinearField : public FieldImpl {
 public:
  LinearField(int n, double constant, Vec slope)
      : n_(n), c0_(constant), p_(std::move(slope)) {
    assert(static_cast<int>(p_.size()) == n_);
  }
  int dim() const override { return n_; }
  bool in_domain(const Vec& x) const override { return c0_ + dot(p_, x) > 0.0; }
  double value(const Vec& x) const override { return c0_ + dot(p_, x); }
  Jet jet(const Vec& x) const override {
    Jet j;
    j.point = x;
    j.u = c0_ + dot(p_, x);
    j.grad = p_;
    j.hess = SymMatrix(n_);
    return j;
  }

 private:
  int n_;
  double c0_;
  Vec p_;
};

class SumField : public FieldImpl {
 public:
  SumField(Field a, Field b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.dim() != b_.dim())
      throw std::invalid_argument("sum field: dimension mismatch");
  }
  int dim() const override { return a_.dim(); }
  bool in_domain(const Vec& x) const override {
    return a_.in_domain(x) && b_.in_domain(x);
  }
  double value(const Vec& x) const override { return a_.value(x) + b_.value(x); }
  Jet jet(const Vec& x) const override {
    Jet ja = a_.jet(x), jb = b_.jet(x);
    ja.u += jb.u;
    ja.grad = ja.grad + jb.grad;
    ja.hess += jb.hess;
    return ja;
  }

 private:
  Field a_, b_;
};

class PerturbedPowerField : public FieldImpl {
 public:
  PerturbedPowerField(int n, double amplitude, double exponent, Vec coeff)
      : base_(Field::power(n, amplitude, exponent)), c_(std::move(coeff)) {
    assert(static_cast<int>(c_.size()) == n);
  }
  int dim() const override { return base_.dim(); }
  bool in_domain(const Vec& x) const override {
    return base_.in_domain(x) && 1.0 + dot(c_, x) > 0.0;
  }
  Jet jet(const Vec& x) const override {
    Jet v = base_.jet(x);
    double phi = 1.0 + dot(c_, x);
    Jet j;
    j.point = x;
    j.u = v.u * phi;
    j.grad = phi * v.grad + v.u * c_;
    SymMatrix h = v.hess;
    h *= phi;
    // grad v (x) c symmetrized
    for (int a = 0; a < j.dim(); ++a)
      for (int b = 0; b <= a; ++b)
        h.at(a, b) += v.grad[a] * c_[b] + v.grad[b] * c_[a];
    j.hess = h;
    return j;
  }

 private:
  Field base_;
  Vec c_;
};

class AffineField : public FieldImpl {
 public:
  AffineField(Field inner, double out_scale, double out_shift, Vec inner_center,
              double inner_scale)
      : inner_(std::move(inner)),
        ws_(out_scale),
        wc_(out_shift),
        zc_(std::move(inner_center)),
        zs_(inner_scale) {
    assert(static_cast<int>(zc_.size()) == inner_.dim());
  }
  int dim() const override { return inner_.dim(); }
  bool in_domain(const Vec& y) const override {
    return inner_.in_domain(zc_ + zs_ * y);
  }
  Jet jet(const Vec& y) const override {
    Jet inner = inner_.jet(zc_ + zs_ * y);
    Jet j;
    j.point = y;
    j.u = ws_ * inner.u + wc_;
    j.grad = (ws_ * zs_) * inner.grad;
    j.hess = inner.hess;
    j.hess *= ws_ * zs_ * zs_;
    return j;
  }

 private:
  Field inner_;
  double ws_, wc_;
  Vec zc_;
  double zs_;
};

class MobiusField : public FieldImpl {
 public:
  MobiusField(Field inner, MobiusMap map) : inner_(std::move(inner)), map_(std::move(map)) {
    assert(static_cast<int>(map_.center.size()) == inner_.dim());
  }
  int dim() const override { return inner_.dim(); }
  bool in_domain(const Vec& y) const override {
    if (map_.kind == MobiusMap::Kind::inversion_sphere &&
        norm(y - map_.center) <= map_.exclusion)
      return false;
    return inner_.in_domain(mobius_image(map_, y));
  }
  double value(const Vec& y) const override {
    if (map_.kind == MobiusMap::Kind::dilation_translation)
      return std::pow(map_.lambda, (inner_.dim() - 2) / 2.0) *
             inner_.value(mobius_image(map_, y));
    double rho = norm(y - map_.center);
    if (rho <= map_.exclusion)
      throw singular_point("mobius field: point inside the exclusion radius");
    return std::pow(map_.lambda / rho, inner_.dim() - 2) *
           inner_.value(mobius_image(map_, y));
  }
  Jet jet(const Vec& y) const override { return transform_jet(inner_, map_, y); }

 private:
  Field inner_;
  MobiusMap map_;
};

}  // namespace

Field Field::power(int n, double amplitude, double exponent, Vec center) {
  return Field(std::make_shared<PowerField>(n, amplitude, exponent, std::move(center)));
}
Field Field::bubble(int n, double a, Vec center) {
  return Field(std::make_shared<BubbleField>(n, a, std::move(center)));
}
Field Field::linear(int n, double constant, Vec slope) {
  return Field(std::make_shared<LinearField>(n, constant, std::move(slope)));
}
Field Field::constant(int n, double c) {
  return Field(std::make_shared<LinearField>(n, c, Vec(n, 0.0)));
}
Field Field::perturbed_power(int n, double amplitude, double exponent, Vec coeff) {
  return Field(std::make_shared<PerturbedPowerField>(n, amplitude, exponent, std::move(coeff)));
}
Field Field::operator+(const Field& other) const {
  return Field(std::make_shared<SumField>(*this, other));
}
Field Field::affine(double out_scale, double out_shift, Vec inner_center,
                    double inner_scale) const {
  return Field(std::make_shared<AffineField>(*this, out_scale, out_shift,
                                             std::move(inner_center), inner_scale));
}
Field Field::mobius(const MobiusMap& map) const {
  return Field(std::make_shared<MobiusField>(*this, map));
}

Jet transform_jet(const Field& field, const MobiusMap& map, const Vec& y) {
  const int n = field.dim();

  if (map.kind == MobiusMap::Kind::dilation_translation) {
    double w = std::pow(map.lambda, (n - 2) / 2.0);
    Jet inner = field.jet(map.center + map.lambda * y);
    Jet j;
    j.point = y;
    j.u = w * inner.u;
    j.grad = (w * map.lambda) * inner.grad;
    j.hess = inner.hess;
    j.hess *= w * map.lambda * map.lambda;
    return j;
  }

  Vec s = y - map.center;
  double rho2 = dot(s, s);
  double rho = std::sqrt(rho2);
  if (rho <= map.exclusion)
    throw singular_point("transform_jet: point inside the exclusion radius of the inversion center");
  const double l2 = map.lambda * map.lambda;

  Jet inner = field.jet(map.center + (l2 / rho2) * s);

  // Weight w = lambda^{n-2} rho^{2-n} and its derivatives.
  double w = std::pow(map.lambda / rho, n - 2);
  double wr = (2.0 - n) * std::pow(map.lambda, n - 2) * std::pow(rho, -static_cast<double>(n));
  // w_a = wr * s_a ; w_ab = wr * (delta_ab - n s_a s_b / rho^2)

  // Jacobian z_{i,a} = (l2/rho^2)(delta_ia - 2 e_i e_a), e = s/rho.
  const double jfac = l2 / rho2;

  // First derivatives of the composition g_a = sum_i u_i z_{i,a}.
  Vec ug = inner.grad;
  double ug_dot_s = dot(ug, s);
  Vec comp_grad(n);
  for (int a = 0; a < n; ++a)
    comp_grad[a] = jfac * (ug[a] - 2.0 * ug_dot_s * s[a] / rho2);

  Jet out;
  out.point = y;
  out.u = w * inner.u;

  out.grad.resize(n);
  for (int a = 0; a < n; ++a) out.grad[a] = wr * s[a] * inner.u + w * comp_grad[a];

  // Hessian of the composition: sum_{ij} u_ij z_{i,a} z_{j,b} + sum_i u_i z_{i,ab}.
  // With H = inner.hess: (J^T H J)_{ab}, J_{ia} = jfac (delta_ia - 2 e_i e_a).
  Vec Hs = inner.hess.apply(s);  // (H s)_i
  double sHs = dot(s, Hs);
  SymMatrix comp_hess(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b <= a; ++b) {
      double hab = inner.hess.at(a, b) - 2.0 * (Hs[a] * s[b] + Hs[b] * s[a]) / rho2 +
                   4.0 * sHs * s[a] * s[b] / (rho2 * rho2);
      double second = 0.0;  // sum_i u_i z_{i,ab}
      second += -2.0 * (ug[a] * s[b] + ug[b] * s[a]);
      second += -2.0 * ((a == b) ? ug_dot_s : 0.0);
      second += 8.0 * ug_dot_s * s[a] * s[b] / rho2;
      second *= l2 / (rho2 * rho2);
      comp_hess.at(a, b) = jfac * jfac * hab + second;
    }
  }

  out.hess = SymMatrix(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b <= a; ++b) {
      double wab = wr * (((a == b) ? 1.0 : 0.0) - n * s[a] * s[b] / rho2);
      out.hess.at(a, b) = wab * inner.u + wr * (s[a] * comp_grad[b] + s[b] * comp_grad[a]) +
                          w * comp_hess.at(a, b);
    }
  }
  return out;
}

}  // namespace schouten
