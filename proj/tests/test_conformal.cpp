#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "schouten/conformal.hpp"
#include "schouten/errors.hpp"
#include "schouten/sampling.hpp"

using namespace schouten;

namespace {

Jet random_jet(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> box(-1.0, 1.0);
  std::uniform_real_distribution<double> upos(0.5, 2.0);
  Jet j;
  j.point.assign(n, 0.0);
  j.u = upos(rng);
  j.grad.resize(n);
  for (double& g : j.grad) g = box(rng);
  j.hess = SymMatrix(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b <= a; ++b) j.hess.at(a, b) = box(rng);
  return j;
}

Vec random_point(int n, std::mt19937_64& rng, double lo = 0.4, double hi = 1.6) {
  std::uniform_real_distribution<double> box(-1.0, 1.0);
  std::uniform_real_distribution<double> rad(lo, hi);
  Vec x(n);
  double len = 0.0;
  for (double& v : x) { v = box(rng); len += v * v; }
  len = std::sqrt(len);
  double r = rad(rng);
  for (double& v : x) v *= r / len;
  return x;
}

}  // namespace

TEST_CASE("conformal hessian of a constant jet vanishes") {
  Jet j;
  j.point = {1.0, 0.0, 0.0};
  j.u = 3.7;
  j.grad = {0.0, 0.0, 0.0};
  j.hess = SymMatrix(3);
  SymMatrix a = conformal_hessian(j);
  CHECK(a.frobenius_norm() == 0.0);
}

TEST_CASE("conformal hessian rejects bad input") {
  Jet j;
  j.point = {1.0, 0.0, 0.0};
  j.u = -1.0;
  j.grad = {0.0, 0.0, 0.0};
  j.hess = SymMatrix(3);
  CHECK_THROWS_AS(conformal_hessian(j), positivity_error);

  Jet j2;
  j2.point = {1.0, 0.0};
  j2.u = 1.0;
  j2.grad = {0.0, 0.0};
  j2.hess = SymMatrix(2);
  CHECK_THROWS_AS(conformal_hessian(j2), std::invalid_argument);
}

TEST_CASE("eigensolver on pinned matrices") {
  SymMatrix id = SymMatrix::identity(3);
  Vec ev = eigenvalues(id);
  CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(ev[2] == doctest::Approx(1.0).epsilon(1e-15));

  SymMatrix d(3);
  d.at(0, 0) = -0.5;
  d.at(1, 1) = 0.5;
  d.at(2, 2) = 0.5;
  ev = eigenvalues(d);
  CHECK(ev[0] == -0.5);
  CHECK(ev[1] == 0.5);
  CHECK(ev[2] == 0.5);
}

TEST_CASE("eigensolver matches inertia-bisection oracle and reconstructs") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> box(-2.0, 2.0);
  for (int rep = 0; rep < 40; ++rep) {
    int n = 2 + static_cast<int>(rng() % 7);  // n <= 8
    SymMatrix m(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b <= a; ++b) m.at(a, b) = box(rng);

    EigenDecomposition ed = jacobi_eigensystem(m);
    Vec ref = oracles::eigenvalues_bisection(m);
    REQUIRE(ref.size() == static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      CHECK(ed.values[i] == doctest::Approx(ref[i]).epsilon(1e-8));

    // residual ||M - Q L Q^T|| < 1e-10 ||M||
    double resid = 0.0;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        double entry = 0.0;
        for (int j = 0; j < n; ++j)
          entry += ed.vectors[j][a] * ed.values[j] * ed.vectors[j][b];
        double diff = m.at(a, b) - entry;
        resid += diff * diff;
      }
    }
    CHECK(std::sqrt(resid) <= 1e-10 * std::max(1e-30, m.frobenius_norm()));
  }
}

TEST_CASE("singular power law has eigenvalues (-1/2, 1/2, ..., 1/2)") {
  std::mt19937_64 rng(8);
  for (int n : {3, 4, 5, 8}) {
    Field u = Field::power(n, 1.0, (2.0 - n) / 2.0);
    for (int rep = 0; rep < 20; ++rep) {
      Vec x = random_point(n, rng, 0.2, 3.0);
      Vec ev = eigenvalues(conformal_hessian(u.jet(x)));
      CHECK(std::abs(ev[0] + 0.5) < 1e-10);
      for (int i = 1; i < n; ++i) CHECK(std::abs(ev[i] - 0.5) < 1e-10);
    }
  }
}

TEST_CASE("bubble has A^u = 2 I") {
  std::mt19937_64 rng(9);
  for (int n : {3, 5}) {
    Field u = Field::bubble(n, 1.3, Vec(n, 0.1));
    for (int rep = 0; rep < 10; ++rep) {
      Vec x = random_point(n, rng, 0.0 + 0.1, 1.5);
      Vec ev = eigenvalues(conformal_hessian(u.jet(x)));
      for (double v : ev) CHECK(v == doctest::Approx(2.0).epsilon(1e-11));
    }
  }
}

TEST_CASE("analytic field jets agree with finite differences") {
  std::mt19937_64 rng(10);
  const int n = 4;
  std::vector<Field> fields = {
      Field::power(n, 0.8, -1.0),
      Field::bubble(n, 0.9, Vec{0.2, -0.1, 0.0, 0.3}),
      Field::perturbed_power(n, 1.1, -1.0, Vec{0.1, 0.05, -0.04, 0.0}),
      Field::linear(n, 2.0, Vec{0.3, -0.2, 0.1, 0.0}) + Field::power(n, 0.5, -2.0),
  };
  for (const Field& f : fields) {
    auto scalar = [&](const Vec& x) { return f.value(x); };
    for (int rep = 0; rep < 10; ++rep) {
      Vec x = random_point(n, rng, 0.5, 1.5);
      Jet j = f.jet(x);
      Vec gref = oracles::fd_gradient(scalar, x, 1e-5);
      SymMatrix href = oracles::fd_hessian(scalar, x, 1e-4);
      for (int i = 0; i < n; ++i)
        CHECK(j.grad[i] == doctest::Approx(gref[i]).epsilon(1e-6));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b <= a; ++b)
          CHECK(j.hess.at(a, b) == doctest::Approx(href.at(a, b)).epsilon(1e-4));
    }
  }
}

TEST_CASE("mobius image: fixed sphere, ray contraction, involution") {
  const int n = 4;
  MobiusMap inv = MobiusMap::inversion(Vec(n, 0.0), 1.0);

  Vec on_sphere{1.0, 0.0, 0.0, 0.0};
  Vec img = mobius_image(inv, on_sphere);
  for (int i = 0; i < n; ++i) CHECK(img[i] == doctest::Approx(on_sphere[i]).epsilon(1e-15));

  Vec two{2.0, 0.0, 0.0, 0.0};
  img = mobius_image(inv, two);
  CHECK(img[0] == doctest::Approx(0.5).epsilon(1e-15));

  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 100; ++rep) {
    Vec x = random_point(n, rng, 0.0 + 1e-3, 0.5);
    MobiusMap m = MobiusMap::inversion(x, 0.7);
    Vec y = random_point(n, rng, 0.8, 2.0);
    Vec twice = mobius_image(m, mobius_image(m, y));
    for (int i = 0; i < n; ++i) CHECK(std::abs(twice[i] - y[i]) < 1e-12);
  }

  CHECK_THROWS_AS(mobius_image(inv, Vec(n, 0.0)), singular_point);
}

TEST_CASE("dilation with lambda=1, x=0 is the identity on jets") {
  const int n = 5;
  Field f = Field::bubble(n, 1.0, Vec(n, 0.0));
  MobiusMap id = MobiusMap::dilation(Vec(n, 0.0), 1.0);
  Vec y{0.3, -0.2, 0.5, 0.0, 0.1};
  Jet a = transform_jet(f, id, y);
  Jet b = f.jet(y);
  CHECK(a.u == doctest::Approx(b.u).epsilon(1e-15));
  for (int i = 0; i < n; ++i) CHECK(a.grad[i] == doctest::Approx(b.grad[i]).epsilon(1e-15));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      CHECK(a.hess.at(i, j) == doctest::Approx(b.hess.at(i, j)).epsilon(1e-15));
}

TEST_CASE("Kelvin transform of the fundamental solution is constant 1") {
  for (int n : {3, 5}) {
    Field fund = Field::power(n, 1.0, 2.0 - n);
    MobiusMap inv = MobiusMap::inversion(Vec(n, 0.0), 1.0);
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 20; ++rep) {
      Vec y = random_point(n, rng, 0.3, 2.5);
      Jet j = transform_jet(fund, inv, y);
      CHECK(j.u == doctest::Approx(1.0).epsilon(1e-12));
      for (int i = 0; i < n; ++i) CHECK(std::abs(j.grad[i]) < 1e-12);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b <= a; ++b) CHECK(std::abs(j.hess.at(a, b)) < 1e-11);
    }
  }
}

TEST_CASE("transformed jets agree with finite differences of the composed field") {
  std::mt19937_64 rng(14);
  const int n = 4;
  Field base = Field::bubble(n, 1.1, Vec(n, 0.05));
  for (int rep = 0; rep < 50; ++rep) {
    Vec c = random_point(n, rng, 0.1, 0.6);
    double lambda = 0.5 + 0.001 * (rng() % 1000);
    MobiusMap map = (rep % 2 == 0) ? MobiusMap::inversion(c, lambda)
                                   : MobiusMap::dilation(c, lambda);
    Field composed = base.mobius(map);
    Vec y = random_point(n, rng, 1.0, 2.0);
    Jet j = transform_jet(base, map, y);
    auto scalar = [&](const Vec& p) { return composed.value(p); };
    Vec gref = oracles::fd_gradient(scalar, y, 1e-5);
    SymMatrix href = oracles::fd_hessian(scalar, y, 1e-4);
    for (int i = 0; i < n; ++i)
      CHECK(j.grad[i] == doctest::Approx(gref[i]).epsilon(1e-5));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b <= a; ++b)
        CHECK(j.hess.at(a, b) == doctest::Approx(href.at(a, b)).epsilon(2e-4));
  }
}

TEST_CASE("Kelvin involution reproduces the jet") {
  const int n = 5;
  Field base = Field::bubble(n, 0.8, Vec(n, -0.1));
  std::mt19937_64 rng(15);
  for (int rep = 0; rep < 30; ++rep) {
    Vec c = random_point(n, rng, 0.1, 0.5);
    MobiusMap map = MobiusMap::inversion(c, 0.9);
    Field twice = base.mobius(map).mobius(map);
    Vec y = random_point(n, rng, 1.0, 2.0);
    Jet a = twice.jet(y);
    Jet b = base.jet(y);
    CHECK(a.u == doctest::Approx(b.u).epsilon(1e-10));
    for (int i = 0; i < n; ++i)
      CHECK(a.grad[i] == doctest::Approx(b.grad[i]).epsilon(1e-10));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j)
        CHECK(a.hess.at(i, j) ==
              doctest::Approx(b.hess.at(i, j)).scale(1.0).epsilon(1e-10));
  }
}

TEST_CASE("orthogonal invariance of f_k of eigenvalues") {
  std::mt19937_64 rng(16);
  std::uniform_real_distribution<double> box(-1.0, 1.0);
  int found = 0;
  while (found < 50) {
    int n = 3 + static_cast<int>(rng() % 4);
    SymMatrix m(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b <= a; ++b) m.at(a, b) = box(rng) + (a == b ? 1.5 : 0.0);
    Cone cone{n, 2};
    Vec ev = eigenvalues(m);
    if (!in_gamma_k(ev, cone)) continue;
    ++found;

    auto o = random_orthogonal(n, rng);
    SymMatrix rotated(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b <= a; ++b) {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) s += o[i][a] * m.at(i, j) * o[j][b];
        rotated.at(a, b) = s;
      }
    double f1 = f_k(ev, cone);
    double f2 = f_k(eigenvalues(rotated), cone);
    CHECK(f2 == doctest::Approx(f1).epsilon(1e-10));
  }
}

TEST_CASE("amplitude scaling law A^{au} = a^{-4/(n-2)} A^u") {
  std::mt19937_64 rng(18);
  std::uniform_real_distribution<double> amp(0.3, 3.0);
  for (int rep = 0; rep < 50; ++rep) {
    int n = 3 + static_cast<int>(rng() % 6);
    Jet j = random_jet(n, rng);
    double a = amp(rng);
    Jet ja = j;
    ja.u *= a;
    ja.grad = a * ja.grad;
    ja.hess *= a;
    SymMatrix lhs = conformal_hessian(ja);
    SymMatrix rhs = conformal_hessian(j);
    rhs *= std::pow(a, -4.0 / (n - 2));
    for (int p = 0; p < n; ++p)
      for (int q = 0; q <= p; ++q)
        CHECK(lhs.at(p, q) == doctest::Approx(rhs.at(p, q)).epsilon(1e-12));
  }
}

TEST_CASE("trace identity and the superharmonicity marker") {
  std::mt19937_64 rng(19);
  int checked = 0;
  for (int rep = 0; rep < 200; ++rep) {
    int n = 3 + static_cast<int>(rng() % 6);
    Jet j = random_jet(n, rng);
    SymMatrix a = conformal_hessian(j);
    double lap = j.hess.trace();
    double lhs = a.trace() * std::pow(j.u, (n + 2.0) / (n - 2.0)) * (-(n - 2.0) / 2.0);
    CHECK(lhs == doctest::Approx(lap).epsilon(1e-12));

    // lambda(A^u) in Gamma_1 means trace(A^u) > 0, which forces Delta u < 0.
    Vec ev = eigenvalues(a);
    if (in_gamma_k(ev, Cone{n, 1})) {
      ++checked;
      CHECK(lap <= 0.0);
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("invariance residual: identity map is exactly zero") {
  const int n = 5;
  Field f = Field::bubble(n, 1.0, Vec(n, 0.0));
  MobiusMap id = MobiusMap::dilation(Vec(n, 0.0), 1.0);
  std::mt19937_64 rng(21);
  std::vector<Vec> samples;
  for (int i = 0; i < 10; ++i) samples.push_back(random_point(n, rng, 0.4, 1.4));
  CHECK(invariance_residual(f, id, samples, Cone{n, 1}) == 0.0);
}

TEST_CASE("invariance residual: dilation of the power solution, n=5, k=2") {
  const int n = 5;
  Field f = Field::power(n, std::pow(0.5, 3.0 / 8.0), -1.5);
  MobiusMap dil = MobiusMap::dilation(Vec{0.1, 0.0, -0.2, 0.0, 0.05}, 1.7);
  std::mt19937_64 rng(22);
  std::vector<Vec> samples;
  for (int i = 0; i < 30; ++i) samples.push_back(random_point(n, rng, 0.5, 1.5));
  CHECK(invariance_residual(f, dil, samples, Cone{n, 2}) < 1e-8);
}

TEST_CASE("invariance residual: random inversions of the bubble, k=1") {
  const int n = 5;
  Field f = Field::bubble(n, 1.2, Vec(n, 0.0));
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 5; ++rep) {
    Vec c = random_point(n, rng, 0.2, 0.7);
    MobiusMap map = MobiusMap::inversion(c, 0.4 + 0.001 * (rng() % 800));
    std::vector<Vec> samples;
    for (int i = 0; i < 50; ++i) {
      Vec y = random_point(n, rng, 0.9, 2.0);
      if (norm(y - c) < 1e-3) continue;
      samples.push_back(y);
    }
    CHECK(invariance_residual(f, map, samples, Cone{n, 1}) < 1e-6);
  }
}
