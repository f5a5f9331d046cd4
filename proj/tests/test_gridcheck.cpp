#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "schouten/gridcheck.hpp"

using namespace schouten;

namespace {

double witness(const Vec& x, double a, const Vec& pq_mean, double mu, int n) {
  double r = norm(x);
  return a + dot(pq_mean, x) + mu * std::pow(r, 2.0 - n);
}

}  // namespace

TEST_CASE("discrete laplacian is exact on polynomials of degree <= 2") {
  GridField lin = GridField::from_function(3, 8, 0.125, [](const Vec& x) {
    return 1.0 + 0.3 * x[0] - 0.2 * x[1] + 0.7 * x[2];
  });
  CHECK(discrete_laplacian(lin, {1, 2, -1}) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(discrete_laplacian(lin, {-3, 0, 4}) == doctest::Approx(0.0).epsilon(1e-12));

  GridField quad = GridField::from_function(3, 8, 0.125, [](const Vec& x) {
    return x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
  });
  CHECK(discrete_laplacian(quad, {2, 2, 1}) == doctest::Approx(6.0).epsilon(1e-10));
  CHECK(discrete_laplacian(quad, {-4, 1, 3}) == doctest::Approx(6.0).epsilon(1e-10));
}

TEST_CASE("stencil throws at the boundary and next to the puncture") {
  GridField g = GridField::from_function(3, 4, 0.25,
                                         [](const Vec& x) { return norm(x); });
  CHECK_THROWS_AS(discrete_laplacian(g, {4, 0, 0}), std::out_of_range);  // rim
  CHECK_THROWS_AS(discrete_laplacian(g, {1, 0, 0}), std::out_of_range);  // origin neighbor
  CHECK_NOTHROW(discrete_laplacian(g, {1, 1, 0}));
  CHECK_THROWS_AS(discrete_laplacian(g, {0, 0, 0}), std::out_of_range);  // no such node
}

TEST_CASE("fundamental solution: stencil error obeys the h^2 |x|^{-n-2} envelope") {
  const int n = 3;
  auto fund = [](const Vec& x) { return 1.0 / norm(x); };
  GridField g = GridField::from_function(n, 32, 1.0 / 32, fund);
  const double h = g.spacing();
  g.for_each_node([&](const std::vector<int>& idx) {
    Vec x = g.coords(idx);
    double r = norm(x);
    if (r < 10.0 * h || r > 0.9) return;
    double lap = discrete_laplacian(g, idx);
    CHECK(std::abs(lap) <= 5.0 * h * h * std::pow(r, -(n + 2.0)));
  });
}

TEST_CASE("stencil error drops ~4x when h halves (order-2 consistency)") {
  const int n = 3;
  auto fund = [](const Vec& x) { return 1.0 / norm(x); };
  // same physical point x = (0.5, 0.25, 0.25) on two grids
  GridField coarse = GridField::from_function(n, 16, 1.0 / 16, fund);
  GridField fine = GridField::from_function(n, 32, 1.0 / 32, fund);
  double ec = std::abs(discrete_laplacian(coarse, {8, 4, 4}));
  double ef = std::abs(discrete_laplacian(fine, {16, 8, 8}));
  CHECK(ec / ef >= 3.5);
  CHECK(ec / ef <= 4.5);
}

TEST_CASE("superharmonic check accepts the fundamental solution, rejects |x|^2") {
  const int n = 3;
  GridField fund = GridField::from_function(n, 32, 1.0 / 32,
                                            [](const Vec& x) { return 1.0 / norm(x); });
  SuperharmonicResult ok = superharmonic_check(fund, 5.0);
  CHECK(ok.ok);

  GridField quad = GridField::from_function(n, 32, 1.0 / 32, [](const Vec& x) {
    return dot(x, x);
  });
  SuperharmonicResult bad = superharmonic_check(quad, 5.0);
  CHECK_FALSE(bad.ok);
  CHECK(bad.worst_laplacian == doctest::Approx(6.0).epsilon(1e-9));
  REQUIRE(bad.worst_node.size() == 3);
}

TEST_CASE("flat-threshold mode works for smooth fields") {
  GridField lin = GridField::from_function(3, 16, 1.0 / 16, [](const Vec& x) {
    return 2.0 + 0.1 * x[0];
  });
  CHECK(superharmonic_check(lin, 1e-12, false).ok);
  GridField quad = GridField::from_function(3, 16, 1.0 / 16,
                                            [](const Vec& x) { return dot(x, x); });
  CHECK_FALSE(superharmonic_check(quad, 1e-12, false).ok);
}

TEST_CASE("two-plane lemma: explicit witness passes, margins grow toward 0") {
  const int n = 3;
  const double a = 1.0;
  const Vec p{0.02, 0.0, 0.0};
  const Vec q{-0.016, 0.012, 0.0};
  const Vec mean{0.002, 0.006, 0.0};  // (p+q)/2
  auto delta = [](double r) { return 0.03 * std::pow(r, 1.5); };

  for (double mu : {1e-2, 1e-3}) {
    GridField g = GridField::from_function(n, 32, 1.0 / 32, [&](const Vec& x) {
      return witness(x, a, mean, mu, n);
    });
    TwoPlaneResult res = two_plane_liminf(g, a, p, q, delta, 0.1);
    CHECK(res.passes);
    REQUIRE(res.shells.size() >= 3);
    // shell infima exceed a and keep growing toward the puncture
    const size_t m = res.shells.size();
    CHECK(res.shells[m - 1].inf_u > a);
    CHECK(res.shells[m - 1].inf_u >= res.shells[m - 2].inf_u);
    CHECK(res.shells[m - 2].inf_u >= res.shells[m - 3].inf_u);
  }
}

TEST_CASE("two-plane lemma: r0 shrinks with mu") {
  const int n = 3;
  const double a = 1.0;
  const Vec p{0.02, 0.0, 0.0};
  const Vec q{-0.016, 0.012, 0.0};
  const Vec mean{0.002, 0.006, 0.0};
  auto delta = [](double r) { return 0.03 * std::pow(r, 1.5); };

  auto first_positive_radius = [&](double mu) {
    GridField g = GridField::from_function(n, 32, 1.0 / 32, [&](const Vec& x) {
      return witness(x, a, mean, mu, n);
    });
    TwoPlaneResult res = two_plane_liminf(g, a, p, q, delta, 0.1);
    double r0 = 0.0;
    for (const ShellReport& s : res.shells) {  // decreasing r
      if (s.inf_u > a) {
        if (r0 == 0.0) r0 = s.r;
      } else {
        r0 = 0.0;  // must be positive for ALL shells below r0
      }
    }
    return r0;
  };
  double r0_large = first_positive_radius(1e-2);
  double r0_small = first_positive_radius(1e-3);
  CHECK(r0_small < r0_large);
  CHECK(r0_small > 0.0);
}

TEST_CASE("two-plane lemma: crease control dies at the superharmonicity stage") {
  const int n = 3;
  const double a = 1.0;
  const Vec p{0.02, 0.0, 0.0};
  const Vec q{-0.016, 0.012, 0.0};
  GridField crease = GridField::from_function(n, 32, 1.0 / 32, [&](const Vec& x) {
    return a + std::max(dot(p, x), dot(q, x));
  });
  CHECK_FALSE(superharmonic_check(crease, 0.1).ok);
  CHECK_THROWS_WITH_AS(
      two_plane_liminf(crease, a, p, q, [](double) { return 0.0; }, 0.1),
      doctest::Contains("superharmonicity precondition"), std::domain_error);
}

TEST_CASE("two-plane lemma: p must differ from q") {
  GridField g = GridField::from_function(3, 8, 0.125,
                                         [](const Vec& x) { return 2.0 + norm(x); });
  Vec p{0.1, 0.0, 0.0};
  CHECK_THROWS_AS(two_plane_liminf(g, 1.0, p, p, [](double) { return 0.0; }),
                  std::invalid_argument);
}

TEST_CASE("two-plane lemma: hypothesis violations are reported with the node") {
  const int n = 3;
  // u = a + p.x exactly: dominated by the q-plane requirement somewhere
  const Vec p{0.05, 0.0, 0.0};
  const Vec q{-0.05, 0.0, 0.0};
  GridField g = GridField::from_function(n, 16, 1.0 / 16, [&](const Vec& x) {
    return 1.0 + dot(p, x) + 1e-3 / norm(x);
  });
  // With delta == 0 the q-plane hypothesis fails away from the axis.
  CHECK_THROWS_WITH_AS(two_plane_liminf(g, 1.0, p, q, [](double) { return 0.0; }, 0.1),
                       doctest::Contains("hypothesis"), std::domain_error);
}

TEST_CASE("grid CSV deserialization round-trips values") {
  std::stringstream csv;
  csv << "1,0,0,3.5\n-1,0,0,2.5\n0,1,0,1.25\n0,-1,0,0.75\n0,0,1,1.0\n0,0,-1,2.0\n";
  csv << "2,0,0,9.0\n";
  GridField g = GridField::from_csv(csv, 0.5);
  CHECK(g.dim() == 3);
  CHECK(g.value({1, 0, 0}) == 3.5);
  CHECK(g.value({0, 0, -1}) == 2.0);
  CHECK(g.value({2, 0, 0}) == 9.0);
}

TEST_CASE("shell report JSON shape") {
  TwoPlaneResult r;
  r.passes = true;
  r.shells.push_back(ShellReport{0.5, 1.25, 421});
  std::string j = to_json(r, 1.0);
  CHECK(j.find("\"passes\":true") != std::string::npos);
  CHECK(j.find("\"nodes\":421") != std::string::npos);
}
