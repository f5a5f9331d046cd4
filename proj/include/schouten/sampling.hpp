#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "schouten/linalg.hpp"

namespace schouten {

/// Van der Corput radical inverse in the given base (index is 1-based).
double halton(uint64_t index, unsigned base);

/// Inverse of the standard normal CDF (Acklam's rational approximation,
/// |error| < 1.2e-9 over (0,1)).
double inverse_normal_cdf(double p);

/// Deterministic low-discrepancy points in the annulus
/// {r_min <= |y| <= r_max}: radius log-uniform in the Halton base-2
/// coordinate, direction from inverse-normal-mapped higher bases.
std::vector<Vec> annulus_points(int n, int count, double r_min, double r_max,
                                uint64_t start_index = 1);

/// Deterministic low-discrepancy directions on the unit sphere S^{n-1}.
std::vector<Vec> sphere_points(int n, int count, uint64_t start_index = 1);

/// Random orthogonal matrix as a product of n Householder reflections of
/// Gaussian vectors (uniformly distributed sign pattern is not needed for
/// the invariance checks, only orthogonality).
std::vector<Vec> random_orthogonal(int n, std::mt19937_64& rng);

/// y = O x for a matrix stored as rows.
Vec apply_matrix(const std::vector<Vec>& rows, const Vec& x);

}  // namespace schouten
