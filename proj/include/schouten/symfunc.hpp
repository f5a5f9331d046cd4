#pragma once

#include <string>
#include <vector>

#include "schouten/errors.hpp"
#include "schouten/linalg.hpp"

namespace schouten {

/// Index pair (n, k) selecting the cone Gamma_k and operator F_k in
/// dimension n, 1 <= k <= n.
struct Cone {
  int n;
  int k;
};

/// k-th elementary symmetric function of lambda. Exact subset enumeration
/// for n <= 12; product-expansion recurrence over the characteristic
/// polynomial coefficients above that.
double sigma(const Vec& lambda, int k);

/// All of sigma_0..sigma_n in one pass (recurrence).
Vec sigma_all(const Vec& lambda);

/// (d sigma_k / d lambda_i)_i = sigma_{k-1} of lambda with entry i removed.
Vec sigma_gradient(const Vec& lambda, int k);

/// Gamma_k membership: sigma_j(lambda) > 0 for every j = 1..k. This is the
/// standard algebraic characterization of the connected component of
/// {sigma_k > 0} containing the positive cone.
bool in_gamma_k(const Vec& lambda, const Cone& cone);

/// First j in 1..k with sigma_j(lambda) <= 0, or 0 if none.
int first_cone_failure(const Vec& lambda, const Cone& cone);

/// F_k = sigma_k(lambda)^{1/k} on the open cone Gamma_k; throws
/// cone_violation (with the first failing index) off the cone, including
/// on its boundary.
double f_k(const Vec& lambda, const Cone& cone);

/// One row of the sign table for lambda = (-1, 1, ..., 1): sigma_k computed
/// by two independent exact-integer routes. `value_*` are decimal strings
/// (values overflow 64-bit well before n = 64).
struct SignTableRow {
  int k;
  int sign;                  // -1, 0, +1; must equal sign(n - 2k)
  std::string value_direct;  // product-expansion recurrence
  std::string value_poly;    // derivative identity of f(t) = (t-1)(t+1)^{n-1}
};

/// Exact sign table of sigma_k(-1, 1, ..., 1) for k = 1..n. Throws
/// std::logic_error if the two routes ever disagree, std::invalid_argument
/// for n outside [2, 64].
std::vector<SignTableRow> sign_table(int n);

}  // namespace schouten
