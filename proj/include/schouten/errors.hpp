#pragma once

#include <stdexcept>
#include <string>

namespace schouten {

/// Eigenvalues left the Garding cone. `failing_sigma` is the smallest j
/// with sigma_j <= 0 (1-based), or 0 when unknown.
class cone_violation : public std::domain_error {
 public:
  explicit cone_violation(const std::string& what, int failing_sigma = 0)
      : std::domain_error(what), failing_sigma(failing_sigma) {}
  int failing_sigma;
};

/// The lambda1-closure of the radial equation has a vanishing coefficient
/// (lambda2 = 0 with k >= 2); no continuation is defined there.
class degenerate_closure : public std::domain_error {
  using std::domain_error::domain_error;
};

/// Evaluation requested at (or too close to) the singular point of a map
/// or field.
class singular_point : public std::domain_error {
  using std::domain_error::domain_error;
};

/// Function value must be positive to form the conformal Hessian.
class positivity_error : public std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace schouten
