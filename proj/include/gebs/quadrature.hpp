#pragma once

#include <functional>

namespace gebs {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // absolute, from the last level refinement
  int levels = 0;
  bool converged = false;
};

// Tanh-sinh (double-exponential) rule on (0,1). The integrand receives both
// u and 1-u, each computed without cancellation, so endpoint-singular factors
// like u^{s-1} (1-u)^{q-1} can be evaluated accurately all the way into the
// corners. Non-finite integrand values at extreme depths are treated as zero;
// the rule is only meant for endpoint-integrable singularities.
QuadratureResult tanh_sinh_01(const std::function<double(double, double)>& f,
                              double rel_tol, int max_levels = 12);

// Integral over (0, infinity) through w = scale * u / (1-u). scale should sit
// near the bulk of the integrand's mass (an O(1)-correct guess is enough for
// the double-exponential rule to converge).
QuadratureResult integrate_positive_axis(const std::function<double(double)>& g,
                                         double scale, double rel_tol,
                                         int max_levels = 12);

}  // namespace gebs
