#pragma once

#include <vector>

#include "gebs/partitions.hpp"

namespace gebs {

// Real dimension of the division algebra: 1 real, 2 complex, 4 quaternion,
// 8 octonion. The Jack parameter is alpha = 2/beta, exact in binary for all
// four values.
class AlgebraDim {
 public:
  explicit AlgebraDim(int beta);

  int beta() const { return beta_; }
  double alpha() const { return 2.0 / static_cast<double>(beta_); }
  // Half the algebra dimension shows up everywhere as the lattice step.
  double half_beta() const { return static_cast<double>(beta_) / 2.0; }

  bool operator==(const AlgebraDim&) const = default;

 private:
  int beta_;
};

// log Gamma_m^beta(a) = (m(m-1)beta/4) log pi + sum_{i=1}^m log Gamma(a - (i-1)beta/2).
// Domain: a > (m-1)beta/2. Throws std::domain_error naming the factor that
// hits a pole otherwise. At m = 1 this is log Gamma(a) for every beta.
double ln_mv_gamma(AlgebraDim beta, int m, double a);

// Generalized Pochhammer (a)_kappa^beta = prod_i (a - (i-1)beta/2)_{k_i},
// rising factorials. Empty partition gives exactly 1; zeros are legitimate
// values, not errors.
double gen_pochhammer(AlgebraDim beta, double a, const Partition& kappa);

namespace detail {
// Pairwise (tree) product of a factor list; keeps rounding error flat in the
// factor count.
double pairwise_product(const std::vector<double>& factors);
}  // namespace detail

}  // namespace gebs
