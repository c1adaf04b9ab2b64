#include "gebs/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace gebs {

AlgebraDim::AlgebraDim(int beta) : beta_(beta) {
  if (beta != 1 && beta != 2 && beta != 4 && beta != 8) {
    throw std::invalid_argument("AlgebraDim: beta must be one of {1,2,4,8}, got " +
                                std::to_string(beta));
  }
}

double ln_mv_gamma(AlgebraDim beta, int m, double a) {
  if (m < 1) throw std::invalid_argument("ln_mv_gamma: m must be >= 1");
  const double hb = beta.half_beta();
  double sum = 0.25 * static_cast<double>(m) * static_cast<double>(m - 1) *
               static_cast<double>(beta.beta()) * std::log(std::numbers::pi);
  for (int i = 1; i <= m; ++i) {
    const double arg = a - static_cast<double>(i - 1) * hb;
    if (arg <= 0.0) {
      std::ostringstream msg;
      msg << "ln_mv_gamma: a = " << a << " is at or left of the pole of factor i = "
          << i << " (Gamma argument a - (i-1)*beta/2 = " << arg
          << " <= 0); need a > " << static_cast<double>(m - 1) * hb;
      throw std::domain_error(msg.str());
    }
    sum += std::lgamma(arg);
  }
  return sum;
}

namespace detail {

double pairwise_product(const std::vector<double>& factors) {
  if (factors.empty()) return 1.0;
  std::vector<double> level = factors;
  while (level.size() > 1) {
    std::vector<double> next;
    next.reserve((level.size() + 1) / 2);
    for (size_t i = 0; i + 1 < level.size(); i += 2) {
      next.push_back(level[i] * level[i + 1]);
    }
    if (level.size() % 2 == 1) next.push_back(level.back());
    level = std::move(next);
  }
  return level[0];
}

}  // namespace detail

double gen_pochhammer(AlgebraDim beta, double a, const Partition& kappa) {
  const double hb = beta.half_beta();
  std::vector<double> factors;
  factors.reserve(static_cast<size_t>(kappa.weight()));
  for (int i = 0; i < kappa.length(); ++i) {
    const double base = a - static_cast<double>(i) * hb;
    for (int j = 0; j < kappa.parts()[static_cast<size_t>(i)]; ++j) {
      factors.push_back(base + static_cast<double>(j));
    }
  }
  return detail::pairwise_product(factors);
}

}  // namespace gebs
