#include "gebs/sampling.hpp"

#include <cmath>

namespace gebs {

RadialSampler::RadialSampler(Generator g, int dim) : g_(std::move(g)), dim_(dim) {
  if (dim < 1) throw std::invalid_argument("RadialSampler: dim must be >= 1");
  const double half_dim = 0.5 * static_cast<double>(dim);
  if (g_.family() == GeneratorFamily::kPearsonVII && !(g_.exponent() > half_dim)) {
    throw std::domain_error("RadialSampler: pearson7 radial density is not integrable; need "
                            "exponent p > dim/2 = " +
                            std::to_string(half_dim));
  }
}

double RadialSampler::operator()(std::mt19937_64& rng) const {
  const double half_dim = 0.5 * static_cast<double>(dim_);
  double y = 0.0;
  switch (g_.family()) {
    case GeneratorFamily::kGaussian: {
      std::gamma_distribution<double> gamma(half_dim, g_.scale());
      y = gamma(rng);
      break;
    }
    case GeneratorFamily::kKotz: {
      std::gamma_distribution<double> gamma(half_dim + g_.shape() - 1.0, 1.0 / g_.rate());
      y = gamma(rng);
      break;
    }
    case GeneratorFamily::kPearsonVII: {
      std::gamma_distribution<double> g1(half_dim, 1.0);
      std::gamma_distribution<double> g2(g_.exponent() - half_dim, 1.0);
      const double num = g1(rng);
      const double den = g2(rng);
      y = g_.nu() * num / den;
      break;
    }
  }
  return std::sqrt(y);
}

}  // namespace gebs
