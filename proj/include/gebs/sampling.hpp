#pragma once

#include <Eigen/Dense>

#include <complex>
#include <random>
#include <stdexcept>
#include <string>

#include "gebs/generators.hpp"
#include "gebs/linalg.hpp"
#include "gebs/special_functions.hpp"

namespace gebs {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

namespace detail {

template <typename Scalar>
struct ScalarTraits {
  static constexpr int kAlgebraDim = 1;
  static Scalar standard_normal(std::mt19937_64& rng) {
    std::normal_distribution<double> n01(0.0, 1.0);
    return n01(rng);
  }
};

template <>
struct ScalarTraits<std::complex<double>> {
  static constexpr int kAlgebraDim = 2;
  static std::complex<double> standard_normal(std::mt19937_64& rng) {
    std::normal_distribution<double> n01(0.0, 1.0);
    const double re = n01(rng);
    const double im = n01(rng);
    return {re, im};
  }
};

template <typename Scalar>
void check_beta_scalar(AlgebraDim beta, const char* who) {
  if (beta.beta() != ScalarTraits<Scalar>::kAlgebraDim) {
    throw std::invalid_argument(std::string(who) +
                                ": beta = " + std::to_string(beta.beta()) +
                                " does not match the matrix scalar type (beta = 4 sampling is "
                                "not enabled in this build; beta = 8 has no matrix sampling)");
  }
}

}  // namespace detail

// Draws r with density proportional to h(r^2) r^(dim-1); this is the radial
// factor of the stochastic representation. All three families reduce to gamma
// draws: with y = r^2,
//   gaussian   y ~ Gamma(dim/2, scale)
//   kotz       y ~ Gamma(dim/2 + shape - 1, 1/rate)
//   pearson7   y = nu * G1/G2, G1 ~ Gamma(dim/2), G2 ~ Gamma(p - dim/2),
// the last being the gamma-mixture route to the Fisher-Snedecor-type radial
// law (needs p > dim/2 or the density is not integrable).
class RadialSampler {
 public:
  RadialSampler(Generator g, int dim);

  double operator()(std::mt19937_64& rng) const;
  int dim() const { return dim_; }
  const Generator& generator() const { return g_; }

 private:
  Generator g_;
  int dim_;
};

// Haar-distributed element of the orthogonal (beta = 1) or unitary (beta = 2)
// group: QR of a Ginibre matrix with the R-diagonal phase correction, so the
// law is exactly invariant.
template <typename Scalar>
DenseMatrix<Scalar> haar_sample(AlgebraDim beta, int m, std::mt19937_64& rng) {
  detail::check_beta_scalar<Scalar>(beta, "haar_sample");
  if (m < 1) throw std::invalid_argument("haar_sample: m must be >= 1");
  DenseMatrix<Scalar> g(m, m);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) {
      g(i, j) = detail::ScalarTraits<Scalar>::standard_normal(rng);
    }
  }
  Eigen::HouseholderQR<DenseMatrix<Scalar>> qr(g);
  DenseMatrix<Scalar> q = qr.householderQ() * DenseMatrix<Scalar>::Identity(m, m);
  DenseMatrix<Scalar> r = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (int j = 0; j < m; ++j) {
    const Scalar d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return q;
}

// Matrix variate elliptically contoured model: location mu (n x m), row
// covariance theta (n x n), column covariance sigma (m x m), generator h.
// Square roots and the radial sampler are precomputed at construction;
// sampling follows X = mu + theta^(1/2) (r V) sigma^(1/2) with V uniform on
// the Frobenius unit sphere.
template <typename Scalar>
class EllipticalModel {
 public:
  EllipticalModel(AlgebraDim beta, DenseMatrix<Scalar> mu, DenseMatrix<Scalar> theta,
                  DenseMatrix<Scalar> sigma, Generator gen)
      : beta_(beta),
        mu_(std::move(mu)),
        gen_(std::move(gen)),
        radial_(gen_, beta.beta() * static_cast<int>(mu_.rows()) *
                          static_cast<int>(mu_.cols())) {
    detail::check_beta_scalar<Scalar>(beta, "EllipticalModel");
    if (mu_.rows() < 1 || mu_.cols() < 1) {
      throw std::invalid_argument("EllipticalModel: mu must be non-empty");
    }
    if (theta.rows() != mu_.rows() || theta.cols() != mu_.rows()) {
      throw std::invalid_argument("EllipticalModel: theta must be n x n");
    }
    if (sigma.rows() != mu_.cols() || sigma.cols() != mu_.cols()) {
      throw std::invalid_argument("EllipticalModel: sigma must be m x m");
    }
    theta_sqrt_ = hermitian_sqrt(theta.eval());
    sigma_sqrt_ = hermitian_sqrt(sigma.eval());
  }

  static EllipticalModel standard(AlgebraDim beta, int n, int m, Generator gen) {
    return EllipticalModel(beta, DenseMatrix<Scalar>::Zero(n, m),
                           DenseMatrix<Scalar>::Identity(n, n),
                           DenseMatrix<Scalar>::Identity(m, m), std::move(gen));
  }

  int rows() const { return static_cast<int>(mu_.rows()); }
  int cols() const { return static_cast<int>(mu_.cols()); }
  AlgebraDim beta() const { return beta_; }
  const Generator& generator() const { return gen_; }
  const RadialSampler& radial() const { return radial_; }

  DenseMatrix<Scalar> sample(std::mt19937_64& rng) const {
    const int n = rows(), m = cols();
    DenseMatrix<Scalar> v(n, m);
    for (int j = 0; j < m; ++j) {
      for (int i = 0; i < n; ++i) {
        v(i, j) = detail::ScalarTraits<Scalar>::standard_normal(rng);
      }
    }
    v /= v.norm();
    const double r = radial_(rng);
    return mu_ + theta_sqrt_ * (r * v) * sigma_sqrt_;
  }

 private:
  AlgebraDim beta_;
  DenseMatrix<Scalar> mu_;
  Generator gen_;
  RadialSampler radial_;
  DenseMatrix<Scalar> theta_sqrt_, sigma_sqrt_;
};

template <typename Scalar>
DenseMatrix<Scalar> sample_elliptical(const EllipticalModel<Scalar>& model,
                                      std::mt19937_64& rng) {
  return model.sample(rng);
}

template <typename Scalar>
struct WishartPair {
  DenseMatrix<Scalar> w1, w2;
  int n1 = 0, n2 = 0;
};

// Splits one joint (n1+n2) x m elliptical draw row-wise and forms the
// quadratic forms W_i = X_i^* X_i. The blocks are uncorrelated but NOT
// independent for non-Gaussian generators, so both must come from the same
// draw. Numerically singular W_i trigger a redraw; *incidents counts them.
template <typename Scalar>
WishartPair<Scalar> wishart_pair(const EllipticalModel<Scalar>& model, int n1, int n2,
                                 std::mt19937_64& rng, long long* incidents = nullptr) {
  const int m = model.cols();
  if (n1 + n2 != model.rows()) {
    throw std::invalid_argument("wishart_pair: model rows must equal n1 + n2");
  }
  if (n1 < m || n2 < m) {
    throw std::invalid_argument("wishart_pair: need n1 >= m and n2 >= m for full rank");
  }
  for (int attempt = 0; attempt < 100; ++attempt) {
    const DenseMatrix<Scalar> x = model.sample(rng);
    WishartPair<Scalar> pair;
    pair.n1 = n1;
    pair.n2 = n2;
    const auto x1 = x.topRows(n1);
    const auto x2 = x.bottomRows(n2);
    pair.w1 = x1.adjoint() * x1;
    pair.w2 = x2.adjoint() * x2;
    Eigen::SelfAdjointEigenSolver<DenseMatrix<Scalar>> e1(pair.w1), e2(pair.w2);
    const double floor1 = 1e-12 * std::abs(e1.eigenvalues().maxCoeff());
    const double floor2 = 1e-12 * std::abs(e2.eigenvalues().maxCoeff());
    if (e1.eigenvalues().minCoeff() > floor1 && e2.eigenvalues().minCoeff() > floor2) {
      return pair;
    }
    if (incidents != nullptr) ++(*incidents);
  }
  throw std::runtime_error("wishart_pair: repeated rank-deficient draws");
}

}  // namespace gebs
