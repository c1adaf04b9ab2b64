#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gebs/jack.hpp"
#include "gebs/special_functions.hpp"

namespace gebs {

// Eigenvalues of a Hermitian-symmetric argument, descending. Series code sees
// matrices only through this function. beta = 1 expects a real symmetric
// matrix, beta = 2 a Hermitian one (real symmetric also accepted), beta = 4
// the complex 2m x 2m representation of a quaternion-Hermitian matrix whose
// doubled eigenvalues are collapsed. beta = 8 has no matrix form; spectra are
// passed to the series directly.
template <typename Derived>
Spectrum sym_eigenvalues(const Eigen::MatrixBase<Derived>& Z_in, AlgebraDim beta) {
  using Scalar = typename Derived::Scalar;
  constexpr bool kComplex = Eigen::NumTraits<Scalar>::IsComplex;
  const auto Z = Z_in.eval();
  if (beta.beta() == 8) {
    throw std::invalid_argument(
        "sym_eigenvalues: beta = 8 accepts spectra only (no associative matrix algebra)");
  }
  if (beta.beta() == 1 && kComplex) {
    throw std::invalid_argument("sym_eigenvalues: beta = 1 expects a real symmetric matrix");
  }
  if (beta.beta() == 4 && !kComplex) {
    throw std::invalid_argument(
        "sym_eigenvalues: beta = 4 expects the complex 2m x 2m representation");
  }
  if (Z.rows() != Z.cols() || Z.rows() == 0) {
    throw std::invalid_argument("sym_eigenvalues: matrix must be square and non-empty");
  }
  const double scale = std::max(1.0, Z.cwiseAbs().maxCoeff());
  if ((Z - Z.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::invalid_argument("sym_eigenvalues: input is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>> es(Z);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("sym_eigenvalues: eigensolver failed");
  }
  const double resid = (es.eigenvectors() * es.eigenvalues().asDiagonal() *
                            es.eigenvectors().adjoint() -
                        Z)
                           .cwiseAbs()
                           .maxCoeff();
  if (resid > 1e-10 * scale) {
    throw std::runtime_error("sym_eigenvalues: reconstruction residual too large");
  }
  Eigen::VectorXd vals = es.eigenvalues();  // ascending
  std::reverse(vals.data(), vals.data() + vals.size());
  if (beta.beta() == 4) {
    if (vals.size() % 2 != 0) {
      throw std::invalid_argument("sym_eigenvalues: beta = 4 representation must be even-sized");
    }
    Spectrum out(vals.size() / 2);
    for (Eigen::Index i = 0; i < out.size(); ++i) {
      const double a = vals(2 * i), b = vals(2 * i + 1);
      if (std::abs(a - b) > 1e-9 * scale) {
        throw std::invalid_argument(
            "sym_eigenvalues: eigenvalues do not pair; input is not a quaternion-Hermitian "
            "representation");
      }
      out(i) = 0.5 * (a + b);
    }
    return out;
  }
  return vals;
}

// Unique Hermitian positive definite square root.
template <typename MatrixType>
MatrixType hermitian_sqrt(const MatrixType& W) {
  Eigen::SelfAdjointEigenSolver<MatrixType> es(W);
  if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 0.0) {
    throw std::runtime_error("hermitian_sqrt: matrix is not positive definite");
  }
  return es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() *
         es.eigenvectors().adjoint();
}

template <typename MatrixType>
MatrixType hermitian_inv_sqrt(const MatrixType& W) {
  Eigen::SelfAdjointEigenSolver<MatrixType> es(W);
  if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 0.0) {
    throw std::runtime_error("hermitian_inv_sqrt: matrix is not positive definite");
  }
  return es.eigenvectors() * es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
         es.eigenvectors().adjoint();
}

template <typename MatrixType>
double hermitian_condition(const MatrixType& W) {
  Eigen::SelfAdjointEigenSolver<MatrixType> es(W);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  if (lo <= 0.0) return std::numeric_limits<double>::infinity();
  return hi / lo;
}

}  // namespace gebs
