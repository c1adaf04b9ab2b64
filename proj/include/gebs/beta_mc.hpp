#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gebs/sampling.hpp"
#include "gebs/stats.hpp"

namespace gebs {

template <typename Scalar>
struct BetaStatistics {
  DenseMatrix<Scalar> f;  // W2^(-1/2) W1 W2^(-1/2), Hermitian positive definite
  DenseMatrix<Scalar> u;  // (I + F^(-1))^(-1) = F (I + F)^(-1), 0 < U < I
  DenseMatrix<Scalar> g;  // W1 W2^(-1), nonsymmetric, same spectrum as F
  Eigen::VectorXd f_eigenvalues;  // descending
  Eigen::VectorXd u_eigenvalues;  // descending, in (0, 1)
  bool ill_conditioned = false;   // cond(W2) > 1e12
};

// F via the Hermitian square root of W2; U from F's eigensystem, which keeps
// it exactly Hermitian with spectrum in (0,1).
template <typename Scalar>
BetaStatistics<Scalar> beta_statistics(const WishartPair<Scalar>& pair) {
  BetaStatistics<Scalar> out;
  out.ill_conditioned = hermitian_condition(pair.w2) > 1e12;
  const DenseMatrix<Scalar> w2_inv_sqrt = hermitian_inv_sqrt(pair.w2);
  DenseMatrix<Scalar> f = w2_inv_sqrt * pair.w1 * w2_inv_sqrt;
  f = ((f + f.adjoint()) / Scalar(2)).eval();
  Eigen::SelfAdjointEigenSolver<DenseMatrix<Scalar>> es(f);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("beta_statistics: eigensolver failed on F");
  }
  const Eigen::VectorXd phi = es.eigenvalues();
  out.f = f;
  out.u = es.eigenvectors() *
          (phi.array() / (1.0 + phi.array())).matrix().asDiagonal() *
          es.eigenvectors().adjoint();
  out.g = pair.w1 * pair.w2.inverse();
  out.f_eigenvalues = phi.reverse();
  out.u_eigenvalues = (phi.array() / (1.0 + phi.array())).matrix().reverse();
  return out;
}

// Eigenvalues of the nonsymmetric G, sorted descending by real part;
// max_imag reports how far they sit from the real axis.
Eigen::VectorXd general_eigenvalues(const DenseMatrix<double>& g, double* max_imag);
Eigen::VectorXd general_eigenvalues(const DenseMatrix<std::complex<double>>& g,
                                    double* max_imag);

// Determinant moment of the Theorem 2 beta type I law:
//   E|U|^h = Gamma_m(b n1/2 + h) Gamma_m(b(n1+n2)/2)
//          / [Gamma_m(b n1/2) Gamma_m(b(n1+n2)/2 + h)],
// all Gamma_m with the algebra-dimension parameter.
double beta_moment_reference(AlgebraDim beta, int m, int n1, int n2, double h_exp);

struct McCheck {
  std::string statistic;
  std::string kind;  // "moment", "ks", "ks2", "deterministic"
  long long sample_size = 0;
  double estimate = 0.0;
  double reference = 0.0;
  double std_error = 0.0;  // 0 for deterministic checks
  double p_value = -1.0;   // KS checks only; -1 means not applicable
  bool pass = false;
};

struct Theorem2Config {
  AlgebraDim beta{1};
  int m = 2;
  int n1 = 6;
  int n2 = 8;
  std::vector<Generator> generators;
  long long sample_count = 100000;
  std::uint64_t seed = 42;
  int threads = 1;
  double se_factor = 3.0;
  double ks_alpha = 0.01;
  int eig_check_draws = 1000;
  bool sigma_invariance_check = true;
  bool collect_raw = false;
};

struct GeneratorScalars {
  std::string generator;
  std::vector<double> tr_u, det_u, lambda_max, u11, u11_haar;
};

struct Theorem2Report {
  std::vector<McCheck> checks;
  bool all_pass = false;
  long long resample_incidents = 0;
  std::uint64_t seed = 0;
  std::vector<GeneratorScalars> raw;  // filled when cfg.collect_raw
};

// The full Theorem 2 Monte Carlo battery: per-generator determinant moments
// against the Gamma-ratio reference, the m = 1 KS test against
// Beta(beta n1/2, beta n2/2), F vs G spectral equality, a Haar symmetrization
// comparison, all pairwise cross-generator agreements (the invariance claim),
// and a Sigma = I vs non-isotropic Sigma comparison. Failures become report
// entries, never exceptions. beta must be 1 or 2.
Theorem2Report verify_theorem2(const Theorem2Config& cfg);

}  // namespace gebs
