#pragma once

#include <vector>

#include "gebs/generators.hpp"
#include "gebs/jack.hpp"
#include "gebs/special_functions.hpp"

namespace gebs {

// Parameters of a (p)P(q) series of Jack polynomials: numerator/denominator
// Pochhammer parameters, per-degree weights g_k (empty means the classical
// all-ones pFq), truncation degree and relative tail tolerance.
struct SeriesSpec {
  AlgebraDim beta;
  std::vector<double> a_params;
  std::vector<double> b_params;
  std::vector<double> coeffs;  // g_k, k = 0..max_degree; empty = all ones
  int max_degree = 40;
  double tol = 1e-10;
};

struct SeriesResult {
  double value = 0.0;
  int terms_used = 0;         // highest degree level included
  double tail_estimate = 0.0; // |last level| + |previous level|
  bool converged = false;     // implies tail_estimate <= tol * |value|
  std::vector<double> level_sums;  // degree-level contributions, diagnostics
};

// One-matrix series
//   sum_k g_k/k! sum_{kappa |- k, l(kappa) <= m} prod(a_i)_kappa / prod(b_j)_kappa C_kappa(x).
// Terms accumulate degree-ascending, partitions in the enumerator's fixed
// order, compensated; the sum stops after two consecutive degree levels fall
// below tol * |partial| (two, because alternating weights can produce one
// accidentally small level). For (p,q) = (1,0) the spectrum must satisfy
// ||x||_inf < 1. A denominator parameter on the Pochhammer zero lattice
// throws std::invalid_argument.
SeriesResult p_series_1(const SeriesSpec& spec, const Spectrum& x, JackTable& table);

// Two-matrix series with term factor C_kappa(x) C_kappa(y) / C_kappa(I_m);
// reduces to p_series_1 when y is the spectrum of the identity. Partitions
// with more parts than m are skipped before any division.
SeriesResult p_series_2(const SeriesSpec& spec, const Spectrum& x, const Spectrum& y,
                        JackTable& table);

// Self-normalized elliptical binomial weights
//   ghat_k = [D_k(ma) / Gamma(ma+k)] / [D_0(ma) / Gamma(ma)],  ghat_0 = 1,
// which equal (-1)^k for every admissible generator. Self-normalization makes
// the determinant identity hold for any h normalization; the literal pi^{ma}
// prefactor of the source form is surfaced separately in Theorem1Report.
std::vector<double> elliptical_binomial_coeffs(const Generator& g, AlgebraDim beta, int m,
                                               double a, int K,
                                               MomentMethod method = MomentMethod::kClosedForm);

struct Theorem1Report {
  double lhs = 0.0;  // prod_i (1 - x_i)^(-a)
  double rhs = 0.0;  // series value at spectrum -x with the ghat weights
  double rel_error = 0.0;
  bool pass = false;
  bool converged = false;
  int terms_used = 0;
  double tail_estimate = 0.0;
  std::vector<double> ghat;
  // The two constant conventions of the source identity, reported rather than
  // asserted: pi^{ma}, and Gamma(ma) / (Gamma_m^beta(a) * M_h(ma)).
  double pi_power_prefactor = 0.0;
  double proof_prefactor = 0.0;
};

// Checks prod(1 - x_i)^(-a) against the elliptical binomial series with the
// ghat weights of the given generator. Requires ||x||_inf < 1 and
// a > (m-1) beta / 2. pass = converged && rel_error <= tol.
Theorem1Report verify_theorem1(const Generator& g, AlgebraDim beta, double a,
                               const Spectrum& x, int K, double tol, JackTable& table,
                               MomentMethod method = MomentMethod::kClosedForm);
// Convenience overload with a private table.
Theorem1Report verify_theorem1(const Generator& g, AlgebraDim beta, double a,
                               const Spectrum& x, int K, double tol,
                               MomentMethod method = MomentMethod::kClosedForm);

}  // namespace gebs
