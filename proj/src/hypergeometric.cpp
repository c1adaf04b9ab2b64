#include "gebs/hypergeometric.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace gebs {

namespace {

constexpr double kValueFloor = 1e-280;  // keeps the relative stop test meaningful near 0

struct KahanSum {
  double value = 0.0;
  double comp = 0.0;
  void add(double term) {
    const double y = term - comp;
    const double t = value + y;
    comp = (t - value) - y;
    value = t;
  }
};

void validate_spec(const SeriesSpec& spec, const JackTable& table) {
  if (!(spec.beta == table.beta())) {
    throw std::invalid_argument("p_series: spec.beta does not match the Jack table");
  }
  if (spec.max_degree < 0) throw std::invalid_argument("p_series: max_degree must be >= 0");
  if (spec.max_degree > table.max_degree()) {
    throw std::invalid_argument("p_series: max_degree exceeds the Jack table's capacity");
  }
  if (!(spec.tol > 0.0)) throw std::invalid_argument("p_series: tol must be > 0");
  if (!spec.coeffs.empty() &&
      spec.coeffs.size() < static_cast<size_t>(spec.max_degree) + 1) {
    throw std::invalid_argument("p_series: coeffs must cover degrees 0..max_degree");
  }
}

double pochhammer_ratio(const SeriesSpec& spec, const Partition& kappa) {
  double num = 1.0;
  for (double a : spec.a_params) num *= gen_pochhammer(spec.beta, a, kappa);
  double den = 1.0;
  for (double b : spec.b_params) {
    const double f = gen_pochhammer(spec.beta, b, kappa);
    if (f == 0.0) {
      std::ostringstream msg;
      msg << "p_series: denominator parameter b = " << b
          << " hits the Pochhammer zero lattice at kappa = " << kappa.to_string();
      throw std::invalid_argument(msg.str());
    }
    den *= f;
  }
  return num / den;
}

// Shared driver: level_term(k, kappa) supplies the Jack factor(s).
template <typename LevelTerm>
SeriesResult run_series(const SeriesSpec& spec, int m, LevelTerm&& level_term) {
  SeriesResult res;
  KahanSum sum;
  double inv_factorial = 1.0;
  int consecutive_small = 0;
  for (int k = 0; k <= spec.max_degree; ++k) {
    if (k > 0) inv_factorial /= static_cast<double>(k);
    const double g_k = spec.coeffs.empty() ? 1.0 : spec.coeffs[static_cast<size_t>(k)];
    double inner = 0.0;
    if (g_k != 0.0) {
      for (const Partition& kappa : partitions_of(k, m)) {
        inner += level_term(kappa);
      }
    }
    const double term = g_k * inv_factorial * inner;
    sum.add(term);
    res.level_sums.push_back(term);
    res.terms_used = k;
    if (k >= 1) {
      const double gate = spec.tol * std::max(std::abs(sum.value), kValueFloor);
      consecutive_small = (std::abs(term) <= gate) ? consecutive_small + 1 : 0;
      if (consecutive_small >= 2) break;
    }
  }
  res.value = sum.value;
  const size_t n = res.level_sums.size();
  res.tail_estimate = std::abs(res.level_sums[n - 1]);
  if (n >= 2) res.tail_estimate += std::abs(res.level_sums[n - 2]);
  res.converged = consecutive_small >= 2 &&
                  res.tail_estimate <= spec.tol * std::max(std::abs(res.value), kValueFloor);
  return res;
}

}  // namespace

SeriesResult p_series_1(const SeriesSpec& spec, const Spectrum& x, JackTable& table) {
  validate_spec(spec, table);
  if (x.size() == 0) throw std::invalid_argument("p_series_1: empty spectrum");
  const int m = static_cast<int>(x.size());
  if (spec.a_params.size() == 1 && spec.b_params.empty() &&
      x.cwiseAbs().maxCoeff() >= 1.0) {
    throw std::domain_error("p_series_1: a 1P0 series needs ||x||_inf < 1");
  }
  return run_series(spec, m, [&](const Partition& kappa) {
    return pochhammer_ratio(spec, kappa) * table.eval_c(kappa, x);
  });
}

SeriesResult p_series_2(const SeriesSpec& spec, const Spectrum& x, const Spectrum& y,
                        JackTable& table) {
  validate_spec(spec, table);
  if (x.size() == 0 || x.size() != y.size()) {
    throw std::invalid_argument("p_series_2: spectra must be non-empty and of equal length");
  }
  const int m = static_cast<int>(x.size());
  // Two spectra through one value cache would thrash the binding; keep a
  // separate table for y.
  JackTable table_y(spec.beta, spec.max_degree);
  return run_series(spec, m, [&](const Partition& kappa) {
    const double cx = table.eval_c(kappa, x);
    if (cx == 0.0) return 0.0;
    return pochhammer_ratio(spec, kappa) * cx * table_y.eval_c(kappa, y) /
           table_y.eval_c_identity(kappa, m);
  });
}

std::vector<double> elliptical_binomial_coeffs(const Generator& g, AlgebraDim beta, int m,
                                               double a, int K, MomentMethod method) {
  if (m < 1) throw std::invalid_argument("elliptical_binomial_coeffs: m must be >= 1");
  if (K < 0) throw std::invalid_argument("elliptical_binomial_coeffs: K must be >= 0");
  const double floor = static_cast<double>(m - 1) * beta.half_beta();
  if (!(a > floor)) {
    throw std::domain_error("elliptical_binomial_coeffs: need a > (m-1)beta/2 = " +
                            std::to_string(floor) + ", got a = " + std::to_string(a));
  }
  const double s0 = static_cast<double>(m) * a;
  require_admissible(g, s0, K);
  const double d0 = deriv_moment(g, 0, s0, method);
  const double lg0 = std::lgamma(s0);
  std::vector<double> ghat(static_cast<size_t>(K) + 1);
  ghat[0] = 1.0;
  for (int k = 1; k <= K; ++k) {
    const double dk = deriv_moment(g, k, s0, method);
    ghat[static_cast<size_t>(k)] =
        dk / d0 * std::exp(lg0 - std::lgamma(s0 + static_cast<double>(k)));
  }
  return ghat;
}

Theorem1Report verify_theorem1(const Generator& g, AlgebraDim beta, double a,
                               const Spectrum& x, int K, double tol, JackTable& table,
                               MomentMethod method) {
  if (x.size() == 0) throw std::invalid_argument("verify_theorem1: empty spectrum");
  if (x.cwiseAbs().maxCoeff() >= 1.0) {
    throw std::domain_error("verify_theorem1: needs ||x||_inf < 1");
  }
  const int m = static_cast<int>(x.size());
  Theorem1Report rep;
  rep.ghat = elliptical_binomial_coeffs(g, beta, m, a, K, method);

  SeriesSpec spec;
  spec.beta = beta;
  spec.a_params = {a};
  spec.coeffs = rep.ghat;
  spec.max_degree = K;
  spec.tol = tol;
  const SeriesResult series = p_series_1(spec, (-x).eval(), table);

  double ln_lhs = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) ln_lhs -= a * std::log1p(-x(i));
  rep.lhs = std::exp(ln_lhs);
  rep.rhs = series.value;
  rep.rel_error = std::abs(rep.lhs - rep.rhs) / std::abs(rep.lhs);
  rep.converged = series.converged;
  rep.terms_used = series.terms_used;
  rep.tail_estimate = series.tail_estimate;
  rep.pass = rep.converged && rep.rel_error <= tol;

  const double s0 = static_cast<double>(m) * a;
  rep.pi_power_prefactor = std::exp(s0 * std::log(std::numbers::pi));
  rep.proof_prefactor =
      std::exp(std::lgamma(s0) - ln_mv_gamma(beta, m, a)) / mellin_moment(g, s0, method);
  return rep;
}

Theorem1Report verify_theorem1(const Generator& g, AlgebraDim beta, double a,
                               const Spectrum& x, int K, double tol, MomentMethod method) {
  JackTable table(beta, K);
  return verify_theorem1(g, beta, a, x, K, tol, table, method);
}

}  // namespace gebs
