#pragma once

#include <functional>
#include <vector>

namespace gebs {

// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double ibeta_reg(double a, double b, double x);

double beta_cdf(double a, double b, double x);
double student_t_cdf(double df, double t);
double normal_cdf(double z);

// Kolmogorov tail Q(lambda) = 2 sum_{j>=1} (-1)^(j-1) exp(-2 j^2 lambda^2).
double kolmogorov_q(double lambda);

struct KsResult {
  double statistic = 0.0;  // sup |F_emp - F|
  double p_value = 0.0;
};

// Two-sided one-sample KS against a reference CDF. Sorts a copy internally.
KsResult ks_test(const std::vector<double>& sample, const std::function<double(double)>& cdf);

// Two-sided two-sample KS.
KsResult ks_test_two_sample(const std::vector<double>& a, const std::vector<double>& b);

struct MomentSummary {
  double mean = 0.0;
  double std_error = 0.0;
  long long n = 0;
};

MomentSummary summarize(const std::vector<double>& sample);

}  // namespace gebs
