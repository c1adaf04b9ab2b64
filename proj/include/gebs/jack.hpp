#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "gebs/partitions.hpp"
#include "gebs/special_functions.hpp"

namespace gebs {

// Eigenvalue vector of the (Hermitian) series argument; Jack polynomials see
// matrices only through their spectrum.
using Spectrum = Eigen::VectorXd;

// Memoized evaluator state for Jack polynomials C_kappa^beta in the
// normalization pinned by sum_{kappa |- k} C_kappa(X) = (tr X)^k.
//
// Evaluation runs the variable-by-variable recurrence in the J-normalization:
//   J_kappa(x_1..x_n) = sum_mu J_mu(x_1..x_{n-1}) * x_n^(|kappa|-|mu|) * b(kappa,mu)
// over partitions mu with kappa/mu a horizontal strip, where b(kappa,mu) is a
// ratio of alpha-hook products, alpha = 2/beta. The conversion
//   C_kappa = alpha^k k! / j_kappa * J_kappa,   j_kappa = prod hooks,
// is computed in log space. Two caches persist: the x-independent strip
// expansions per partition, and J values bound to the current spectrum (the
// value cache resets whenever a different spectrum comes in).
//
// All entry points lock one mutex, so concurrent callers are safe; within one
// spectrum the table is effectively read-mostly.
class JackTable {
 public:
  JackTable(AlgebraDim beta, int max_degree);

  AlgebraDim beta() const { return beta_; }
  double alpha() const { return beta_.alpha(); }
  int max_degree() const { return max_degree_; }

  double eval_c(const Partition& kappa, const Spectrum& x);
  double eval_c_identity(const Partition& kappa, int m);

 private:
  struct StripTerm {
    int mu_id;
    int drop;     // |kappa| - |mu|
    double coef;  // hook-ratio coefficient b(kappa, mu)
  };

  int intern(const Partition& p);
  const std::vector<StripTerm>& strips(int pid);
  double eval_j(int pid, int nvars);
  double ln_c_over_j(int pid);  // log(alpha^k k! / j_kappa)
  void bind(const Spectrum& x);

  AlgebraDim beta_;
  int max_degree_;

  std::mutex mutex_;
  std::unordered_map<Partition, int, PartitionHash> id_of_;
  std::vector<Partition> interned_;
  std::vector<std::vector<StripTerm>> strips_;  // parallel to interned_, empty = not built
  std::vector<bool> strips_built_;
  std::vector<double> ln_cnorm_;  // parallel, NaN = not built
  Spectrum bound_x_;
  bool has_binding_ = false;
  std::unordered_map<std::uint64_t, double> j_values_;  // key: (pid << 8) | nvars
};

// C_kappa^beta(diag(x)). Exactly 0 when kappa has more parts than x has
// entries; homogeneous of degree |kappa|. Throws when kappa.weight() exceeds
// the table's configured max degree or the table's beta differs.
double jack_c(AlgebraDim beta, const Partition& kappa, const Spectrum& x, JackTable& table);

// C_kappa^beta(I_m) > 0 by closed form. Throws std::domain_error when kappa
// has more than m parts (callers skip those terms; nothing divides by zero).
double jack_c_identity(AlgebraDim beta, const Partition& kappa, int m);

}  // namespace gebs
