#include "gebs/jack.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gebs {

namespace {

double ipow(double x, int e) {
  double out = 1.0;
  double base = x;
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

// Upper and lower alpha-hooks of the cell (i, j) of nu, 1-based, with nuc the
// conjugate of nu.
inline double upper_hook(const Partition& nu, const Partition& nuc, int i, int j,
                         double alpha) {
  return static_cast<double>(nuc.part_or_zero(j - 1) - i) +
         alpha * static_cast<double>(nu.part_or_zero(i - 1) - j + 1);
}
inline double lower_hook(const Partition& nu, const Partition& nuc, int i, int j,
                         double alpha) {
  return static_cast<double>(nuc.part_or_zero(j - 1) - i + 1) +
         alpha * static_cast<double>(nu.part_or_zero(i - 1) - j);
}

// Hook-ratio coefficient of the horizontal strip kappa/mu: upper hooks where
// the two diagrams have equal column height, lower hooks elsewhere, cells of
// kappa over cells of mu.
double strip_coefficient(const Partition& kappa, const Partition& mu, double alpha) {
  const Partition kc = kappa.conjugate();
  const Partition mc = mu.conjugate();
  double num = 1.0;
  for (int i = 1; i <= kappa.length(); ++i) {
    for (int j = 1; j <= kappa.parts()[static_cast<size_t>(i - 1)]; ++j) {
      const bool same_col = kc.part_or_zero(j - 1) == mc.part_or_zero(j - 1);
      num *= same_col ? upper_hook(kappa, kc, i, j, alpha)
                      : lower_hook(kappa, kc, i, j, alpha);
    }
  }
  double den = 1.0;
  for (int i = 1; i <= mu.length(); ++i) {
    for (int j = 1; j <= mu.parts()[static_cast<size_t>(i - 1)]; ++j) {
      const bool same_col = kc.part_or_zero(j - 1) == mc.part_or_zero(j - 1);
      den *= same_col ? upper_hook(mu, mc, i, j, alpha)
                      : lower_hook(mu, mc, i, j, alpha);
    }
  }
  return num / den;
}

}  // namespace

JackTable::JackTable(AlgebraDim beta, int max_degree) : beta_(beta), max_degree_(max_degree) {
  if (max_degree < 0 || max_degree > 100) {
    throw std::invalid_argument("JackTable: max_degree must be in [0, 100]");
  }
}

int JackTable::intern(const Partition& p) {
  auto it = id_of_.find(p);
  if (it != id_of_.end()) return it->second;
  const int id = static_cast<int>(interned_.size());
  id_of_.emplace(p, id);
  interned_.push_back(p);
  strips_.emplace_back();
  strips_built_.push_back(false);
  ln_cnorm_.push_back(std::numeric_limits<double>::quiet_NaN());
  return id;
}

const std::vector<JackTable::StripTerm>& JackTable::strips(int pid) {
  if (strips_built_[static_cast<size_t>(pid)]) return strips_[static_cast<size_t>(pid)];
  const Partition kappa = interned_[static_cast<size_t>(pid)];
  std::vector<StripTerm> out;
  const int len = kappa.length();
  // mu_i ranges over [kappa_{i+1}, kappa_i]; only the last row may vanish.
  std::vector<int> mu(static_cast<size_t>(len));
  for (int i = 0; i < len; ++i) mu[static_cast<size_t>(i)] = kappa.part_or_zero(i + 1);
  const double alpha = beta_.alpha();
  for (;;) {
    std::vector<int> trimmed;
    for (int v : mu) {
      if (v > 0) trimmed.push_back(v);
    }
    Partition p(std::move(trimmed));
    StripTerm term;
    term.drop = kappa.weight() - p.weight();
    term.coef = strip_coefficient(kappa, p, alpha);
    term.mu_id = intern(p);
    out.push_back(term);
    // Odometer step over the per-row ranges.
    int i = len - 1;
    while (i >= 0) {
      if (mu[static_cast<size_t>(i)] < kappa.parts()[static_cast<size_t>(i)]) {
        ++mu[static_cast<size_t>(i)];
        for (int t = i + 1; t < len; ++t) {
          mu[static_cast<size_t>(t)] = kappa.part_or_zero(t + 1);
        }
        break;
      }
      --i;
    }
    if (i < 0) break;
  }
  strips_[static_cast<size_t>(pid)] = std::move(out);
  strips_built_[static_cast<size_t>(pid)] = true;
  return strips_[static_cast<size_t>(pid)];
}

double JackTable::eval_j(int pid, int nvars) {
  const Partition& kappa = interned_[static_cast<size_t>(pid)];
  if (kappa.empty()) return 1.0;
  if (kappa.length() > nvars) return 0.0;
  if (nvars == 1) {
    // Single row in one variable: prod_{i=0}^{k-1} (1 + alpha i) * x^k.
    const double alpha = beta_.alpha();
    double coef = 1.0;
    for (int i = 0; i < kappa.weight(); ++i) coef *= 1.0 + alpha * static_cast<double>(i);
    return coef * ipow(bound_x_(0), kappa.weight());
  }
  const std::uint64_t key =
      (static_cast<std::uint64_t>(pid) << 8) | static_cast<std::uint64_t>(nvars);
  if (auto it = j_values_.find(key); it != j_values_.end()) return it->second;
  const double xn = bound_x_(nvars - 1);
  double sum = 0.0;
  // Copy: recursion below may grow strips_ and invalidate references.
  const std::vector<StripTerm> terms = strips(pid);
  for (const StripTerm& t : terms) {
    if (interned_[static_cast<size_t>(t.mu_id)].length() > nvars - 1) continue;
    const double sub = eval_j(t.mu_id, nvars - 1);
    if (sub != 0.0) sum += sub * ipow(xn, t.drop) * t.coef;
  }
  j_values_.emplace(key, sum);
  return sum;
}

double JackTable::ln_c_over_j(int pid) {
  double& slot = ln_cnorm_[static_cast<size_t>(pid)];
  if (!std::isnan(slot)) return slot;
  const Partition& kappa = interned_[static_cast<size_t>(pid)];
  const Partition kc = kappa.conjugate();
  const double alpha = beta_.alpha();
  double ln_hooks = 0.0;
  for (int i = 1; i <= kappa.length(); ++i) {
    for (int j = 1; j <= kappa.parts()[static_cast<size_t>(i - 1)]; ++j) {
      ln_hooks += std::log(upper_hook(kappa, kc, i, j, alpha)) +
                  std::log(lower_hook(kappa, kc, i, j, alpha));
    }
  }
  const double k = static_cast<double>(kappa.weight());
  slot = k * std::log(alpha) + std::lgamma(k + 1.0) - ln_hooks;
  return slot;
}

void JackTable::bind(const Spectrum& x) {
  if (has_binding_ && bound_x_.size() == x.size() && bound_x_ == x) return;
  bound_x_ = x;
  has_binding_ = true;
  j_values_.clear();
}

double JackTable::eval_c(const Partition& kappa, const Spectrum& x) {
  if (kappa.weight() > max_degree_) {
    throw std::domain_error("JackTable: degree " + std::to_string(kappa.weight()) +
                            " exceeds configured max_degree " + std::to_string(max_degree_));
  }
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x(i))) throw std::invalid_argument("jack_c: spectrum entries must be finite");
  }
  if (kappa.length() > static_cast<int>(x.size())) return 0.0;
  if (kappa.empty()) return 1.0;
  std::lock_guard<std::mutex> lock(mutex_);
  bind(x);
  const int pid = intern(kappa);
  const double j = eval_j(pid, static_cast<int>(x.size()));
  if (j == 0.0) return 0.0;
  return j * std::exp(ln_c_over_j(pid));
}

double JackTable::eval_c_identity(const Partition& kappa, int m) {
  if (kappa.length() > m) {
    throw std::domain_error("jack_c_identity: partition " + kappa.to_string() +
                            " has more than m = " + std::to_string(m) + " parts");
  }
  if (kappa.empty()) return 1.0;
  // J_kappa(1^m) = prod over cells (alpha (j-1) + m - (i-1)).
  const double alpha = beta_.alpha();
  double j_at_identity = 1.0;
  for (int i = 1; i <= kappa.length(); ++i) {
    for (int j = 1; j <= kappa.parts()[static_cast<size_t>(i - 1)]; ++j) {
      j_at_identity *= alpha * static_cast<double>(j - 1) + static_cast<double>(m - i + 1);
    }
  }
  std::lock_guard<std::mutex> lock(mutex_);
  return j_at_identity * std::exp(ln_c_over_j(intern(kappa)));
}

double jack_c(AlgebraDim beta, const Partition& kappa, const Spectrum& x, JackTable& table) {
  if (!(beta == table.beta())) {
    throw std::invalid_argument("jack_c: table was built for beta = " +
                                std::to_string(table.beta().beta()));
  }
  return table.eval_c(kappa, x);
}

double jack_c_identity(AlgebraDim beta, const Partition& kappa, int m) {
  JackTable scratch(beta, kappa.weight());
  return scratch.eval_c_identity(kappa, m);
}

}  // namespace gebs
