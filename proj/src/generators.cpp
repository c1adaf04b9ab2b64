#include "gebs/generators.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "gebs/quadrature.hpp"

namespace gebs {

namespace {

constexpr double kQuadRelTol = 1e-12;

double falling_factorial(double x, int j) {
  double out = 1.0;
  for (int i = 0; i < j; ++i) out *= (x - static_cast<double>(i));
  return out;
}

double binomial(int n, int k) {
  double out = 1.0;
  for (int i = 1; i <= k; ++i) {
    out *= static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return out;
}

double rising_ln(double a, int k) {  // log Gamma(a+k) - log Gamma(a), a > 0
  return std::lgamma(a + static_cast<double>(k)) - std::lgamma(a);
}

double ln_beta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

}  // namespace

Generator::Generator(GeneratorFamily f, double p1, double p2, double c)
    : family_(f), p1_(p1), p2_(p2), c_(c) {
  if (!(c > 0.0)) throw std::invalid_argument("Generator: c must be > 0");
}

Generator Generator::gaussian(double scale, double c) {
  if (!(scale > 0.0)) throw std::invalid_argument("Generator: gaussian scale must be > 0");
  return Generator(GeneratorFamily::kGaussian, scale, 0.0, c);
}

Generator Generator::kotz(double shape, double rate, double c) {
  if (!(shape >= 1.0)) {
    throw std::invalid_argument(
        "Generator: kotz shape must be >= 1 (boundary terms at w = 0 must vanish)");
  }
  if (!(rate > 0.0)) throw std::invalid_argument("Generator: kotz rate must be > 0");
  return Generator(GeneratorFamily::kKotz, shape, rate, c);
}

Generator Generator::pearson_vii(double exponent, double nu, double c) {
  if (!(exponent > 0.0)) throw std::invalid_argument("Generator: pearson7 exponent must be > 0");
  if (!(nu > 0.0)) throw std::invalid_argument("Generator: pearson7 nu must be > 0");
  return Generator(GeneratorFamily::kPearsonVII, exponent, nu, c);
}

double Generator::scale() const {
  if (family_ != GeneratorFamily::kGaussian) throw std::logic_error("Generator: not gaussian");
  return p1_;
}
double Generator::shape() const {
  if (family_ != GeneratorFamily::kKotz) throw std::logic_error("Generator: not kotz");
  return p1_;
}
double Generator::rate() const {
  if (family_ != GeneratorFamily::kKotz) throw std::logic_error("Generator: not kotz");
  return p2_;
}
double Generator::exponent() const {
  if (family_ != GeneratorFamily::kPearsonVII) throw std::logic_error("Generator: not pearson7");
  return p1_;
}
double Generator::nu() const {
  if (family_ != GeneratorFamily::kPearsonVII) throw std::logic_error("Generator: not pearson7");
  return p2_;
}

double Generator::operator()(double y) const {
  if (y < 0.0) throw std::domain_error("Generator: h is defined on [0, inf)");
  switch (family_) {
    case GeneratorFamily::kGaussian:
      return c_ * std::exp(-y / p1_);
    case GeneratorFamily::kKotz:
      return c_ * std::pow(y, p1_ - 1.0) * std::exp(-p2_ * y);
    case GeneratorFamily::kPearsonVII:
      return c_ * std::exp(-p1_ * std::log1p(y / p2_));
  }
  return 0.0;
}

std::string Generator::to_string() const {
  std::ostringstream os;
  switch (family_) {
    case GeneratorFamily::kGaussian:
      os << "gaussian:s=" << p1_;
      break;
    case GeneratorFamily::kKotz:
      os << "kotz:T=" << p1_ << ",r=" << p2_;
      break;
    case GeneratorFamily::kPearsonVII:
      os << "pearson7:p=" << p1_ << ",nu=" << p2_;
      break;
  }
  if (c_ != 1.0) os << ",c=" << c_;
  return os.str();
}

Generator parse_generator(const std::string& text) {
  const auto colon = text.find(':');
  const std::string family = text.substr(0, colon);
  std::map<std::string, double> kv;
  if (colon != std::string::npos) {
    std::string rest = text.substr(colon + 1);
    std::istringstream stream(rest);
    std::string item;
    while (std::getline(stream, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw std::invalid_argument("parse_generator: expected key=value, got '" + item +
                                    "' in '" + text + "'");
      }
      try {
        kv[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
      } catch (const std::exception&) {
        throw std::invalid_argument("parse_generator: bad numeric value in '" + item + "'");
      }
    }
  }
  auto take = [&](const std::string& key, double fallback,
                  bool required = false) -> double {
    auto it = kv.find(key);
    if (it == kv.end()) {
      if (required) {
        throw std::invalid_argument("parse_generator: missing parameter '" + key +
                                    "' for family '" + family + "'");
      }
      return fallback;
    }
    double v = it->second;
    kv.erase(it);
    return v;
  };
  Generator out = [&]() {
    if (family == "gaussian") {
      double s = take("s", 2.0);
      return Generator::gaussian(s, take("c", 1.0));
    }
    if (family == "kotz") {
      double T = take("T", 0.0, true);
      double r = take("r", 0.0, true);
      return Generator::kotz(T, r, take("c", 1.0));
    }
    if (family == "pearson7") {
      double p = take("p", 0.0, true);
      double nu = take("nu", 0.0, true);
      return Generator::pearson_vii(p, nu, take("c", 1.0));
    }
    throw std::invalid_argument("parse_generator: unknown family '" + family +
                                "' (expected gaussian, kotz or pearson7)");
  }();
  if (!kv.empty()) {
    throw std::invalid_argument("parse_generator: unknown parameter '" + kv.begin()->first +
                                "' for family '" + family + "'");
  }
  return out;
}

double h_deriv(const Generator& g, int k, double w) {
  if (k < 0) throw std::invalid_argument("h_deriv: k must be >= 0");
  if (w < 0.0) throw std::domain_error("h_deriv: w must be >= 0");
  switch (g.family()) {
    case GeneratorFamily::kGaussian: {
      const double s = g.scale();
      return g.c() * std::pow(-1.0 / s, k) * std::exp(-w / s);
    }
    case GeneratorFamily::kPearsonVII: {
      const double p = g.exponent();
      const double nu = g.nu();
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      const double ln_mag = std::log(g.c()) - static_cast<double>(k) * std::log(nu) +
                            rising_ln(p, k) - (p + static_cast<double>(k)) * std::log1p(w / nu);
      return sign * std::exp(ln_mag);
    }
    case GeneratorFamily::kKotz: {
      // Leibniz on y^(T-1) * exp(-r y). Integer shapes truncate the sum.
      const double T = g.shape();
      const double r = g.rate();
      double sum = 0.0;
      for (int j = k; j >= 0; --j) {
        const double ff = falling_factorial(T - 1.0, j);
        if (ff == 0.0) continue;
        sum += binomial(k, j) * ff * std::pow(w, T - 1.0 - static_cast<double>(j)) *
               std::pow(-r, k - j);
      }
      return g.c() * sum * std::exp(-r * w);
    }
  }
  return 0.0;
}

namespace {

void check_moment_domain(const Generator& g, double s, int k, const char* who) {
  if (!(s > 0.0)) {
    throw std::domain_error(std::string(who) + ": moment order s must be > 0, got " +
                            std::to_string(s));
  }
  if (g.family() == GeneratorFamily::kPearsonVII && s >= g.exponent()) {
    std::ostringstream msg;
    msg << who << ": divergent integral for " << g.to_string() << " at s = " << s
        << (k > 0 ? " (k = " + std::to_string(k) + ")" : std::string{})
        << "; pearson7 needs exponent p > s";
    throw std::domain_error(msg.str());
  }
}

// Bulk scale of |h^(k)(w)| w^(s+k-1), used to centre the quadrature map.
double integrand_scale(const Generator& g, int k, double s) {
  const double q = s + static_cast<double>(k) - 1.0;
  switch (g.family()) {
    case GeneratorFamily::kGaussian:
      return std::max(q * g.scale(), 0.2 * g.scale());
    case GeneratorFamily::kKotz:
      return std::max((q + g.shape() - 1.0) / g.rate(), 0.2 / g.rate());
    case GeneratorFamily::kPearsonVII: {
      const double p = g.exponent();
      const double peak = g.nu() * q / (p - s + 1.0);
      return std::max(peak, 0.2 * g.nu());
    }
  }
  return 1.0;
}

// h^(k)(w) * w^(s+k-1) with the powers of w combined analytically per family,
// so the near-0 and far-tail nodes of the quadrature rule never see an
// overflowing intermediate.
double deriv_moment_integrand(const Generator& g, int k, double s, double w) {
  const double q = s + static_cast<double>(k) - 1.0;
  if (w <= 0.0) return 0.0;
  const double ln_w = std::log(w);
  switch (g.family()) {
    case GeneratorFamily::kGaussian: {
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      const double ln_mag = std::log(g.c()) - static_cast<double>(k) * std::log(g.scale()) -
                            w / g.scale() + q * ln_w;
      return sign * std::exp(ln_mag);
    }
    case GeneratorFamily::kPearsonVII: {
      const double p = g.exponent();
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      const double ln_mag = std::log(g.c()) - static_cast<double>(k) * std::log(g.nu()) +
                            rising_ln(p, k) -
                            (p + static_cast<double>(k)) * std::log1p(w / g.nu()) + q * ln_w;
      return sign * std::exp(ln_mag);
    }
    case GeneratorFamily::kKotz: {
      const double T = g.shape();
      const double r = g.rate();
      double sum = 0.0;
      for (int j = 0; j <= k; ++j) {
        const double ff = falling_factorial(T - 1.0, j);
        if (ff == 0.0) continue;
        const double e = T - 1.0 - static_cast<double>(j) + q;  // > -1 for shape >= 1
        sum += binomial(k, j) * ff * std::pow(-r, k - j) * std::exp(e * ln_w - r * w);
      }
      return g.c() * sum;
    }
  }
  return 0.0;
}

double deriv_moment_closed(const Generator& g, int k, double s) {
  switch (g.family()) {
    case GeneratorFamily::kGaussian: {
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      return sign * g.c() *
             std::exp(s * std::log(g.scale()) + std::lgamma(s + static_cast<double>(k)));
    }
    case GeneratorFamily::kPearsonVII: {
      const double p = g.exponent();
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      const double ln_mag = std::log(g.c()) + rising_ln(p, k) + s * std::log(g.nu()) +
                            ln_beta(s + static_cast<double>(k), p - s);
      return sign * std::exp(ln_mag);
    }
    case GeneratorFamily::kKotz: {
      // D_k(s) = c r^-(s+T-1) sum_j (-1)^(k-j) C(k,j) (T-1)_falling(j) Gamma(s+k+T-1-j).
      const double T = g.shape();
      const double r = g.rate();
      double sum = 0.0;
      for (int j = 0; j <= k; ++j) {
        const double ff = falling_factorial(T - 1.0, j);
        if (ff == 0.0) continue;
        const double sign = ((k - j) % 2 == 0) ? 1.0 : -1.0;
        sum += sign * binomial(k, j) * ff *
               std::tgamma(s + static_cast<double>(k) + T - 1.0 - static_cast<double>(j));
      }
      return g.c() * std::exp(-(s + T - 1.0) * std::log(r)) * sum;
    }
  }
  return 0.0;
}

}  // namespace

double deriv_moment(const Generator& g, int k, double s, MomentMethod method) {
  if (k < 0) throw std::invalid_argument("deriv_moment: k must be >= 0");
  check_moment_domain(g, s, k, "deriv_moment");
  if (method == MomentMethod::kClosedForm) return deriv_moment_closed(g, k, s);
  auto res = integrate_positive_axis(
      [&](double w) { return deriv_moment_integrand(g, k, s, w); },
      integrand_scale(g, k, s), kQuadRelTol, 14);
  if (!res.converged) {
    throw std::runtime_error("deriv_moment: quadrature failed to converge for " +
                             g.to_string() + " at s = " + std::to_string(s) +
                             ", k = " + std::to_string(k));
  }
  return res.value;
}

double mellin_moment(const Generator& g, double s, MomentMethod method) {
  check_moment_domain(g, s, 0, "mellin_moment");
  if (method == MomentMethod::kQuadrature) return deriv_moment(g, 0, s, method);
  switch (g.family()) {
    case GeneratorFamily::kGaussian:
      return g.c() * std::exp(s * std::log(g.scale()) + std::lgamma(s));
    case GeneratorFamily::kKotz: {
      const double T = g.shape();
      const double r = g.rate();
      return g.c() * std::exp(std::lgamma(s + T - 1.0) - (s + T - 1.0) * std::log(r));
    }
    case GeneratorFamily::kPearsonVII:
      return g.c() * std::exp(s * std::log(g.nu()) + ln_beta(s, g.exponent() - s));
  }
  return 0.0;
}

bool admissible_to_order(const Generator& g, double s, int K) {
  if (!(s > 0.0) || K < 0) return false;
  if (g.family() == GeneratorFamily::kPearsonVII) {
    return g.exponent() > s + static_cast<double>(K);
  }
  return true;
}

void require_admissible(const Generator& g, double s, int K) {
  if (!admissible_to_order(g, s, K)) {
    std::ostringstream msg;
    msg << "generator " << g.to_string() << " is not admissible to order K = " << K
        << " at s = " << s;
    if (g.family() == GeneratorFamily::kPearsonVII) {
      msg << " (needs exponent p > s + K = " << s + static_cast<double>(K) << ")";
    }
    throw std::domain_error(msg.str());
  }
}

}  // namespace gebs
