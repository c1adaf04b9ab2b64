#pragma once

#include <string>

namespace gebs {

enum class GeneratorFamily { kGaussian, kKotz, kPearsonVII };

// Elliptical generator h on [0, inf) with closed-form derivatives of every
// order. The normalization constant c is carried explicitly and never assumed
// to make anything integrate to one.
//
//   gaussian   h(y) = c * exp(-y/scale),                scale > 0
//   kotz       h(y) = c * y^(shape-1) * exp(-rate*y),   shape >= 1, rate > 0
//   pearson7   h(y) = c * (1 + y/nu)^(-exponent),       exponent > 0, nu > 0
//
// Kotz is restricted to shape >= 1 so the boundary terms at w = 0 vanish in
// the integration-by-parts chain behind the derivative moments.
class Generator {
 public:
  static Generator gaussian(double scale, double c = 1.0);
  static Generator kotz(double shape, double rate, double c = 1.0);
  static Generator pearson_vii(double exponent, double nu, double c = 1.0);

  GeneratorFamily family() const { return family_; }
  double c() const { return c_; }
  double scale() const;     // gaussian only
  double shape() const;     // kotz only
  double rate() const;      // kotz only
  double exponent() const;  // pearson7 only
  double nu() const;        // pearson7 only

  double operator()(double y) const;  // h(y), y >= 0

  // Round-trips through parse_generator.
  std::string to_string() const;

 private:
  Generator(GeneratorFamily f, double p1, double p2, double c);
  GeneratorFamily family_;
  double p1_, p2_, c_;
};

// CLI grammar "family:key=value,...", e.g. "gaussian:s=2", "kotz:T=2,r=1",
// "pearson7:p=40,nu=2"; an optional c=... sets the normalization constant.
Generator parse_generator(const std::string& text);

// k-th derivative of h at w, by closed form.
double h_deriv(const Generator& g, int k, double w);

enum class MomentMethod { kClosedForm, kQuadrature };

// M_h(s) = int_0^inf h(y) y^(s-1) dy. Throws std::domain_error when the
// integral diverges (pearson7 with s >= exponent, or s <= 0).
double mellin_moment(const Generator& g, double s,
                     MomentMethod method = MomentMethod::kClosedForm);

// D_k(s) = int_0^inf h^(k)(w) w^(s+k-1) dw; D_0(s) == mellin_moment(g, s).
// For every admissible generator D_k(s) = (-1)^k (s)_k M_h(s), which is what
// makes the elliptical binomial weights collapse to (-1)^k.
double deriv_moment(const Generator& g, int k, double s,
                    MomentMethod method = MomentMethod::kClosedForm);

// True when int h(y) y^(s+k-1) dy is finite for all k = 0..K.
bool admissible_to_order(const Generator& g, double s, int K);
// Same check, throwing std::domain_error with the offending parameters named.
void require_admissible(const Generator& g, double s, int K);

}  // namespace gebs
