#pragma once

#include <complex>
#include <vector>

#include "strata/signature.hpp"

namespace strata {

using Complex = std::complex<double>;

// Monic polynomial with complex coefficients, stored highest degree
// first with the leading 1 implicit.
class Polynomial {
 public:
  // coeffs: full coefficient list, highest first; normalized to monic.
  static Polynomial from_coefficients(std::vector<Complex> coeffs);
  static Polynomial from_roots(const std::vector<Complex>& roots);

  int degree() const { return static_cast<int>(tail_.size()); }
  // Coefficient list including the leading 1.
  std::vector<Complex> coefficients() const;

  Complex eval(Complex z) const;
  Complex derivative_eval(Complex z) const;
  Polynomial derivative() const;

  // All roots by Durand-Kerner iteration.
  std::vector<Complex> roots(double tol = 1e-12, int max_iter = 500) const;

  bool has_simple_roots(double tol = 1e-9) const;

  // Root sum zero (coefficient of z^{d-1} vanishes).
  bool tschirnhausen(double tol = 1e-12) const;

 private:
  std::vector<Complex> tail_;  // coefficients after the leading 1
};

// Critical values P(w) over roots w of P'.
std::vector<Complex> critical_values(const Polynomial& p);

// Distance of the critical values to the union of axes:
// min over w of min(|Re w|, |Im w|).  Zero means non-generic.
double degeneracy_margin(const Polynomial& p);

}  // namespace strata
