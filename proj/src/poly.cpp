#include "strata/poly.hpp"

#include <algorithm>
#include <cmath>

namespace strata {

Polynomial Polynomial::from_coefficients(std::vector<Complex> coeffs) {
  if (coeffs.empty() || std::abs(coeffs.front()) == 0.0)
    throw SignatureError("polynomial needs a nonzero leading coefficient");
  Polynomial p;
  Complex lead = coeffs.front();
  for (std::size_t i = 1; i < coeffs.size(); ++i) p.tail_.push_back(coeffs[i] / lead);
  return p;
}

Polynomial Polynomial::from_roots(const std::vector<Complex>& roots) {
  std::vector<Complex> coeffs{1.0};
  for (Complex r : roots) {
    coeffs.push_back(0.0);
    for (std::size_t i = coeffs.size() - 1; i > 0; --i) coeffs[i] -= r * coeffs[i - 1];
  }
  return from_coefficients(std::move(coeffs));
}

std::vector<Complex> Polynomial::coefficients() const {
  std::vector<Complex> out{1.0};
  out.insert(out.end(), tail_.begin(), tail_.end());
  return out;
}

Complex Polynomial::eval(Complex z) const {
  Complex acc = 1.0;
  for (Complex c : tail_) acc = acc * z + c;
  return acc;
}

Complex Polynomial::derivative_eval(Complex z) const { return derivative().eval(z) * Complex(degree()); }

Polynomial Polynomial::derivative() const {
  const int d = degree();
  if (d == 0) throw SignatureError("derivative of a constant");
  std::vector<Complex> coeffs{Complex(d)};
  for (int i = 0; i < d - 1; ++i) coeffs.push_back(tail_[i] * Complex(d - 1 - i));
  return from_coefficients(std::move(coeffs));
}

std::vector<Complex> Polynomial::roots(double tol, int max_iter) const {
  const int d = degree();
  if (d == 0) return {};
  // Durand-Kerner from a scaled spray of points off the real axis.
  double radius = 1.0;
  for (Complex c : tail_) radius = std::max(radius, std::abs(c));
  radius = 1.0 + radius;
  std::vector<Complex> z(d);
  for (int i = 0; i < d; ++i)
    z[i] = radius * std::polar(0.7, 2.0 * M_PI * i / d + 0.4);
  for (int iter = 0; iter < max_iter; ++iter) {
    double shift = 0.0;
    for (int i = 0; i < d; ++i) {
      Complex denom = 1.0;
      for (int j = 0; j < d; ++j)
        if (j != i) denom *= z[i] - z[j];
      Complex delta = eval(z[i]) / denom;
      z[i] -= delta;
      shift = std::max(shift, std::abs(delta));
    }
    if (shift < tol) break;
  }
  std::sort(z.begin(), z.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return z;
}

bool Polynomial::has_simple_roots(double tol) const {
  auto r = roots();
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j)
      if (std::abs(r[i] - r[j]) < tol) return false;
  return true;
}

bool Polynomial::tschirnhausen(double tol) const {
  return degree() < 1 || std::abs(tail_.front()) < tol;
}

std::vector<Complex> critical_values(const Polynomial& p) {
  std::vector<Complex> out;
  for (Complex w : p.derivative().roots()) out.push_back(p.eval(w));
  return out;
}

double degeneracy_margin(const Polynomial& p) {
  double margin = std::numeric_limits<double>::infinity();
  for (Complex w : critical_values(p))
    margin = std::min(margin, std::min(std::abs(w.real()), std::abs(w.imag())));
  return margin;
}

}  // namespace strata
