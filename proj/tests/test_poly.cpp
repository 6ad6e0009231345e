#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strata/poly.hpp"

using namespace strata;
using namespace std::complex_literals;

TEST_CASE("roots of z^2 - 1") {
  auto p = Polynomial::from_coefficients({1.0, 0.0, -1.0});
  auto r = p.roots();
  REQUIRE(r.size() == 2);
  CHECK(std::abs(r[0] - Complex(-1.0)) < 1e-10);
  CHECK(std::abs(r[1] - Complex(1.0)) < 1e-10);
}

TEST_CASE("from_roots round trip") {
  std::vector<Complex> roots{-0.5 + 0.5i, -0.5 - 0.5i, 0.2 + 0.6i};
  auto p = Polynomial::from_roots(roots);
  for (Complex r : roots) CHECK(std::abs(p.eval(r)) < 1e-12);
  CHECK(p.has_simple_roots());
}

TEST_CASE("derivative evaluation") {
  auto p = Polynomial::from_coefficients({1.0, 0.0, -1.0});  // z^2 - 1
  CHECK(std::abs(p.derivative_eval(2.0) - Complex(4.0)) < 1e-12);
}

TEST_CASE("degeneracy margin examples") {
  // z^2 - 1: critical value -1 lies on the real axis.
  CHECK(degeneracy_margin(Polynomial::from_coefficients({1.0, 0.0, -1.0})) == 0.0);
  // z^2 - (1+i): critical value -(1+i), both parts of magnitude 1.
  auto p = Polynomial::from_coefficients({1.0, 0.0, Complex(-1.0, -1.0)});
  CHECK(std::abs(degeneracy_margin(p) - 1.0) < 1e-12);
}

TEST_CASE("tschirnhausen flag") {
  CHECK(Polynomial::from_coefficients({1.0, 0.0, -1.0}).tschirnhausen());
  CHECK_FALSE(Polynomial::from_coefficients({1.0, 2.0, -1.0}).tschirnhausen());
}

TEST_CASE("root finder residuals are independent evidence") {
  using namespace std::complex_literals;
  auto p = Polynomial::from_roots({-0.5 + 0.5i, -0.5 - 0.5i, 0.2 + 0.6i});
  auto roots = p.roots();
  REQUIRE(roots.size() == 3);
  for (Complex r : roots) CHECK(std::abs(p.eval(r)) < 1e-10);
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      CHECK(std::abs(roots[i] - roots[j]) > 1e-6);

  // degree 7 with clustered roots still resolves
  std::vector<Complex> tight{1.0 + 0.0i, 1.05 + 0.0i, 1.0 + 0.05i, -2.0 + 0.0i,
                             0.0 + 1.0i, 0.0 - 1.0i,  -1.0 - 1.0i};
  auto q = Polynomial::from_roots(tight);
  auto qr = q.roots(1e-13, 2000);
  REQUIRE(qr.size() == 7);
  for (Complex r : qr) CHECK(std::abs(q.eval(r)) < 1e-8);
}
