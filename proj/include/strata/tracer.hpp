#pragma once

#include <stdexcept>

#include "strata/poly.hpp"
#include "strata/signature.hpp"

namespace strata {

// A critical value sits on the real or imaginary axis within tolerance:
// the drawing is pinched and cannot be traced as a generic one.
struct NearDegenerate : std::runtime_error {
  Complex critical_value;
  double margin;
  NearDegenerate(Complex w, double m)
      : std::runtime_error("polynomial is near-degenerate (critical value on an axis)"),
        critical_value(w),
        margin(m) {}
};

struct TracerError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TraceOptions {
  double degeneracy_tol = 1e-9;  // margin below which tracing refuses
  double step_scale = 1.0;       // halve to refine the resolution
  double far_field_rel_err = 0.05;
  int max_steps = 400000;
};

struct TracedCurve {
  Color color;
  int start_direction = 0;  // boundary labels 0..4d-1
  int end_direction = 0;
  std::vector<Complex> points;
};

// The drawing of a polynomial: the preimage of the two axes, blue for
// the real axis, red for the imaginary one.  Curve ends sit in the 4d
// asymptotic sectors of half-angle pi/4d around directions k*pi/2d.
struct Drawing {
  int degree = 0;
  double radius = 0.0;
  std::vector<TracedCurve> curves;  // d blue then d red
  std::vector<Complex> roots;       // the blue-red crossings
};

Drawing trace(const Polynomial& p, const TraceOptions& opts = {});

// The generic signature read off the asymptotic direction pairing.
Signature signature_of(const Drawing& drawing);
Signature signature_of(const Polynomial& p, const TraceOptions& opts = {});

}  // namespace strata
