#include "strata/tracer.hpp"

#include <algorithm>
#include <cmath>

namespace strata {

namespace {

double axis_component(Complex w, Color color) {
  // The traced level: Im P = 0 on blue curves, Re P = 0 on red ones.
  return color == Color::Blue ? w.imag() : w.real();
}

// Level-set stepper sharing the precomputed derivative.
struct LevelField {
  const Polynomial& p;
  Polynomial dp;
  double lead;

  explicit LevelField(const Polynomial& poly)
      : p(poly), dp(poly.derivative()), lead(poly.degree()) {}

  Complex dpoly(Complex z) const { return lead * dp.eval(z); }

  // Tangent of the level curve at z: conj(P') for Im P = 0, i*conj(P')
  // for Re P = 0 (the gradient rotated by a quarter turn).
  Complex tangent(Complex z, Color color) const {
    Complex g = std::conj(dpoly(z));
    return color == Color::Blue ? g : g * Complex(0, 1);
  }

  // Newton steps transverse to the curve.
  Complex correct(Complex z, Color color) const {
    for (int it = 0; it < 4; ++it) {
      Complex d = dpoly(z);
      double d2 = std::norm(d);
      if (d2 == 0.0) break;
      double value = axis_component(p.eval(z), color);
      Complex normal = color == Color::Blue ? Complex(0, 1) * std::conj(d) : std::conj(d);
      z -= value * normal / d2;
    }
    return z;
  }
};

double sector_width(int degree) { return M_PI / (2.0 * degree) / 2.0; }

// Circle crossing of the level set inside the sector of direction k.
Complex circle_start(const Polynomial& p, double radius, int k, int degree) {
  const double center = k * M_PI / (2.0 * degree);
  Color color = (k % 2 == 0) ? Color::Blue : Color::Red;
  double lo = center - sector_width(degree), hi = center + sector_width(degree);
  auto g = [&](double theta) {
    return axis_component(p.eval(std::polar(radius, theta)), color);
  };
  double glo = g(lo), ghi = g(hi);
  if (glo == 0.0) return std::polar(radius, lo);
  if (ghi == 0.0) return std::polar(radius, hi);
  if ((glo > 0) == (ghi > 0))
    throw TracerError("far-field sector holds no axis crossing; radius too small");
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    double gm = g(mid);
    if (gm == 0.0) return std::polar(radius, mid);
    if ((gm > 0) == (glo > 0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return std::polar(radius, 0.5 * (lo + hi));
}

int direction_of(Complex z, int degree, int parity) {
  const int n = 4 * degree;
  double theta = std::arg(z);
  if (theta < 0) theta += 2.0 * M_PI;
  double unit = M_PI / (2.0 * degree);
  int k = static_cast<int>(std::lround(theta / unit)) % n;
  if (k % 2 != parity) {
    // pick the nearest direction of the right parity
    double down = std::abs(theta - mod(k - 1, n) * unit);
    double up = std::abs(theta - mod(k + 1, n) * unit);
    k = down < up ? mod(k - 1, n) : mod(k + 1, n);
  }
  return k;
}

}  // namespace

Drawing trace(const Polynomial& p, const TraceOptions& opts) {
  const int d = p.degree();
  if (d < 1) throw TracerError("degree must be positive");
  if (!p.has_simple_roots()) throw TracerError("polynomial has a multiple root");

  auto crit = critical_values(p);
  double margin = std::numeric_limits<double>::infinity();
  Complex worst = 0.0;
  for (Complex w : crit) {
    double m = std::min(std::abs(w.real()), std::abs(w.imag()));
    if (m < margin) {
      margin = m;
      worst = w;
    }
  }
  if (d > 1 && margin < opts.degeneracy_tol) throw NearDegenerate(worst, margin);

  Drawing drawing;
  drawing.degree = d;
  drawing.roots = p.roots();

  // Far-field radius: outside all roots and with P close to z^d.
  double radius = 1.0;
  for (Complex r : drawing.roots) radius = std::max(radius, 2.0 * std::abs(r));
  auto far_field_ok = [&] {
    for (int i = 0; i < 8 * d; ++i) {
      Complex z = std::polar(radius, 2.0 * M_PI * i / (8 * d));
      if (std::abs(p.eval(z) / std::pow(z, d) - 1.0) > opts.far_field_rel_err) return false;
    }
    return true;
  };
  while (!far_field_ok()) radius *= 1.3;
  drawing.radius = radius;

  LevelField field(p);
  std::vector<Complex> crit_points = field.dp.roots();
  auto step_bound = [&](Complex z) {
    double dist = radius;
    for (Complex c : crit_points) dist = std::min(dist, std::abs(z - c));
    double h = 0.25 * dist * opts.step_scale;
    return std::clamp(h, radius * 1e-5, radius / 64.0 * opts.step_scale);
  };

  const int n = 4 * d;
  std::vector<int> partner(n, -1);
  std::vector<std::vector<Complex>> traced(n);
  for (int k = 0; k < n; ++k) {
    if (partner[k] >= 0) continue;  // already reached from the other end
    Color color = (k % 2 == 0) ? Color::Blue : Color::Red;
    Complex z = field.correct(circle_start(p, radius, k, d), color);
    std::vector<Complex> pts{z};
    // Head inward.
    Complex t = field.tangent(z, color);
    t /= std::abs(t);
    if ((t * std::conj(z)).real() > 0) t = -t;
    int steps = 0;
    while (true) {
      if (++steps > opts.max_steps) throw TracerError("tracing exceeded the step budget");
      double h = step_bound(z);
      Complex znew = field.correct(z + h * t, color);
      Complex tnew = field.tangent(znew, color);
      tnew /= std::abs(tnew);
      if ((tnew * std::conj(t)).real() < 0) tnew = -tnew;
      z = znew;
      t = tnew;
      pts.push_back(z);
      if (std::abs(z) >= radius && steps > 2) break;
    }
    int end = direction_of(z, d, k % 2);
    if (end == k || partner[end] >= 0)
      throw TracerError("curve tracing produced an inconsistent direction pairing");
    partner[k] = end;
    partner[end] = k;
    traced[k] = std::move(pts);
  }

  for (int parity = 0; parity < 2; ++parity)
    for (int k = parity; k < n; k += 2) {
      if (partner[k] < k) continue;
      TracedCurve curve;
      curve.color = parity == 0 ? Color::Blue : Color::Red;
      curve.start_direction = k;
      curve.end_direction = partner[k];
      curve.points = traced[k];
      drawing.curves.push_back(std::move(curve));
    }
  return drawing;
}

Signature signature_of(const Drawing& drawing) {
  SignatureData data;
  data.degree = drawing.degree;
  for (const auto& c : drawing.curves) {
    Chord chord(c.start_direction, c.end_direction);
    (c.color == Color::Blue ? data.blue : data.red).push_back(chord);
  }
  return Signature::make(std::move(data));
}

Signature signature_of(const Polynomial& p, const TraceOptions& opts) {
  return signature_of(trace(p, opts));
}

}  // namespace strata
