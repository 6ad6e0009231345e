#include "strata/braid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace strata {

Trajectories track_roots(const std::vector<Polynomial>& path) {
  if (path.empty()) throw BraidError("empty path");
  const int d = path.front().degree();
  Trajectories out;
  auto first = path.front().roots();
  out.strands.resize(d);
  for (int i = 0; i < d; ++i) out.strands[i].push_back(first[i]);

  for (std::size_t t = 1; t < path.size(); ++t) {
    if (path[t].degree() != d) throw BraidError("path changes degree");
    auto roots = path[t].roots();
    // Gap and motion guard: matching is unambiguous only when every
    // root moved less than half the minimal distance between roots.
    double min_gap = std::numeric_limits<double>::infinity();
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        min_gap = std::min(min_gap, std::abs(roots[i] - roots[j]));
    std::vector<int> assign(d, -1);
    std::vector<bool> used(d, false);
    double max_motion = 0.0;
    for (int i = 0; i < d; ++i) {
      Complex prev = out.strands[i].back();
      int best = -1;
      double best_dist = std::numeric_limits<double>::infinity();
      for (int j = 0; j < d; ++j) {
        if (used[j]) continue;
        double dist = std::abs(roots[j] - prev);
        if (dist < best_dist) {
          best_dist = dist;
          best = j;
        }
      }
      assign[i] = best;
      used[best] = true;
      max_motion = std::max(max_motion, best_dist);
    }
    if (d > 1 && !(min_gap > 2.0 * max_motion))
      throw BraidError("root matching ambiguous; sample the path more finely");
    for (int i = 0; i < d; ++i) out.strands[i].push_back(roots[assign[i]]);
  }
  return out;
}

std::vector<int> BraidWord::permutation() const {
  std::vector<int> perm(strands);
  std::iota(perm.begin(), perm.end(), 0);
  for (int letter : letters) {
    int i = std::abs(letter) - 1;
    std::swap(perm[i], perm[i + 1]);
  }
  return perm;
}

std::string BraidWord::text() const {
  if (letters.empty()) return "e";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) os << " ";
    os << "s" << std::abs(letters[i]);
    if (letters[i] < 0) os << "^-1";
  }
  return os.str();
}

BraidWord reduced(const BraidWord& w) {
  BraidWord out;
  out.strands = w.strands;
  for (int letter : w.letters) {
    if (!out.letters.empty() && out.letters.back() == -letter)
      out.letters.pop_back();
    else
      out.letters.push_back(letter);
  }
  return out;
}

BraidWord braid_word(const Trajectories& t) {
  const int d = static_cast<int>(t.strands.size());
  const int m = t.samples();
  BraidWord word;
  word.strands = d;
  if (d < 2 || m < 2) return word;

  struct Event {
    double time;
    int a, b;      // strand ids
    double above;  // Im(b - a) at the crossing
  };
  std::vector<Event> events;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b)
      for (int s = 0; s + 1 < m; ++s) {
        double f0 = (t.strands[a][s] - t.strands[b][s]).real();
        double f1 = (t.strands[a][s + 1] - t.strands[b][s + 1]).real();
        if (f0 == 0.0 && f1 == 0.0)
          throw BraidError("persistent real-part tie; perturb the path");
        if ((f0 < 0) == (f1 < 0) || f1 == f0) continue;
        double lambda = f0 / (f0 - f1);  // linear crossing time inside the step
        double time = s + lambda;
        Complex za = t.strands[a][s] + lambda * (t.strands[a][s + 1] - t.strands[a][s]);
        Complex zb = t.strands[b][s] + lambda * (t.strands[b][s + 1] - t.strands[b][s]);
        // orient the pair left-to-right before the swap
        int left = f0 < 0 ? a : b;
        int right = f0 < 0 ? b : a;
        double above = (left == a ? zb - za : za - zb).imag();
        events.push_back({time, left, right, above});
      }
  std::sort(events.begin(), events.end(),
            [](const Event& x, const Event& y) { return x.time < y.time; });

  // Replay: strands ordered by real part at the start.
  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    Complex za = t.strands[a][0], zb = t.strands[b][0];
    return za.real() != zb.real() ? za.real() < zb.real() : za.imag() < zb.imag();
  });
  for (const auto& e : events) {
    auto ia = std::find(order.begin(), order.end(), e.a) - order.begin();
    auto ib = std::find(order.begin(), order.end(), e.b) - order.begin();
    if (ib - ia != 1)
      throw BraidError("real-part swap of non-adjacent strands; sample more finely");
    std::swap(order[ia], order[ib]);
    // positive when the strand coming from the right passes above
    word.letters.push_back(e.above > 0 ? static_cast<int>(ia) + 1
                                       : -(static_cast<int>(ia) + 1));
  }
  return reduced(word);
}

Complex appended_root(const std::vector<Complex>& roots) {
  Complex mean = 0.0;
  for (Complex z : roots) mean += z;
  if (!roots.empty()) mean /= static_cast<double>(roots.size());
  double radius = 0.0;
  for (Complex z : roots) radius = std::max(radius, std::abs(z - mean));
  return mean + radius + 1.0;
}

Polynomial embed(const Polynomial& p) {
  auto roots = p.roots();
  roots.push_back(appended_root(roots));
  return Polynomial::from_roots(roots);
}

std::vector<QuadrangleLoop> quadrangle_generators(const NerveComplex& complex) {
  std::vector<QuadrangleLoop> out;
  for (int f : complex.cells_of_dim(2)) {
    QuadrangleLoop loop;
    loop.two_cell = f;
    auto vs = complex.vertex_set(f);
    auto es = complex.facets(f);
    if (vs.size() != 4 || es.size() != 4) throw SignatureError("2-cell is not a quadrangle");
    // Walk the 4-cycle: each edge joins two of the vertices.
    auto ends = [&](int e) { return complex.vertex_set(e); };
    loop.vertices[0] = vs[0];
    std::set<int> used_edges;
    for (int step = 0; step < 4; ++step) {
      int v = loop.vertices[step];
      bool advanced = false;
      for (int e : es) {
        if (used_edges.count(e)) continue;
        auto ev = ends(e);
        if (ev.size() != 2) throw SignatureError("1-cell without two vertices");
        if (ev[0] != v && ev[1] != v) continue;
        used_edges.insert(e);
        loop.edges[step] = e;
        int next = ev[0] == v ? ev[1] : ev[0];
        if (step < 3) loop.vertices[step + 1] = next;
        advanced = true;
        break;
      }
      if (!advanced) throw SignatureError("2-cell boundary does not close");
    }
    // Independence: the two pencil points involve disjoint chord sets.
    const auto& pencils = complex.cells[f].pencils();
    if (pencils.size() == 2) {
      std::set<Chord> first(pencils[0].begin(), pencils[0].end());
      loop.independent = true;
      for (const auto& c : pencils[1])
        if (first.count(c)) loop.independent = false;
    }
    out.push_back(loop);
  }
  return out;
}

}  // namespace strata
