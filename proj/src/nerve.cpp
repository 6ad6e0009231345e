#include "strata/nerve.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>

#include "strata/moves.hpp"

namespace strata {

int NerveComplex::id_of(const std::string& key) const {
  int lo = 0, hi = static_cast<int>(cells.size());
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (cells[mid].key() < key)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < static_cast<int>(cells.size()) && cells[lo].key() == key) return lo;
  return -1;
}

std::vector<int> NerveComplex::cells_of_dim(int k) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(cells.size()); ++i)
    if (dim[i] == k) out.push_back(i);
  return out;
}

std::vector<int> NerveComplex::facets(int cell) const {
  std::vector<int> out;
  for (int b : boundary[cell])
    if (dim[b] == dim[cell] - 1) out.push_back(b);
  return out;
}

std::vector<int> NerveComplex::vertex_set(int cell) const {
  std::vector<int> out;
  for (int b : boundary[cell])
    if (dim[b] == 0) out.push_back(b);
  return out;
}

NerveComplex build_nerve(const Atlas& atlas) {
  NerveComplex complex;
  complex.degree = atlas.degree;
  for (auto& [c, v] : atlas.by_codim)
    for (const auto& s : v) complex.cells.push_back(s);
  std::sort(complex.cells.begin(), complex.cells.end());
  complex.dim.resize(complex.cells.size());
  complex.boundary.resize(complex.cells.size());
  for (std::size_t i = 0; i < complex.cells.size(); ++i) {
    complex.dim[i] = complex.cells[i].codimension();
    if (complex.dim[i] == 0) continue;
    std::vector<int> ids;
    for (const auto& below : closure_below(complex.cells[i])) {
      int id = complex.id_of(below.key());
      assert(id >= 0);
      ids.push_back(id);
    }
    std::sort(ids.begin(), ids.end());
    complex.boundary[i] = std::move(ids);
  }
  return complex;
}

NerveComplex build_nerve(int degree, int jobs) { return build_nerve(enumerate_all(degree, jobs)); }

void write_nerve(const NerveComplex& complex, std::ostream& os) {
  os << "nerve v1\n";
  os << "degree " << complex.degree << "\n";
  os << "cells " << complex.cells.size() << "\n";
  for (std::size_t i = 0; i < complex.cells.size(); ++i) {
    os << i << " " << complex.dim[i] << " " << complex.cells[i].key() << " |";
    for (int b : complex.boundary[i]) os << " " << b;
    os << "\n";
  }
}

std::vector<NCStructure> nc_structures(const NerveComplex& complex) {
  const int d = complex.degree;
  std::vector<NCStructure> out;
  for (int i = 0; i < static_cast<int>(complex.cells.size()); ++i) {
    const Signature& s = complex.cells[i];
    if (s.pencils().size() != 1 || static_cast<int>(s.pencils()[0].size()) != d) continue;
    NCStructure nc;
    nc.top = i;
    nc.pencil_color = s.pencils()[0].front().color();
    nc.members = complex.boundary[i];
    nc.members.push_back(i);
    for (int m : nc.members) {
      if (complex.dim[m] != 0) continue;
      nc.generic_members.push_back(m);
      if (classify(complex.cells[m]).kind == SignatureKind::M) nc.m_members.push_back(m);
    }
    out.push_back(std::move(nc));
  }
  return out;
}

Signature QDiagram::signature() const {
  const int n = 4 * degree;
  SignatureData d;
  d.degree = degree;
  auto add = [&](const Chord& c) { (c.color() == Color::Blue ? d.blue : d.red).push_back(c); };
  std::vector<bool> used(n, false);
  for (const auto& row : {top, bottom})
    for (const auto& c : row) {
      add(c);
      used[c.lo] = used[c.hi] = true;
    }
  // Complete with short chords run by run (as in matrix notation).
  for (int parity = 0; parity < 2; ++parity) {
    auto is_free = [&](Label x) { return !used[mod(x, n)]; };
    for (int x = parity; x < n; x += 2) {
      if (!is_free(x) || is_free(x - 2)) continue;
      std::vector<Label> run;
      for (Label y = x; is_free(y); y = mod(y + 2, n)) run.push_back(mod(y, n));
      assert(run.size() % 2 == 0);
      for (std::size_t i = 0; i + 1 < run.size(); i += 2) add(Chord(run[i], run[i + 1]));
    }
  }
  return Signature::make(std::move(d));
}

QDiagram QDiagram::successor() const {
  const int n = 4 * degree;
  QDiagram next;
  next.degree = degree;
  next.top = bottom;
  for (const auto& c : bottom) next.bottom.emplace_back(mod(c.lo - 1, n), mod(c.hi - 1, n));
  std::sort(next.top.begin(), next.top.end());
  std::sort(next.bottom.begin(), next.bottom.end());
  return next;
}

std::string QDiagram::matrix_text() const {
  std::ostringstream os;
  auto row = [&](const std::vector<Chord>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) os << " ";
      os << r[i].lo << "," << r[i].hi;
    }
  };
  os << "[";
  row(top);
  os << "; ";
  row(bottom);
  os << "]";
  return os.str();
}

bool QDiagram::operator==(const QDiagram& o) const {
  return degree == o.degree && top == o.top && bottom == o.bottom;
}

QDiagram q_seed(int degree) {
  // Row r of the table of inclusions has top entries (8+2j+r, 2-2j+r);
  // the seed is row r = 1, the generalization of [1,11 3,9; 0,10 2,8].
  const int n = 4 * degree;
  QDiagram q;
  q.degree = degree;
  for (int j = 0; j <= degree - 3; ++j) {
    q.top.emplace_back(mod(9 + 2 * j, n), mod(3 - 2 * j, n));
    q.bottom.emplace_back(mod(8 + 2 * j, n), mod(2 - 2 * j, n));
  }
  std::sort(q.top.begin(), q.top.end());
  std::sort(q.bottom.begin(), q.bottom.end());
  return q;
}

std::vector<QDiagram> q_diagrams(int degree) {
  if (degree < 4) throw SignatureError("Q-pieces exist only for degree > 3");
  std::vector<QDiagram> out{q_seed(degree)};
  while (true) {
    QDiagram next = out.back().successor();
    if (next == out.front()) break;
    out.push_back(std::move(next));
    assert(out.size() <= 4u * degree);
  }
  return out;
}

QDiagram q_embed(const QDiagram& q) {
  // Append one column with entries previous +/- 2 (the same table row
  // one degree up).  Rows have top entries (8+2j+r, 2-2j+r), so r is
  // recovered from the bottom sum 8+2r mod 4d; r matters only mod 2d.
  const int n_old = 4 * q.degree;
  const int n_new = 4 * (q.degree + 1);
  int r = mod(q.bottom.front().lo + q.bottom.front().hi - 8, n_old) / 2;
  QDiagram e;
  e.degree = q.degree + 1;
  for (int j = 0; j <= e.degree - 3; ++j) {
    e.top.emplace_back(mod(8 + 2 * j + r, n_new), mod(2 - 2 * j + r, n_new));
    e.bottom.emplace_back(mod(7 + 2 * j + r, n_new), mod(1 - 2 * j + r, n_new));
  }
  std::sort(e.top.begin(), e.top.end());
  std::sort(e.bottom.begin(), e.bottom.end());
  return e;
}

std::map<int, std::vector<QDiagram>> q_table(int d_min, int d_max) {
  if (d_min < 3 || d_max > 7 || d_min > d_max)
    throw SignatureError("table of inclusions covers degrees 3..7");
  std::map<int, std::vector<QDiagram>> table;
  for (int d = d_min; d <= d_max; ++d) {
    const int n = 4 * d;
    std::vector<QDiagram> column;
    for (int r = 2 * d - 1; r >= 0; --r) {
      QDiagram q;
      q.degree = d;
      for (int j = 0; j <= d - 3; ++j) {
        q.top.emplace_back(mod(8 + 2 * j + r, n), mod(2 - 2 * j + r, n));
        q.bottom.emplace_back(mod(7 + 2 * j + r, n), mod(1 - 2 * j + r, n));
      }
      std::sort(q.top.begin(), q.top.end());
      std::sort(q.bottom.begin(), q.bottom.end());
      column.push_back(std::move(q));
    }
    table[d] = std::move(column);
  }
  return table;
}

namespace {

// Sum of a chord's endpoints mod 4d classifies its direction; chords of
// one color are parallel iff the sums agree.
int direction_class(const Chord& c, int n) { return mod(c.lo + c.hi, n); }

Signature single_f(int degree, const Chord& long_diag, const Chord& short_cross) {
  const int n = 4 * degree;
  std::ostringstream os;
  int j = (Chord(mod(long_diag.lo - 1, n), mod(long_diag.lo + 1, n)) == short_cross)
              ? long_diag.lo
              : long_diag.hi;
  int i = j == long_diag.lo ? long_diag.hi : long_diag.lo;
  os << "|" << j << ";" << i << "|";
  return parse_matrix_notation(degree, os.str());
}

}  // namespace

std::vector<Signature> q_piece(const QDiagram& q) {
  const int n = 4 * q.degree;
  Signature root = q.signature();
  const int blue_class =
      direction_class(q.top.front().color() == Color::Blue ? q.top.front() : q.bottom.front(), n);
  const int red_class =
      direction_class(q.top.front().color() == Color::Red ? q.top.front() : q.bottom.front(), n);

  auto keeps_parallel_long = [&](const Signature& s) {
    for (Color col : {Color::Blue, Color::Red})
      for (const auto& c : s.chords(col))
        if (!is_short(c, n) &&
            direction_class(c, n) == (col == Color::Blue ? blue_class : red_class))
          return true;
    return false;
  };

  std::map<std::string, Signature> members;
  members.emplace(root.key(), root);
  std::deque<Signature> queue{root};
  std::vector<Signature> s_members{};
  while (!queue.empty()) {
    Signature cur = std::move(queue.front());
    queue.pop_front();
    if (classify(cur).kind == SignatureKind::S) s_members.push_back(cur);
    for (auto& mv : whitehead_neighbors(cur)) {
      if (!keeps_parallel_long(mv.target)) continue;
      if (members.emplace(mv.target.key(), mv.target).second) queue.push_back(mv.target);
    }
  }

  // Fan completion: the single-F signatures of every F tree reachable in
  // one move from an S-type member.
  std::vector<Signature> f_members;
  for (const auto& s : s_members)
    for (auto& mv : whitehead_neighbors(s)) {
      auto cls = classify(mv.target);
      if (cls.kind != SignatureKind::F) continue;
      for (const auto& tree : cls.trees) {
        if (tree.kind != TreeKind::F) continue;
        Chord long_diag = is_short(tree.blue, n) ? tree.red : tree.blue;
        Chord cross = is_short(tree.blue, n) ? tree.blue : tree.red;
        Signature f = single_f(q.degree, long_diag, cross);
        if (members.emplace(f.key(), f).second) f_members.push_back(f);
      }
    }
  // Collect also the single-F members already found in the core.
  for (auto& [key, s] : members)
    if (s.generic() && classify(s).kind == SignatureKind::F) {
      int f_trees = 0;
      for (const auto& t : classify(s).trees) f_trees += t.kind == TreeKind::F;
      if (f_trees == 1) f_members.push_back(s);
    }

  // Minimally adjacent M-signatures: one move from an F member.
  for (const auto& f : f_members)
    for (auto& mv : whitehead_neighbors(f))
      if (mv.target.generic() && classify(mv.target).kind == SignatureKind::M)
        members.emplace(mv.target.key(), mv.target);

  std::vector<Signature> out;
  for (auto& [key, s] : members) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Signature> connection_piece(const std::vector<Signature>& piece_a,
                                        const std::vector<Signature>& piece_b,
                                        const std::vector<Signature>& all_pieces_union) {
  std::set<std::string> in_pieces;
  for (const auto& s : all_pieces_union) in_pieces.insert(s.key());
  std::set<std::string> b_keys;
  for (const auto& s : piece_b) b_keys.insert(s.key());

  // Candidates: generic signatures outside every piece, one move from
  // both given pieces.
  std::map<std::string, Signature> candidates;
  for (const auto& s : piece_a)
    if (s.generic())
      for (auto& mv : whitehead_neighbors(s))
        if (mv.target.generic() && !in_pieces.count(mv.target.key()))
          candidates.emplace(mv.target.key(), mv.target);
  std::vector<Signature> out;
  for (auto& [key, s] : candidates) {
    bool touches_b = false;
    for (auto& mv : whitehead_neighbors(s))
      if (b_keys.count(mv.target.key())) touches_b = true;
    if (touches_b) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool is_automorphism(const NerveComplex& complex,
                     const std::function<Signature(const Signature&)>& g) {
  for (int i = 0; i < static_cast<int>(complex.cells.size()); ++i) {
    Signature image = g(complex.cells[i]);
    int j = complex.id_of(image.key());
    if (j < 0 || complex.dim[j] != complex.dim[i]) return false;
    std::vector<int> mapped;
    for (int b : complex.boundary[i]) {
      int mb = complex.id_of(g(complex.cells[b]).key());
      if (mb < 0) return false;
      mapped.push_back(mb);
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped != complex.boundary[j]) return false;
  }
  return true;
}

}  // namespace

SymmetryReport symmetry_report(const NerveComplex& complex) {
  SymmetryReport report;
  const int d = complex.degree;
  report.shift1_automorphism =
      is_automorphism(complex, [](const Signature& s) { return s.shifted(1); });
  report.shift2_automorphism =
      is_automorphism(complex, [](const Signature& s) { return s.shifted(2); });
  report.reflect_automorphism =
      is_automorphism(complex, [](const Signature& s) { return s.reflected(0); });
  // Klein group: reflect and the half-turn shift by 2d commute and have
  // order two.
  report.klein_group_acts =
      report.reflect_automorphism &&
      is_automorphism(complex, [d](const Signature& s) { return s.shifted(2 * d); });

  // Orbits under the shift group.
  std::set<int> assigned;
  for (int i = 0; i < static_cast<int>(complex.cells.size()); ++i) {
    if (assigned.count(i)) continue;
    std::set<int> orbit;
    for (int k = 0; k < 4 * d; ++k) {
      int j = complex.id_of(complex.cells[i].shifted(k).key());
      assert(j >= 0);
      orbit.insert(j);
    }
    for (int j : orbit) assigned.insert(j);
    report.orbit_sizes.push_back(static_cast<int>(orbit.size()));
    if (complex.dim[i] == 0 && classify(complex.cells[i]).kind == SignatureKind::M)
      report.m_orbit_size = static_cast<int>(orbit.size());
  }
  std::sort(report.orbit_sizes.begin(), report.orbit_sizes.end());

  // Chamber structure via Q-pieces.
  if (d >= 4) {
    auto diagrams = q_diagrams(d);
    report.piece_count = static_cast<int>(diagrams.size());
    std::vector<std::set<std::string>> pieces;
    std::vector<std::vector<Signature>> piece_sigs;
    for (const auto& q : diagrams) {
      auto p = q_piece(q);
      std::set<std::string> keys;
      for (const auto& s : p) keys.insert(s.key());
      pieces.push_back(std::move(keys));
      piece_sigs.push_back(std::move(p));
    }
    auto reflected_keys = [&](const std::vector<Signature>& sigs, int axis) {
      std::set<std::string> keys;
      for (const auto& s : sigs) keys.insert(s.reflected(axis).key());
      return keys;
    };
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      for (int axis = 0; axis < 4 * d; ++axis)
        if (reflected_keys(piece_sigs[i], axis) == pieces[i]) {
          ++report.pieces_with_internal_mirror;
          break;
        }
      std::size_t next = (i + 1) % pieces.size();
      for (int axis = 0; axis < 4 * d; ++axis)
        if (reflected_keys(piece_sigs[i], axis) == pieces[next]) {
          ++report.consecutive_reflection_walls;
          break;
        }
    }
    if (report.pieces_with_internal_mirror == report.piece_count)
      report.chamber_count = 2 * report.piece_count;
  }
  return report;
}

std::vector<Bridge> bridges(const NerveComplex& complex) {
  const int d = complex.degree;
  const int n = 4 * d;
  std::vector<Bridge> out;
  // Opposite single-F pairs |j;i| and |i;j|.
  for (int i = 0; i < static_cast<int>(complex.cells.size()); ++i) {
    if (complex.dim[i] != 0) continue;
    auto cls = classify(complex.cells[i]);
    if (cls.kind != SignatureKind::F) continue;
    int f_trees = 0;
    const TreeClass* tree = nullptr;
    for (const auto& t : cls.trees)
      if (t.kind == TreeKind::F) {
        ++f_trees;
        tree = &t;
      }
    if (f_trees != 1) continue;
    Chord long_diag = is_short(tree->blue, n) ? tree->red : tree->blue;
    Chord cross = is_short(tree->blue, n) ? tree->blue : tree->red;
    int j_lab = (Chord(mod(long_diag.lo - 1, n), mod(long_diag.lo + 1, n)) == cross)
                    ? long_diag.lo
                    : long_diag.hi;
    int i_lab = j_lab == long_diag.lo ? long_diag.hi : long_diag.lo;
    if (j_lab > i_lab) continue;  // count each opposite pair once
    Signature opposite = single_f(d, long_diag, Chord(mod(i_lab - 1, n), mod(i_lab + 1, n)));
    int o = complex.id_of(opposite.key());
    if (o < 0 || o == i) continue;
    // Minimal common upper bounds.
    Bridge bridge;
    bridge.f_plus = i;
    bridge.f_minus = o;
    int best_dim = -1;
    for (int u = 0; u < static_cast<int>(complex.cells.size()); ++u) {
      if (complex.dim[u] == 0) continue;
      const auto& bd = complex.boundary[u];
      if (!std::binary_search(bd.begin(), bd.end(), i) ||
          !std::binary_search(bd.begin(), bd.end(), o))
        continue;
      if (best_dim < 0 || complex.dim[u] < best_dim) {
        best_dim = complex.dim[u];
        bridge.uppers.clear();
      }
      if (complex.dim[u] == best_dim) bridge.uppers.push_back(u);
    }
    if (!bridge.uppers.empty()) out.push_back(std::move(bridge));
  }
  return out;
}

std::vector<int> open_books(const NerveComplex& complex) {
  const int d = complex.degree;
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(complex.cells.size()); ++i) {
    if (complex.dim[i] != 2 * d - 4) continue;
    const auto& pencils = complex.cells[i].pencils();
    if (pencils.size() < 2) continue;
    bool has_blue = false, has_red = false;
    for (const auto& g : pencils)
      (g.front().color() == Color::Blue ? has_blue : has_red) = true;
    if (has_blue && has_red) out.push_back(i);
  }
  return out;
}

}  // namespace strata
