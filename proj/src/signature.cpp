#include "strata/signature.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace strata {

namespace {

std::string chord_str(const Chord& c) {
  return std::to_string(c.lo) + "-" + std::to_string(c.hi);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Acyclicity of the union of chords cut at the given interior points.
// Each chord is a path through its points; connectivity and the edge
// count do not depend on the order of points along the chord.
bool acyclic(int n, const std::vector<Chord>& chords,
             const std::vector<std::vector<Chord>>& points) {
  std::map<Chord, std::vector<int>> events;
  for (const auto& c : chords) events[c];
  for (std::size_t p = 0; p < points.size(); ++p)
    for (const auto& c : points[p]) {
      auto it = events.find(c);
      if (it == events.end()) return false;  // point on a missing chord
      it->second.push_back(static_cast<int>(p));
    }

  int vertices = 0, edges = 0;
  UnionFind uf(n + static_cast<int>(points.size()));
  std::vector<bool> label_seen(n, false);
  std::vector<bool> point_seen(points.size(), false);
  for (const auto& [c, evs] : events) {
    for (Label e : {c.lo, c.hi})
      if (!label_seen[e]) {
        label_seen[e] = true;
        ++vertices;
      }
    for (int p : evs)
      if (!point_seen[p]) {
        point_seen[p] = true;
        ++vertices;
      }
    edges += 1 + static_cast<int>(evs.size());
    int anchor = c.lo;
    uf.unite(anchor, c.hi);
    for (int p : evs) uf.unite(anchor, n + p);
  }

  std::set<int> roots;
  for (int v = 0; v < n; ++v)
    if (label_seen[v]) roots.insert(uf.find(v));
  for (std::size_t p = 0; p < points.size(); ++p)
    if (point_seen[p]) roots.insert(uf.find(n + static_cast<int>(p)));
  return edges == vertices - static_cast<int>(roots.size());
}

void normalize(SignatureData& d) {
  std::sort(d.blue.begin(), d.blue.end());
  std::sort(d.red.begin(), d.red.end());
  for (auto& g : d.pencils) std::sort(g.begin(), g.end());
  std::sort(d.pencils.begin(), d.pencils.end());
}

std::optional<std::string> check(const SignatureData& d) {
  if (d.degree < 1) return "degree must be positive";
  const int n = d.labels();
  const int deg = d.degree;
  if (static_cast<int>(d.blue.size()) != deg) return "expected d blue chords";
  if (static_cast<int>(d.red.size()) != deg) return "expected d red chords";

  std::vector<bool> used(n, false);
  for (const auto& c : d.blue) {
    if (c.lo < 0 || c.hi >= n || c.lo == c.hi) return "bad blue chord " + chord_str(c);
    if (c.lo % 2 != 0 || c.hi % 2 != 0) return "parity violation on blue chord " + chord_str(c);
    if (used[c.lo] || used[c.hi]) return "label reused by blue chord " + chord_str(c);
    used[c.lo] = used[c.hi] = true;
  }
  for (const auto& c : d.red) {
    if (c.lo < 0 || c.hi >= n || c.lo == c.hi) return "bad red chord " + chord_str(c);
    if (c.lo % 2 != 1 || c.hi % 2 != 1) return "parity violation on red chord " + chord_str(c);
    if (used[c.lo] || used[c.hi]) return "label reused by red chord " + chord_str(c);
    used[c.lo] = used[c.hi] = true;
  }
  for (int x = 0; x < n; ++x)
    if (!used[x]) return "label " + std::to_string(x) + " not covered";

  std::set<Chord> blue_set(d.blue.begin(), d.blue.end());
  std::set<Chord> red_set(d.red.begin(), d.red.end());

  // Pencils: same-color cliques of pairwise interleaving chords.
  std::map<std::pair<Chord, Chord>, int> covered;
  for (const auto& g : d.pencils) {
    if (g.size() < 2) return "pencil with fewer than two chords";
    Color col = g.front().color();
    for (const auto& c : g) {
      if (c.color() != col) return "mixed-color pencil at chord " + chord_str(c);
      if (!(col == Color::Blue ? blue_set.count(c) : red_set.count(c)))
        return "pencil references missing chord " + chord_str(c);
    }
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = i + 1; j < g.size(); ++j) {
        if (g[i] == g[j]) return "pencil repeats chord " + chord_str(g[i]);
        if (!interleaves(g[i], g[j], n))
          return "pencil chords " + chord_str(g[i]) + "," + chord_str(g[j]) +
                 " cannot meet at one point";
        auto key = std::minmax(g[i], g[j]);
        if (++covered[{key.first, key.second}] > 1)
          return "chords " + chord_str(g[i]) + "," + chord_str(g[j]) +
                 " glued at two points";
      }
  }

  // Every same-color crossing must be a declared pencil point.
  for (auto* layer : {&d.blue, &d.red})
    for (std::size_t i = 0; i < layer->size(); ++i)
      for (std::size_t j = i + 1; j < layer->size(); ++j)
        if (interleaves((*layer)[i], (*layer)[j], n)) {
          auto key = std::minmax((*layer)[i], (*layer)[j]);
          if (!covered.count({key.first, key.second}))
            return "undeclared same-color crossing " + chord_str((*layer)[i]) + "," +
                   chord_str((*layer)[j]);
        }

  // The bicolored crossings are the d simple vertices of the signature.
  int crossings = 0;
  std::vector<int> blue_deg(d.blue.size(), 0), red_deg(d.red.size(), 0);
  for (std::size_t i = 0; i < d.blue.size(); ++i)
    for (std::size_t j = 0; j < d.red.size(); ++j)
      if (interleaves(d.blue[i], d.red[j], n)) {
        ++crossings;
        ++blue_deg[i];
        ++red_deg[j];
      }
  if (crossings != deg)
    return "expected " + std::to_string(deg) + " blue-red crossings, found " +
           std::to_string(crossings);
  if (d.pencils.empty()) {
    // Generic signatures decompose into d trees with one crossing each.
    for (std::size_t i = 0; i < d.blue.size(); ++i)
      if (blue_deg[i] != 1)
        return "blue chord " + chord_str(d.blue[i]) + " crosses " +
               std::to_string(blue_deg[i]) + " red chords";
  }

  // Global forest condition.
  std::vector<Chord> chords = d.blue;
  chords.insert(chords.end(), d.red.begin(), d.red.end());
  std::vector<std::vector<Chord>> points = d.pencils;
  for (const auto& b : d.blue)
    for (const auto& r : d.red)
      if (interleaves(b, r, n)) points.push_back({b, r});
  if (!acyclic(n, chords, points)) return "chord system contains a cycle";

  return std::nullopt;
}

std::string make_key(const SignatureData& d) {
  std::ostringstream os;
  os << "d" << d.degree << "|B";
  for (const auto& c : d.blue) os << " " << c.lo << "-" << c.hi;
  os << "|R";
  for (const auto& c : d.red) os << " " << c.lo << "-" << c.hi;
  os << "|P";
  for (const auto& g : d.pencils) {
    os << " (";
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i) os << ",";
      os << g[i].lo << "-" << g[i].hi;
    }
    os << ")";
  }
  return os.str();
}

}  // namespace

bool forest_check(int n, const std::vector<Chord>& chords,
                  const std::vector<std::vector<Chord>>& points) {
  return acyclic(n, chords, points);
}

Signature Signature::make(SignatureData data) {
  std::string why;
  auto s = try_make(std::move(data), &why);
  if (!s) throw SignatureError(why);
  return *s;
}

std::optional<Signature> Signature::try_make(SignatureData data, std::string* why) {
  normalize(data);
  if (auto err = check(data)) {
    if (why) *why = *err;
    return std::nullopt;
  }
  Signature s;
  s.data_ = std::move(data);
  s.key_ = make_key(s.data_);
  return s;
}

int Signature::codimension() const {
  int c = 0;
  for (const auto& g : data_.pencils) c += 2 * static_cast<int>(g.size()) - 3;
  return c;
}

Signature Signature::shifted(int k) const {
  const int n = labels();
  SignatureData d;
  d.degree = data_.degree;
  auto map_chord = [&](const Chord& c) { return Chord(mod(c.lo + k, n), mod(c.hi + k, n)); };
  for (const auto& c : data_.blue) {
    Chord m = map_chord(c);
    (m.color() == Color::Blue ? d.blue : d.red).push_back(m);
  }
  for (const auto& c : data_.red) {
    Chord m = map_chord(c);
    (m.color() == Color::Blue ? d.blue : d.red).push_back(m);
  }
  for (const auto& g : data_.pencils) {
    std::vector<Chord> mg;
    for (const auto& c : g) mg.push_back(map_chord(c));
    d.pencils.push_back(std::move(mg));
  }
  return make(std::move(d));
}

Signature Signature::reflected(int axis) const {
  const int n = labels();
  SignatureData d;
  d.degree = data_.degree;
  auto map_chord = [&](const Chord& c) { return Chord(mod(axis - c.lo, n), mod(axis - c.hi, n)); };
  for (const auto& c : data_.blue) {
    Chord m = map_chord(c);
    (m.color() == Color::Blue ? d.blue : d.red).push_back(m);
  }
  for (const auto& c : data_.red) {
    Chord m = map_chord(c);
    (m.color() == Color::Blue ? d.blue : d.red).push_back(m);
  }
  for (const auto& g : data_.pencils) {
    std::vector<Chord> mg;
    for (const auto& c : g) mg.push_back(map_chord(c));
    d.pencils.push_back(std::move(mg));
  }
  return make(std::move(d));
}

Classification classify(const Signature& s) {
  if (!s.generic())
    throw SignatureError("classification is defined for generic signatures only");
  const int n = s.labels();
  Classification out;
  bool has_f = false, has_s = false;
  for (const auto& b : s.chords(Color::Blue)) {
    const Chord* partner = nullptr;
    for (const auto& r : s.chords(Color::Red))
      if (interleaves(b, r, n)) {
        partner = &r;
        break;
      }
    if (!partner) throw SignatureError("blue chord without a crossing partner");
    TreeClass t;
    t.blue = b;
    t.red = *partner;
    bool bs = is_short(b, n), rs = is_short(*partner, n);
    t.kind = bs && rs ? TreeKind::M : (!bs && !rs ? TreeKind::S : TreeKind::F);
    has_f |= t.kind == TreeKind::F;
    has_s |= t.kind == TreeKind::S;
    out.trees.push_back(t);
  }
  out.kind = has_f ? (has_s ? SignatureKind::FS : SignatureKind::F)
                   : (has_s ? SignatureKind::S : SignatureKind::M);
  if (out.kind == SignatureKind::M)
    for (int i = 1; i <= 4; ++i)
      if (m_signature(s.degree(), i) == s) out.m_index = i;
  return out;
}

Signature m_signature(int degree, int index) {
  const int n = 4 * degree;
  SignatureData d;
  d.degree = degree;
  // M1 = |3;1||7;5|..., M2 = |1;3||5;7|..., M3 = |3;5||7;9|..., M4 = |5;3||9;7|...
  // Red chords (i, i+2) with blue short (j-1, j+1) crossing them.
  int red_base = (index == 1 || index == 2) ? 1 : 3;
  for (int k = 0; k < degree; ++k) {
    int i = mod(red_base + 4 * k, n);
    d.red.emplace_back(i, mod(i + 2, n));
    int j = (index == 1 || index == 4) ? mod(i + 2, n) : i;  // top row of the token
    d.blue.emplace_back(mod(j - 1, n), mod(j + 1, n));
  }
  return Signature::make(std::move(d));
}

std::string matrix_notation(const Signature& s) {
  auto cls = classify(s);
  const int n = s.labels();
  std::ostringstream os;
  for (const auto& t : cls.trees) {
    if (t.kind == TreeKind::S) {
      os << "[" << t.red.lo << "," << t.red.hi << ";" << t.blue.lo << "," << t.blue.hi << "]";
      continue;
    }
    // |j;i|: the tree's diagonal is (i,j), crossed by the short chord
    // (j-1,j+1) of the other color.  For M trees the diagonal is red.
    Chord diag = t.kind == TreeKind::M ? t.red : (is_short(t.blue, n) ? t.red : t.blue);
    Chord cross = t.kind == TreeKind::M ? t.blue : (is_short(t.blue, n) ? t.blue : t.red);
    int j;
    if (Chord(mod(diag.lo - 1, n), mod(diag.lo + 1, n)) == cross)
      j = diag.lo;
    else
      j = diag.hi;
    int i = (j == diag.lo) ? diag.hi : diag.lo;
    os << "|" << j << ";" << i << "|";
  }
  return os.str();
}

Signature parse_matrix_notation(int degree, const std::string& text) {
  const int n = 4 * degree;
  SignatureData d;
  d.degree = degree;
  auto add = [&](Chord c) { (c.color() == Color::Blue ? d.blue : d.red).push_back(c); };

  std::size_t pos = 0;
  auto read_int = [&]() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw SignatureError("matrix notation: number expected at " + text);
    return std::stoi(text.substr(start, pos - start));
  };
  auto expect = [&](char c) {
    if (pos >= text.size() || text[pos] != c)
      throw SignatureError(std::string("matrix notation: '") + c + "' expected in " + text);
    ++pos;
  };

  bool any = false;
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c == '|') {
      ++pos;
      int j = read_int();
      expect(';');
      int i = read_int();
      expect('|');
      add(Chord(mod(i, n), mod(j, n)));
      add(Chord(mod(j - 1, n), mod(j + 1, n)));
      any = true;
    } else if (c == '[') {
      ++pos;
      int a = read_int();
      expect(',');
      int b = read_int();
      expect(';');
      int x = read_int();
      expect(',');
      int y = read_int();
      expect(']');
      add(Chord(mod(a, n), mod(b, n)));
      add(Chord(mod(x, n), mod(y, n)));
      any = true;
    } else {
      throw SignatureError("matrix notation: unexpected character in " + text);
    }
  }
  if (!any) throw SignatureError("matrix notation: empty expression");

  // Complete the remaining labels with short chords, run by run.
  for (Color col : {Color::Blue, Color::Red}) {
    std::vector<bool> used(n, false);
    for (const auto& c : (col == Color::Blue ? d.blue : d.red)) used[c.lo] = used[c.hi] = true;
    int parity = col == Color::Blue ? 0 : 1;
    auto is_free = [&](Label x) { return !used[mod(x, n)]; };
    int free_count = 0;
    for (int x = parity; x < n; x += 2)
      if (is_free(x)) ++free_count;
    if (free_count == 0) continue;
    // Maximal runs of free labels; each run pairs neighbours (x, x+2).
    int paired = 0;
    for (int x = parity; x < n; x += 2) {
      if (!is_free(x) || is_free(x - 2)) continue;  // not a run head
      std::vector<Label> run;
      for (Label y = x; is_free(y); y = mod(y + 2, n)) run.push_back(mod(y, n));
      if (run.size() % 2 != 0)
        throw SignatureError("matrix notation: odd-length gap, no short completion");
      for (std::size_t i = 0; i + 1 < run.size(); i += 2) add(Chord(run[i], run[i + 1]));
      paired += static_cast<int>(run.size());
    }
    if (paired != free_count)
      throw SignatureError("matrix notation: no short completion exists");
  }
  return Signature::make(std::move(d));
}

}  // namespace strata
