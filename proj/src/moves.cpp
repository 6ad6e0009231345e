#include "strata/moves.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <memory>
#include <set>

namespace strata {

namespace {

// A strand being glued: its chord, and the interior vertices remaining
// on each side of the glue point (pencil vertex ids of the source map).
struct GluedStrand {
  Chord chord;
  std::vector<int> lo_side;  // pencil vertex ids between chord.lo and the glue point
  std::vector<int> hi_side;
};

// Rebuild signature data after gluing the given strands at one point.
// Unselected pencils re-attach to the new chord holding the endpoint on
// their side of the split.
std::optional<Signature> reassemble(const Signature& s, const PlanarMap& m,
                                    const std::vector<GluedStrand>& glued,
                                    const std::set<int>& dissolved_pencil_vertices,
                                    std::string* why) {
  std::set<Chord> glued_set;
  for (const auto& g : glued) {
    if (!glued_set.insert(g.chord).second) {
      if (why) *why = "strand selected twice";
      return std::nullopt;
    }
  }

  // Antipodal re-pairing of the glued endpoints.
  std::vector<Label> ends;
  for (const auto& g : glued) {
    ends.push_back(g.chord.lo);
    ends.push_back(g.chord.hi);
  }
  std::sort(ends.begin(), ends.end());
  const int k = static_cast<int>(glued.size());
  std::vector<Chord> new_chords;
  for (int i = 0; i < k; ++i) new_chords.emplace_back(ends[i], ends[i + k]);

  auto replacement = [&](Label endpoint) {
    for (const auto& c : new_chords)
      if (c.lo == endpoint || c.hi == endpoint) return c;
    assert(false);
    return Chord();
  };

  SignatureData d;
  d.degree = s.degree();
  for (Color col : {Color::Blue, Color::Red})
    for (const auto& c : s.chords(col))
      if (!glued_set.count(c)) (col == Color::Blue ? d.blue : d.red).push_back(c);
  for (const auto& c : new_chords) (c.color() == Color::Blue ? d.blue : d.red).push_back(c);

  // Which new chord carries each surviving pencil vertex of a glued strand.
  std::map<std::pair<int, Chord>, Chord> carried;  // (pencil vertex, old chord) -> new chord
  for (const auto& g : glued) {
    for (int v : g.lo_side) carried[{v, g.chord}] = replacement(g.chord.lo);
    for (int v : g.hi_side) carried[{v, g.chord}] = replacement(g.chord.hi);
  }

  const auto& pencils = s.pencils();
  for (std::size_t p = 0; p < pencils.size(); ++p) {
    int v = m.pencil_vertex_id(static_cast<int>(p));
    if (dissolved_pencil_vertices.count(v)) continue;
    std::vector<Chord> members;
    for (const auto& c : pencils[p]) {
      if (!glued_set.count(c)) {
        members.push_back(c);
        continue;
      }
      auto it = carried.find({v, c});
      if (it == carried.end()) {
        if (why) *why = "pencil lost track of a glued strand";
        return std::nullopt;
      }
      members.push_back(it->second);
    }
    d.pencils.push_back(std::move(members));
  }
  d.pencils.push_back(new_chords);

  return Signature::try_make(std::move(d), why);
}

}  // namespace

std::optional<Signature> contract(const Signature& s, const PlanarMap& m,
                                  const ContractionSelection& sel, std::string* why) {
  if (sel.face < 0 || sel.face >= static_cast<int>(m.faces().size()) ||
      sel.face == m.outer_face()) {
    if (why) *why = "glue point must lie in an interior face";
    return std::nullopt;
  }
  if (sel.segments.size() + sel.pencils.size() < 2 ||
      (sel.segments.empty() && sel.pencils.size() < 2)) {
    if (why) *why = "a contracting move needs at least two strands or a pencil to grow";
    return std::nullopt;
  }

  auto items = m.items_on_face(sel.face);
  std::optional<Color> color;
  std::vector<GluedStrand> glued;
  std::set<int> dissolved;

  for (const auto& seg : sel.segments) {
    if (std::find(items.segments.begin(), items.segments.end(), seg) == items.segments.end()) {
      if (why) *why = "selected segment does not bound the face";
      return std::nullopt;
    }
    const Chord& c = m.chords()[seg.first];
    if (color && *color != c.color()) {
      if (why) *why = "contracting move must stay in one color";
      return std::nullopt;
    }
    color = c.color();
    GluedStrand g;
    g.chord = c;
    const auto& path = m.chord_path(seg.first);
    for (int t = 1; t + 1 < static_cast<int>(path.size()); ++t) {
      int v = path[t];
      if (m.vertices()[v].kind != PlanarMap::VertexKind::Pencil) continue;
      (t <= seg.second ? g.lo_side : g.hi_side).push_back(v);
    }
    glued.push_back(std::move(g));
  }

  for (int p : sel.pencils) {
    int v = m.pencil_vertex_id(p);
    if (std::find(items.pencil_vertices.begin(), items.pencil_vertices.end(), v) ==
        items.pencil_vertices.end()) {
      if (why) *why = "selected pencil vertex does not bound the face";
      return std::nullopt;
    }
    const auto& members = s.pencils()[p];
    if (color && *color != members.front().color()) {
      if (why) *why = "contracting move must stay in one color";
      return std::nullopt;
    }
    color = members.front().color();
    dissolved.insert(v);
    for (const auto& c : members) {
      GluedStrand g;
      g.chord = c;
      int ci = m.chord_index(c);
      const auto& path = m.chord_path(ci);
      int split = -1;
      for (int t = 1; t + 1 < static_cast<int>(path.size()); ++t)
        if (path[t] == v) split = t;
      assert(split > 0);
      for (int t = 1; t + 1 < static_cast<int>(path.size()); ++t) {
        int u = path[t];
        if (u == v || m.vertices()[u].kind != PlanarMap::VertexKind::Pencil) continue;
        (t < split ? g.lo_side : g.hi_side).push_back(u);
      }
      glued.push_back(std::move(g));
    }
  }

  return reassemble(s, m, glued, dissolved, why);
}

std::optional<Signature> contract_chords(const Signature& s, const std::vector<Chord>& chords,
                                         std::string* why) {
  PlanarMap m = PlanarMap::build(s);
  std::vector<int> indices;
  for (const auto& c : chords) {
    int ci = m.chord_index(c);
    if (ci < 0) {
      if (why) *why = "chord not present in signature";
      return std::nullopt;
    }
    indices.push_back(ci);
  }
  std::string last_err = "chords do not adjoin any common face";
  for (int f = 0; f < static_cast<int>(m.faces().size()); ++f) {
    if (f == m.outer_face()) continue;
    auto items = m.items_on_face(f);
    // Pick one boundary segment per requested chord on this face.
    std::vector<std::vector<int>> options(indices.size());
    bool all = true;
    for (std::size_t i = 0; i < indices.size(); ++i) {
      for (const auto& seg : items.segments)
        if (seg.first == indices[i]) options[i].push_back(seg.second);
      if (options[i].empty()) all = false;
    }
    if (!all) continue;
    std::vector<std::size_t> pick(indices.size(), 0);
    while (true) {
      ContractionSelection sel;
      sel.face = f;
      for (std::size_t i = 0; i < indices.size(); ++i)
        sel.segments.push_back({indices[i], options[i][pick[i]]});
      std::string err;
      if (auto r = contract(s, m, sel, &err)) return r;
      last_err = err;
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }
  if (why) *why = last_err;
  return std::nullopt;
}

std::vector<Signature> all_contractions(const Signature& s) {
  PlanarMap m = PlanarMap::build(s);
  std::set<std::string> seen;
  std::vector<Signature> out;
  for (int f = 0; f < static_cast<int>(m.faces().size()); ++f) {
    if (f == m.outer_face()) continue;
    auto items = m.items_on_face(f);
    for (Color col : {Color::Blue, Color::Red}) {
      // Items of this color on the face: per chord the list of its
      // segments (a move uses at most one), plus whole pencil vertices.
      std::map<int, std::vector<int>> segs_by_chord;
      for (const auto& seg : items.segments)
        if (m.chords()[seg.first].color() == col) segs_by_chord[seg.first].push_back(seg.second);
      std::vector<int> pencil_ids;
      for (int v : items.pencil_vertices) {
        int p = m.vertices()[v].index;
        if (s.pencils()[p].front().color() == col) pencil_ids.push_back(p);
      }
      std::vector<std::pair<int, std::vector<int>>> chord_items(segs_by_chord.begin(),
                                                                segs_by_chord.end());
      const int nc = static_cast<int>(chord_items.size());
      const int np = static_cast<int>(pencil_ids.size());
      if (nc + np < 2) continue;
      // Enumerate subsets: for each chord pick a segment or skip; for
      // each pencil in or out.
      std::vector<int> choice(nc, -1);  // -1 = skip, else segment option
      std::vector<bool> take(np, false);
      auto emit = [&]() {
        int picked = 0;
        ContractionSelection sel;
        sel.face = f;
        for (int i = 0; i < nc; ++i)
          if (choice[i] >= 0) {
            sel.segments.push_back({chord_items[i].first, chord_items[i].second[choice[i]]});
            ++picked;
          }
        for (int p = 0; p < np; ++p)
          if (take[p]) {
            sel.pencils.push_back(pencil_ids[p]);
            ++picked;
          }
        if (picked < 2) return;
        if (auto r = contract(s, m, sel))
          if (seen.insert(r->key()).second) out.push_back(std::move(*r));
      };
      // Odometer over chord segment choices and pencil membership.
      std::vector<int> radix;
      for (int i = 0; i < nc; ++i) radix.push_back(static_cast<int>(chord_items[i].second.size()) + 1);
      for (int p = 0; p < np; ++p) radix.push_back(2);
      std::vector<int> odo(radix.size(), 0);
      while (true) {
        for (int i = 0; i < nc; ++i) choice[i] = odo[i] - 1;
        for (int p = 0; p < np; ++p) take[p] = odo[nc + p] == 1;
        emit();
        std::size_t i = 0;
        while (i < odo.size() && ++odo[i] == radix[i]) odo[i++] = 0;
        if (i == odo.size()) break;
      }
    }
  }
  return out;
}

namespace {

// Non-crossing partitions of a linearly ordered set into even-size
// blocks (>= 2).  For partitions, linear and cyclic non-crossing agree,
// so this also enumerates the planar reconnections of a pencil.
void nc_even_partitions_interval(const std::vector<int>& elems,
                                 std::vector<std::vector<int>>& acc,
                                 std::vector<std::vector<std::vector<int>>>& out) {
  if (elems.empty()) {
    out.push_back(acc);
    return;
  }
  // The block containing elems[0]: choose its other members; the
  // stretches between consecutive members must be partitioned among
  // themselves (non-crossing).
  struct Rec {
    const std::vector<int>& elems;
    std::vector<std::vector<int>>& acc;
    std::vector<std::vector<std::vector<int>>>& out;
    std::vector<int> chosen;
    void go(int from) {
      if (chosen.size() % 2 == 0 && chosen.size() >= 2) {
        // Gaps: between consecutive chosen positions, and after the last.
        bool ok = true;
        std::vector<std::vector<int>> gaps;
        for (std::size_t i = 0; i + 1 < chosen.size(); ++i) {
          std::vector<int> g;
          for (int t = chosen[i] + 1; t < chosen[i + 1]; ++t) g.push_back(elems[t]);
          if (g.size() % 2) ok = false;
          gaps.push_back(std::move(g));
        }
        std::vector<int> tail;
        for (int t = chosen.back() + 1; t < static_cast<int>(elems.size()); ++t)
          tail.push_back(elems[t]);
        if (tail.size() % 2) ok = false;
        if (ok) {
          std::vector<int> block;
          for (int p : chosen) block.push_back(elems[p]);
          acc.push_back(block);
          chain(gaps, 0, tail);
          acc.pop_back();
        }
      }
      for (int i = from; i < static_cast<int>(elems.size()); ++i) {
        chosen.push_back(i);
        go(i + 1);
        chosen.pop_back();
      }
    }
    void chain(const std::vector<std::vector<int>>& gaps, std::size_t gi,
               const std::vector<int>& tail) {
      if (gi == gaps.size()) {
        nc_even_partitions_interval(tail, acc, out);
        return;
      }
      std::vector<std::vector<std::vector<int>>> sub;
      std::vector<std::vector<int>> empty_acc;
      nc_even_partitions_interval(gaps[gi], empty_acc, sub);
      for (auto& parts : sub) {
        std::size_t mark = acc.size();
        for (auto& b : parts) acc.push_back(b);
        chain(gaps, gi + 1, tail);
        acc.resize(mark);
      }
    }
  } rec{elems, acc, out, {}};
  rec.chosen.push_back(0);
  rec.go(1);
}

}  // namespace

std::vector<Signature> smoothings(const Signature& s, int pencil_index) {
  PlanarMap m = PlanarMap::build(s);
  const auto& group = s.pencils()[pencil_index];
  const int v = m.pencil_vertex_id(pencil_index);

  // Spokes in rotational order; each heads for one boundary label.
  struct Spoke {
    Chord chord;
    Label target;
    std::vector<int> carried;  // pencil vertex ids on this side
  };
  std::vector<Spoke> spokes;
  for (const auto& c : group) {
    int ci = m.chord_index(c);
    const auto& path = m.chord_path(ci);
    int split = -1;
    for (int t = 1; t + 1 < static_cast<int>(path.size()); ++t)
      if (path[t] == v) split = t;
    assert(split > 0);
    Spoke lo{c, c.lo, {}}, hi{c, c.hi, {}};
    for (int t = 1; t + 1 < static_cast<int>(path.size()); ++t) {
      int u = path[t];
      if (u == v || m.vertices()[u].kind != PlanarMap::VertexKind::Pencil) continue;
      (t < split ? lo : hi).carried.push_back(u);
    }
    spokes.push_back(std::move(lo));
    spokes.push_back(std::move(hi));
  }
  std::sort(spokes.begin(), spokes.end(),
            [](const Spoke& a, const Spoke& b) { return a.target < b.target; });

  const int two_m = static_cast<int>(spokes.size());
  std::vector<int> ids(two_m);
  for (int i = 0; i < two_m; ++i) ids[i] = i;
  std::vector<std::vector<std::vector<int>>> partitions;
  {
    std::vector<std::vector<int>> acc;
    nc_even_partitions_interval(ids, acc, partitions);
  }

  std::set<std::string> seen;
  std::vector<Signature> out;
  for (const auto& parts : partitions) {
    if (parts.size() == 1) continue;  // the unsmoothed vertex itself
    SignatureData d;
    d.degree = s.degree();
    std::set<Chord> group_set(group.begin(), group.end());
    for (Color col : {Color::Blue, Color::Red})
      for (const auto& c : s.chords(col))
        if (!group_set.count(c)) (col == Color::Blue ? d.blue : d.red).push_back(c);

    // New chords: antipodal pairing inside each block.
    std::map<std::pair<int, Chord>, Chord> carried;  // (vertex, old chord) -> new chord
    std::vector<std::vector<Chord>> new_groups;
    std::vector<Chord> new_chords;
    for (const auto& block : parts) {
      const int t = static_cast<int>(block.size()) / 2;
      std::vector<Chord> members;
      for (int i = 0; i < t; ++i) {
        const Spoke& a = spokes[block[i]];
        const Spoke& b = spokes[block[i + t]];
        Chord nc(a.target, b.target);
        members.push_back(nc);
        new_chords.push_back(nc);
        for (int u : a.carried) carried[{u, a.chord}] = nc;
        for (int u : b.carried) carried[{u, b.chord}] = nc;
      }
      if (members.size() >= 2) new_groups.push_back(members);
    }
    for (const auto& c : new_chords) (c.color() == Color::Blue ? d.blue : d.red).push_back(c);

    bool ok = true;
    for (std::size_t p = 0; p < s.pencils().size(); ++p) {
      if (static_cast<int>(p) == pencil_index) continue;
      int u = m.pencil_vertex_id(static_cast<int>(p));
      std::vector<Chord> members;
      for (const auto& c : s.pencils()[p]) {
        if (!group_set.count(c)) {
          members.push_back(c);
          continue;
        }
        auto it = carried.find({u, c});
        if (it == carried.end()) {
          ok = false;
          break;
        }
        members.push_back(it->second);
      }
      if (!ok) break;
      d.pencils.push_back(std::move(members));
    }
    if (!ok) continue;
    for (auto& g : new_groups) d.pencils.push_back(std::move(g));

    if (auto r = Signature::try_make(std::move(d)))
      if (seen.insert(r->key()).second) out.push_back(std::move(*r));
  }
  return out;
}

std::vector<Signature> all_smoothings(const Signature& s) {
  std::set<std::string> seen;
  std::vector<Signature> out;
  for (int p = 0; p < static_cast<int>(s.pencils().size()); ++p)
    for (auto& r : smoothings(s, p))
      if (seen.insert(r.key()).second) out.push_back(std::move(r));
  return out;
}

std::vector<WhiteheadMove> whitehead_neighbors(const Signature& s) {
  std::vector<WhiteheadMove> out;
  std::set<std::pair<std::string, std::string>> seen;
  const int codim = s.codimension();
  for (auto& mid : all_contractions(s)) {
    if (mid.codimension() != codim + 1) continue;
    for (auto& t : all_smoothings(mid)) {
      if (t.codimension() != codim || t == s) continue;
      if (seen.insert({mid.key(), t.key()}).second) out.push_back({mid, t});
    }
  }
  return out;
}

Order incidence(const Signature& a, const Signature& b) {
  if (a.degree() != b.degree()) throw SignatureError("incidence requires equal degrees");
  if (a == b) return Order::Equal;
  if (a.codimension() == b.codimension()) return Order::Incomparable;
  const Signature& low = a.codimension() < b.codimension() ? a : b;
  const Signature& high = a.codimension() < b.codimension() ? b : a;
  std::set<std::string> seen{high.key()};
  std::deque<Signature> queue{high};
  while (!queue.empty()) {
    Signature cur = std::move(queue.front());
    queue.pop_front();
    for (auto& t : all_smoothings(cur)) {
      if (t == low) return a.codimension() < b.codimension() ? Order::Precedes : Order::Succeeds;
      if (t.codimension() > low.codimension() && seen.insert(t.key()).second)
        queue.push_back(std::move(t));
    }
  }
  return Order::Incomparable;
}

std::vector<Signature> closure_below(const Signature& s) {
  std::set<std::string> seen{s.key()};
  std::vector<Signature> out;
  std::deque<Signature> queue{s};
  while (!queue.empty()) {
    Signature cur = std::move(queue.front());
    queue.pop_front();
    for (auto& t : all_smoothings(cur))
      if (seen.insert(t.key()).second) {
        out.push_back(t);
        queue.push_back(std::move(t));
      }
  }
  return out;
}

namespace {

struct Potential {
  int blue_long = 0, blue_len = 0, red_long = 0, red_len = 0;
  auto tie() const { return std::tie(blue_long, blue_len, red_long, red_len); }
  bool operator<(const Potential& o) const { return tie() < o.tie(); }
};

Potential potential(const Signature& s) {
  Potential p;
  const int n = s.labels();
  for (const auto& c : s.chords(Color::Blue)) {
    if (!is_short(c, n)) ++p.blue_long;
    p.blue_len += circ_length(c, n) - 2;
  }
  for (const auto& c : s.chords(Color::Red)) {
    if (!is_short(c, n)) ++p.red_long;
    p.red_len += circ_length(c, n) - 2;
  }
  return p;
}

bool is_M(const Signature& s) { return classify(s).kind == SignatureKind::M; }

}  // namespace

PathToM path_to_M(const Signature& s) {
  if (!s.generic()) throw SignatureError("path_to_M expects a generic signature");
  PathToM result;
  Signature cur = s;
  std::set<std::string> visited{cur.key()};
  while (!is_M(cur)) {
    auto neighbors = whitehead_neighbors(cur);
    Potential here = potential(cur);
    const WhiteheadMove* best = nullptr;
    Potential best_pot = here;
    for (const auto& mv : neighbors) {
      Potential p = potential(mv.target);
      if (p < best_pot && !visited.count(mv.target.key())) {
        best_pot = p;
        best = &mv;
      }
    }
    if (best) {
      result.moves.push_back(*best);
      cur = best->target;
      visited.insert(cur.key());
      continue;
    }
    // Breadth-first fallback to the nearest M-signature.
    std::map<std::string, std::pair<std::string, WhiteheadMove*>> parent;
    std::deque<Signature> queue{cur};
    std::map<std::string, Signature> nodes{{cur.key(), cur}};
    std::vector<std::unique_ptr<WhiteheadMove>> owned;
    std::string goal;
    while (!queue.empty() && goal.empty()) {
      Signature u = queue.front();
      queue.pop_front();
      for (auto& mv : whitehead_neighbors(u)) {
        const std::string key = mv.target.key();
        if (nodes.count(key)) continue;
        nodes.emplace(key, mv.target);
        owned.push_back(std::make_unique<WhiteheadMove>(mv));
        parent[key] = {u.key(), owned.back().get()};
        if (is_M(mv.target)) {
          goal = key;
          break;
        }
        queue.push_back(mv.target);
      }
    }
    if (goal.empty()) throw SignatureError("no path to an M-signature found");
    std::vector<WhiteheadMove> chain;
    for (std::string k = goal; k != cur.key(); k = parent.at(k).first)
      chain.push_back(*parent.at(k).second);
    std::reverse(chain.begin(), chain.end());
    for (auto& mv : chain) {
      result.moves.push_back(mv);
      result.fallback_steps++;
    }
    cur = nodes.at(goal);
  }
  return result;
}

}  // namespace strata
