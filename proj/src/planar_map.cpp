#include "strata/planar_map.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace strata {

namespace {

// Connected components of the chord-crossing graph with one chord
// removed.  Chords cross iff they interleave with opposite colors or
// share a pencil.
std::vector<int> components_without(const std::vector<std::vector<int>>& adj, int removed) {
  std::vector<int> comp(adj.size(), -1);
  int next = 0;
  for (int start = 0; start < static_cast<int>(adj.size()); ++start) {
    if (start == removed || comp[start] >= 0) continue;
    comp[start] = next;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[u]) {
        if (v == removed || comp[v] >= 0) continue;
        comp[v] = next;
        stack.push_back(v);
      }
    }
    ++next;
  }
  return comp;
}

}  // namespace

PlanarMap PlanarMap::build(const Signature& s) {
  PlanarMap m;
  const int n = s.labels();
  m.n_ = n;

  for (const auto& c : s.chords(Color::Blue)) m.chords_.push_back(c);
  for (const auto& c : s.chords(Color::Red)) m.chords_.push_back(c);
  const int nc = static_cast<int>(m.chords_.size());
  auto index_of = [&](const Chord& c) {
    for (int i = 0; i < nc; ++i)
      if (m.chords_[i] == c) return i;
    assert(false);
    return -1;
  };

  // Vertices: labels, then crossings, then pencils.
  for (int k = 0; k < n; ++k) m.vertices_.push_back({VertexKind::Boundary, k});
  const int d = s.degree();
  std::map<std::pair<int, int>, int> crossing_vertex;  // (blue idx, red idx) -> vertex
  for (int i = 0; i < d; ++i)
    for (int j = d; j < 2 * d; ++j)
      if (interleaves(m.chords_[i], m.chords_[j], n)) {
        crossing_vertex[{i, j}] = static_cast<int>(m.vertices_.size());
        m.vertices_.push_back({VertexKind::Crossing, static_cast<int>(m.crossings_.size())});
        m.crossings_.push_back({m.chords_[i], m.chords_[j]});
      }
  m.pencil_base_ = static_cast<int>(m.vertices_.size());
  const auto& pencils = s.pencils();
  for (std::size_t p = 0; p < pencils.size(); ++p)
    m.vertices_.push_back({VertexKind::Pencil, static_cast<int>(p)});

  // Crossing graph between chords.
  std::vector<std::vector<int>> adj(nc);
  for (auto& [key, v] : crossing_vertex) {
    adj[key.first].push_back(key.second);
    adj[key.second].push_back(key.first);
  }
  std::vector<std::vector<int>> pencil_members(pencils.size());
  for (std::size_t p = 0; p < pencils.size(); ++p) {
    for (const auto& c : pencils[p]) pencil_members[p].push_back(index_of(c));
    for (int a : pencil_members[p])
      for (int b : pencil_members[p])
        if (a != b) adj[a].push_back(b);
  }

  // Events along each chord, ordered by the obstruction component's
  // first boundary touch inside the arc from chord.lo to chord.hi.
  m.paths_.assign(nc, {});
  for (int ci = 0; ci < nc; ++ci) {
    const Chord& c = m.chords_[ci];
    auto comp = components_without(adj, ci);
    struct Event {
      int vertex;
      int key;
      int component;
    };
    std::vector<Event> events;
    auto span_key = [&](int component) {
      int best = n;
      for (int cj = 0; cj < nc; ++cj) {
        if (comp[cj] != component) continue;
        for (Label e : {m.chords_[cj].lo, m.chords_[cj].hi})
          if (in_arc(e, c.lo, c.hi, n)) best = std::min(best, ccw_dist(c.lo, e, n));
      }
      assert(best < n);
      return best;
    };
    for (auto& [key, v] : crossing_vertex) {
      int other = -1;
      if (key.first == ci)
        other = key.second;
      else if (key.second == ci)
        other = key.first;
      else
        continue;
      events.push_back({v, span_key(comp[other]), comp[other]});
    }
    for (std::size_t p = 0; p < pencils.size(); ++p) {
      bool mine = false;
      int other = -1;
      for (int cj : pencil_members[p]) {
        if (cj == ci)
          mine = true;
        else
          other = cj;
      }
      if (!mine) continue;
      events.push_back({m.pencil_base_ + static_cast<int>(p), span_key(comp[other]), comp[other]});
    }
    std::sort(events.begin(), events.end(),
              [](const Event& a, const Event& b) { return a.key < b.key; });
    for (std::size_t i = 0; i + 1 < events.size(); ++i)
      assert(events[i].component != events[i + 1].component);
    auto& path = m.paths_[ci];
    path.push_back(c.lo);
    for (const auto& e : events) path.push_back(e.vertex);
    path.push_back(c.hi);
  }

  // Half-edges: circle arcs then chord segments.
  auto add_pair = [&](int u, int v, int chord, int segment) {
    int h = static_cast<int>(m.halves_.size());
    m.halves_.push_back({u, v, chord, segment, h + 1});
    m.halves_.push_back({v, u, chord, segment, h});
    return h;
  };
  std::vector<int> arc_fwd(n);  // k -> k+1
  for (int k = 0; k < n; ++k) arc_fwd[k] = add_pair(k, mod(k + 1, n), -1, k);
  // out_hi[ci][j]: outgoing half at path position j toward hi side.
  std::vector<std::vector<int>> out_hi(nc), out_lo(nc);
  for (int ci = 0; ci < nc; ++ci) {
    const auto& path = m.paths_[ci];
    out_hi[ci].assign(path.size(), -1);
    out_lo[ci].assign(path.size(), -1);
    for (std::size_t j = 0; j + 1 < path.size(); ++j) {
      int h = add_pair(path[j], path[j + 1], ci, static_cast<int>(j));
      out_hi[ci][j] = h;
      out_lo[ci][j + 1] = h + 1;
    }
  }

  // Rotations (counterclockwise).
  m.rotation_.assign(m.vertices_.size(), {});
  std::vector<int> chord_at_label(n, -1);
  std::vector<int> pos_at_label(n, -1);
  for (int ci = 0; ci < nc; ++ci) {
    chord_at_label[m.chords_[ci].lo] = ci;
    pos_at_label[m.chords_[ci].lo] = 0;
    chord_at_label[m.chords_[ci].hi] = ci;
    pos_at_label[m.chords_[ci].hi] = static_cast<int>(m.paths_[ci].size()) - 1;
  }
  for (int k = 0; k < n; ++k) {
    auto& rot = m.rotation_[k];
    rot.push_back(arc_fwd[k]);  // toward k+1
    int ci = chord_at_label[k];
    assert(ci >= 0);
    int j = pos_at_label[k];
    rot.push_back(j == 0 ? out_hi[ci][0] : out_lo[ci][j]);
    rot.push_back(m.halves_[arc_fwd[mod(k - 1, n)]].twin);  // toward k-1
  }
  // Crossings: [blue towards lo, red towards its endpoint inside the
  // arc lo->hi of the blue chord, blue towards hi, red other side].
  std::vector<std::map<int, int>> position(nc);  // chord -> vertex -> path position
  for (int ci = 0; ci < nc; ++ci)
    for (std::size_t j = 0; j < m.paths_[ci].size(); ++j) position[ci][m.paths_[ci][j]] = static_cast<int>(j);
  for (auto& [key, v] : crossing_vertex) {
    int bi = key.first, ri = key.second;
    const Chord& b = m.chords_[bi];
    const Chord& r = m.chords_[ri];
    int jb = position[bi][v];
    int jr = position[ri][v];
    bool red_lo_inside = in_arc(r.lo, b.lo, b.hi, n);
    auto& rot = m.rotation_[v];
    rot.push_back(out_lo[bi][jb]);
    rot.push_back(red_lo_inside ? out_lo[ri][jr] : out_hi[ri][jr]);
    rot.push_back(out_hi[bi][jb]);
    rot.push_back(red_lo_inside ? out_hi[ri][jr] : out_lo[ri][jr]);
  }
  // Pencils: spokes ordered by the boundary label they head for.
  for (std::size_t p = 0; p < pencils.size(); ++p) {
    int v = m.pencil_base_ + static_cast<int>(p);
    std::vector<std::pair<Label, int>> spokes;
    for (int ci : pencil_members[p]) {
      int j = position[ci][v];
      spokes.push_back({m.chords_[ci].lo, out_lo[ci][j]});
      spokes.push_back({m.chords_[ci].hi, out_hi[ci][j]});
    }
    std::sort(spokes.begin(), spokes.end());
    for (auto& [label, h] : spokes) m.rotation_[v].push_back(h);
  }

  m.rot_pos_.assign(m.halves_.size(), -1);
  for (std::size_t v = 0; v < m.rotation_.size(); ++v)
    for (std::size_t i = 0; i < m.rotation_[v].size(); ++i)
      m.rot_pos_[m.rotation_[v][i]] = static_cast<int>(i);

  m.trace_faces();
  return m;
}

void PlanarMap::trace_faces() {
  std::vector<int> face_of(halves_.size(), -1);
  for (std::size_t h0 = 0; h0 < halves_.size(); ++h0) {
    if (face_of[h0] >= 0) continue;
    Face f;
    int h = static_cast<int>(h0);
    while (face_of[h] < 0) {
      face_of[h] = static_cast<int>(faces_.size());
      f.walk.push_back(h);
      int t = halves_[h].twin;
      const auto& rot = rotation_[halves_[t].from];
      int pos = rot_pos_[t];
      h = rot[(pos + 1) % rot.size()];
    }
    faces_.push_back(std::move(f));
  }

  // Euler check: V - E + F = 2 on the sphere.
  int V = static_cast<int>(vertices_.size());
  int E = static_cast<int>(halves_.size()) / 2;
  int F = static_cast<int>(faces_.size());
  assert(V - E + F == 2);
  (void)V;
  (void)E;
  (void)F;

  // The outer face is the unique all-arc face once chords exist.
  outer_ = -1;
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    bool all_arcs = true;
    for (int h : faces_[f].walk)
      if (halves_[h].chord >= 0) all_arcs = false;
    if (all_arcs) {
      outer_ = static_cast<int>(f);
      break;
    }
  }
  assert(outer_ >= 0);
}

PlanarMap::FaceItems PlanarMap::items_on_face(int face_id) const {
  FaceItems items;
  std::vector<std::pair<int, int>> seen_segments;
  std::vector<int> seen_vertices;
  for (int h : faces_[face_id].walk) {
    const auto& he = halves_[h];
    if (he.chord >= 0) {
      std::pair<int, int> seg{he.chord, he.segment};
      if (std::find(seen_segments.begin(), seen_segments.end(), seg) == seen_segments.end()) {
        seen_segments.push_back(seg);
        items.segments.push_back(seg);
      }
    }
    for (int v : {he.from, he.to}) {
      if (vertices_[v].kind != VertexKind::Pencil) continue;
      if (std::find(seen_vertices.begin(), seen_vertices.end(), v) == seen_vertices.end()) {
        seen_vertices.push_back(v);
        items.pencil_vertices.push_back(v);
      }
    }
  }
  return items;
}

int PlanarMap::pencil_vertex_id(int pencil_index) const { return pencil_base_ + pencil_index; }

int PlanarMap::chord_index(const Chord& c) const {
  for (int i = 0; i < static_cast<int>(chords_.size()); ++i)
    if (chords_[i] == c) return i;
  return -1;
}

}  // namespace strata
