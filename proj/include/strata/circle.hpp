#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace strata {

// Labels live on the circle of 4d marked points, counterclockwise.
// Even labels carry blue ends, odd labels red ends.
using Label = int;

enum class Color : std::uint8_t { Blue = 0, Red = 1 };

inline Color color_of(Label x) { return (x % 2 == 0) ? Color::Blue : Color::Red; }
inline Color other(Color c) { return c == Color::Blue ? Color::Red : Color::Blue; }
inline char color_char(Color c) { return c == Color::Blue ? 'B' : 'R'; }

// A chord joins two distinct boundary labels of equal parity.
// Stored with lo < hi so a chord compares and hashes as a value.
struct Chord {
  Label lo = 0;
  Label hi = 0;

  Chord() = default;
  Chord(Label a, Label b) : lo(a < b ? a : b), hi(a < b ? b : a) {}

  Color color() const { return color_of(lo); }
  bool operator==(const Chord&) const = default;
  auto operator<=>(const Chord&) const = default;
};

// Circular helpers on n = 4d labels.
inline int mod(int x, int n) {
  int r = x % n;
  return r < 0 ? r + n : r;
}

// Steps from a to b going counterclockwise.
inline int ccw_dist(Label a, Label b, int n) { return mod(b - a, n); }

// True iff x lies strictly inside the ccw arc from a to b.
inline bool in_arc(Label x, Label a, Label b, int n) {
  int db = ccw_dist(a, b, n);
  int dx = ccw_dist(a, x, n);
  return dx > 0 && dx < db;
}

// A chord is short when its endpoints are circular neighbours within
// one parity class, i.e. at circular distance 2.
inline bool is_short(const Chord& c, int n) {
  int d = ccw_dist(c.lo, c.hi, n);
  return d == 2 || d == n - 2;
}

// Circular length of a chord: min arc distance between its endpoints.
inline int circ_length(const Chord& c, int n) {
  int d = ccw_dist(c.lo, c.hi, n);
  return d < n - d ? d : n - d;
}

// Two chords interleave iff exactly one endpoint of b lies strictly
// inside one of the boundary arcs cut by a.  Interleaving chords must
// cross when drawn in the disc; non-interleaving ones need not.
inline bool interleaves(const Chord& a, const Chord& b, int n) {
  bool lo_in = in_arc(b.lo, a.lo, a.hi, n);
  bool hi_in = in_arc(b.hi, a.lo, a.hi, n);
  return lo_in != hi_in;
}

// A matching is non-crossing when no two of its chords interleave.
inline bool is_noncrossing(const std::vector<Chord>& matching, int n) {
  for (std::size_t i = 0; i < matching.size(); ++i)
    for (std::size_t j = i + 1; j < matching.size(); ++j)
      if (interleaves(matching[i], matching[j], n)) return false;
  return true;
}

// All perfect matchings of the given labels (for oracles and the
// generic enumerator; labels.size() must be even).
std::vector<std::vector<Chord>> all_matchings(const std::vector<Label>& labels);

// The non-crossing ones among them, Catalan(labels.size()/2) in number.
std::vector<std::vector<Chord>> noncrossing_matchings(const std::vector<Label>& labels, int n);

}  // namespace strata
