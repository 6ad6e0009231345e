#pragma once

#include <array>
#include <string>

#include "strata/nerve.hpp"
#include "strata/poly.hpp"

namespace strata {

struct BraidError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Continuous root trajectories along a sampled polynomial path.
struct Trajectories {
  // strands[i][t]: position of strand i at sample t.
  std::vector<std::vector<Complex>> strands;
  int samples() const { return strands.empty() ? 0 : static_cast<int>(strands[0].size()); }
};

// Matches roots of consecutive samples by nearest neighbour; demands
// finer sampling when the matching is ambiguous (a root moves further
// than half the minimal root gap).
Trajectories track_roots(const std::vector<Polynomial>& path);

// Artin word: letters +i / -i stand for s_i / s_i^{-1}, 1 <= i < d.
struct BraidWord {
  int strands = 0;
  std::vector<int> letters;

  std::vector<int> permutation() const;  // image of each start position
  std::string text() const;              // "s1 s2^-1" form
};

// Generators read from transversal swaps of the real-part order; the
// sign is positive when the strand coming from the right passes above.
BraidWord braid_word(const Trajectories& t);

// Free reduction (cancel adjacent s_i s_i^{-1}).
BraidWord reduced(const BraidWord& w);

// Degree-raising embedding: append the root z0 + max|z_i - z0| + 1,
// z0 the arithmetic mean of the roots.
Polynomial embed(const Polynomial& p);
Complex appended_root(const std::vector<Complex>& roots);

// Quadrangle loops of the nerve: each 2-cell as the 4-step cycle of
// Whitehead moves around it; `independent` marks product walls whose
// two pencils involve disjoint chords (the elementary-braid candidates).
struct QuadrangleLoop {
  int two_cell = -1;
  std::array<int, 4> vertices{};  // generic cells in cyclic order
  std::array<int, 4> edges{};     // edges[i] joins vertices[i], vertices[i+1]
  bool independent = false;
};
std::vector<QuadrangleLoop> quadrangle_generators(const NerveComplex& complex);

}  // namespace strata
