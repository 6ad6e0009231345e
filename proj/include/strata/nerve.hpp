#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "strata/atlas.hpp"
#include "strata/signature.hpp"

namespace strata {

// The inclusion diagram as a cell complex: k-cells are the codimension-k
// signatures, and each cell stores its full boundary closure (every cell
// strictly below it in the incidence order).  Ids are the lexicographic
// ranks of the canonical keys, so exports are stable.
struct NerveComplex {
  int degree = 0;
  std::vector<Signature> cells;            // index = id, sorted by key
  std::vector<int> dim;                    // codimension of each cell
  std::vector<std::vector<int>> boundary;  // ids of all cells strictly below

  int id_of(const std::string& key) const;
  std::vector<int> cells_of_dim(int k) const;
  // Cells of dimension exactly dim[cell]-1 in the boundary (the facets).
  std::vector<int> facets(int cell) const;
  // Vertices (generic cells) in the boundary closure.
  std::vector<int> vertex_set(int cell) const;
};

NerveComplex build_nerve(int degree, int jobs = 1);
NerveComplex build_nerve(const Atlas& atlas);

// One record per cell: id, codim, canonical key, boundary ids.
void write_nerve(const NerveComplex& complex, std::ostream& os);

// The four exterior substructures: down-closures of the four d-chord
// monochrome pencil cells.  Generic members biject with non-crossing
// partitions of {1..d}.
struct NCStructure {
  int top = -1;                      // the d-pencil cell
  Color pencil_color = Color::Blue;  // color of the contracted chords
  std::vector<int> members;          // closure, including the top
  std::vector<int> generic_members;
  std::vector<int> m_members;
};
std::vector<NCStructure> nc_structures(const NerveComplex& complex);

// Q-diagram: the S^(d-2) signature written as a two-row matrix of long
// diagonals; the bottom row is the top row shifted by -1.
struct QDiagram {
  int degree = 0;
  std::vector<Chord> top;
  std::vector<Chord> bottom;

  Signature signature() const;  // completion with short chords
  QDiagram successor() const;   // [bottom; bottom - 1]
  std::string matrix_text() const;
  bool operator==(const QDiagram& o) const;
};

QDiagram q_seed(int degree);
// The 2d-cycle of Q-diagrams starting from the seed.
std::vector<QDiagram> q_diagrams(int degree);
// Column append embedding Q(d) -> Q(d+1).
QDiagram q_embed(const QDiagram& q);
// Table of inclusions: per degree the 2d Q-matrices, top row first.
std::map<int, std::vector<QDiagram>> q_table(int d_min, int d_max);

// Membership of one Q-piece: signatures connected to the Q-diagram by
// Whitehead moves keeping a long diagonal parallel to the mirror axis,
// the single-F completions of the fans of its S-members, and the
// minimally adjacent M-signatures.
std::vector<Signature> q_piece(const QDiagram& q);

// Generic signatures gluing two adjacent Q-pieces: not in any piece but
// one move from both.
std::vector<Signature> connection_piece(const std::vector<Signature>& piece_a,
                                        const std::vector<Signature>& piece_b,
                                        const std::vector<Signature>& all_pieces_union);

// Symmetry verification over the full complex.
struct SymmetryReport {
  bool shift1_automorphism = false;
  bool shift2_automorphism = false;
  bool reflect_automorphism = false;
  std::vector<int> orbit_sizes;  // under the shift group, all cells
  int m_orbit_size = 0;
  // Chamber structure (degree >= 4): 2d Q-pieces, each split by a
  // mirror, glued along 2d reflection walls.
  int piece_count = 0;
  int pieces_with_internal_mirror = 0;
  int consecutive_reflection_walls = 0;
  int chamber_count = 0;
  bool klein_group_acts = false;  // reflect + rotation by 2d
};
SymmetryReport symmetry_report(const NerveComplex& complex);

// Interior structures (best effort; the paper defines them by example).
struct Bridge {
  int f_plus = -1, f_minus = -1;  // opposite single-F generic cells
  std::vector<int> uppers;        // minimal common upper bounds
};
std::vector<Bridge> bridges(const NerveComplex& complex);

// Open books: codim 2d-4 cells carrying pencils of both colors.
std::vector<int> open_books(const NerveComplex& complex);

}  // namespace strata
