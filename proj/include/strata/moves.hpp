#pragma once

#include <optional>
#include <vector>

#include "strata/planar_map.hpp"
#include "strata/signature.hpp"

namespace strata {

// A contracting half-Whitehead move glues strands at one new interior
// point placed inside a face.  The selection names segments of free
// strands and whole pencil vertices lying on that face; all must carry
// the same color.
struct ContractionSelection {
  int face = -1;
  std::vector<std::pair<int, int>> segments;  // (chord index, segment index) in the map
  std::vector<int> pencils;                   // pencil indices of s
};

std::optional<Signature> contract(const Signature& s, const PlanarMap& m,
                                  const ContractionSelection& sel, std::string* why = nullptr);

// Convenience: glue the given same-color chords at one point, searching
// for a face on which they adjoin.  Fails when no face admits the move
// or every placement breaks the forest condition.
std::optional<Signature> contract_chords(const Signature& s, const std::vector<Chord>& chords,
                                         std::string* why = nullptr);

// Every distinct result of one contracting move on s.
std::vector<Signature> all_contractions(const Signature& s);

// Smoothing half-Whitehead moves at one pencil vertex: every planar
// reconnection of its spokes (full smoothings re-pair into Catalan-many
// matchings; partial ones leave smaller pencils).
std::vector<Signature> smoothings(const Signature& s, int pencil_index);
std::vector<Signature> all_smoothings(const Signature& s);

// One Whitehead move: contract up one codimension, smooth back down.
struct WhiteheadMove {
  Signature mid;     // the shared wall, codim(s) + 1
  Signature target;  // the adjacent signature, codim(s)
};
std::vector<WhiteheadMove> whitehead_neighbors(const Signature& s);

enum class Order { Precedes, Succeeds, Equal, Incomparable };

// Incidence partial order: a precedes b iff b is reachable from a by
// contracting moves (equivalently a from b by smoothings).
Order incidence(const Signature& a, const Signature& b);

// All signatures strictly below s in the incidence order.
std::vector<Signature> closure_below(const Signature& s);

// Constructive path to an M-signature: greedy diagonal shortening with
// a breadth-first fallback when no move shortens.
struct PathToM {
  std::vector<WhiteheadMove> moves;
  int fallback_steps = 0;
};
PathToM path_to_M(const Signature& s);

}  // namespace strata
