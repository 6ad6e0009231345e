#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "strata/circle.hpp"

namespace strata {

struct SignatureError : std::runtime_error {
  explicit SignatureError(const std::string& what) : std::runtime_error(what) {}
};

// Raw description of a candidate signature: one chord system per color
// plus the interior points where same-color chords are glued.  A pencil
// lists the chords passing through one interior vertex; strands run
// straight through (opposite-spoke pairing), so a pencil's chords are
// pairwise interleaving and their endpoints pair antipodally.
struct SignatureData {
  int degree = 0;
  std::vector<Chord> blue;
  std::vector<Chord> red;
  std::vector<std::vector<Chord>> pencils;

  int labels() const { return 4 * degree; }
};

// Classification of one tree of a generic signature.
enum class TreeKind : std::uint8_t { M, F, S };

struct TreeClass {
  TreeKind kind;
  Chord blue;
  Chord red;
};

enum class SignatureKind : std::uint8_t { M, F, S, FS };

class Signature {
 public:
  // Validates and canonicalizes; throws SignatureError with the
  // offending element on failure.
  static Signature make(SignatureData data);
  // Non-throwing variant for bulk enumeration.
  static std::optional<Signature> try_make(SignatureData data, std::string* why = nullptr);

  int degree() const { return data_.degree; }
  int labels() const { return data_.labels(); }
  const SignatureData& data() const { return data_; }
  const std::vector<Chord>& chords(Color c) const {
    return c == Color::Blue ? data_.blue : data_.red;
  }
  const std::vector<std::vector<Chord>>& pencils() const { return data_.pencils; }

  bool generic() const { return data_.pencils.empty(); }
  int codimension() const;

  // Canonical text key; equal keys iff equal rel-boundary isotopy class.
  const std::string& key() const { return key_; }

  // Rotation by k label steps; odd k swaps the colors.
  Signature shifted(int k) const;
  // Reflection x -> axis - x (mod 4d); odd axis swaps the colors.
  Signature reflected(int axis) const;

  bool operator==(const Signature& o) const { return key_ == o.key_; }
  bool operator<(const Signature& o) const { return key_ < o.key_; }

 private:
  Signature() = default;
  SignatureData data_;
  std::string key_;
};

// Forest test on an arbitrary chord complex: `points` lists the interior
// vertices, each as the set of chords through it (pencils, and for
// bicolored candidates the declared crossings).  True iff the union of
// chords, cut at those points, is acyclic.
bool forest_check(int n, const std::vector<Chord>& chords,
                  const std::vector<std::vector<Chord>>& points);

// Per-tree classification of a generic signature, plus the global class.
struct Classification {
  SignatureKind kind;
  std::vector<TreeClass> trees;
  int m_index = 0;  // 1..4 when kind == M
};

Classification classify(const Signature& s);

// The four all-short signatures, the only M-signatures for any degree.
Signature m_signature(int degree, int index);  // index in 1..4

// Paper-style matrix notation: "|j;i|" tokens for trees with a short
// crossing chord (j-1,j+1), "[i,j;k,l]" for two crossing long chords;
// any labels not covered are completed with short chords.
std::string matrix_notation(const Signature& s);
Signature parse_matrix_notation(int degree, const std::string& text);

}  // namespace strata
