#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strata/signature.hpp"

using namespace strata;

namespace {

SignatureData d2_generic() {
  SignatureData d;
  d.degree = 2;
  d.blue = {Chord(0, 2), Chord(4, 6)};
  d.red = {Chord(1, 3), Chord(5, 7)};
  return d;
}

}  // namespace

TEST_CASE("valid generic d=2 signature") {
  auto s = Signature::make(d2_generic());
  CHECK(s.generic());
  CHECK(s.codimension() == 0);
  auto cls = classify(s);
  CHECK(cls.kind == SignatureKind::M);
  CHECK(cls.m_index == 2);
}

TEST_CASE("codim 1 pencil signature validates") {
  SignatureData d;
  d.degree = 2;
  d.blue = {Chord(0, 2), Chord(4, 6)};
  d.red = {Chord(1, 5), Chord(3, 7)};
  d.pencils = {{Chord(1, 5), Chord(3, 7)}};
  auto s = Signature::make(std::move(d));
  CHECK(s.codimension() == 1);
  CHECK_FALSE(s.generic());
}

TEST_CASE("undeclared same-color crossing is rejected") {
  SignatureData d;
  d.degree = 2;
  d.blue = {Chord(0, 4), Chord(2, 6)};
  d.red = {Chord(1, 3), Chord(5, 7)};
  std::string why;
  CHECK_FALSE(Signature::try_make(std::move(d), &why).has_value());
  CHECK(why.find("undeclared") != std::string::npos);
}

TEST_CASE("parity violation is rejected with the offending chord") {
  SignatureData d;
  d.degree = 2;
  d.blue = {Chord(0, 3), Chord(4, 6)};  // 3 is odd
  d.red = {Chord(1, 2), Chord(5, 7)};
  std::string why;
  CHECK_FALSE(Signature::try_make(std::move(d), &why).has_value());
  CHECK(why.find("parity") != std::string::npos);
}

TEST_CASE("wrong crossing count is rejected") {
  // Gluing both colors at once forces four crossings instead of two.
  SignatureData d;
  d.degree = 2;
  d.blue = {Chord(0, 4), Chord(2, 6)};
  d.red = {Chord(1, 5), Chord(3, 7)};
  d.pencils = {{Chord(0, 4), Chord(2, 6)}, {Chord(1, 5), Chord(3, 7)}};
  std::string why;
  CHECK_FALSE(Signature::try_make(std::move(d), &why).has_value());
  CHECK(why.find("crossings") != std::string::npos);
}

TEST_CASE("codimension sums local indices") {
  // d=3 triple pencil: one vertex of 3 chords, index 2*3-3 = 3.
  SignatureData d;
  d.degree = 3;
  d.blue = {Chord(0, 2), Chord(4, 6), Chord(8, 10)};
  d.red = {Chord(1, 7), Chord(3, 9), Chord(5, 11)};
  d.pencils = {{Chord(1, 7), Chord(3, 9), Chord(5, 11)}};
  CHECK(Signature::make(std::move(d)).codimension() == 3);

  // Two double points on the chord (1,7): codimension 2.
  SignatureData e;
  e.degree = 3;
  e.blue = {Chord(0, 2), Chord(4, 10), Chord(6, 8)};
  e.red = {Chord(1, 7), Chord(3, 11), Chord(5, 9)};
  e.pencils = {{Chord(1, 7), Chord(5, 9)}, {Chord(1, 7), Chord(3, 11)}};
  CHECK(Signature::make(std::move(e)).codimension() == 2);
}

TEST_CASE("forest check rejects a four-chord cycle") {
  // Four chords crossing pairwise in a 4-cycle of distinct points.
  std::vector<Chord> chords{Chord(0, 6), Chord(4, 10), Chord(8, 14), Chord(2, 12)};
  std::vector<std::vector<Chord>> points{{Chord(0, 6), Chord(4, 10)},
                                         {Chord(4, 10), Chord(8, 14)},
                                         {Chord(8, 14), Chord(2, 12)},
                                         {Chord(2, 12), Chord(0, 6)}};
  CHECK_FALSE(forest_check(16, chords, points));

  // A star of three chords through one vertex is a tree.
  std::vector<Chord> star{Chord(1, 7), Chord(3, 9), Chord(5, 11)};
  CHECK(forest_check(12, star, {{Chord(1, 7), Chord(3, 9), Chord(5, 11)}}));

  // A non-crossing matching is a forest.
  CHECK(forest_check(8, {Chord(0, 2), Chord(4, 6)}, {}));
}

TEST_CASE("shift by 4d is the identity and odd shifts swap colors") {
  auto s = Signature::make(d2_generic());
  CHECK(s.shifted(8) == s);
  auto t = s.shifted(1);
  CHECK(t.codimension() == 0);
  CHECK(t.chords(Color::Blue) != s.chords(Color::Blue));
}

TEST_CASE("the four M-signatures form one shift orbit of period 4") {
  for (int d = 2; d <= 5; ++d) {
    auto m2 = m_signature(d, 2);
    CHECK(classify(m2).m_index == 2);
    CHECK(m2.shifted(1) == m_signature(d, 1));
    CHECK(m_signature(d, 1).shifted(1) == m_signature(d, 3));
    CHECK(m_signature(d, 3).shifted(1) == m_signature(d, 4));
    CHECK(m_signature(d, 4).shifted(1) == m2);
    CHECK(m2.shifted(4) == m2);
  }
}

TEST_CASE("reflection is an involution preserving codimension") {
  auto s = Signature::make(d2_generic());
  for (int axis = 0; axis < 8; ++axis) {
    auto r = s.reflected(axis);
    CHECK(r.codimension() == 0);
    CHECK(r.reflected(axis) == s);
  }
  auto m1 = m_signature(3, 1);
  auto r = m1.reflected(4);
  CHECK(classify(r).m_index >= 1);  // reflections permute the M-signatures
}

TEST_CASE("classification of the paper's d=4 examples") {
  // All-short blue/red: the M-signature M2.
  auto m = m_signature(4, 2);
  CHECK(classify(m).kind == SignatureKind::M);

  // One long blue diagonal (0,6): |6;0|, an F-signature.
  auto f = parse_matrix_notation(4, "|6;0|");
  auto fc = classify(f);
  CHECK(fc.kind == SignatureKind::F);
  int f_trees = 0;
  for (auto& t : fc.trees) f_trees += t.kind == TreeKind::F;
  CHECK(f_trees == 1);
  CHECK(f.chords(Color::Blue)[0] == Chord(0, 6));

  // Crossing longs (0,6) blue and (5,15) red: an S-signature.
  auto s = parse_matrix_notation(4, "[5,15;0,6]");
  CHECK(classify(s).kind == SignatureKind::S);
}

TEST_CASE("matrix notation round-trips") {
  auto f = parse_matrix_notation(4, "|6;0|");
  CHECK(matrix_notation(f).find("|6;0|") != std::string::npos);
  auto m2 = m_signature(4, 2);
  CHECK(matrix_notation(m2) == "|1;3||5;7||9;11||13;15|");
  // Parsing the printed form returns the same signature.
  CHECK(parse_matrix_notation(4, matrix_notation(f)) == f);
  CHECK(parse_matrix_notation(4, matrix_notation(m2)) == m2);
}

TEST_CASE("canonical key is stable under re-validation") {
  auto s = Signature::make(d2_generic());
  auto again = Signature::make(s.data());
  CHECK(again.key() == s.key());
}
