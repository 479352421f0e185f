#include <random>

#include "chordbracket/diagram.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chordbracket;

namespace {

ChordDiagram D(std::vector<Chord> chords) { return ChordDiagram(std::move(chords)); }

DiagramError::Kind error_kind(const std::vector<Chord> &chords) {
  try {
    ChordDiagram c(chords);
  } catch (const DiagramError &e) {
    return e.kind();
  }
  FAIL("expected DiagramError");
  return DiagramError::Kind::Malformed;
}

const ChordDiagram C1 = D({{1, 2}});
const ChordDiagram C2 = D({{1, 3}, {2, 4}});
const ChordDiagram C3 = D({{1, 5}, {2, 4}, {6, 3}});

} // namespace

TEST_SUITE("diagram") {

TEST_CASE("construction validates and canonicalizes") {
  CHECK(C2.size() == 2);
  CHECK(ChordDiagram().size() == 0);
  CHECK(D({{6, 3}, {2, 4}, {1, 5}}) == C3);
  CHECK(C3.chords()[2] == Chord{6, 3});

  CHECK(error_kind({{1, 2}, {2, 3}}) == DiagramError::Kind::DuplicateLabel);
  CHECK(error_kind({{1, 5}}) == DiagramError::Kind::LabelOutOfRange);
  CHECK(error_kind({{0, 1}}) == DiagramError::Kind::LabelOutOfRange);
  CHECK(error_kind({{1, 1}, {2, 3}}) == DiagramError::Kind::SelfPairedChord);
  try {
    D({{1, 2}, {2, 3}});
  } catch (const DiagramError &e) {
    CHECK(e.offending() == Chord{2, 3});
    CHECK(std::string(e.what()).find("(2,3)") != std::string::npos);
  }
}

TEST_CASE("writhe") {
  CHECK(C2.writhe() == 2);
  CHECK(C3.writhe() == 1);
  CHECK(ChordDiagram().writhe() == 0);
}

TEST_CASE("stacking shifts the second diagram") {
  CHECK(stack(C1, C1) == D({{1, 2}, {3, 4}}));
  CHECK(stack(ChordDiagram(), C3) == C3);
  CHECK(stack(C3, ChordDiagram()) == C3);
  CHECK(stack(C2, C1) == D({{1, 3}, {2, 4}, {5, 6}}));
}

TEST_CASE("reversal") {
  CHECK(reverse(C1) == D({{2, 1}}));
  CHECK(reverse(reverse(C3)) == C3);
  CHECK(reverse(C3) == D({{5, 1}, {4, 2}, {3, 6}}));
}

TEST_CASE("monogon insertion") {
  CHECK(insert_monogon(ChordDiagram(), 0, true) == C1);
  CHECK(insert_monogon(C1, 2, true) == D({{1, 2}, {3, 4}}));
  CHECK(insert_monogon(C1, 1, false) == D({{1, 4}, {3, 2}}));
  CHECK(insert_monogon(C1, 0, true) == D({{1, 2}, {3, 4}}));
  CHECK_THROWS_AS(insert_monogon(C1, 3, true), std::out_of_range);
  CHECK_THROWS_AS(insert_monogon(C1, -1, true), std::out_of_range);
}

TEST_CASE("wrap insertion") {
  CHECK(insert_monogon_wrap(ChordDiagram(), true) == C1);
  CHECK(insert_monogon_wrap(C1, true) == D({{2, 3}, {1, 4}}));
  CHECK(insert_monogon_wrap(C1, false) == D({{2, 3}, {4, 1}}));
}

TEST_CASE("parity condition") {
  CHECK(C1.parity_condition());
  CHECK_FALSE(C2.parity_condition());
  CHECK(D({{1, 8}, {2, 5}, {3, 6}, {4, 7}}).parity_condition());
  CHECK(ChordDiagram().parity_condition());
}

TEST_CASE("pair-list text") {
  CHECK(parse_pairs("(1,3)(2,4)") == C2);
  CHECK(parse_pairs(" (1, 3), (2 ,4) ") == C2);
  CHECK(parse_pairs("empty").empty());
  CHECK(C3.to_string() == "(1,5)(2,4)(6,3)");
  CHECK(ChordDiagram().to_string() == "empty");
  CHECK_THROWS_AS(parse_pairs(""), DiagramError);
  CHECK_THROWS_AS(parse_pairs("(1,3"), DiagramError);
  CHECK_THROWS_AS(parse_pairs("(1;3)"), DiagramError);
  CHECK_THROWS_AS(parse_pairs("(1,3),,(2,4)"), DiagramError);
  CHECK_THROWS_AS(parse_pairs("(1,2)(2,3)"), DiagramError);
}

TEST_CASE("json") {
  CHECK(C2.to_json() == R"({"chords": [[1,3],[2,4]]})");
  CHECK(ChordDiagram().to_json() == R"({"chords": []})");
  CHECK(parse_json(R"({"chords": [[6,3],[1,5],[2,4]]})") == C3);
  CHECK_THROWS_AS(parse_json("{"), DiagramError);
  CHECK_THROWS_AS(parse_json(R"({"chords": [[1]]})"), DiagramError);
  CHECK_THROWS_AS(parse_json(R"([[1,2]])"), DiagramError);
}

TEST_CASE("gauss words") {
  CHECK(parse_gauss("+a +b a b") == C2);
  CHECK(parse_gauss("+a a") == C1);
  CHECK(parse_gauss("+a +b -c b a c") == C3);
  CHECK(parse_gauss("a +b +a b") == C2);
  CHECK(parse_gauss("").empty());
  CHECK_THROWS_AS(parse_gauss("+a a a"), DiagramError);
  CHECK_THROWS_AS(parse_gauss("a a"), DiagramError);
  CHECK_THROWS_AS(parse_gauss("+a -a"), DiagramError);
  CHECK_THROWS_AS(parse_gauss("+a b"), DiagramError);
  CHECK_THROWS_AS(parse_gauss("+ a"), DiagramError);
}

TEST_CASE("random diagrams: round trips and algebraic invariants") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const auto c = oracle::random_diagram(rng, 1 + trial % 7);
    const auto e = oracle::random_diagram(rng, trial % 5);
    CHECK(parse_pairs(c.to_string()) == c);
    CHECK(parse_json(c.to_json()) == c);

    CHECK(stack(c, e).writhe() == c.writhe() + e.writhe());
    CHECK(reverse(c).writhe() == -c.writhe());
    CHECK(stack(c, e).parity_condition() == (c.parity_condition() && e.parity_condition()));
    for (int ell = 0; ell <= 2 * c.size(); ++ell) {
      CHECK(insert_monogon(c, ell, true).writhe() == c.writhe() + 1);
      CHECK(insert_monogon(c, ell, false).writhe() == c.writhe() - 1);
    }
    CHECK(insert_monogon_wrap(c, true).writhe() == c.writhe() + 1);
    CHECK(insert_monogon_wrap(c, false).writhe() == c.writhe() - 1);
  }
}

} // TEST_SUITE
