#include <set>

#include "chordbracket/bracket.hpp"
#include "chordbracket/census.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chordbracket;

namespace {

std::vector<ChordDiagram> collect(int d, bool parity) {
  std::vector<ChordDiagram> out;
  auto keep = [&](const ChordDiagram &c) { out.push_back(c); };
  if (parity)
    enumerate_parity(d, keep);
  else
    enumerate_all(d, keep);
  return out;
}

std::vector<oracle::Pair> as_pairs(const ChordDiagram &c) { return oracle::pairs_of(c); }

} // namespace

TEST_SUITE("census") {

TEST_CASE("small enumerations") {
  const auto one = collect(1, false);
  REQUIRE(one.size() == 2);
  CHECK(one[0] == ChordDiagram({{1, 2}}));
  CHECK(one[1] == ChordDiagram({{2, 1}}));
  CHECK(collect(0, false).size() == 1);
  CHECK(collect(2, false).size() == 12);
  CHECK(collect(3, false).size() == 120);
  CHECK(collect(1, true).size() == 2);
  CHECK(collect(2, true).size() == 8);
  CHECK(collect(3, true).size() == 48);
}

TEST_CASE("enumeration matches the brute-force permutation oracle") {
  for (int d = 1; d <= 4; ++d) {
    CAPTURE(d);
    const auto listed = collect(d, false);
    std::set<std::vector<oracle::Pair>> seen;
    for (const auto &c : listed)
      seen.insert(as_pairs(c));
    CHECK(seen.size() == listed.size());
    CHECK(seen == oracle::brute_force_diagrams(d));
    CHECK(listed.size() == DiagramEnumerator(d, false).expected_count());

    const auto parity = collect(d, true);
    CHECK(parity.size() == DiagramEnumerator(d, true).expected_count());
    std::set<std::vector<oracle::Pair>> parity_set;
    for (const auto &c : parity) {
      CHECK(c.parity_condition());
      CHECK(seen.count(as_pairs(c)) == 1);
      parity_set.insert(as_pairs(c));
    }
    CHECK(parity_set.size() == parity.size());
    std::size_t parity_in_full = 0;
    for (const auto &c : listed)
      parity_in_full += c.parity_condition();
    CHECK(parity_in_full == parity.size());
  }
}

TEST_CASE("enumeration order is deterministic and parts cover the stream") {
  const DiagramEnumerator gen(4, false);
  std::vector<ChordDiagram> by_parts;
  for (int part = 0; part < gen.part_count(); ++part)
    gen.for_each_in_part(part, [&](const ChordDiagram &c) { by_parts.push_back(c); });
  CHECK(by_parts == collect(4, false));
  CHECK(gen.part_count() == 14);
  CHECK_THROWS_AS(gen.for_each_in_part(14, [](const ChordDiagram &) {}), RangeError);
}

TEST_CASE("range checks") {
  auto noop = [](const ChordDiagram &) {};
  CHECK_THROWS_AS(enumerate_all(8, noop), RangeError);
  CHECK_THROWS_AS(enumerate_all(-1, noop), RangeError);
  CHECK_THROWS_AS(enumerate_parity(0, noop), RangeError);
  CHECK_THROWS_AS(enumerate_parity(13, noop), RangeError);
  CHECK_THROWS_AS(span_census(0), RangeError);
  CHECK_THROWS_AS(span_census(8), RangeError);
  CHECK_THROWS_AS(count_max_span(7, CensusMode::Full), RangeError);
  CHECK_THROWS_AS(count_max_span(10, CensusMode::Pruned), RangeError);
  CHECK_THROWS_AS(count_max_span(1, CensusMode::Pruned), RangeError);
  CHECK_THROWS_AS(realizable_spans(8), RangeError);
}

TEST_CASE("span census") {
  const auto c1 = span_census(1);
  CHECK(c1.counts == std::map<int, std::uint64_t>{{0, 2}});
  const auto c2 = span_census(2);
  CHECK(c2.total == 12);
  CHECK(realizable_spans(2) == std::set<int>{0, 6});
  CHECK(realizable_spans(3) == std::set<int>{0, 6, 10, 12});

  // Histograms frozen from an independent brute-force computation
  // (permutation enumeration plus a separate state-sum implementation).
  CHECK(c2.counts == std::map<int, std::uint64_t>{{0, 10}, {6, 2}});
  CHECK(span_census(3).counts == std::map<int, std::uint64_t>{{0, 82}, {6, 30}, {10, 6}, {12, 2}});
  CHECK(span_census(4).counts == std::map<int, std::uint64_t>{
                                     {0, 886}, {6, 464}, {8, 32}, {10, 208}, {12, 68}, {14, 18}, {16, 4}});

  for (int d = 1; d <= 5; ++d) {
    const auto census = span_census(d);
    std::uint64_t sum = census.undefined;
    for (const auto &[span, n] : census.counts) {
      CHECK(span % 2 == 0);
      CHECK(span <= 4 * d);
      sum += n;
    }
    CHECK(sum == census.total);
    CHECK(census.total == DiagramEnumerator(d, false).expected_count());
    CHECK(census.undefined == 0);
  }
}

TEST_CASE("census agrees with the brute-force oracle at d = 3") {
  std::map<int, std::uint64_t> histogram;
  for (const auto &pairs : oracle::brute_force_diagrams(3)) {
    const auto b = oracle::bracket(pairs);
    ++histogram[b.rbegin()->first - b.begin()->first];
  }
  CHECK(histogram == span_census(3).counts);
}

TEST_CASE("census json") {
  CHECK(span_census(2).to_json() == R"({"d": 2, "total": 12, "counts": {"0": 10, "6": 2}, "mode": "full"})");
  SpanCensus synthetic;
  synthetic.chord_count = 3;
  synthetic.counts = {{6, 1}, {10, 2}};
  synthetic.undefined = 1;
  synthetic.total = 4;
  CHECK(synthetic.to_json() ==
        R"({"d": 3, "total": 4, "counts": {"6": 1, "10": 2, "undefined": 1}, "mode": "full"})");
}

TEST_CASE("maximal-span counts: full and pruned agree") {
  const std::uint64_t expected[] = {0, 0, 0, 2, 4, 12};
  for (int d = 2; d <= 5; ++d) {
    CAPTURE(d);
    const auto full = max_span_diagrams(d, CensusMode::Full);
    const auto pruned = max_span_diagrams(d, CensusMode::Pruned);
    CHECK(full.size() == expected[d]);
    CHECK(pruned.size() == expected[d]);
    CHECK(full == pruned);
    for (const auto &c : pruned) {
      CHECK(c.parity_condition());
      CHECK(mu_extremes(c).sum() == d + 2);
      // Reversal maps the set to itself without fixed points.
      const auto r = reverse(c);
      CHECK(r != c);
      CHECK(std::find(pruned.begin(), pruned.end(), r) != pruned.end());
    }
  }
}

TEST_CASE("thread count does not change results") {
  const auto one = span_census(4, {1});
  const auto four = span_census(4, {4});
  CHECK(one.to_json() == four.to_json());
  CHECK(max_span_diagrams(5, CensusMode::Pruned, {1}) ==
        max_span_diagrams(5, CensusMode::Pruned, {3}));
}

} // TEST_SUITE
