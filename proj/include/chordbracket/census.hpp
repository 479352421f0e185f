#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "chordbracket/diagram.hpp"

namespace chordbracket {

// Enumeration caps. Full enumeration yields (2d)!/d! diagrams, the parity
// generator d! * 2^d.
inline constexpr int kMaxFullEnumeration = 7;
inline constexpr int kMaxParityEnumeration = 12;
inline constexpr int kMaxFullMaxSpan = 6;
inline constexpr int kMaxPrunedMaxSpan = 9;

/// Thrown for a chord count outside an operation's supported range.
class RangeError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

/**
 * Depth-first generator of oriented linear chord diagrams with d chords.
 *
 * The smallest free label is always paired next, with partners tried in
 * ascending order and the positive orientation before the negative one, so
 * diagrams come out already canonical and in a fixed order. With
 * `parity_only` set, only odd/even label pairings are produced.
 *
 * The first chord choice splits the stream into independent parts; part(k)
 * visits the k-th of them, which is how the census spreads work over threads.
 */
class DiagramEnumerator {
public:
  using Visitor = std::function<void(const ChordDiagram &)>;

  DiagramEnumerator(int d, bool parity_only);

  int chord_count() const { return d_; }
  int part_count() const;

  void for_each(const Visitor &visit) const;
  void for_each_in_part(int part, const Visitor &visit) const;

  /// (2d)!/d! or d! * 2^d.
  std::uint64_t expected_count() const;

private:
  struct Cursor;
  void descend(Cursor &cursor, const Visitor &visit) const;

  int d_;
  bool parity_only_;
  std::vector<Chord> first_choices_;
};

/// Visits every diagram with d chords, 0 <= d <= 7.
void enumerate_all(int d, const DiagramEnumerator::Visitor &visit);

/// Visits every diagram satisfying the parity condition, 1 <= d <= 12.
void enumerate_parity(int d, const DiagramEnumerator::Visitor &visit);

enum class CensusMode { Full, Pruned };

std::string to_string(CensusMode mode);

/// 0 selects the machine's hardware concurrency.
struct CensusOptions {
  unsigned threads = 0;
};

struct SpanCensus {
  int chord_count = 0;
  CensusMode mode = CensusMode::Full;
  std::map<int, std::uint64_t> counts;
  std::uint64_t undefined = 0;
  std::uint64_t total = 0;

  /// {"d": d, "total": n, "counts": {"0": n0, ...}, "mode": "full"}; keys in
  /// ascending numeric order, with an "undefined" key only when nonzero.
  std::string to_json() const;
  std::string to_string() const;
};

/// Span histogram over all diagrams with d chords, 1 <= d <= 7.
SpanCensus span_census(int d, const CensusOptions &options = {});

/// Diagrams with span exactly 4d, in enumeration order. Full mode checks every
/// diagram (d <= 6); pruned mode only brackets parity diagrams whose extremal
/// states satisfy mu(s_A) + mu(s_B) = d + 2 (d <= 9). 2 <= d in both modes.
std::vector<ChordDiagram> max_span_diagrams(int d, CensusMode mode,
                                            const CensusOptions &options = {});

std::uint64_t count_max_span(int d, CensusMode mode, const CensusOptions &options = {});

/// Spans attained by some d-chord diagram, 1 <= d <= 7.
std::set<int> realizable_spans(int d, const CensusOptions &options = {});

} // namespace chordbracket
