#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include "chordbracket/diagram.hpp"
#include "chordbracket/laurent.hpp"

namespace chordbracket {

/// Largest chord count accepted by the full state sum.
inline constexpr int kMaxBracketChords = 20;

class DiagramTooLarge : public std::domain_error {
public:
  explicit DiagramTooLarge(int d);
};

enum class Splice { A, B };

/**
 * A state assigns A or B to each chord. Bit k of the mask refers to the k-th
 * chord in canonical order; a set bit means B.
 */
class State {
public:
  State(int chord_count, std::uint32_t mask);

  static State all_a(int chord_count) { return State(chord_count, 0); }
  static State all_b(int chord_count);

  int size() const { return size_; }
  std::uint32_t mask() const { return mask_; }
  Splice at(int k) const { return (mask_ >> k) & 1u ? Splice::B : Splice::A; }

  int count_a() const { return size_ - count_b(); }
  int count_b() const;

private:
  int size_;
  std::uint32_t mask_;
};

/// The two transpositions a chord contributes to the splice graph on letters
/// {0, ..., 2d}. A pair (x, x) is a fixed point and adds no edge.
struct SplicePairs {
  std::array<std::pair<int, int>, 2> pairs;

  friend bool operator==(const SplicePairs &, const SplicePairs &) = default;
};

SplicePairs splice_pairs(const Chord &chord, Splice choice);

/// Number of connected components of the splice graph of `s` (union-find).
int gamma(const ChordDiagram &c, const State &s);

/// A^(#A - #B) * (-A^2 - A^-2)^(gamma - 1).
LaurentPoly state_term(const ChordDiagram &c, const State &s);

/// Sum of state_term over all 2^d states. Throws DiagramTooLarge when d > 20.
LaurentPoly bracket(const ChordDiagram &c);

/// (-A)^(-3 w(C)) times the bracket.
LaurentPoly kauffman_jones(const ChordDiagram &c);

/// Component counts of the all-A and all-B states.
struct MuExtremes {
  int all_a = 0;
  int all_b = 0;
  int sum() const { return all_a + all_b; }
};

MuExtremes mu_extremes(const ChordDiagram &c);

/// Span of the bracket; nullopt if the bracket is the zero polynomial.
std::optional<int> bracket_span(const ChordDiagram &c);

/// ceil(span / 4); 0 when the span is undefined.
int min_self_intersection_lower_bound(const ChordDiagram &c);

} // namespace chordbracket
