#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chordbracket {

/// An ordered pair of labels. Positive when first < second.
struct Chord {
  int first = 0;
  int second = 0;

  bool positive() const { return first < second; }
  int lo() const { return first < second ? first : second; }
  int hi() const { return first < second ? second : first; }
  Chord reversed() const { return {second, first}; }

  friend bool operator==(const Chord &, const Chord &) = default;
};

/// Thrown when a pair list does not describe a valid oriented linear chord diagram.
class DiagramError : public std::invalid_argument {
public:
  enum class Kind { DuplicateLabel, LabelOutOfRange, SelfPairedChord, Malformed };

  DiagramError(Kind kind, std::string message, Chord offending = {});

  Kind kind() const { return kind_; }
  const Chord &offending() const { return offending_; }

private:
  Kind kind_;
  Chord offending_;
};

class DiagramEnumerator;

/**
 * Oriented linear chord diagram: d ordered pairs partitioning {1, ..., 2d}.
 *
 * Chords are kept sorted by their smaller endpoint, so two diagrams are equal
 * exactly when they have the same chord set. Bit k of a state refers to
 * chords()[k].
 */
class ChordDiagram {
public:
  /// The empty diagram.
  ChordDiagram() = default;

  /// Validates and canonicalizes. Throws DiagramError.
  explicit ChordDiagram(std::vector<Chord> chords);

  int size() const { return static_cast<int>(chords_.size()); }
  bool empty() const { return chords_.empty(); }
  std::span<const Chord> chords() const { return chords_; }

  /// Positive chords minus negative chords.
  int writhe() const;

  /// True iff every chord joins an odd label to an even one.
  bool parity_condition() const;

  /// Canonical text form, e.g. "(1,3)(2,4)"; the empty diagram is "empty".
  std::string to_string() const;

  /// {"chords": [[i,j],...]}
  std::string to_json() const;

  friend bool operator==(const ChordDiagram &, const ChordDiagram &) = default;

private:
  friend class DiagramEnumerator;
  struct Unchecked {};
  ChordDiagram(Unchecked, std::vector<Chord> chords) : chords_(std::move(chords)) {}

  std::vector<Chord> chords_;
};

/// C # D: D's labels shifted past C's.
ChordDiagram stack(const ChordDiagram &c, const ChordDiagram &d);

/// Swaps the endpoints of every chord.
ChordDiagram reverse(const ChordDiagram &c);

/// Inserts a monogon on fresh labels (ell+1, ell+2); labels above ell move up by two.
/// Requires 0 <= ell <= 2d.
ChordDiagram insert_monogon(const ChordDiagram &c, int ell, bool positive);

/// Wraps the diagram in a new outermost chord (1, 2d+2), or (2d+2, 1) when negative.
ChordDiagram insert_monogon_wrap(const ChordDiagram &c, bool positive);

/// Parses the pair-list grammar: `empty` or `(i,j)` with optional separating commas.
ChordDiagram parse_pairs(const std::string &text);

/// Parses {"chords": [[i,j], ...]}.
ChordDiagram parse_json(const std::string &text);

/// Parses a signed Gauss word such as "+a +b a b". Each label appears twice and
/// exactly one of its occurrences carries a '+' or '-' prefix.
ChordDiagram parse_gauss(const std::string &word);

} // namespace chordbracket
