#include "chordbracket/bracket.hpp"

#include <bit>
#include <string>
#include <vector>

namespace chordbracket {

namespace {

constexpr int kMaxLetters = 2 * kMaxBracketChords + 1;

// Union-find over the letters {0, ..., 2d}; tracks the component count directly.
class LetterForest {
public:
  explicit LetterForest(int letters) : components_(letters) {
    for (int v = 0; v < letters; ++v)
      parent_[v] = static_cast<std::uint8_t>(v);
  }

  void join(int u, int v) {
    if (u == v)
      return;
    u = find(u);
    v = find(v);
    if (u == v)
      return;
    parent_[u] = static_cast<std::uint8_t>(v);
    --components_;
  }

  int components() const { return components_; }

private:
  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  std::array<std::uint8_t, kMaxLetters> parent_{};
  int components_;
};

// Edges of both splice choices for every chord, indexed [chord][choice].
std::vector<std::array<SplicePairs, 2>> splice_table(const ChordDiagram &c) {
  std::vector<std::array<SplicePairs, 2>> table;
  table.reserve(c.size());
  for (const Chord &chord : c.chords())
    table.push_back({splice_pairs(chord, Splice::A), splice_pairs(chord, Splice::B)});
  return table;
}

int components(const std::vector<std::array<SplicePairs, 2>> &table, std::uint32_t mask) {
  LetterForest forest(2 * static_cast<int>(table.size()) + 1);
  for (std::size_t k = 0; k < table.size(); ++k) {
    const SplicePairs &sp = table[k][(mask >> k) & 1u];
    for (const auto &[u, v] : sp.pairs)
      forest.join(u, v);
  }
  return forest.components();
}

// delta^0 .. delta^(2d) for the largest allowed d.
const std::vector<LaurentPoly> &cached_delta_powers() {
  static const std::vector<LaurentPoly> powers = [] {
    std::vector<LaurentPoly> out;
    out.reserve(kMaxLetters);
    out.emplace_back(1);
    for (int k = 1; k < kMaxLetters; ++k)
      out.push_back(out.back() * delta_pow(1));
    return out;
  }();
  return powers;
}

void check_state(const ChordDiagram &c, const State &s) {
  if (s.size() != c.size())
    throw std::invalid_argument("state has " + std::to_string(s.size()) +
                                " entries but the diagram has " + std::to_string(c.size()) +
                                " chords");
}

} // namespace

DiagramTooLarge::DiagramTooLarge(int d)
    : std::domain_error("diagram has " + std::to_string(d) + " chords; the state sum is capped at " +
                        std::to_string(kMaxBracketChords)) {}

State::State(int chord_count, std::uint32_t mask) : size_(chord_count), mask_(mask) {
  if (chord_count < 0 || chord_count > 31)
    throw std::out_of_range("state size outside 0..31");
  if ((static_cast<std::uint64_t>(mask) >> chord_count) != 0)
    throw std::out_of_range("state mask has bits beyond the chord count");
}

State State::all_b(int chord_count) {
  return State(chord_count, chord_count == 0 ? 0u : (~0u >> (32 - chord_count)));
}

int State::count_b() const { return std::popcount(mask_); }

SplicePairs splice_pairs(const Chord &chord, Splice choice) {
  const auto [i, j] = chord;
  const bool crossing_type = (choice == Splice::A) == chord.positive();
  if (crossing_type)
    return {{{{i, j - 1}, {i - 1, j}}}};
  return {{{{i, j}, {i - 1, j - 1}}}};
}

int gamma(const ChordDiagram &c, const State &s) {
  check_state(c, s);
  if (c.size() > kMaxBracketChords)
    throw DiagramTooLarge(c.size());
  return components(splice_table(c), s.mask());
}

LaurentPoly state_term(const ChordDiagram &c, const State &s) {
  const int g = gamma(c, s);
  return LaurentPoly::monomial(1, s.count_a() - s.count_b()) * delta_pow(g - 1);
}

LaurentPoly bracket(const ChordDiagram &c) {
  const int d = c.size();
  if (d > kMaxBracketChords)
    throw DiagramTooLarge(d);
  if (d == 0)
    return LaurentPoly(1);

  // Every state with the same (#B, gamma) contributes the same term, so tally
  // those pairs first and expand the delta powers once per pair.
  const int letters = 2 * d + 1;
  std::vector<std::uint64_t> tally(static_cast<std::size_t>(d + 1) * (letters + 1), 0);
  const auto table = splice_table(c);
  const std::uint32_t states = 1u << d;
  for (std::uint32_t mask = 0; mask < states; ++mask) {
    const int b = std::popcount(mask);
    ++tally[static_cast<std::size_t>(b) * (letters + 1) + components(table, mask)];
  }

  const auto &delta_powers = cached_delta_powers();
  LaurentPoly out;
  for (int b = 0; b <= d; ++b) {
    for (int g = 1; g <= letters; ++g) {
      const std::uint64_t n = tally[static_cast<std::size_t>(b) * (letters + 1) + g];
      if (n == 0)
        continue;
      const int shift = d - 2 * b;
      for (const auto &[exp, coeff] : delta_powers[g - 1].terms())
        out.add_term(exp + shift, checked::mul(static_cast<std::int64_t>(n), coeff));
    }
  }
  return out;
}

LaurentPoly kauffman_jones(const ChordDiagram &c) {
  return neg_a_pow(-3 * c.writhe()) * bracket(c);
}

MuExtremes mu_extremes(const ChordDiagram &c) {
  if (c.size() > kMaxBracketChords)
    throw DiagramTooLarge(c.size());
  // Runs in the census inner loop, so no splice table is built here.
  LetterForest all_a(2 * c.size() + 1), all_b(2 * c.size() + 1);
  for (const Chord &chord : c.chords()) {
    for (const auto &[u, v] : splice_pairs(chord, Splice::A).pairs)
      all_a.join(u, v);
    for (const auto &[u, v] : splice_pairs(chord, Splice::B).pairs)
      all_b.join(u, v);
  }
  return {all_a.components(), all_b.components()};
}

std::optional<int> bracket_span(const ChordDiagram &c) { return bracket(c).span(); }

int min_self_intersection_lower_bound(const ChordDiagram &c) {
  const auto span = bracket_span(c);
  return span ? (*span + 3) / 4 : 0;
}

} // namespace chordbracket
