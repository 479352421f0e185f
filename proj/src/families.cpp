#include "chordbracket/families.hpp"

#include <stdexcept>

#include "chordbracket/bracket.hpp"

namespace chordbracket {

namespace {

void require_odd(int d) {
  if (d < 1 || d % 2 == 0)
    throw std::invalid_argument("odd family needs an odd d >= 1, got " + std::to_string(d));
}

void require_even(int d) {
  if (d < 4 || d % 2 != 0)
    throw std::invalid_argument("even family needs an even d >= 4, got " + std::to_string(d));
}

ChordDiagram stack_c1(const ChordDiagram &c) { return stack(named_diagram("C1"), c); }

// Recursive construction; assumes `span` is in the realizable set for d.
ChordDiagram build(int d, int span) {
  switch (d) {
  case 1:
    return named_diagram("C1");
  case 2:
    return span == 6 ? named_diagram("C2") : stack_c1(named_diagram("C1"));
  case 3:
    switch (span) {
    case 12:
      return family_odd(3);
    case 10:
      return named_diagram("C3");
    case 6:
      return stack_c1(named_diagram("C2"));
    default:
      return stack_c1(build(2, 0));
    }
  case 4:
    switch (span) {
    case 16:
      return family_even(4);
    case 14:
      return named_diagram("C4prime");
    case 8:
      return named_diagram("C4");
    default:
      return stack_c1(build(3, span));
    }
  default:
    break;
  }
  if (span == 4 * d)
    return d % 2 ? family_odd(d) : family_even(d);
  if (span == 4 * d - 2)
    return stack(named_diagram("C2"), d % 2 ? family_odd(d - 2) : family_even(d - 2));
  return stack_c1(build(d - 1, span));
}

bool known_realizable(int d, int span) {
  switch (d) {
  case 1:
    return span == 0;
  case 2:
    return span == 0 || span == 6;
  case 3:
    return span == 0 || span == 6 || span == 10 || span == 12;
  default:
    return span == 0 || (span >= 6 && span <= 4 * d);
  }
}

} // namespace

ChordDiagram family_odd(int d) {
  require_odd(d);
  std::vector<Chord> chords;
  for (int i = 1; i <= d; ++i)
    chords.push_back({i, i + d});
  return ChordDiagram(std::move(chords));
}

ChordDiagram family_even(int d) {
  require_even(d);
  std::vector<Chord> chords{{1, d}, {d + 1, 2 * d}};
  for (int i = 1; i <= d - 2; ++i)
    chords.push_back({2 * d - i, i + 1});
  return ChordDiagram(std::move(chords));
}

LaurentPoly family_odd_bracket(int d) {
  require_odd(d);
  LaurentPoly out;
  for (int i = 1; i <= d - 1; ++i)
    out.add_term(-3 * d - 2 + 4 * i, i % 2 == 1 ? 1 : -1);
  out.add_term(d + 2, -1);
  return out;
}

LaurentPoly family_even_bracket(int d) {
  require_even(d);
  LaurentPoly out;
  out.add_term(-3 * d + 4, 1);
  out.add_term(-3 * d + 8, -1);
  for (int i = 1; i <= d - 4; ++i)
    out.add_term(-3 * d + 8 + 4 * i, i % 2 == 1 ? 2 : -2);
  out.add_term(d - 4, 1);
  out.add_term(d, -1);
  out.add_term(d + 4, 1);
  return out;
}

const std::vector<std::string> &diagram_names() {
  static const std::vector<std::string> names{"C1", "C2", "C3", "C4", "C4prime", "remark44"};
  return names;
}

ChordDiagram named_diagram(const std::string &name) {
  if (name == "C1")
    return ChordDiagram({{1, 2}});
  if (name == "C2")
    return ChordDiagram({{1, 3}, {2, 4}});
  if (name == "C3")
    return ChordDiagram({{1, 5}, {2, 4}, {6, 3}});
  if (name == "C4")
    return ChordDiagram({{1, 4}, {2, 7}, {3, 5}, {6, 8}});
  if (name == "C4prime")
    return ChordDiagram({{1, 5}, {2, 4}, {3, 7}, {6, 8}});
  if (name == "remark44")
    return ChordDiagram({{1, 8}, {2, 5}, {3, 6}, {4, 7}});
  throw std::invalid_argument("unknown diagram name '" + name + "'");
}

std::optional<ChordDiagram> realize_span(int d, int span) {
  if (d < 1)
    throw std::invalid_argument("realize_span needs d >= 1");
  if (span % 2 != 0)
    throw std::invalid_argument("span must be even, got " + std::to_string(span));
  if (!known_realizable(d, span))
    return std::nullopt;

  ChordDiagram c = build(d, span);
  if (c.size() != d || bracket_span(c) != span)
    throw std::logic_error("construction for d=" + std::to_string(d) + ", span=" +
                           std::to_string(span) + " produced " + c.to_string());
  return c;
}

} // namespace chordbracket
