#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chordbracket/diagram.hpp"
#include "chordbracket/laurent.hpp"

namespace chordbracket {

/// C(d) = {(i, i+d)} for odd d >= 1.
ChordDiagram family_odd(int d);

/// C(d) = {(1,d), (d+1,2d)} plus {(2d-i, i+1)} for i = 1..d-2, even d >= 4.
ChordDiagram family_even(int d);

/// Closed-form bracket of family_odd(d), built directly from the sum formula.
LaurentPoly family_odd_bracket(int d);

/// Closed-form bracket of family_even(d).
LaurentPoly family_even_bracket(int d);

/// Names accepted by named_diagram().
const std::vector<std::string> &diagram_names();

/// C1, C2, C3, C4, C4prime or remark44. Throws std::invalid_argument otherwise.
ChordDiagram named_diagram(const std::string &name);

/// Builds a d-chord diagram whose bracket span is exactly `span`, or returns
/// nullopt when `span` is outside the set known to be realizable for that d:
/// {0}, {0,6}, {0,6,10,12} for d = 1, 2, 3 and {0,6,8,...,4d} for d >= 4.
/// Throws std::invalid_argument for odd `span` or d < 1.
std::optional<ChordDiagram> realize_span(int d, int span);

} // namespace chordbracket
