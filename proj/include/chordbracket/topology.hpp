#pragma once

#include <stdexcept>

#include "chordbracket/diagram.hpp"

namespace chordbracket {

/// Invariants of the thickened curve neighborhood with a half-twisted band
/// pair inserted at every double point.
struct SurfaceInvariants {
  bool orientable = false;
  int euler_characteristic = 0;
  int boundary_components = 0;
  /// Orientable genus, or the crosscap number when not orientable.
  int genus = 0;

  friend bool operator==(const SurfaceInvariants &, const SurfaceInvariants &) = default;
};

class EmptyDiagramError : public std::domain_error {
public:
  EmptyDiagramError() : std::domain_error("surface invariants need at least one chord") {}
};

/// Orientability from the chord parities, boundary count from the extremal
/// states, Euler characteristic 1 - d, genus solved from the Euler relation.
/// Throws EmptyDiagramError for d = 0 and std::logic_error if the solved
/// genus is not a valid nonnegative integer.
SurfaceInvariants neighborhood_invariants(const ChordDiagram &c);

/// JSON object with orientable, euler_characteristic, boundary_components and
/// genus (or crosscaps) fields.
std::string to_json(const SurfaceInvariants &inv);
std::string to_string(const SurfaceInvariants &inv);

} // namespace chordbracket
