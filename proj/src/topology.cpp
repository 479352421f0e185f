#include "chordbracket/topology.hpp"

#include <string>

#include "chordbracket/bracket.hpp"

namespace chordbracket {

SurfaceInvariants neighborhood_invariants(const ChordDiagram &c) {
  if (c.empty())
    throw EmptyDiagramError();

  SurfaceInvariants inv;
  inv.orientable = c.parity_condition();
  inv.euler_characteristic = 1 - c.size();
  inv.boundary_components = mu_extremes(c).sum() - 1;

  // chi = 2 - 2g - r (orientable) or chi = 2 - g - r (crosscaps).
  const int deficit = 2 - inv.euler_characteristic - inv.boundary_components;
  if (inv.orientable) {
    if (deficit < 0 || deficit % 2 != 0)
      throw std::logic_error("inconsistent orientable surface data for " + c.to_string());
    inv.genus = deficit / 2;
  } else {
    if (deficit < 1)
      throw std::logic_error("inconsistent non-orientable surface data for " + c.to_string());
    inv.genus = deficit;
  }
  return inv;
}

std::string to_json(const SurfaceInvariants &inv) {
  return std::string("{\"orientable\": ") + (inv.orientable ? "true" : "false") +
         ", \"euler_characteristic\": " + std::to_string(inv.euler_characteristic) +
         ", \"boundary_components\": " + std::to_string(inv.boundary_components) + ", \"" +
         (inv.orientable ? "genus" : "crosscaps") + "\": " + std::to_string(inv.genus) + "}";
}

std::string to_string(const SurfaceInvariants &inv) {
  return std::string(inv.orientable ? "orientable" : "non-orientable") +
         " chi=" + std::to_string(inv.euler_characteristic) +
         " boundary=" + std::to_string(inv.boundary_components) +
         (inv.orientable ? " genus=" : " crosscaps=") + std::to_string(inv.genus);
}

} // namespace chordbracket
