#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace atorsion {

/// Points, lines and a list of incident (point, line) pairs.  The list may
/// contain repeats; a repeat is reported as an axiom failure.
struct IncidenceStructure {
  std::size_t points = 0;
  std::size_t lines = 0;
  std::vector<std::pair<std::size_t, std::size_t>> flags;
};

struct PlaneCheck {
  bool ok = false;
  unsigned order = 0;  // q, meaningful when ok
  std::vector<std::string> problems;
};

/// Checks the projective-plane axioms: no repeated incidence, every point on
/// q+1 lines and every line through q+1 points, q^2+q+1 of each, two points
/// on exactly one common line and two lines through exactly one common point.
/// q = 1 (the triangle) is accepted as the degenerate plane.
PlaneCheck check_projective_plane(const IncidenceStructure& s);

}  // namespace atorsion
