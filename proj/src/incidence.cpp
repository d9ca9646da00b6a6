#include "atorsion/incidence.hpp"

#include <algorithm>

namespace atorsion {

namespace {

constexpr std::size_t kMaxProblems = 8;

void note(PlaneCheck& r, std::string msg) {
  if (r.problems.size() < kMaxProblems) r.problems.push_back(std::move(msg));
}

}  // namespace

PlaneCheck check_projective_plane(const IncidenceStructure& s) {
  PlaneCheck r;
  if (s.points == 0 || s.lines == 0) {
    note(r, "empty incidence structure");
    return r;
  }
  std::vector<std::vector<unsigned char>> inc(s.points, std::vector<unsigned char>(s.lines, 0));
  for (auto [p, l] : s.flags) {
    if (p >= s.points || l >= s.lines) {
      note(r, "incidence refers to a missing point or line");
      return r;
    }
    if (inc[p][l]++) note(r, "point " + std::to_string(p) + " and line " + std::to_string(l) + " are incident twice");
  }

  std::vector<std::size_t> pdeg(s.points, 0), ldeg(s.lines, 0);
  for (std::size_t p = 0; p < s.points; ++p)
    for (std::size_t l = 0; l < s.lines; ++l)
      if (inc[p][l]) {
        ++pdeg[p];
        ++ldeg[l];
      }
  const std::size_t k = pdeg[0];
  for (std::size_t p = 0; p < s.points; ++p)
    if (pdeg[p] != k)
      note(r, "point " + std::to_string(p) + " lies on " + std::to_string(pdeg[p]) + " lines, expected " + std::to_string(k));
  for (std::size_t l = 0; l < s.lines; ++l)
    if (ldeg[l] != k)
      note(r, "line " + std::to_string(l) + " has " + std::to_string(ldeg[l]) + " points, expected " + std::to_string(k));
  if (k < 2) {
    note(r, "degree below 2");
    return r;
  }
  const std::size_t q = k - 1;
  const std::size_t expected = q * q + q + 1;
  if (s.points != expected || s.lines != expected)
    note(r, std::to_string(s.points) + " points and " + std::to_string(s.lines) + " lines, expected " +
                std::to_string(expected) + " of each for order " + std::to_string(q));

  for (std::size_t a = 0; a < s.points; ++a)
    for (std::size_t b = a + 1; b < s.points; ++b) {
      std::size_t common = 0;
      for (std::size_t l = 0; l < s.lines; ++l) common += (inc[a][l] && inc[b][l]);
      if (common != 1)
        note(r, "points " + std::to_string(a) + "," + std::to_string(b) + " share " + std::to_string(common) + " lines");
    }
  for (std::size_t a = 0; a < s.lines; ++a)
    for (std::size_t b = a + 1; b < s.lines; ++b) {
      std::size_t common = 0;
      for (std::size_t p = 0; p < s.points; ++p) common += (inc[p][a] && inc[p][b]);
      if (common != 1)
        note(r, "lines " + std::to_string(a) + "," + std::to_string(b) + " share " + std::to_string(common) + " points");
    }
  r.ok = r.problems.empty();
  if (r.ok) r.order = static_cast<unsigned>(q);
  return r;
}

}  // namespace atorsion
