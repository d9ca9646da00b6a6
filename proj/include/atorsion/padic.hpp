#pragma once

// Vertices of the Bruhat-Tits building of PGL(n+1, Q_p) as homothety classes
// of Z_p-lattices, each stored by a canonical Hermite basis, plus balls of
// the building around the standard lattice.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "atorsion/incidence.hpp"

namespace atorsion {

/// Canonical representative of a lattice class.  The basis is upper
/// triangular, column j spans the lattice together with columns < j, the
/// diagonal entries are p^a_i, entries right of the diagonal in row i are
/// reduced into [0, p^a_i), and not every entry is divisible by p.
class LatticeVertex {
 public:
  /// The class of Z_p^dim.
  static LatticeVertex standard(std::size_t dim, unsigned p);

  /// Class of the lattice spanned by `columns` (each of length dim).  The
  /// span must contain p^bound * Z_p^dim.
  static LatticeVertex from_generators(std::size_t dim, unsigned p, const std::vector<std::vector<std::int64_t>>& columns,
                                       unsigned bound);

  std::size_t dim() const noexcept { return dim_; }
  unsigned p() const noexcept { return p_; }
  std::int64_t entry(std::size_t i, std::size_t j) const { return basis_[i * dim_ + j]; }
  const std::vector<std::int64_t>& basis() const noexcept { return basis_; }
  /// a_i with diagonal entry p^a_i.
  const std::vector<unsigned>& exponents() const noexcept { return exponents_; }
  /// Valuation of the determinant, the sum of the exponents.
  unsigned det_valuation() const noexcept { return det_valuation_; }
  /// Type in Z/(n+1).
  unsigned type() const noexcept { return det_valuation_ % dim_; }

  friend bool operator==(const LatticeVertex&, const LatticeVertex&) = default;
  /// Lexicographic on the basis entries in row-major order.
  friend std::strong_ordering operator<=>(const LatticeVertex& a, const LatticeVertex& b);

 private:
  LatticeVertex() = default;
  std::size_t dim_ = 0;
  unsigned p_ = 0;
  std::vector<std::int64_t> basis_;
  std::vector<unsigned> exponents_;
  unsigned det_valuation_ = 0;
};

/// All classes L' with pL < L' < L (strict), i.e. the preimages of the
/// proper nonzero subspaces of L/pL, in canonical order.
std::vector<LatticeVertex> neighbors(const LatticeVertex& v);

/// Number of proper nonzero subspaces of F_p^(n+1), the vertex degree.
std::uint64_t neighbor_count(std::size_t n, unsigned p);

struct BuildingBall {
  std::size_t n = 0;
  unsigned p = 0;
  std::size_t radius = 0;
  std::size_t center = 0;
  std::vector<LatticeVertex> vertices;  // canonical order
  std::vector<std::size_t> distance;    // graph distance from the center
  std::vector<unsigned> types;
  std::vector<std::vector<std::size_t>> adjacency;  // sorted, within the ball
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::vector<std::size_t>> chambers;  // sorted (n+1)-cliques

  std::size_t index_of(const LatticeVertex& v) const;
  bool interior(std::size_t v) const { return distance[v] + 1 <= radius; }
  std::vector<std::size_t> chambers_at(std::size_t v) const;
  /// Per-type vertex counts.
  std::vector<std::size_t> type_tally() const;
};

struct BallLimits {
  std::size_t max_n = 3;
  std::size_t max_radius = 3;
  std::uint64_t max_vertices = 1'000'000;
};

/// Crude upper bound 1 + N + ... + N^radius on the vertex count.
std::uint64_t estimate_ball_size(std::size_t n, unsigned p, std::size_t radius);

/// Every class within graph distance `radius` of the standard lattice, the
/// edges between them and the chambers ((n+1)-cliques of mutually adjacent
/// vertices, which carry one vertex of each type).
BuildingBall ball(std::size_t n, unsigned p, std::size_t radius, const BallLimits& limits = {});

/// Link of an interior vertex: points are neighbors of type t+1, lines are
/// neighbors of type t+n, incidence is adjacency.  For n = 1 the link is p+1
/// isolated points.
struct VertexLink {
  IncidenceStructure incidence;
  std::vector<std::size_t> point_vertices;  // ball indices
  std::vector<std::size_t> line_vertices;
};
VertexLink link(const BuildingBall& b, std::size_t vertex);

std::string ball_to_json(const BuildingBall& b, bool include_bases);

}  // namespace atorsion
