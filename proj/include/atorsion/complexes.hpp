#pragma once

// Finite quotient data: graphs Γ\T for a tree T, and two-dimensional
// complexes Γ\Δ for an Ã₂ building Δ, together with their directed cells,
// vertex links and the sector-refinement matrices M_k.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "atorsion/exactint.hpp"
#include "atorsion/incidence.hpp"

namespace atorsion {

// ---------------------------------------------------------------------------
// Graphs

/// A finite graph with directed edges paired by a fixed-point-free
/// involution e -> ē, o(ē) = t(e).  Loops and parallel edges are allowed.
class QuotientGraph {
 public:
  struct Edge {
    std::size_t origin;
    std::size_t terminus;
    std::size_t reverse;
  };

  /// Adds a geometric edge u - v as the directed pair u->v, v->u.  Returns
  /// the index of u->v; its reverse is the next index.
  std::size_t add_geometric_edge(std::size_t u, std::size_t v);
  std::size_t add_vertex();

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t geometric_edge_count() const noexcept { return edges_.size() / 2; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Number of directed edges leaving v (a loop counts twice).
  std::size_t degree(std::size_t v) const;
  bool connected() const;
  /// Vertices of degree below three.
  std::vector<std::size_t> low_degree_vertices() const;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
};

/// Lines `vertex <id>` and `geom-edge <id> <u> <v>`; '#' starts a comment.
QuotientGraph parse_graph(std::string_view text);
std::string format_graph(const QuotientGraph& g);

// ---------------------------------------------------------------------------
// Ã₂ complexes

struct DirectedEdge {
  std::size_t tail;  // e(1)
  std::size_t head;  // e(2)
};

/// Three directed edges running head to tail around a triangle.  Corner i
/// is the tail of edges[i]; edges[i] runs from corner i to corner i+1.
struct Chamber {
  std::array<std::size_t, 3> edges;
};

/// A chamber with a chosen initial corner, d(0).  Cells are indexed
/// 3 * chamber + corner.
struct DirectedCell {
  std::size_t chamber;
  unsigned corner;
};

class A2Complex {
 public:
  A2Complex(std::size_t vertex_count, std::vector<DirectedEdge> edges, std::vector<Chamber> chambers,
            std::optional<std::vector<unsigned>> types = std::nullopt);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t chamber_count() const noexcept { return chambers_.size(); }
  std::size_t cell_count() const noexcept { return 3 * chambers_.size(); }

  const std::vector<DirectedEdge>& edges() const noexcept { return edges_; }
  const std::vector<Chamber>& chambers() const noexcept { return chambers_; }
  const std::optional<std::vector<unsigned>>& types() const noexcept { return types_; }

  DirectedCell cell(std::size_t index) const { return {index / 3, static_cast<unsigned>(index % 3)}; }
  static std::size_t cell_index(std::size_t chamber, unsigned corner) { return 3 * chamber + corner; }

  /// Vertex at corner i of chamber c.
  std::size_t corner_vertex(std::size_t chamber, unsigned corner) const;
  /// d(p) for p in {0, 1, 2}.
  std::size_t cell_vertex(std::size_t cell, unsigned p) const;
  /// The directed edge from d(1) to d(2), opposite the initial vertex.
  std::size_t opposite_edge(std::size_t cell) const;

 private:
  std::size_t vertex_count_;
  std::vector<DirectedEdge> edges_;
  std::vector<Chamber> chambers_;
  std::optional<std::vector<unsigned>> types_;
};

/// Lines `vertex <id> [type]`, `edge <id> <tail> <head>`,
/// `chamber <e1> <e2> <e3>`; '#' starts a comment.
A2Complex parse_complex(std::string_view text);
std::string format_complex(const A2Complex& x);

A2Complex disjoint_union(const A2Complex& a, const A2Complex& b);

/// Link of vertex x: points are the directed edges leaving x, lines the
/// directed edges entering x, and each chamber corner at x makes its
/// outgoing edge incident with its incoming edge.
struct ComplexLink {
  IncidenceStructure incidence;
  std::vector<std::size_t> point_edges;  // point index -> edge
  std::vector<std::size_t> line_edges;   // line index -> edge
  std::vector<std::size_t> flag_cells;   // incidence.flags[i] comes from this cell (rooted at x)
};
ComplexLink complex_link(const A2Complex& x, std::size_t vertex);

struct LinkReport {
  bool ok = false;
  unsigned order = 0;
  /// Per failing vertex: "vertex 3: <problem>".
  std::vector<std::string> failures;
};

/// Checks every vertex link against the projective-plane axioms.  Throws an
/// inconsistency error when links are planes of different orders.
LinkReport validate_links(const A2Complex& x);

/// validate_links, throwing a validation error on failure.  Returns q.
unsigned require_valid_links(const A2Complex& x);

struct CellCounts {
  std::size_t n0, n1, n2;
  long long chi;
};

/// Counts and Euler characteristic.  With `order` given, also checks
/// n1 = n0(q^2+q+1) and 3 n2 = n0(q+1)(q^2+q+1).
CellCounts cell_counts(const A2Complex& x, std::optional<unsigned> order = std::nullopt);

/// M_k(d, c) = 1 when d is one of the directed cells refining c, found in
/// the link of c(k): chambers at relative position (2 3 1) (k = 1) or
/// (3 1 2) (k = 2) from c's chamber, rooted at c(k).  Rows and columns are
/// indexed by cells.  Throws if an entry exceeds one or a row or column does
/// not have q^2 nonzero entries.
IntMatrix build_mk(const A2Complex& x, unsigned k);

/// Degenerate q = 1 complex: the Coxeter plane modulo translations, with
/// `scale` vertices, 3*scale edges and 2*scale chambers.
A2Complex torus_complex(std::size_t scale);

struct PresentationSearch {
  std::optional<A2Complex> complex;  // first solution in search order
  std::size_t solutions = 0;         // all solutions, when exhaustive
  std::size_t correspondences_tried = 0;
};

/// Backtracking search for a one-vertex complex of order q = 2: over the
/// point-line correspondences of a fixed Fano plane, and for each, over
/// decompositions of the incidence arcs into triangles.  Without
/// `exhaustive` the search stops at the first solution.
PresentationSearch search_presentation(unsigned q, bool exhaustive = false);

}  // namespace atorsion
