#include "atorsion/complexes.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "atorsion/error.hpp"

namespace atorsion {

namespace {

// Splits a line into whitespace-separated tokens, dropping any '#' comment.
std::vector<std::string> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string t; in >> t;) out.push_back(std::move(t));
  return out;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    const auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    auto tokens = tokenize(line);
    if (!tokens.empty()) fn(line_no, tokens);
  }
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  fail(ErrorKind::parse, "line " + std::to_string(line_no) + ": " + what);
}

class IdTable {
 public:
  explicit IdTable(std::string kind) : kind_(std::move(kind)) {}

  std::size_t define(std::size_t line_no, const std::string& id) {
    auto [it, fresh] = ids_.emplace(id, ids_.size());
    if (!fresh) parse_fail(line_no, "duplicate " + kind_ + " id '" + id + "'");
    return it->second;
  }

  std::size_t lookup(std::size_t line_no, const std::string& id) const {
    auto it = ids_.find(id);
    if (it == ids_.end()) parse_fail(line_no, "unknown " + kind_ + " id '" + id + "'");
    return it->second;
  }

  std::size_t size() const { return ids_.size(); }

 private:
  std::string kind_;
  std::unordered_map<std::string, std::size_t> ids_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Graphs

std::size_t QuotientGraph::add_vertex() { return vertex_count_++; }

std::size_t QuotientGraph::add_geometric_edge(std::size_t u, std::size_t v) {
  if (u >= vertex_count_ || v >= vertex_count_) fail(ErrorKind::dimension, "graph edge endpoint out of range");
  const std::size_t e = edges_.size();
  edges_.push_back({u, v, e + 1});
  edges_.push_back({v, u, e});
  return e;
}

std::size_t QuotientGraph::degree(std::size_t v) const {
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.origin == v; }));
}

bool QuotientGraph::connected() const {
  if (vertex_count_ == 0) return false;
  std::vector<std::vector<std::size_t>> adj(vertex_count_);
  for (const auto& e : edges_) adj[e.origin].push_back(e.terminus);
  std::vector<bool> seen(vertex_count_, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == vertex_count_;
}

std::vector<std::size_t> QuotientGraph::low_degree_vertices() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertex_count_; ++v)
    if (degree(v) < 3) out.push_back(v);
  return out;
}

QuotientGraph parse_graph(std::string_view text) {
  QuotientGraph g;
  IdTable vertices("vertex"), edges("edge");
  for_each_line(text, [&](std::size_t line_no, const std::vector<std::string>& t) {
    if (t[0] == "vertex") {
      if (t.size() != 2) parse_fail(line_no, "expected 'vertex <id>'");
      vertices.define(line_no, t[1]);
      g.add_vertex();
    } else if (t[0] == "geom-edge") {
      if (t.size() != 4) parse_fail(line_no, "expected 'geom-edge <id> <u> <v>'");
      edges.define(line_no, t[1]);
      g.add_geometric_edge(vertices.lookup(line_no, t[2]), vertices.lookup(line_no, t[3]));
    } else {
      parse_fail(line_no, "unknown record '" + t[0] + "'");
    }
  });
  if (g.vertex_count() == 0) fail(ErrorKind::parse, "graph has no vertices");
  return g;
}

std::string format_graph(const QuotientGraph& g) {
  std::ostringstream out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out << "vertex " << v << '\n';
  for (std::size_t e = 0; e < g.edges().size(); e += 2)
    out << "geom-edge " << e / 2 << ' ' << g.edges()[e].origin << ' ' << g.edges()[e].terminus << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Complexes

A2Complex::A2Complex(std::size_t vertex_count, std::vector<DirectedEdge> edges, std::vector<Chamber> chambers,
                     std::optional<std::vector<unsigned>> types)
    : vertex_count_(vertex_count), edges_(std::move(edges)), chambers_(std::move(chambers)), types_(std::move(types)) {
  if (types_ && types_->size() != vertex_count_) fail(ErrorKind::structure, "vertex types must be given for every vertex");
  if (types_)
    for (unsigned t : *types_)
      if (t > 2) fail(ErrorKind::structure, "vertex type " + std::to_string(t) + " is not in {0,1,2}");
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& de = edges_[e];
    if (de.tail >= vertex_count_ || de.head >= vertex_count_)
      fail(ErrorKind::structure, "edge " + std::to_string(e) + " has an endpoint out of range");
    if (types_ && ((*types_)[de.tail] + 1) % 3 != (*types_)[de.head])
      fail(ErrorKind::structure, "edge " + std::to_string(e) + " does not run from type t to type t+1");
  }
  for (std::size_t c = 0; c < chambers_.size(); ++c) {
    const auto& ch = chambers_[c];
    for (auto e : ch.edges)
      if (e >= edges_.size()) fail(ErrorKind::structure, "chamber " + std::to_string(c) + " names an unknown edge");
    for (unsigned i = 0; i < 3; ++i)
      if (edges_[ch.edges[i]].head != edges_[ch.edges[(i + 1) % 3]].tail)
        fail(ErrorKind::structure, "chamber " + std::to_string(c) + " is not head-to-tail");
    // A chamber equal to its own rotation would have fewer than three
    // distinct directed cells.
    if (ch.edges[0] == ch.edges[1] && ch.edges[1] == ch.edges[2])
      fail(ErrorKind::structure, "chamber " + std::to_string(c) + " repeats one edge three times");
  }
}

std::size_t A2Complex::corner_vertex(std::size_t chamber, unsigned corner) const {
  return edges_[chambers_.at(chamber).edges[corner % 3]].tail;
}

std::size_t A2Complex::cell_vertex(std::size_t cell, unsigned p) const {
  const auto d = this->cell(cell);
  return corner_vertex(d.chamber, d.corner + p);
}

std::size_t A2Complex::opposite_edge(std::size_t cell) const {
  const auto d = this->cell(cell);
  return chambers_.at(d.chamber).edges[(d.corner + 1) % 3];
}

A2Complex parse_complex(std::string_view text) {
  IdTable vertices("vertex"), edge_ids("edge");
  std::vector<std::optional<unsigned>> types;
  std::vector<DirectedEdge> edges;
  std::vector<Chamber> chambers;
  for_each_line(text, [&](std::size_t line_no, const std::vector<std::string>& t) {
    if (t[0] == "vertex") {
      if (t.size() != 2 && t.size() != 3) parse_fail(line_no, "expected 'vertex <id> [type]'");
      vertices.define(line_no, t[1]);
      if (t.size() == 3) {
        if (t[2] != "0" && t[2] != "1" && t[2] != "2") parse_fail(line_no, "vertex type must be 0, 1 or 2");
        types.emplace_back(static_cast<unsigned>(t[2][0] - '0'));
      } else {
        types.emplace_back();
      }
    } else if (t[0] == "edge") {
      if (t.size() != 4) parse_fail(line_no, "expected 'edge <id> <tail> <head>'");
      edge_ids.define(line_no, t[1]);
      edges.push_back({vertices.lookup(line_no, t[2]), vertices.lookup(line_no, t[3])});
    } else if (t[0] == "chamber") {
      if (t.size() != 4) parse_fail(line_no, "expected 'chamber <e1> <e2> <e3>'");
      Chamber c{};
      for (std::size_t i = 0; i < 3; ++i) c.edges[i] = edge_ids.lookup(line_no, t[i + 1]);
      for (unsigned i = 0; i < 3; ++i)
        if (edges[c.edges[i]].head != edges[c.edges[(i + 1) % 3]].tail)
          parse_fail(line_no, "chamber edges are not head-to-tail");
      chambers.push_back(c);
    } else {
      parse_fail(line_no, "unknown record '" + t[0] + "'");
    }
  });
  if (vertices.size() == 0) fail(ErrorKind::parse, "complex has no vertices");
  const auto typed = std::count_if(types.begin(), types.end(), [](const auto& t) { return t.has_value(); });
  std::optional<std::vector<unsigned>> type_vec;
  if (typed == static_cast<std::ptrdiff_t>(types.size())) {
    type_vec.emplace();
    for (const auto& t : types) type_vec->push_back(*t);
  } else if (typed != 0) {
    fail(ErrorKind::parse, "either every vertex has a type or none does");
  }
  return A2Complex(vertices.size(), std::move(edges), std::move(chambers), std::move(type_vec));
}

std::string format_complex(const A2Complex& x) {
  std::ostringstream out;
  for (std::size_t v = 0; v < x.vertex_count(); ++v) {
    out << "vertex " << v;
    if (x.types()) out << ' ' << (*x.types())[v];
    out << '\n';
  }
  for (std::size_t e = 0; e < x.edge_count(); ++e)
    out << "edge " << e << ' ' << x.edges()[e].tail << ' ' << x.edges()[e].head << '\n';
  for (const auto& c : x.chambers()) out << "chamber " << c.edges[0] << ' ' << c.edges[1] << ' ' << c.edges[2] << '\n';
  return out.str();
}

A2Complex disjoint_union(const A2Complex& a, const A2Complex& b) {
  const auto v_off = a.vertex_count();
  const auto e_off = a.edge_count();
  auto edges = a.edges();
  for (const auto& e : b.edges()) edges.push_back({e.tail + v_off, e.head + v_off});
  auto chambers = a.chambers();
  for (const auto& c : b.chambers()) chambers.push_back({{c.edges[0] + e_off, c.edges[1] + e_off, c.edges[2] + e_off}});
  std::optional<std::vector<unsigned>> types;
  if (a.types() && b.types()) {
    types = *a.types();
    types->insert(types->end(), b.types()->begin(), b.types()->end());
  }
  return A2Complex(v_off + b.vertex_count(), std::move(edges), std::move(chambers), std::move(types));
}

ComplexLink complex_link(const A2Complex& x, std::size_t vertex) {
  if (vertex >= x.vertex_count()) fail(ErrorKind::dimension, "link: vertex out of range");
  ComplexLink link;
  std::vector<std::size_t> point_of(x.edge_count(), SIZE_MAX), line_of(x.edge_count(), SIZE_MAX);
  for (std::size_t e = 0; e < x.edge_count(); ++e) {
    if (x.edges()[e].tail == vertex) {
      point_of[e] = link.point_edges.size();
      link.point_edges.push_back(e);
    }
    if (x.edges()[e].head == vertex) {
      line_of[e] = link.line_edges.size();
      link.line_edges.push_back(e);
    }
  }
  for (std::size_t c = 0; c < x.chamber_count(); ++c)
    for (unsigned i = 0; i < 3; ++i) {
      const auto& edges = x.chambers()[c].edges;
      if (x.edges()[edges[i]].tail != vertex) continue;
      link.incidence.flags.emplace_back(point_of[edges[i]], line_of[edges[(i + 2) % 3]]);
      link.flag_cells.push_back(A2Complex::cell_index(c, i));
    }
  link.incidence.points = link.point_edges.size();
  link.incidence.lines = link.line_edges.size();
  return link;
}

LinkReport validate_links(const A2Complex& x) {
  LinkReport report;
  std::optional<std::pair<std::size_t, unsigned>> first_order;
  for (std::size_t v = 0; v < x.vertex_count(); ++v) {
    const auto check = check_projective_plane(complex_link(x, v).incidence);
    if (!check.ok) {
      for (const auto& problem : check.problems) report.failures.push_back("vertex " + std::to_string(v) + ": " + problem);
      continue;
    }
    if (!first_order) {
      first_order.emplace(v, check.order);
    } else if (first_order->second != check.order) {
      fail(ErrorKind::inconsistency, "link orders differ: vertex " + std::to_string(first_order->first) + " has order " +
                                         std::to_string(first_order->second) + ", vertex " + std::to_string(v) +
                                         " has order " + std::to_string(check.order));
    }
  }
  report.ok = report.failures.empty() && first_order.has_value();
  if (first_order) report.order = first_order->second;
  return report;
}

unsigned require_valid_links(const A2Complex& x) {
  const auto report = validate_links(x);
  if (!report.ok) {
    std::string msg = "link check failed";
    if (!report.failures.empty()) msg += ": " + report.failures.front();
    if (report.failures.size() > 1) msg += " (and " + std::to_string(report.failures.size() - 1) + " more)";
    fail(ErrorKind::validation, msg);
  }
  return report.order;
}

CellCounts cell_counts(const A2Complex& x, std::optional<unsigned> order) {
  CellCounts c{x.vertex_count(), x.edge_count(), x.chamber_count(), 0};
  c.chi = static_cast<long long>(c.n0) - static_cast<long long>(c.n1) + static_cast<long long>(c.n2);
  if (order) {
    const unsigned long long q = *order;
    const unsigned long long plane = q * q + q + 1;
    if (c.n1 != c.n0 * plane)
      fail(ErrorKind::structure, "edge count " + std::to_string(c.n1) + " differs from n0(q^2+q+1) = " +
                                     std::to_string(c.n0 * plane));
    if (3 * c.n2 != c.n0 * (q + 1) * plane)
      fail(ErrorKind::structure, "chamber count " + std::to_string(c.n2) + " differs from n0(q+1)(q^2+q+1)/3");
  }
  return c;
}

IntMatrix build_mk(const A2Complex& x, unsigned k) {
  if (k != 1 && k != 2) fail(ErrorKind::range, "M_k is defined for k = 1, 2 only");
  const unsigned q = require_valid_links(x);

  // Per vertex: incidence lists and the cell rooted at each flag.
  struct Local {
    std::vector<std::vector<std::size_t>> lines_through, points_on;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> cell_of_flag;
  };
  std::vector<Local> locals(x.vertex_count());
  std::vector<std::size_t> point_index(x.edge_count()), line_index(x.edge_count());
  for (std::size_t v = 0; v < x.vertex_count(); ++v) {
    const auto link = complex_link(x, v);
    auto& loc = locals[v];
    loc.lines_through.resize(link.incidence.points);
    loc.points_on.resize(link.incidence.lines);
    for (std::size_t i = 0; i < link.point_edges.size(); ++i) point_index[link.point_edges[i]] = i;
    for (std::size_t i = 0; i < link.line_edges.size(); ++i) line_index[link.line_edges[i]] = i;
    for (std::size_t f = 0; f < link.incidence.flags.size(); ++f) {
      const auto [pt, ln] = link.incidence.flags[f];
      loc.lines_through[pt].push_back(ln);
      loc.points_on[ln].push_back(pt);
      loc.cell_of_flag.emplace(link.incidence.flags[f], link.flag_cells[f]);
    }
  }

  const std::size_t n = x.cell_count();
  std::vector<unsigned> mult(n * n, 0);  // row d, column c
  for (std::size_t c = 0; c < n; ++c) {
    const auto cell = x.cell(c);
    const unsigned j = (cell.corner + k) % 3;
    const auto& edges = x.chambers()[cell.chamber].edges;
    const std::size_t v = x.corner_vertex(cell.chamber, j);
    const auto& loc = locals[v];
    const std::size_t p0 = point_index[edges[j]];
    const std::size_t l0 = line_index[edges[(j + 2) % 3]];
    auto hit = [&](std::size_t pt, std::size_t ln) { ++mult[loc.cell_of_flag.at({pt, ln}) * n + c]; };
    if (k == 1) {
      // Turn the line about the point, then move the point along the new line.
      for (auto ln : loc.lines_through[p0])
        if (ln != l0)
          for (auto pt : loc.points_on[ln])
            if (pt != p0) hit(pt, ln);
    } else {
      for (auto pt : loc.points_on[l0])
        if (pt != p0)
          for (auto ln : loc.lines_through[pt])
            if (ln != l0) hit(pt, ln);
    }
  }

  IntMatrix m(n, n);
  std::vector<std::size_t> row_nz(n, 0), col_nz(n, 0);
  for (std::size_t d = 0; d < n; ++d)
    for (std::size_t c = 0; c < n; ++c) {
      const unsigned v = mult[d * n + c];
      if (v == 0) continue;
      if (v > 1)
        fail(ErrorKind::inconsistency, "M_" + std::to_string(k) + " multiplicity " + std::to_string(v) + " at cell " +
                                           std::to_string(d) + " refining cell " + std::to_string(c));
      m(d, c) = 1;
      ++row_nz[d];
      ++col_nz[c];
    }
  const std::size_t expected = static_cast<std::size_t>(q) * q;
  for (std::size_t i = 0; i < n; ++i)
    if (row_nz[i] != expected || col_nz[i] != expected)
      fail(ErrorKind::inconsistency, "M_" + std::to_string(k) + " cell " + std::to_string(i) + " has " +
                                         std::to_string(row_nz[i]) + " row and " + std::to_string(col_nz[i]) +
                                         " column entries, expected " + std::to_string(expected));
  return m;
}

A2Complex torus_complex(std::size_t scale) {
  if (scale < 1) fail(ErrorKind::range, "torus scale must be at least 1");
  const std::size_t s = scale;
  // Edges a_k: k -> k+1, b_k: k -> k, c_k: k -> k-1, stored as 3k, 3k+1, 3k+2.
  std::vector<DirectedEdge> edges;
  for (std::size_t k = 0; k < s; ++k) {
    edges.push_back({k, (k + 1) % s});
    edges.push_back({k, k});
    edges.push_back({k, (k + s - 1) % s});
  }
  auto a = [&](std::size_t k) { return 3 * (k % s); };
  auto b = [&](std::size_t k) { return 3 * (k % s) + 1; };
  auto c = [&](std::size_t k) { return 3 * (k % s) + 2; };
  std::vector<Chamber> chambers;
  for (std::size_t k = 0; k < s; ++k) {
    chambers.push_back({{a(k), b(k + 1), c(k + 1)}});
    chambers.push_back({{b(k), a(k), c(k + 1)}});
  }
  return A2Complex(s, std::move(edges), std::move(chambers));
}

}  // namespace atorsion
