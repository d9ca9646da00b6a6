#include "atorsion/padic.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "atorsion/error.hpp"
#include "atorsion/fqlinalg.hpp"
#include "json.hpp"

namespace atorsion {

namespace {

using Column = std::vector<std::int64_t>;

std::int64_t ipow(std::int64_t b, unsigned e) {
  std::int64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Valuation of a nonzero integer.
unsigned valuation(std::int64_t a, unsigned p) {
  unsigned v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return v;
}

// Inverse of a unit modulo m = p^N, by extended Euclid.
std::int64_t unit_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  return mod(old_s, m);
}

constexpr std::int64_t kMaxModulus = std::int64_t(1) << 30;

}  // namespace

LatticeVertex LatticeVertex::standard(std::size_t dim, unsigned p) {
  if (!is_prime(p)) fail(ErrorKind::range, "lattice prime " + std::to_string(p) + " is not prime");
  if (dim < 2) fail(ErrorKind::range, "lattice dimension must be at least 2");
  LatticeVertex v;
  v.dim_ = dim;
  v.p_ = p;
  v.basis_.assign(dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i) v.basis_[i * dim + i] = 1;
  v.exponents_.assign(dim, 0);
  return v;
}

LatticeVertex LatticeVertex::from_generators(std::size_t dim, unsigned p, const std::vector<Column>& columns,
                                             unsigned bound) {
  std::int64_t modulus = 1;
  for (unsigned i = 0; i < bound; ++i) {
    modulus *= p;
    if (modulus > kMaxModulus) fail(ErrorKind::size, "lattice modulus p^" + std::to_string(bound) + " is too large");
  }

  // Generators reduced mod p^bound; the vectors p^bound e_i are implicit.
  std::vector<Column> pool;
  pool.reserve(columns.size());
  for (const auto& c : columns) {
    if (c.size() != dim) fail(ErrorKind::dimension, "lattice generator has wrong length");
    Column r(dim);
    for (std::size_t i = 0; i < dim; ++i) r[i] = mod(c[i], modulus);
    pool.push_back(std::move(r));
  }

  std::vector<Column> basis(dim);
  std::vector<unsigned> exps(dim);
  for (std::size_t row = dim; row-- > 0;) {
    std::size_t best = pool.size();
    unsigned best_v = bound;
    for (std::size_t c = 0; c < pool.size(); ++c) {
      if (pool[c][row] == 0) continue;
      const unsigned v = valuation(pool[c][row], p);
      if (v < best_v) {
        best_v = v;
        best = c;
      }
    }
    if (best == pool.size()) {
      // Only the implicit p^bound e_row reaches this row.
      Column e(dim, 0);
      e[row] = modulus;
      basis[row] = std::move(e);
      exps[row] = bound;
      continue;
    }
    Column piv = std::move(pool[best]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
    const std::int64_t pv = ipow(p, best_v);
    const std::int64_t unit = unit_inverse(piv[row] / pv, modulus);
    for (auto& x : piv) x = mod(x * unit, modulus);
    for (auto& c : pool) {
      if (c[row] == 0) continue;
      const std::int64_t f = c[row] / pv;  // exact: valuation of c[row] >= best_v
      for (std::size_t i = 0; i < dim; ++i) c[i] = mod(c[i] - f * piv[i], modulus);
    }
    piv[row] = pv;
    // p^(bound-v) * piv vanishes in this row modulo p^bound but not above;
    // it must stay in the pool or the triangular basis spans too little.
    if (best_v > 0 && row > 0) {
      const std::int64_t f = ipow(p, bound - best_v);
      Column extra(dim, 0);
      bool nonzero = false;
      for (std::size_t i = 0; i < row; ++i) {
        extra[i] = mod(f * piv[i], modulus);
        nonzero = nonzero || extra[i] != 0;
      }
      if (nonzero) pool.push_back(std::move(extra));
    }
    basis[row] = std::move(piv);
    exps[row] = best_v;
  }

  // Reduce row i right of the diagonal modulo p^a_i, bottom row first so
  // that earlier reductions are not disturbed.
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t i = j; i-- > 0;) {
      const std::int64_t d = ipow(p, exps[i]);
      const std::int64_t f = (basis[j][i] - mod(basis[j][i], d)) / d;
      if (f == 0) continue;
      for (std::size_t k = 0; k <= i; ++k) basis[j][k] -= f * basis[i][k];
    }

  // Homothety: divide out the largest power of p dividing everything.
  unsigned shift = *std::min_element(exps.begin(), exps.end());
  for (std::size_t j = 0; j < dim && shift > 0; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (basis[j][i] != 0) shift = std::min(shift, valuation(basis[j][i], p));
  const std::int64_t scale = ipow(p, shift);

  LatticeVertex v;
  v.dim_ = dim;
  v.p_ = p;
  v.basis_.assign(dim * dim, 0);
  v.exponents_.resize(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = 0; i <= j; ++i) v.basis_[i * dim + j] = basis[j][i] / scale;
    v.exponents_[j] = exps[j] - shift;
    v.det_valuation_ += v.exponents_[j];
  }
  return v;
}

std::strong_ordering operator<=>(const LatticeVertex& a, const LatticeVertex& b) {
  if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
  if (auto c = a.p_ <=> b.p_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.basis_.begin(), a.basis_.end(), b.basis_.begin(), b.basis_.end());
}

std::vector<LatticeVertex> neighbors(const LatticeVertex& v) {
  const std::size_t d = v.dim();
  const unsigned p = v.p();
  const FieldSpec fp(p, 1);
  std::vector<Column> base;
  for (std::size_t j = 0; j < d; ++j) {
    Column c(d);
    for (std::size_t i = 0; i < d; ++i) c[i] = p * v.entry(i, j);
    base.push_back(std::move(c));
  }
  const unsigned bound = v.det_valuation() + 1;
  std::vector<LatticeVertex> out;
  for (std::size_t k = 1; k < d; ++k)
    for (const auto& s : enumerate_subspaces(fp, d, k)) {
      auto gens = base;
      for (const auto& sv : s.basis_vectors()) {
        Column c(d, 0);
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) c[i] += v.entry(i, j) * static_cast<std::int64_t>(sv[j]);
        gens.push_back(std::move(c));
      }
      out.push_back(LatticeVertex::from_generators(d, p, gens, bound));
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t neighbor_count(std::size_t n, unsigned p) {
  BigInt total = 0;
  for (std::size_t k = 1; k <= n; ++k) total += gaussian_binomial(p, n + 1, k);
  return total.get_ui();
}

std::uint64_t estimate_ball_size(std::size_t n, unsigned p, std::size_t radius) {
  const std::uint64_t deg = neighbor_count(n, p);
  std::uint64_t total = 1, layer = 1;
  for (std::size_t r = 0; r < radius; ++r) {
    if (layer > (std::uint64_t(1) << 40) / deg) return std::uint64_t(1) << 40;
    layer *= deg;
    total += layer;
  }
  return total;
}

std::size_t BuildingBall::index_of(const LatticeVertex& v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || !(*it == v)) return vertices.size();
  return static_cast<std::size_t>(it - vertices.begin());
}

std::vector<std::size_t> BuildingBall::chambers_at(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < chambers.size(); ++c)
    if (std::binary_search(chambers[c].begin(), chambers[c].end(), v)) out.push_back(c);
  return out;
}

std::vector<std::size_t> BuildingBall::type_tally() const {
  std::vector<std::size_t> tally(n + 1, 0);
  for (unsigned t : types) ++tally[t];
  return tally;
}

BuildingBall ball(std::size_t n, unsigned p, std::size_t radius, const BallLimits& limits) {
  if (n < 1) fail(ErrorKind::range, "ball: n must be at least 1");
  if (!is_prime(p)) fail(ErrorKind::range, "ball: p=" + std::to_string(p) + " is not prime");
  if (n > limits.max_n || radius > limits.max_radius)
    fail(ErrorKind::size, "ball: n=" + std::to_string(n) + " radius=" + std::to_string(radius) +
                              " exceeds the guard (n <= " + std::to_string(limits.max_n) +
                              ", radius <= " + std::to_string(limits.max_radius) + ")");
  const std::uint64_t estimate = estimate_ball_size(n, p, radius);
  if (estimate > limits.max_vertices)
    fail(ErrorKind::size, "ball: estimated " + std::to_string(estimate) + " vertices exceeds the limit of " +
                              std::to_string(limits.max_vertices));

  std::map<LatticeVertex, std::size_t> dist;
  std::map<LatticeVertex, std::vector<LatticeVertex>> nbrs;
  const auto start = LatticeVertex::standard(n + 1, p);
  dist.emplace(start, 0);
  std::deque<LatticeVertex> queue{start};
  while (!queue.empty()) {
    LatticeVertex v = std::move(queue.front());
    queue.pop_front();
    const std::size_t dv = dist.at(v);
    auto around = neighbors(v);
    if (dv < radius)
      for (const auto& w : around)
        if (dist.emplace(w, dv + 1).second) queue.push_back(w);
    nbrs.emplace(std::move(v), std::move(around));
  }

  BuildingBall b;
  b.n = n;
  b.p = p;
  b.radius = radius;
  for (const auto& [v, d] : dist) {
    b.vertices.push_back(v);
    b.distance.push_back(d);
    b.types.push_back(v.type());
  }
  b.center = b.index_of(start);
  b.adjacency.resize(b.vertices.size());
  for (std::size_t i = 0; i < b.vertices.size(); ++i) {
    for (const auto& w : nbrs.at(b.vertices[i])) {
      const std::size_t j = b.index_of(w);
      if (j == b.vertices.size()) continue;
      b.adjacency[i].push_back(j);
      if (i < j) b.edges.emplace_back(i, j);
    }
    std::sort(b.adjacency[i].begin(), b.adjacency[i].end());
  }

  // Chambers: cliques of size n+1, listed once from their smallest vertex.
  std::vector<std::size_t> clique;
  std::function<void(const std::vector<std::size_t>&)> grow = [&](const std::vector<std::size_t>& candidates) {
    if (clique.size() == n + 1) {
      b.chambers.push_back(clique);
      return;
    }
    for (std::size_t c : candidates) {
      if (c < clique.back()) continue;
      std::vector<std::size_t> next;
      std::set_intersection(candidates.begin(), candidates.end(), b.adjacency[c].begin(), b.adjacency[c].end(),
                            std::back_inserter(next));
      clique.push_back(c);
      grow(next);
      clique.pop_back();
    }
  };
  for (std::size_t i = 0; i < b.vertices.size(); ++i) {
    clique = {i};
    std::vector<std::size_t> later;
    for (std::size_t j : b.adjacency[i])
      if (j > i) later.push_back(j);
    grow(later);
  }
  return b;
}

VertexLink link(const BuildingBall& b, std::size_t vertex) {
  if (vertex >= b.vertices.size()) fail(ErrorKind::dimension, "link: vertex index out of range");
  if (!b.interior(vertex))
    fail(ErrorKind::validation, "link: vertex " + std::to_string(vertex) + " is at distance " +
                                    std::to_string(b.distance[vertex]) + " from the center of a radius " +
                                    std::to_string(b.radius) + " ball, its link is incomplete");
  VertexLink out;
  const unsigned t = b.types[vertex];
  const unsigned mod = static_cast<unsigned>(b.n + 1);
  for (std::size_t w : b.adjacency[vertex]) {
    const unsigned offset = (b.types[w] + mod - t) % mod;
    if (offset == 1) out.point_vertices.push_back(w);
    if (b.n >= 2 && offset == b.n) out.line_vertices.push_back(w);
  }
  out.incidence.points = out.point_vertices.size();
  out.incidence.lines = out.line_vertices.size();
  for (std::size_t i = 0; i < out.point_vertices.size(); ++i) {
    const auto& adj = b.adjacency[out.point_vertices[i]];
    for (std::size_t j = 0; j < out.line_vertices.size(); ++j)
      if (std::binary_search(adj.begin(), adj.end(), out.line_vertices[j])) out.incidence.flags.emplace_back(i, j);
  }
  return out;
}

std::string ball_to_json(const BuildingBall& b, bool include_bases) {
  using nlohmann::json;
  json j;
  j["n"] = b.n;
  j["p"] = b.p;
  j["radius"] = b.radius;
  j["center"] = b.center;
  j["vertex_count"] = b.vertices.size();
  j["edge_count"] = b.edges.size();
  j["chamber_count"] = b.chambers.size();
  j["type_tally"] = b.type_tally();
  json verts = json::array();
  for (std::size_t i = 0; i < b.vertices.size(); ++i) {
    json v;
    v["index"] = i;
    v["type"] = b.types[i];
    v["distance"] = b.distance[i];
    v["det_valuation"] = b.vertices[i].det_valuation();
    if (include_bases) {
      json rows = json::array();
      for (std::size_t r = 0; r < b.vertices[i].dim(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < b.vertices[i].dim(); ++c) row.push_back(b.vertices[i].entry(r, c));
        rows.push_back(row);
      }
      v["basis"] = rows;
    }
    verts.push_back(v);
  }
  j["vertices"] = verts;
  json edges = json::array();
  for (auto [u, v] : b.edges) edges.push_back({u, v});
  j["edges"] = edges;
  j["chambers"] = b.chambers;
  return j.dump();
}

}  // namespace atorsion
