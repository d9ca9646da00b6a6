// One line per acceptance criterion; exit status is nonzero if any fails.
// All randomness is seeded here, and the time budgets below are fixed.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "atorsion/complexes.hpp"
#include "atorsion/ktheory.hpp"
#include "atorsion/padic.hpp"
#include "atorsion/spherical.hpp"
#include "atorsion/weyl.hpp"
#include "oracles.hpp"

using namespace atorsion;

namespace {

constexpr double kWeylBudget = 1.0;
constexpr double kSphereBudget = 30.0;
constexpr double kBallBudget = 120.0;
constexpr double kSearchBudget = 600.0;
constexpr double kSnfBudget = 120.0;

// Collects failures for one criterion.
struct Verdict {
  std::ostringstream why;
  bool ok = true;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

oracle::Mat to_oracle(const IntMatrix& a) {
  oracle::Mat m(a.rows(), std::vector<mpz_class>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
  return m;
}

void weyl_lengths(Verdict& v) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      const auto c = cycle_perm(n, k);
      const std::string at = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      v.require(length(c) == k * (n + 1 - k), "length mismatch at " + at);
      v.require(oracle::bubble_swaps(c.images()) == k * (n + 1 - k), "bubble sort disagrees at " + at);
    }
}

void spherical_counts(Verdict& v) {
  for (auto [m, q] : {std::pair{3u, 2u}, {3u, 3u}, {3u, 4u}, {4u, 2u}}) {
    const auto field = FieldSpec::of_order(q);
    const auto flags = enumerate_full_flags(field, m);
    const auto base = standard_flag(field, m);
    const std::string at = "(m,q)=(" + std::to_string(m) + "," + std::to_string(q) + ")";
    v.require(BigInt(flags.size()) == oracle::flag_total(q, m), "flag total wrong at " + at);
    std::size_t sum = 0;
    for (const auto& w : all_permutations(m)) {
      const auto c = count_at_distance(flags, base, w);
      v.require(BigInt(c) == oracle::ipow(q, oracle::bubble_swaps(w.images())),
                "count at " + w.to_string() + " wrong at " + at);
      sum += c;
    }
    v.require(BigInt(sum) == oracle::flag_total(q, m), "counts do not sum to the flag total at " + at);
  }
}

void building_balls(Verdict& v) {
  for (unsigned p : {2u, 3u}) {
    const auto b = ball(2, p, 2);
    const std::size_t plane = p * p + p + 1;
    std::size_t interior = 0;
    for (std::size_t x = 0; x < b.vertices.size(); ++x) {
      if (!b.interior(x)) continue;
      ++interior;
      const std::string at = "p=" + std::to_string(p) + " vertex " + std::to_string(x);
      v.require(b.adjacency[x].size() == 2 * plane, "edge count wrong at " + at);
      v.require(b.chambers_at(x).size() == (p + 1) * plane, "chamber count wrong at " + at);
      const auto l = link(b, x).incidence;
      const auto mine = check_projective_plane(l);
      const auto theirs = oracle::projective_plane(l.points, l.lines, l.flags);
      v.require(mine.ok && mine.order == p, "link check failed at " + at);
      v.require(theirs.ok && theirs.order == p, "oracle rejects the link at " + at);
    }
    v.require(interior > 1, "no interior vertices for p=" + std::to_string(p));
  }
}

QuotientGraph graph_from(const std::vector<std::pair<std::size_t, std::size_t>>& edges, std::size_t n0) {
  QuotientGraph g;
  for (std::size_t i = 0; i < n0; ++i) g.add_vertex();
  for (auto [a, b] : edges) g.add_geometric_edge(a, b);
  return g;
}

void tree_engine(Verdict& v) {
  std::mt19937 rng(4242);
  for (int t = 0; t < 25; ++t) {
    const std::size_t n0 = 1 + rng() % 8;
    const auto g = graph_from(oracle::random_graph(rng, n0), n0);
    const std::string at = "graph " + std::to_string(t);
    v.require(g.connected() && g.low_degree_vertices().empty(), "generator produced a bad " + at);
    const auto order = order_of_identity(tree_relations(g));
    const long gap = std::labs(static_cast<long>(n0) - static_cast<long>(g.geometric_edge_count()));
    v.require(order.finite() && gap % order.value->get_si() == 0, "order does not divide |n0-n1| for " + at);
  }
  struct Example {
    const char* name;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t n0;
    long order;
  };
  for (const auto& ex : {Example{"bouquet-2", {{0, 0}, {0, 0}}, 1, 1},
                         Example{"theta-3", {{0, 1}, {0, 1}, {0, 1}}, 2, 1},
                         Example{"double-vertex-4-edges", {{0, 1}, {0, 1}, {0, 1}, {0, 1}}, 2, 2}}) {
    const auto p = tree_relations(graph_from(ex.edges, ex.n0));
    const auto mine = order_of_identity(p);
    const auto naive = oracle::element_order(to_oracle(p.relations), p.identity_index());
    v.require(naive && *naive == ex.order, std::string("oracle disagrees with the worked example ") + ex.name);
    v.require(mine.finite() && *mine.value == ex.order, std::string("engine disagrees on ") + ex.name);
  }
}

void torus_engine(Verdict& v) {
  const auto x = torus_complex(1);
  v.require(require_valid_links(x) == 1, "torus links are not of order 1");
  const auto p = a2_relations(x, false);
  v.require(p.generators.size() == 22, "expected 22 generators, got " + std::to_string(p.generators.size()));
  v.require(p.relations.rows() == 11, "expected 11 rows, got " + std::to_string(p.relations.rows()));
  const auto c = cell_counts(x, 1);
  v.require(in_row_span(p.relations, p.identity_multiple(BigInt(static_cast<long>(c.chi)))), "(n0-n1+n2)[I] is not in the row span");
}

void q2_engine(Verdict& v) {
  const auto found = search_presentation(2);
  v.require(found.complex.has_value(), "search found nothing");
  if (!found.complex) return;
  const auto& x = *found.complex;
  const auto l = complex_link(x, 0).incidence;
  const auto plane = oracle::projective_plane(l.points, l.lines, l.flags);
  v.require(plane.ok && plane.order == 2, "the link is not a Fano plane");
  const auto c = cell_counts(x, 2);
  v.require(c.n0 == 1 && c.n1 == 7 && c.n2 == 7, "cell counts are not (1,7,7)");
  v.require(c.chi == 1, "chi is not 1");
  for (unsigned k : {1u, 2u}) {
    const auto m = build_mk(x, k);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      BigInt row = 0, col = 0;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        row += m(i, j);
        col += m(j, i);
      }
      v.require(row == 4 && col == 4, "M_" + std::to_string(k) + " sums differ from 4 at cell " + std::to_string(i));
    }
  }
  const auto order = order_of_identity(a2_relations(x, true));
  v.require(order.finite() && *order.value == 1, "order of [I] is " + order.to_string());
}

void bound_table(Verdict& v) {
  const long qs[] = {2, 4, 5, 7, 8, 11};
  const long tabulated[] = {1, 1, 4, 2, 7, 10};
  for (int i = 0; i < 6; ++i) {
    const BigInt q = qs[i];
    // gcd of n0(q^2-1) and |chi| = (q-1)(q^2-1)/3
    const BigInt expect = gcd(q * q - 1, (q - 1) * (q * q - 1) / 3);
    const auto b = bound(2, q, 1);
    const std::string at = "q=" + q.get_str();
    v.require(b.m == expect, "bound " + b.m.get_str() + " differs from " + expect.get_str() + " at " + at);
    v.require(b.m % tabulated[i] == 0, "tabulated order does not divide the bound at " + at);
  }
  v.require(bound(2, 5, 1).m == 8, "bound(2,5,1) is not 8");
}

void chi_formulas(Verdict& v) {
  v.require(chi(2, 2, 1).value == 1 && chi(2, 2, 1).integral, "chi(2,2,1) is not 1");
  for (long q = 2; q <= 9; ++q)
    for (long n0 = 1; n0 <= 6; ++n0) {
      mpq_class expect(n0 * (1 - q), 2);
      expect.canonicalize();
      const auto c = chi(1, q, n0);
      v.require(c.value == expect && c.integral == (expect.get_den() == 1),
                "tree chi wrong at q=" + std::to_string(q) + " n0=" + std::to_string(n0));
    }
  for (unsigned n = 1; n <= 5; ++n)
    for (long q = 2; q <= 5; ++q) {
      const auto [num, den] = oracle::chi(n, q, 1);
      const auto c = chi(n, q, 1);
      v.require(c.value == mpq_class(num, den) && c.integral == (den == 1),
                "chi wrong at n=" + std::to_string(n) + " q=" + std::to_string(q));
    }
}

void snf_kernel(Verdict& v) {
  std::mt19937_64 rng(1000);
  std::uniform_int_distribution<long> entry(-1'000'000, 1'000'000);
  std::size_t oracle_runs = 0;
  for (int t = 0; t < 1000; ++t) {
    const bool small = t % 4 == 0;
    const std::size_t r = 1 + rng() % (small ? 6 : 50), c = 1 + rng() % (small ? 6 : 50);
    IntMatrix a(r, c);
    if (t % 10 == 3) {
      // Low rank: a product through a thin middle dimension.
      const std::size_t k = 1 + rng() % std::min(r, c);
      IntMatrix left(r, k), right(k, c);
      std::uniform_int_distribution<long> tiny(-30, 30);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < k; ++j) left(i, j) = tiny(rng);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < c; ++j) right(i, j) = tiny(rng);
      a = left * right;
    } else {
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) a(i, j) = entry(rng);
    }
    const auto s = snf(a);
    const std::string at = "matrix " + std::to_string(t);
    v.require(s.U * a * s.V == s.D && s.D.is_diagonal(), "U A V != D for " + at);
    v.require(abs(oracle::det(to_oracle(s.U))) == 1, "U not unimodular for " + at);
    v.require(abs(oracle::det(to_oracle(s.V))) == 1, "V not unimodular for " + at);
    const auto& d = s.invariant_factors;
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
      v.require(d[i] >= 0 && (d[i] == 0 ? d[i + 1] == 0 : d[i + 1] % d[i] == 0), "divisibility chain broken for " + at);
    if (r <= 6 && c <= 6) {
      ++oracle_runs;
      v.require(d == oracle::invariant_factors(to_oracle(a)), "determinantal divisors disagree for " + at);
    }
  }
  v.require(oracle_runs >= 250, "too few oracle comparisons");
}

}  // namespace

int main() {
  struct Criterion {
    const char* description;
    double budget;  // seconds, 0 for none
    std::function<void(Verdict&)> run;
  };
  const Criterion criteria[] = {
      {"Weyl lengths: length(c_k) = k(n+1-k) for 1 <= k <= n <= 8", kWeylBudget, weyl_lengths},
      {"spherical counts q^length(w) summing to the flag total", kSphereBudget, spherical_counts},
      {"balls n=2, p in {2,3}, radius 2: interior degrees, chambers and links", kBallBudget, building_balls},
      {"tree relations: random graphs and worked examples", 0, tree_engine},
      {"q=1 torus: 22 generators, 11 rows, (n0-n1+n2)[I] in the row span", 0, torus_engine},
      {"q=2 search: counts (1,7,7), chi 1, M_k sums 4, order of [I] 1", kSearchBudget, q2_engine},
      {"bound(2,q,1) for q in {2,4,5,7,8,11} and the tabulated orders divide it", 0, bound_table},
      {"chi formulas against the product oracle", 0, chi_formulas},
      {"SNF on 1000 random matrices up to 50x50", kSnfBudget, snf_kernel},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget > 0 && seconds > c.budget) {
      v.ok = false;
      v.why << (v.why.str().empty() ? "" : "; ") << "over the " << c.budget << " s budget";
    }
    std::printf("[%s] %d %s (%.3f s)%s%s\n", v.ok ? "PASS" : "FAIL", index, c.description, seconds,
                v.ok ? "" : ": ", v.ok ? "" : v.why.str().c_str());
    failures += !v.ok;
  }
  std::printf("%d of %d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
