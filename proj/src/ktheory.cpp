#include "atorsion/ktheory.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "atorsion/error.hpp"

namespace atorsion {

std::string Generator::label() const {
  const auto i = std::to_string(index);
  switch (kind) {
    case GeneratorKind::identity: return "I";
    case GeneratorKind::cell: return "d" + i;
    case GeneratorKind::cell_bar: return "dbar" + i;
    case GeneratorKind::edge: return "e" + i;
    case GeneratorKind::edge_bar: return "ebar" + i;
    case GeneratorKind::edge_hat: return "ehat" + i;
  }
  return "?";
}

std::size_t RelationPresentation::find(GeneratorKind kind, std::size_t index) const {
  for (std::size_t g = 0; g < generators.size(); ++g)
    if (generators[g].kind == kind && generators[g].index == index) return g;
  return generators.size();
}

std::size_t RelationPresentation::identity_index() const {
  const auto i = find(GeneratorKind::identity, 0);
  if (i == generators.size()) fail(ErrorKind::structure, "presentation has no identity generator");
  return i;
}

std::vector<BigInt> RelationPresentation::identity_multiple(const BigInt& m) const {
  std::vector<BigInt> v(generators.size(), 0);
  v[identity_index()] = m;
  return v;
}

namespace {

// Collects sparse rows, dropping exact duplicates.
class RowBuilder {
 public:
  explicit RowBuilder(std::size_t width) : width_(width) {}

  void add(std::map<std::size_t, long> terms, const std::string& tag) {
    std::vector<long> row(width_, 0);
    for (auto [col, coeff] : terms) row[col] += coeff;
    if (std::all_of(row.begin(), row.end(), [](long c) { return c == 0; })) return;
    if (!seen_.insert(row).second) return;
    rows_.push_back(std::move(row));
    tags_.push_back(tag);
  }

  void finish(RelationPresentation& p) {
    p.relations = IntMatrix(rows_.size(), width_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (std::size_t c = 0; c < width_; ++c) p.relations(r, c) = rows_[r][c];
    p.origin = std::move(tags_);
  }

 private:
  std::size_t width_;
  std::set<std::vector<long>> seen_;
  std::vector<std::vector<long>> rows_;
  std::vector<std::string> tags_;
};

SnfResult decompose(const RelationPresentation& p) {
  if (p.relations.rows() == 0) {
    // No relations: the group is free.  A 1 x n zero row has the same span.
    IntMatrix zero(1, p.generators.size());
    return snf(zero);
  }
  return snf(p.relations);
}

BigInt power(const BigInt& b, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace

RelationPresentation tree_relations(const QuotientGraph& g) {
  if (!g.connected()) fail(ErrorKind::validation, "tree relations need a connected quotient graph");
  RelationPresentation p;
  p.generators.push_back({GeneratorKind::identity, 0});
  for (std::size_t e = 0; e < g.edges().size(); ++e) p.generators.push_back({GeneratorKind::edge, e});
  const std::size_t I = 0;
  auto col = [](std::size_t e) { return e + 1; };

  RowBuilder rows(p.generators.size());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::map<std::size_t, long> t{{I, -1}};
    for (std::size_t e = 0; e < g.edges().size(); ++e)
      if (g.edges()[e].origin == v) t[col(e)] += 1;
    rows.add(std::move(t), "vertex-star");
  }
  for (std::size_t e = 0; e < g.edges().size(); e += 2)
    rows.add({{I, -1}, {col(e), 1}, {col(g.edges()[e].reverse), 1}}, "edge-pair");
  rows.finish(p);
  return p;
}

RelationPresentation a2_relations(const A2Complex& x, bool include_mk) {
  require_valid_links(x);
  const std::size_t nc = x.cell_count(), ne = x.edge_count();
  RelationPresentation p;
  p.generators.push_back({GeneratorKind::identity, 0});
  for (std::size_t c = 0; c < nc; ++c) p.generators.push_back({GeneratorKind::cell, c});
  for (std::size_t c = 0; c < nc; ++c) p.generators.push_back({GeneratorKind::cell_bar, c});
  for (std::size_t e = 0; e < ne; ++e) p.generators.push_back({GeneratorKind::edge, e});
  for (std::size_t e = 0; e < ne; ++e) p.generators.push_back({GeneratorKind::edge_bar, e});
  for (std::size_t e = 0; e < ne; ++e) p.generators.push_back({GeneratorKind::edge_hat, e});

  const std::size_t I = 0;
  auto d = [](std::size_t c) { return 1 + c; };
  auto dbar = [nc](std::size_t c) { return 1 + nc + c; };
  auto e_ = [nc](std::size_t e) { return 1 + 2 * nc + e; };
  auto ebar = [nc, ne](std::size_t e) { return 1 + 2 * nc + ne + e; };
  auto ehat = [nc, ne](std::size_t e) { return 1 + 2 * nc + 2 * ne + e; };

  RowBuilder rows(p.generators.size());
  for (std::size_t v = 0; v < x.vertex_count(); ++v) {
    std::map<std::size_t, long> t{{I, -1}};
    for (std::size_t c = 0; c < nc; ++c)
      if (x.cell_vertex(c, 0) == v) t[d(c)] += 1;
    rows.add(std::move(t), "vertex-partition");
  }
  for (std::size_t ch = 0; ch < x.chamber_count(); ++ch) {
    std::map<std::size_t, long> t{{I, -1}};
    for (unsigned i = 0; i < 3; ++i) {
      t[d(A2Complex::cell_index(ch, i))] += 1;
      t[dbar(A2Complex::cell_index(ch, i))] += 1;
    }
    rows.add(std::move(t), "chamber-partition");
  }
  for (std::size_t e = 0; e < ne; ++e) rows.add({{I, -1}, {e_(e), 1}, {ebar(e), 1}, {ehat(e), 1}}, "edge-partition");
  for (std::size_t v = 0; v < x.vertex_count(); ++v) {
    std::map<std::size_t, long> tail{{I, -1}}, head{{I, -1}};
    for (std::size_t e = 0; e < ne; ++e) {
      if (x.edges()[e].tail == v) tail[e_(e)] += 1;
      if (x.edges()[e].head == v) head[ebar(e)] += 1;
    }
    rows.add(std::move(tail), "edge-tail-partition");
    rows.add(std::move(head), "edge-head-partition");
  }
  for (std::size_t e = 0; e < ne; ++e) {
    std::map<std::size_t, long> t{{ehat(e), 1}};
    for (std::size_t c = 0; c < nc; ++c)
      if (x.opposite_edge(c) == e) t[dbar(c)] -= 1;
    rows.add(std::move(t), "hat-split");
  }
  if (include_mk)
    for (unsigned k = 1; k <= 2; ++k) {
      const IntMatrix m = build_mk(x, k);
      for (std::size_t c = 0; c < nc; ++c) {
        std::map<std::size_t, long> t{{d(c), 1}};
        for (std::size_t r = 0; r < nc; ++r)
          if (m(r, c) != 0) t[d(r)] -= m(r, c).get_si();
        rows.add(std::move(t), "sector-refine-k" + std::to_string(k));
      }
    }
  rows.finish(p);
  return p;
}

ElementOrder order_of_identity(const RelationPresentation& p) {
  const auto i = p.identity_index();
  if (p.relations.rows() == 0) return {};
  return element_order(p.relations, i);
}

IdentityCheck tree_identity_check(const QuotientGraph& g, const RelationPresentation& p) {
  const BigInt m = BigInt(static_cast<unsigned long>(g.vertex_count())) -
                   BigInt(static_cast<unsigned long>(g.geometric_edge_count()));
  return {"(n0 - n1) I = 0", in_row_span(decompose(p), p.identity_multiple(m))};
}

std::vector<IdentityCheck> a2_identity_checks(const A2Complex& x, const RelationPresentation& p, unsigned q) {
  const SnfResult s = decompose(p);
  const auto counts = cell_counts(x);
  const BigInt n0 = static_cast<unsigned long>(counts.n0), n1 = static_cast<unsigned long>(counts.n1),
               n2 = static_cast<unsigned long>(counts.n2);
  std::vector<IdentityCheck> out;
  out.push_back({"(n0 - n1 + n2) I = 0", in_row_span(s, p.identity_multiple(n0 - n1 + n2))});

  auto sum_of = [&](GeneratorKind kind, const BigInt& identity_coeff) {
    auto v = p.identity_multiple(identity_coeff);
    for (std::size_t g = 0; g < p.generators.size(); ++g)
      if (p.generators[g].kind == kind) v[g] += 1;
    return v;
  };
  {
    auto v = sum_of(GeneratorKind::edge_hat, 0);
    for (std::size_t g = 0; g < p.generators.size(); ++g)
      if (p.generators[g].kind == GeneratorKind::cell_bar) v[g] -= 1;
    out.push_back({"sum ehat = sum dbar", in_row_span(s, v)});
  }
  out.push_back({"sum dbar = (n2 - n0) I", in_row_span(s, sum_of(GeneratorKind::cell_bar, n0 - n2))});
  out.push_back({"sum e = n0 I", in_row_span(s, sum_of(GeneratorKind::edge, -n0))});
  out.push_back({"sum ebar = n0 I", in_row_span(s, sum_of(GeneratorKind::edge_bar, -n0))});

  const bool has_mk = std::find(p.origin.begin(), p.origin.end(), "sector-refine-k1") != p.origin.end();
  if (has_mk) {
    const BigInt m = n0 * (BigInt(q) * q - 1);
    out.push_back({"n0 (q^2 - 1) I = 0", in_row_span(s, p.identity_multiple(m))});
  }
  return out;
}

std::vector<BigInt> annihilator_family(unsigned n, const BigInt& q, const BigInt& n0) {
  if (n < 1) fail(ErrorKind::range, "n must be at least 1");
  if (q < 2) fail(ErrorKind::range, "q must be at least 2");
  if (n0 < 1) fail(ErrorKind::range, "n0 must be at least 1");
  std::vector<BigInt> out;
  for (unsigned k = 1; k <= n; ++k) out.push_back(n0 * (power(q, static_cast<unsigned long>(k) * (n + 1 - k)) - 1));
  return out;
}

ChiResult chi(unsigned n, const BigInt& q, const BigInt& n0) {
  if (n < 1) fail(ErrorKind::range, "n must be at least 1");
  if (q < 2) fail(ErrorKind::range, "q must be at least 2");
  if (n0 < 1) fail(ErrorKind::range, "n0 must be at least 1");
  BigInt num = n0;
  for (unsigned i = 1; i <= n; ++i) num *= power(q, i) - 1;
  if (n % 2 == 1) num = -num;
  mpq_class value(num, BigInt(n + 1));
  value.canonicalize();
  return {value, value.get_den() == 1};
}

BoundResult bound(unsigned n, const BigInt& q, const BigInt& n0) {
  const auto family = annihilator_family(n, q, n0);  // validates the arguments
  const BigInt q2 = q * q - 1;
  BoundResult r;
  if (n != 2) {
    r.m = n % 2 == 1 ? BigInt(n0 * (q - 1)) : BigInt(n0 * q2);
    r.case_tag = n % 2 == 1 ? "n odd" : "n even";
  } else {
    const unsigned long residue = BigInt(q % 3).get_ui();
    if (residue == 0 && n0 % 3 != 0)
      fail(ErrorKind::validation, "q = " + q.get_str() + " is divisible by 3, so n0 must be a multiple of 3 (got " +
                                      n0.get_str() + ")");
    r.m = residue == 1 ? BigInt(n0 * q2) : BigInt(n0 * q2 / 3);
    r.case_tag = "q ≡ " + std::to_string(residue) + " mod 3";
  }

  // m must divide the gcd of the family (together with χ when n = 2).
  BigInt g = 0;
  for (const auto& f : family) g = gcd(g, f);
  if (n == 2) g = gcd(g, BigInt(abs(chi(n, q, n0).value.get_num())));
  if (g % r.m != 0)
    fail(ErrorKind::inconsistency, "bound " + r.m.get_str() + " does not divide the annihilator gcd " + g.get_str());
  return r;
}

}  // namespace atorsion
