#pragma once

// Slow, independent reference computations.  Nothing here calls into the
// library except for plain data types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Mat = std::vector<std::vector<mpz_class>>;

// Fraction-free elimination with row swaps.
inline mpz_class det(Mat m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

inline void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      fn(idx);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1}, D_k
// the gcd of all k x k minors.  Returns min(rows, cols) values.
inline std::vector<mpz_class> invariant_factors(const Mat& a) {
  const std::size_t m = a.size(), n = a.empty() ? 0 : a[0].size();
  std::vector<mpz_class> out;
  mpz_class prev = 1;
  for (std::size_t k = 1; k <= std::min(m, n); ++k) {
    mpz_class g = 0;
    subsets(m, k, [&](const std::vector<std::size_t>& rs) {
      subsets(n, k, [&](const std::vector<std::size_t>& cs) {
        Mat minor(k, std::vector<mpz_class>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor[i][j] = a[rs[i]][cs[j]];
        g = gcd(g, det(minor));
      });
    });
    if (g == 0) {
      out.resize(std::min(m, n), 0);
      return out;
    }
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// Row echelon basis of the integer row lattice by repeated division with
// remainder in each column (no transforms, no reduction above pivots).
inline Mat echelon(Mat rows) {
  Mat basis;
  const std::size_t n = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < n && !rows.empty(); ++c) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))) best = i;
      if (best == rows.size()) break;
      bool others = false;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == best || rows[i][c] == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[best][c].get_mpz_t());
        for (std::size_t j = c; j < n; ++j) rows[i][j] -= q * rows[best][j];
        others = others || rows[i][c] != 0;
      }
      if (!others) {
        basis.push_back(rows[best]);
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
        break;
      }
    }
  }
  return basis;
}

inline bool in_lattice(const Mat& basis, std::vector<mpz_class> v) {
  for (const auto& row : basis) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    if (!mpz_divisible_p(v[c].get_mpz_t(), row[c].get_mpz_t())) return false;
    const mpz_class q = v[c] / row[c];
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= q * row[j];
  }
  return std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return x == 0; });
}

// Smallest m >= 1 with m e_index in the row lattice (up to `limit`), or
// nothing when e_index is outside the rational span.
inline std::optional<long> element_order(const Mat& relations, std::size_t index, long limit = 100000) {
  const std::size_t n = relations.empty() ? 0 : relations[0].size();
  const Mat basis = echelon(relations);
  Mat extended = relations;
  std::vector<mpz_class> e(n, 0);
  e[index] = 1;
  extended.push_back(e);
  if (echelon(extended).size() > basis.size()) return std::nullopt;
  for (long m = 1; m <= limit; ++m) {
    e[index] = m;
    if (in_lattice(basis, e)) return m;
  }
  return -1;
}

// Inversions by counting adjacent swaps in a bubble sort.
inline unsigned long bubble_swaps(std::vector<unsigned> w) {
  unsigned long swaps = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] > w[i + 1]) {
        std::swap(w[i], w[i + 1]);
        ++swaps;
        changed = true;
      }
  }
  return swaps;
}

inline mpz_class ipow(const mpz_class& b, unsigned long e) {
  mpz_class r = 1;
  for (unsigned long i = 0; i < e; ++i) r *= b;
  return r;
}

// |GL_m(q)| / |B|: full flags counted as cosets of the Borel subgroup.
inline mpz_class flag_total(unsigned long q, std::size_t m) {
  mpz_class gl = 1;
  for (std::size_t i = 0; i < m; ++i) gl *= ipow(q, m) - ipow(q, i);
  mpz_class borel = ipow(q - 1, m) * ipow(q, m * (m - 1) / 2);
  return gl / borel;
}

// Number of d-dimensional subspaces of F_q^m: ordered independent d-tuples
// divided by |GL_d(q)|.
inline mpz_class subspace_total(unsigned long q, std::size_t m, std::size_t d) {
  mpz_class tuples = 1, gl = 1;
  for (std::size_t i = 0; i < d; ++i) {
    tuples *= ipow(q, m) - ipow(q, i);
    gl *= ipow(q, d) - ipow(q, i);
  }
  return tuples / gl;
}

// χ = (-1)^n/(n+1) n0 (q-1)^n [1]_q [2]_q ... [n]_q, returned as numerator
// and denominator in lowest terms.
inline std::pair<mpz_class, mpz_class> chi(unsigned n, const mpz_class& q, const mpz_class& n0) {
  mpz_class num = n0 * ipow(q - 1, n);
  for (unsigned i = 1; i <= n; ++i) {
    mpz_class qint = 0;
    for (unsigned j = 0; j < i; ++j) qint += ipow(q, j);
    num *= qint;
  }
  if (n % 2 == 1) num = -num;
  mpz_class den = n + 1;
  const mpz_class g = gcd(num, den);
  return {num / g, den / g};
}

// Projective-plane axioms checked pair by pair on an incidence list.
struct PlaneVerdict {
  bool ok;
  unsigned order;
};
inline PlaneVerdict projective_plane(std::size_t points, std::size_t lines,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& flags) {
  std::set<std::pair<std::size_t, std::size_t>> inc(flags.begin(), flags.end());
  if (inc.size() != flags.size() || points == 0 || points != lines) return {false, 0};
  std::vector<std::size_t> pdeg(points, 0), ldeg(lines, 0);
  for (auto [p, l] : inc) {
    ++pdeg[p];
    ++ldeg[l];
  }
  const std::size_t k = pdeg[0];
  if (k < 2) return {false, 0};
  for (auto d : pdeg)
    if (d != k) return {false, 0};
  for (auto d : ldeg)
    if (d != k) return {false, 0};
  const std::size_t q = k - 1;
  if (points != q * q + q + 1) return {false, 0};
  for (std::size_t a = 0; a < points; ++a)
    for (std::size_t b = a + 1; b < points; ++b) {
      std::size_t common = 0;
      for (std::size_t l = 0; l < lines; ++l) common += inc.count({a, l}) && inc.count({b, l});
      if (common != 1) return {false, 0};
    }
  for (std::size_t a = 0; a < lines; ++a)
    for (std::size_t b = a + 1; b < lines; ++b) {
      std::size_t common = 0;
      for (std::size_t p = 0; p < points; ++p) common += inc.count({p, a}) && inc.count({p, b});
      if (common != 1) return {false, 0};
    }
  return {true, static_cast<unsigned>(q)};
}

// Random connected multigraph on n0 vertices with every degree >= 3: a random
// spanning tree, then random extra edges (loops and parallels allowed).
inline std::vector<std::pair<std::size_t, std::size_t>> random_graph(std::mt19937& rng, std::size_t n0) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> degree(n0, 0);
  auto add = [&](std::size_t u, std::size_t v) {
    edges.emplace_back(u, v);
    ++degree[u];
    ++degree[v];
  };
  for (std::size_t v = 1; v < n0; ++v) add(std::uniform_int_distribution<std::size_t>(0, v - 1)(rng), v);
  std::uniform_int_distribution<std::size_t> pick(0, n0 - 1);
  for (;;) {
    auto low = std::find_if(degree.begin(), degree.end(), [](std::size_t d) { return d < 3; });
    if (low == degree.end()) break;
    add(static_cast<std::size_t>(low - degree.begin()), pick(rng));
  }
  const std::size_t extra = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
  for (std::size_t i = 0; i < extra; ++i) add(pick(rng), pick(rng));
  return edges;
}

}  // namespace oracle
