#include "atorsion/fqlinalg.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace atorsion {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<unsigned>;  // c_0..c_deg, may carry trailing zeros

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned inverse_mod_p(unsigned a, unsigned p) {
  // p is prime, so a^(p-2) is the inverse.
  std::uint64_t r = 1, b = a % p;
  for (unsigned k = p - 2; k; k >>= 1) {
    if (k & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<unsigned>(r);
}

// Remainder of a modulo b over F_p; b nonzero.
Poly poly_mod(Poly a, Poly b, unsigned p) {
  trim(a);
  trim(b);
  const unsigned lead_inv = inverse_mod_p(b.back(), p);
  while (a.size() >= b.size()) {
    const unsigned factor = static_cast<unsigned>(std::uint64_t(a.back()) * lead_inv % p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = static_cast<unsigned>((a[shift + i] + std::uint64_t(p - factor) * b[i]) % p);
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = static_cast<unsigned>((c[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  trim(c);
  return c;
}

Poly decode(Elem x, unsigned p, unsigned e) {
  Poly d(e);
  for (unsigned i = 0; i < e; ++i) {
    d[i] = x % p;
    x /= p;
  }
  return d;
}

Elem encode(const Poly& d, unsigned p) {
  Elem x = 0;
  for (std::size_t i = d.size(); i-- > 0;) x = x * p + d[i];
  return x;
}

constexpr unsigned kMaxFieldOrder = 1024;

}  // namespace

bool is_irreducible(unsigned p, const std::vector<unsigned>& poly_in) {
  Poly poly = poly_in;
  trim(poly);
  if (poly.size() < 2) return false;
  const std::size_t deg = poly.size() - 1;
  if (deg == 1) return true;
  // Every monic divisor candidate of degree 1..deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly cand(d + 1);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        cand[i] = static_cast<unsigned>(c % p);
        c /= p;
      }
      cand[d] = 1;
      if (poly_mod(poly, cand, p).empty()) return false;
    }
  }
  return true;
}

std::vector<unsigned> default_modulus(unsigned p, unsigned e) {
  if (e == 1) return {0, 1};
  if (p == 2 && e == 2) return {1, 1, 1};
  if (p == 2 && e == 3) return {1, 1, 0, 1};
  if (p == 3 && e == 2) return {1, 0, 1};
  std::uint64_t count = 1;
  for (unsigned i = 0; i < e; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly cand(e + 1);
    std::uint64_t c = code;
    for (unsigned i = 0; i < e; ++i) {
      cand[i] = static_cast<unsigned>(c % p);
      c /= p;
    }
    cand[e] = 1;
    if (is_irreducible(p, cand)) return cand;
  }
  fail(ErrorKind::field, "no irreducible polynomial found");
}

FieldSpec::FieldSpec(unsigned p, unsigned e, std::vector<unsigned> modulus) : p_(p), e_(e) {
  if (!is_prime(p)) fail(ErrorKind::field, "field characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) fail(ErrorKind::field, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) fail(ErrorKind::field, "field order exceeds " + std::to_string(kMaxFieldOrder));
  }
  q_ = static_cast<unsigned>(q);

  if (modulus.empty()) {
    modulus = default_modulus(p, e);
  } else {
    if (modulus.size() == e) modulus.push_back(1);
    if (modulus.size() != e + 1)
      fail(ErrorKind::field, "modulus must have " + std::to_string(e) + " or " + std::to_string(e + 1) + " coefficients");
    for (unsigned c : modulus)
      if (c >= p) fail(ErrorKind::field, "modulus coefficient " + std::to_string(c) + " is not reduced mod " + std::to_string(p));
    if (modulus.back() != 1) fail(ErrorKind::field, "modulus must be monic");
    if (!is_irreducible(p, modulus))
      fail(ErrorKind::field, "modulus is reducible over F_" + std::to_string(p));
  }
  modulus_ = std::move(modulus);

  auto t = std::make_shared<Tables>();
  t->add.resize(std::size_t(q_) * q_);
  t->mul.resize(std::size_t(q_) * q_);
  t->neg.resize(q_);
  t->inv.assign(q_, 0);
  std::vector<Poly> digits(q_);
  for (Elem a = 0; a < q_; ++a) digits[a] = decode(a, p_, e_);
  for (Elem a = 0; a < q_; ++a) {
    Poly n(e_);
    for (unsigned i = 0; i < e_; ++i) n[i] = (p_ - digits[a][i]) % p_;
    t->neg[a] = encode(n, p_);
    for (Elem b = 0; b < q_; ++b) {
      Poly s(e_);
      for (unsigned i = 0; i < e_; ++i) s[i] = (digits[a][i] + digits[b][i]) % p_;
      t->add[a * q_ + b] = encode(s, p_);
      Poly m = poly_mod(poly_mul(digits[a], digits[b], p_), modulus_, p_);
      m.resize(e_, 0);
      t->mul[a * q_ + b] = encode(m, p_);
    }
  }
  for (Elem a = 1; a < q_; ++a)
    for (Elem b = 1; b < q_; ++b)
      if (t->mul[a * q_ + b] == 1) {
        t->inv[a] = b;
        break;
      }
  tables_ = std::move(t);
}

FieldSpec FieldSpec::of_order(unsigned q) {
  for (unsigned p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    if (!is_prime(p)) break;
    unsigned e = 0, r = q;
    while (r % p == 0) {
      r /= p;
      ++e;
    }
    if (r != 1) break;
    return FieldSpec(p, e);
  }
  fail(ErrorKind::field, std::to_string(q) + " is not a prime power");
}

std::string FieldSpec::describe() const {
  std::string s = "GF(" + std::to_string(q_) + ")";
  if (e_ > 1) {
    s += " = F_" + std::to_string(p_) + "[x]/(";
    bool first = true;
    for (std::size_t i = modulus_.size(); i-- > 0;) {
      if (modulus_[i] == 0) continue;
      if (!first) s += "+";
      first = false;
      if (modulus_[i] != 1 || i == 0) s += std::to_string(modulus_[i]);
      if (i >= 1) s += "x";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    s += ")";
  }
  return s;
}

FqMatrix::FqMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FqMatrix::FqMatrix(FieldSpec field, std::size_t cols, std::span<const FqVector> rows)
    : field_(std::move(field)), rows_(rows.size()), cols_(cols) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) fail(ErrorKind::dimension, "FqMatrix: row length differs from column count");
    for (Elem x : r) {
      if (x >= field_.q()) fail(ErrorKind::field, "FqMatrix: entry is not a field element");
      data_.push_back(x);
    }
  }
}

RrefResult rref(const FqMatrix& in) {
  FqMatrix m = in;
  const FieldSpec& f = m.field();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(rank, j));
    const Elem s = f.inv(m(rank, col));
    for (std::size_t j = col; j < m.cols(); ++j) m(rank, j) = f.mul(m(rank, j), s);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || m(i, col) == 0) continue;
      const Elem c = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(c, m(rank, j)));
    }
    ++rank;
  }
  return {std::move(m), rank};
}

Subspace::Subspace(const FieldSpec& field, std::size_t ambient_dim, std::span<const FqVector> vectors)
    : basis_(field, ambient_dim, 0) {
  FqMatrix m(field, ambient_dim, vectors);
  auto [r, rank] = rref(m);
  std::vector<FqVector> rows;
  rows.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) rows.emplace_back(r.row(i).begin(), r.row(i).end());
  basis_ = FqMatrix(field, ambient_dim, rows);
}

Subspace Subspace::whole(const FieldSpec& field, std::size_t ambient_dim) {
  std::vector<FqVector> rows(ambient_dim, FqVector(ambient_dim, 0));
  for (std::size_t i = 0; i < ambient_dim; ++i) rows[i][i] = 1;
  return Subspace(FqMatrix(field, ambient_dim, rows));
}

std::vector<FqVector> Subspace::basis_vectors() const {
  std::vector<FqVector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.emplace_back(basis_.row(i).begin(), basis_.row(i).end());
  return out;
}

bool Subspace::contains(std::span<const Elem> v) const {
  if (v.size() != ambient_dim()) fail(ErrorKind::dimension, "Subspace::contains: vector length mismatch");
  // Reduce v against the RREF basis; each pivot is the first nonzero column.
  FqVector w(v.begin(), v.end());
  const FieldSpec& f = field();
  for (std::size_t i = 0; i < dim(); ++i) {
    auto row = basis_.row(i);
    std::size_t pc = 0;
    while (row[pc] == 0) ++pc;
    const Elem c = w[pc];
    if (c == 0) continue;
    for (std::size_t j = pc; j < w.size(); ++j) w[j] = f.sub(w[j], f.mul(c, row[j]));
  }
  return std::all_of(w.begin(), w.end(), [](Elem x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (!(a.field() == b.field()) || a.ambient_dim() != b.ambient_dim())
    fail(ErrorKind::field, "subspace sum: mismatched ambient spaces");
  auto rows = a.basis_vectors();
  auto more = b.basis_vectors();
  rows.insert(rows.end(), more.begin(), more.end());
  return Subspace(a.field(), a.ambient_dim(), rows);
}

std::size_t intersection_dim(const Subspace& a, const Subspace& b) {
  return a.dim() + b.dim() - (a + b).dim();
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    auto ra = a.basis_.row(i), rb = b.basis_.row(i);
    if (auto c = std::lexicographical_compare_three_way(ra.begin(), ra.end(), rb.begin(), rb.end()); c != 0)
      return c;
  }
  return std::strong_ordering::equal;
}

BigInt gaussian_binomial(std::uint64_t q, std::size_t m, std::size_t d) {
  if (d > m) return 0;
  BigInt num = 1, den = 1, qq = q;
  for (std::size_t i = 0; i < d; ++i) {
    BigInt a, b;
    mpz_pow_ui(a.get_mpz_t(), qq.get_mpz_t(), m - i);
    mpz_pow_ui(b.get_mpz_t(), qq.get_mpz_t(), i + 1);
    num *= a - 1;
    den *= b - 1;
  }
  if (q == 1) {
    // Limit q -> 1 is the ordinary binomial coefficient.
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), m, d);
    return r;
  }
  return num / den;
}

std::vector<Subspace> enumerate_subspaces(const FieldSpec& field, std::size_t m, std::size_t d) {
  if (d > m)
    fail(ErrorKind::dimension, "enumerate_subspaces: dimension " + std::to_string(d) + " exceeds ambient " +
                                   std::to_string(m));
  std::vector<Subspace> out;
  const unsigned q = field.q();
  std::vector<std::size_t> pivots(d);
  // Walk every pivot-column set; within one, every filling of the free slots
  // (positions right of a pivot that are not pivot columns).
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t k, std::size_t start) {
    if (k == d) {
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = pivots[i] + 1; j < m; ++j)
          if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) free.emplace_back(i, j);
      std::vector<Elem> fill(free.size(), 0);
      for (;;) {
        std::vector<FqVector> rows(d, FqVector(m, 0));
        for (std::size_t i = 0; i < d; ++i) rows[i][pivots[i]] = 1;
        for (std::size_t s = 0; s < free.size(); ++s) rows[free[s].first][free[s].second] = fill[s];
        out.emplace_back(field, m, rows);
        std::size_t s = 0;
        while (s < fill.size() && ++fill[s] == q) fill[s++] = 0;
        if (s == fill.size()) break;
      }
      return;
    }
    for (std::size_t c = start; c + (d - k) <= m; ++c) {
      pivots[k] = c;
      choose(k + 1, c + 1);
    }
  };
  choose(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Flag standard_flag(const FieldSpec& field, std::size_t m) {
  Flag f;
  f.ambient_dim = m;
  std::vector<FqVector> rows;
  for (std::size_t i = 1; i < m; ++i) {
    FqVector v(m, 0);
    v[i - 1] = 1;
    rows.push_back(v);
    f.subspaces.emplace_back(field, m, rows);
  }
  return f;
}

BigInt flag_count(std::uint64_t q, std::size_t m) {
  BigInt total = 1;
  for (std::size_t k = 1; k <= m; ++k) {
    BigInt qint = 0, pw = 1;
    for (std::size_t i = 0; i < k; ++i) {
      qint += pw;
      pw *= q;
    }
    total *= qint;
  }
  return total;
}

std::vector<Flag> enumerate_full_flags(const FieldSpec& field, std::size_t m, std::size_t max_flags) {
  if (m < 1) fail(ErrorKind::dimension, "enumerate_full_flags: ambient dimension must be at least 1");
  const BigInt expected = flag_count(field.q(), m);
  if (expected > BigInt(static_cast<unsigned long>(max_flags)))
    fail(ErrorKind::size, "enumerate_full_flags: " + expected.get_str() + " flags exceed the limit of " +
                              std::to_string(max_flags));
  const auto points = enumerate_subspaces(field, m, 1);

  // Superspaces of V one dimension up, cached by V.
  std::map<Subspace, std::vector<Subspace>> cover;
  auto covers = [&](const Subspace& v) -> const std::vector<Subspace>& {
    auto it = cover.find(v);
    if (it != cover.end()) return it->second;
    std::vector<Subspace> up;
    for (const auto& pt : points) {
      if (v.contains(pt)) continue;
      Subspace w = v + pt;
      if (std::find(up.begin(), up.end(), w) == up.end()) up.push_back(std::move(w));
    }
    std::sort(up.begin(), up.end());
    return cover.emplace(v, std::move(up)).first->second;
  };

  std::vector<Flag> out;
  Flag current;
  current.ambient_dim = m;
  std::function<void(const Subspace&)> extend = [&](const Subspace& v) {
    if (v.dim() + 1 == m || m == 1) {
      out.push_back(current);
      return;
    }
    for (const auto& w : covers(v)) {
      current.subspaces.push_back(w);
      extend(w);
      current.subspaces.pop_back();
    }
  };
  if (m == 1) {
    out.push_back(current);
    return out;
  }
  for (const auto& pt : points) {
    current.subspaces.push_back(pt);
    extend(pt);
    current.subspaces.pop_back();
  }
  return out;
}

}  // namespace atorsion
