#include "atorsion/exactint.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace atorsion {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) fail(ErrorKind::dimension, "ragged matrix initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void IntMatrix::append_row(std::span<const BigInt> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) fail(ErrorKind::dimension, "append_row: width mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) swap((*this)(i, a), (*this)(i, b));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && sgn((*this)(i, j)) != 0) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorKind::dimension, "matrix product: inner dimensions differ");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
    }
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

BigInt determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) fail(ErrorKind::dimension, "determinant: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t r = k + 1;
      while (r < n && sgn(m(r, k)) == 0) ++r;
      if (r == n) return 0;
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(v);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t SnfResult::rank() const {
  return static_cast<std::size_t>(
      std::count_if(invariant_factors.begin(), invariant_factors.end(),
                    [](const BigInt& d) { return sgn(d) != 0; }));
}

namespace {

// Quotient rounded to nearest, so remainders satisfy |r| <= |b|/2.
void nearest_quotient(BigInt& q, const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  BigInt twice = 2 * r;
  if (mpz_cmpabs(twice.get_mpz_t(), b.get_mpz_t()) > 0) q += 1;
}

// row[dst] -= q * row[src], restricted to columns [from, cols).
void row_submul(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q, std::size_t from) {
  for (std::size_t j = from; j < m.cols(); ++j)
    mpz_submul(m(dst, j).get_mpz_t(), q.get_mpz_t(), m(src, j).get_mpz_t());
}

void col_submul(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q, std::size_t from) {
  for (std::size_t i = from; i < m.rows(); ++i)
    mpz_submul(m(i, dst).get_mpz_t(), q.get_mpz_t(), m(i, src).get_mpz_t());
}

// Row Hermite form built one row at a time.  Each incoming row is reduced
// against the echelon rows kept so far, every entry above a pivot is kept in
// [0, pivot), and a pivot that does not divide the incoming entry is replaced
// by their gcd through a 2x2 Bezout step.  Keeping the echelon reduced is
// what stops the coefficient growth of plain elimination.  On return the
// echelon rows come first, in pivot order, followed by the zero rows.
class HermiteBuilder {
 public:
  HermiteBuilder(IntMatrix& a, IntMatrix& u) : A_(a), U_(u) {}

  void run() {
    for (std::size_t i = 0; i < A_.rows(); ++i) insert(i);
    std::vector<std::size_t> order = rows_;
    for (std::size_t i = 0; i < A_.rows(); ++i)
      if (std::find(rows_.begin(), rows_.end(), i) == rows_.end()) order.push_back(i);
    permute(A_, order);
    permute(U_, order);
  }

 private:
  void submul(std::size_t dst, std::size_t src, const BigInt& q, std::size_t from) {
    row_submul(A_, dst, src, q, from);
    row_submul(U_, dst, src, q, 0);
  }

  // Brings A(row, cols_[k]) into [0, pivot_k).
  void reduce(std::size_t row, std::size_t k) {
    const std::size_t c = cols_[k];
    if (sgn(A_(row, c)) == 0) return;
    mpz_fdiv_q(q_.get_mpz_t(), A_(row, c).get_mpz_t(), A_(rows_[k], c).get_mpz_t());
    if (sgn(q_) != 0) submul(row, rows_[k], q_, c);
  }

  void reduce_from(std::size_t row, std::size_t first) {
    for (std::size_t l = first; l < rows_.size(); ++l) reduce(row, l);
  }

  // Rows r and i become s*r + t*i and (-b/g)*r + (a/g)*i, where a, b are
  // their entries in column c and g = gcd(a, b) = s*a + t*b.
  void bezout(std::size_t r, std::size_t i, std::size_t c) {
    BigInt g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), A_(r, c).get_mpz_t(), A_(i, c).get_mpz_t());
    const BigInt x = A_(r, c) / g, y = A_(i, c) / g;
    combine(A_, r, i, s, t, x, y, c);
    combine(U_, r, i, s, t, x, y, 0);
  }

  static void combine(IntMatrix& m, std::size_t r, std::size_t i, const BigInt& s, const BigInt& t, const BigInt& x,
                      const BigInt& y, std::size_t from) {
    BigInt nr, ni;
    for (std::size_t j = from; j < m.cols(); ++j) {
      nr = s * m(r, j) + t * m(i, j);
      ni = x * m(i, j) - y * m(r, j);
      m(r, j).swap(nr);
      m(i, j).swap(ni);
    }
  }

  std::size_t leading(std::size_t row) const {
    for (std::size_t j = 0; j < A_.cols(); ++j)
      if (sgn(A_(row, j)) != 0) return j;
    return A_.cols();
  }

  void insert(std::size_t i) {
    std::size_t k = 0;
    for (; k < rows_.size(); ++k) {
      const std::size_t c = cols_[k];
      if (leading(i) < c) break;
      if (sgn(A_(i, c)) == 0) continue;
      const std::size_t r = rows_[k];
      if (mpz_divisible_p(A_(i, c).get_mpz_t(), A_(r, c).get_mpz_t())) {
        mpz_divexact(q_.get_mpz_t(), A_(i, c).get_mpz_t(), A_(r, c).get_mpz_t());
        submul(i, r, q_, c);
        continue;
      }
      bezout(r, i, c);
      if (sgn(A_(r, c)) < 0) negate(r);
      for (std::size_t j = 0; j < k; ++j) {
        reduce(rows_[j], k);
        reduce_from(rows_[j], k + 1);
      }
      reduce_from(r, k + 1);
    }
    const std::size_t lead = leading(i);
    if (lead == A_.cols()) return;
    if (sgn(A_(i, lead)) < 0) negate(i);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(k), i);
    cols_.insert(cols_.begin() + static_cast<std::ptrdiff_t>(k), lead);
    reduce_from(i, k + 1);
    for (std::size_t j = 0; j < k; ++j) {
      reduce(rows_[j], k);
      reduce_from(rows_[j], k + 1);
    }
  }

  void negate(std::size_t row) {
    for (std::size_t j = 0; j < A_.cols(); ++j) mpz_neg(A_(row, j).get_mpz_t(), A_(row, j).get_mpz_t());
    for (std::size_t j = 0; j < U_.cols(); ++j) mpz_neg(U_(row, j).get_mpz_t(), U_(row, j).get_mpz_t());
  }

  static void permute(IntMatrix& m, const std::vector<std::size_t>& order) {
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) out(i, j).swap(m(order[i], j));
    m = std::move(out);
  }

  IntMatrix& A_;
  IntMatrix& U_;
  std::vector<std::size_t> rows_, cols_;  // echelon rows and their pivot columns
  BigInt q_;
};

}  // namespace

SnfResult snf(const IntMatrix& a) {
  if (a.empty()) fail(ErrorKind::dimension, "snf: matrix must have at least one row and one column");
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix A = a;
  IntMatrix U = IntMatrix::identity(m);
  IntMatrix V = IntMatrix::identity(n);
  HermiteBuilder(A, U).run();
  const std::size_t diag = std::min(m, n);
  BigInt q;

  std::size_t t = 0;
  for (; t < diag; ++t) {
    bool finished = false;
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (sgn(A(i, j)) == 0) continue;
          if (pi == m || mpz_cmpabs(A(i, j).get_mpz_t(), A(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi == m) {
        finished = true;
        break;
      }
      A.swap_rows(t, pi);
      U.swap_rows(t, pi);
      A.swap_cols(t, pj);
      V.swap_cols(t, pj);

      const BigInt pivot = A(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(A(i, t)) == 0) continue;
        nearest_quotient(q, A(i, t), pivot);
        row_submul(A, i, t, q, t);
        row_submul(U, i, t, q, 0);
        if (sgn(A(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(A(t, j)) == 0) continue;
        nearest_quotient(q, A(t, j), pivot);
        col_submul(A, j, t, q, t);
        col_submul(V, j, t, q, 0);
        if (sgn(A(t, j)) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block; otherwise fold the
      // offending row into row t and keep reducing.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(A(i, j).get_mpz_t(), pivot.get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == m) break;
      for (std::size_t j = t; j < n; ++j) A(t, j) += A(bad, j);
      for (std::size_t j = 0; j < m; ++j) U(t, j) += U(bad, j);
    }
    if (finished) break;
    if (sgn(A(t, t)) < 0) {
      for (std::size_t j = t; j < n; ++j) A(t, j) = -A(t, j);
      for (std::size_t j = 0; j < m; ++j) U(t, j) = -U(t, j);
    }
  }

  SnfResult out{std::move(U), std::move(A), std::move(V), {}};
  out.invariant_factors.reserve(diag);
  for (std::size_t i = 0; i < diag; ++i) out.invariant_factors.push_back(out.D(i, i));
  return out;
}

std::string ElementOrder::to_string() const { return value ? value->get_str() : "infinite"; }

ElementOrder element_order(const SnfResult& dec, std::span<const BigInt> vector) {
  const std::size_t n = dec.V.rows();
  if (vector.size() != n) fail(ErrorKind::dimension, "element_order: vector length differs from generator count");
  // Coordinates of the vector in the basis adapted to the relation lattice.
  std::vector<BigInt> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(vector[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      mpz_addmul(y[j].get_mpz_t(), vector[i].get_mpz_t(), dec.V(i, j).get_mpz_t());
  }
  BigInt order = 1, g;
  for (std::size_t j = 0; j < n; ++j) {
    const bool has_factor = j < dec.invariant_factors.size() && sgn(dec.invariant_factors[j]) != 0;
    if (!has_factor) {
      if (sgn(y[j]) != 0) return ElementOrder{};
      continue;
    }
    const BigInt& d = dec.invariant_factors[j];
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), y[j].get_mpz_t());
    BigInt need = d / g;
    mpz_lcm(order.get_mpz_t(), order.get_mpz_t(), need.get_mpz_t());
  }
  return ElementOrder{order};
}

ElementOrder element_order(const IntMatrix& relations, std::size_t generator_index) {
  if (generator_index >= relations.cols())
    fail(ErrorKind::dimension, "element_order: generator index " + std::to_string(generator_index) +
                                   " out of range (" + std::to_string(relations.cols()) + " generators)");
  std::vector<BigInt> unit(relations.cols());
  unit[generator_index] = 1;
  if (relations.rows() == 0) return ElementOrder{};
  return element_order(snf(relations), unit);
}

bool in_row_span(const SnfResult& dec, std::span<const BigInt> vector) {
  auto ord = element_order(dec, vector);
  return ord.finite() && *ord.value == 1;
}

bool in_row_span(const IntMatrix& relations, std::span<const BigInt> vector) {
  if (relations.rows() == 0)
    return std::all_of(vector.begin(), vector.end(), [](const BigInt& v) { return sgn(v) == 0; });
  return in_row_span(snf(relations), vector);
}

namespace {

bool skippable(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

BigInt parse_integer(const std::string& token, std::size_t line_no) {
  BigInt v;
  std::string digits = token;
  if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
  if (digits.empty() || v.set_str(digits, 10) != 0)
    fail(ErrorKind::parse, "line " + std::to_string(line_no) + ": not an integer: '" + token + "'");
  return v;
}

}  // namespace

IntMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::size_t rows = 0, cols = 0;
  bool have_header = false;
  IntMatrix out;
  std::size_t filled = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string tok; ls >> tok;) tokens.push_back(tok);
    if (!have_header) {
      if (tokens.size() != 2) fail(ErrorKind::parse, "line " + std::to_string(line_no) + ": expected 'rows cols'");
      BigInt r = parse_integer(tokens[0], line_no), c = parse_integer(tokens[1], line_no);
      if (sgn(r) <= 0 || sgn(c) <= 0 || !r.fits_ulong_p() || !c.fits_ulong_p())
        fail(ErrorKind::parse, "line " + std::to_string(line_no) + ": dimensions must be positive");
      rows = r.get_ui();
      cols = c.get_ui();
      out = IntMatrix(rows, cols);
      have_header = true;
      continue;
    }
    if (filled == rows) fail(ErrorKind::parse, "line " + std::to_string(line_no) + ": more rows than declared");
    if (tokens.size() != cols)
      fail(ErrorKind::parse, "line " + std::to_string(line_no) + ": expected " + std::to_string(cols) +
                                 " entries, found " + std::to_string(tokens.size()));
    for (std::size_t j = 0; j < cols; ++j) out(filled, j) = parse_integer(tokens[j], line_no);
    ++filled;
  }
  if (!have_header) fail(ErrorKind::parse, "line " + std::to_string(line_no) + ": missing 'rows cols' header");
  if (filled != rows)
    fail(ErrorKind::parse, "line " + std::to_string(line_no) + ": expected " + std::to_string(rows) +
                               " rows, found " + std::to_string(filled));
  return out;
}

std::string format_matrix(const IntMatrix& a) {
  std::string s = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) s += ' ';
      s += a(i, j).get_str();
    }
    s += '\n';
  }
  return s;
}

}  // namespace atorsion
