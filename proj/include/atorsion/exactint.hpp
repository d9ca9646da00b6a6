#pragma once

// Exact integer matrices, Smith normal form, and element orders in finitely
// presented abelian groups.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "atorsion/error.hpp"

namespace atorsion {

using BigInt = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<BigInt> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const BigInt> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  /// Appends a row; the first row on an empty 0x0 matrix fixes the width.
  void append_row(std::span<const BigInt> values);

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  IntMatrix transpose() const;
  bool is_diagonal() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Determinant by fraction-free (Bareiss) elimination.  Square input only.
BigInt determinant(const IntMatrix& a);

struct SnfResult {
  IntMatrix U;  // rows(A) x rows(A), unimodular
  IntMatrix D;  // rows(A) x cols(A), diagonal
  IntMatrix V;  // cols(A) x cols(A), unimodular
  /// Diagonal of D, normalised nonnegative: d_1 | d_2 | ... | d_r, then zeros.
  std::vector<BigInt> invariant_factors;

  std::size_t rank() const;
};

/// U * A * V = D with D in Smith normal form.  Pivots are chosen with
/// minimal absolute value.
SnfResult snf(const IntMatrix& a);

/// Order of an element in Z^cols / rowspan(relations).  `value` is empty for
/// an element of infinite order; 1 means the element is zero.
struct ElementOrder {
  std::optional<BigInt> value;

  bool finite() const noexcept { return value.has_value(); }
  std::string to_string() const;
};

/// Order of the image of the unit vector e_generator.
ElementOrder element_order(const IntMatrix& relations, std::size_t generator_index);

/// Order of the image of an arbitrary vector, given a precomputed SNF of the
/// relation matrix.
ElementOrder element_order(const SnfResult& decomposition, std::span<const BigInt> vector);

/// True when `vector` is an integer combination of the rows of `relations`.
bool in_row_span(const SnfResult& decomposition, std::span<const BigInt> vector);
bool in_row_span(const IntMatrix& relations, std::span<const BigInt> vector);

/// Text format: "rows cols" on the first line, then `rows` lines of `cols`
/// base-10 integers.  Blank lines and lines starting with '#' are ignored.
IntMatrix parse_matrix(std::string_view text);
std::string format_matrix(const IntMatrix& a);

}  // namespace atorsion
