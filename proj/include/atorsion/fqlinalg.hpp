#pragma once

// Arithmetic in GF(p^e) and linear algebra over it: row reduction, subspace
// and full-flag enumeration in canonical (lexicographic RREF) order.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "atorsion/exactint.hpp"

namespace atorsion {

/// A field element, encoded as the base-p number whose digits are the
/// coefficients c_0, c_1, ..., c_{e-1} of its residue polynomial.
using Elem = std::uint32_t;
using FqVector = std::vector<Elem>;

bool is_prime(std::uint64_t n);

class FieldSpec {
 public:
  /// `modulus` lists c_0..c_e of a monic degree-e polynomial; the trailing
  /// leading coefficient may be omitted.  Empty selects the built-in default.
  FieldSpec(unsigned p, unsigned e, std::vector<unsigned> modulus = {});

  /// Prime or prime-power order with the default modulus.
  static FieldSpec of_order(unsigned q);

  unsigned p() const noexcept { return p_; }
  unsigned e() const noexcept { return e_; }
  unsigned q() const noexcept { return q_; }
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

  Elem add(Elem a, Elem b) const { return tables_->add[a * q_ + b]; }
  Elem mul(Elem a, Elem b) const { return tables_->mul[a * q_ + b]; }
  Elem neg(Elem a) const { return tables_->neg[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  /// Multiplicative inverse; a must be nonzero.
  Elem inv(Elem a) const { return tables_->inv[a]; }

  std::string describe() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.modulus_ == b.modulus_;
  }

 private:
  struct Tables {
    std::vector<Elem> add, mul, neg, inv;
  };
  unsigned p_, e_, q_;
  std::vector<unsigned> modulus_;  // c_0..c_e, c_e = 1
  std::shared_ptr<const Tables> tables_;
};

/// Built-in moduli: x^2+x+1 over F_2 (q=4), x^3+x+1 over F_2 (q=8),
/// x^2+1 over F_3 (q=9).  Other prime powers use the lexicographically
/// first monic irreducible.
std::vector<unsigned> default_modulus(unsigned p, unsigned e);

/// Irreducibility over F_p by trial division against every monic polynomial
/// of degree 1..e/2.  Coefficients are c_0..c_e.
bool is_irreducible(unsigned p, const std::vector<unsigned>& poly);

class FqMatrix {
 public:
  FqMatrix(FieldSpec field, std::size_t rows, std::size_t cols);
  FqMatrix(FieldSpec field, std::size_t cols, std::span<const FqVector> rows);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  friend bool operator==(const FqMatrix& a, const FqMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  FieldSpec field_;
  std::size_t rows_, cols_;
  std::vector<Elem> data_;
};

struct RrefResult {
  FqMatrix matrix;  // same shape as the input, zero rows last
  std::size_t rank;
};

RrefResult rref(const FqMatrix& m);

/// A subspace of F_q^m stored by its canonical RREF basis.
class Subspace {
 public:
  /// Span of arbitrary vectors (the zero subspace when `vectors` is empty).
  Subspace(const FieldSpec& field, std::size_t ambient_dim, std::span<const FqVector> vectors);

  static Subspace whole(const FieldSpec& field, std::size_t ambient_dim);

  const FieldSpec& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const FqMatrix& basis() const noexcept { return basis_; }
  std::vector<FqVector> basis_vectors() const;

  bool contains(std::span<const Elem> v) const;
  bool contains(const Subspace& other) const;

  friend Subspace operator+(const Subspace& a, const Subspace& b);
  friend std::size_t intersection_dim(const Subspace& a, const Subspace& b);

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
  /// Orders by dimension, then lexicographically on the RREF entries.
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

 private:
  explicit Subspace(FqMatrix basis) : basis_(std::move(basis)) {}
  FqMatrix basis_;
};

/// Gaussian binomial [m choose d]_q.
BigInt gaussian_binomial(std::uint64_t q, std::size_t m, std::size_t d);

/// Every d-dimensional subspace of F_q^m, once, ordered lexicographically on
/// the RREF basis entries.
std::vector<Subspace> enumerate_subspaces(const FieldSpec& field, std::size_t ambient_dim, std::size_t dim);

/// Full flag 0 < V_1 < ... < V_{m-1} < F_q^m, dim V_i = i.
struct Flag {
  std::size_t ambient_dim = 1;
  std::vector<Subspace> subspaces;

  friend bool operator==(const Flag&, const Flag&) = default;
};

/// The flag of coordinate subspaces span(e_1..e_i).
Flag standard_flag(const FieldSpec& field, std::size_t ambient_dim);

/// Product of q-integers [1]_q [2]_q ... [m]_q.
BigInt flag_count(std::uint64_t q, std::size_t ambient_dim);

/// All full flags of F_q^m, lexicographic on the sequence of RREF bases.
/// Refuses (size error) when flag_count exceeds `max_flags`.
std::vector<Flag> enumerate_full_flags(const FieldSpec& field, std::size_t ambient_dim,
                                       std::size_t max_flags = 2'000'000);

}  // namespace atorsion
