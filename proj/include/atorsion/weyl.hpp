#pragma once

// The symmetric group S_m as the spherical Weyl group of type A_{m-1}.
// Permutations are kept in one-line notation, 1-indexed.

#include <cstddef>
#include <string>
#include <vector>

#include "atorsion/exactint.hpp"

namespace atorsion {

class Permutation {
 public:
  /// Validates that `images` is a bijection of {1..m}.
  explicit Permutation(std::vector<unsigned> images);

  static Permutation identity(std::size_t degree);
  /// The longest element m, m-1, ..., 1.
  static Permutation longest(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  /// w(i) for 1 <= i <= m.
  unsigned operator()(std::size_t i) const { return images_.at(i - 1); }
  const std::vector<unsigned>& images() const noexcept { return images_; }

  Permutation inverse() const;
  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  std::string to_string() const;  // "[2,3,1]"

 private:
  std::vector<unsigned> images_;
};

/// Number of inversions, i.e. Coxeter length in the adjacent transpositions.
std::size_t length(const Permutation& w);

/// (k+1, k+2, ..., n+1, 1, 2, ..., k), of degree n+1; requires 1 <= k <= n.
Permutation cycle_perm(std::size_t n, std::size_t k);

/// All of S_m in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(std::size_t degree);

/// Sum over S_m of q^length(w), by enumeration.  Refuses m > 9.
BigInt poincare_polynomial(std::size_t degree, const BigInt& q);

}  // namespace atorsion
