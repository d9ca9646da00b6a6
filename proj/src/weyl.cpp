#include "atorsion/weyl.hpp"

#include <algorithm>
#include <numeric>

namespace atorsion {

Permutation::Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (unsigned v : images_) {
    if (v < 1 || v > images_.size() || seen[v])
      fail(ErrorKind::range, "not a permutation of 1.." + std::to_string(images_.size()));
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<unsigned> im(degree);
  std::iota(im.begin(), im.end(), 1u);
  return Permutation(std::move(im));
}

Permutation Permutation::longest(std::size_t degree) {
  std::vector<unsigned> im(degree);
  for (std::size_t i = 0; i < degree; ++i) im[i] = static_cast<unsigned>(degree - i);
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<unsigned> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<unsigned>(i + 1);
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) fail(ErrorKind::dimension, "permutation product: degrees differ");
  std::vector<unsigned> im(a.degree());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = a.images_[b.images_[i] - 1];
  return Permutation(std::move(im));
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(images_[i]);
  }
  return s + "]";
}

std::size_t length(const Permutation& w) {
  const auto& im = w.images();
  std::size_t inv = 0;
  for (std::size_t i = 0; i < im.size(); ++i)
    for (std::size_t j = i + 1; j < im.size(); ++j)
      if (im[i] > im[j]) ++inv;
  return inv;
}

Permutation cycle_perm(std::size_t n, std::size_t k) {
  if (k < 1 || k > n)
    fail(ErrorKind::range, "cycle_perm: need 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  std::vector<unsigned> im;
  im.reserve(n + 1);
  for (std::size_t v = k + 1; v <= n + 1; ++v) im.push_back(static_cast<unsigned>(v));
  for (std::size_t v = 1; v <= k; ++v) im.push_back(static_cast<unsigned>(v));
  return Permutation(std::move(im));
}

std::vector<Permutation> all_permutations(std::size_t degree) {
  std::vector<unsigned> im(degree);
  std::iota(im.begin(), im.end(), 1u);
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

BigInt poincare_polynomial(std::size_t degree, const BigInt& q) {
  if (degree < 1) fail(ErrorKind::range, "poincare_polynomial: degree must be at least 1");
  if (degree > 9) fail(ErrorKind::size, "poincare_polynomial: degree " + std::to_string(degree) + " exceeds 9");
  if (q < 1) fail(ErrorKind::range, "poincare_polynomial: q must be at least 1");
  // Tally lengths first, then evaluate.
  std::vector<unsigned long> by_length(degree * (degree - 1) / 2 + 1, 0);
  for (const auto& w : all_permutations(degree)) ++by_length[length(w)];
  BigInt total = 0, pw = 1;
  for (unsigned long c : by_length) {
    total += pw * c;
    pw *= q;
  }
  return total;
}

}  // namespace atorsion
