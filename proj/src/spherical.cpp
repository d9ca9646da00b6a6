#include "atorsion/spherical.hpp"

namespace atorsion {

namespace {

const Subspace& member(const Flag& f, std::size_t i, const Subspace& zero, const Subspace& whole) {
  if (i == 0) return zero;
  if (i == f.ambient_dim) return whole;
  return f.subspaces[i - 1];
}

}  // namespace

Permutation relative_position(const Flag& f, const Flag& g) {
  const std::size_t m = f.ambient_dim;
  if (g.ambient_dim != m || f.subspaces.size() + 1 != m || g.subspaces.size() + 1 != m)
    fail(ErrorKind::dimension, "relative_position: flags live in different ambient spaces");
  if (m == 1) return Permutation::identity(1);
  const FieldSpec& field = f.subspaces.front().field();
  if (!(g.subspaces.front().field() == field)) fail(ErrorKind::field, "relative_position: flags over different fields");

  const Subspace zero(field, m, std::span<const FqVector>{});
  const Subspace whole = Subspace::whole(field, m);
  std::vector<std::vector<long>> d(m + 1, std::vector<long>(m + 1, 0));
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      d[i][j] = static_cast<long>(intersection_dim(member(f, i, zero, whole), member(g, j, zero, whole)));

  std::vector<unsigned> images(m, 0);
  for (std::size_t j = 1; j <= m; ++j)
    for (std::size_t i = 1; i <= m; ++i)
      if (d[i][j] - d[i - 1][j] - d[i][j - 1] + d[i - 1][j - 1] == 1) images[j - 1] = static_cast<unsigned>(i);
  return Permutation(std::move(images));
}

std::size_t count_at_distance(std::span<const Flag> all_flags, const Flag& base, const Permutation& w) {
  if (w.degree() != base.ambient_dim)
    fail(ErrorKind::dimension, "count_at_distance: permutation degree differs from ambient dimension");
  std::size_t count = 0;
  for (const auto& g : all_flags)
    if (relative_position(base, g) == w) ++count;
  return count;
}

std::size_t count_at_distance(const FieldSpec& field, std::size_t m, const Flag& base, const Permutation& w) {
  if (w.degree() != m)
    fail(ErrorKind::dimension, "count_at_distance: permutation degree differs from ambient dimension");
  const auto flags = enumerate_full_flags(field, m);
  return count_at_distance(flags, base, w);
}

}  // namespace atorsion
