#pragma once

// Chambers of the spherical building of type A_{m-1} over F_q are full flags
// of F_q^m.  Two chambers are compared through their relative position, a
// permutation read off from intersection dimensions.

#include <cstddef>
#include <vector>

#include "atorsion/fqlinalg.hpp"
#include "atorsion/weyl.hpp"

namespace atorsion {

/// Position of G relative to F.  With d(i,j) = dim(F_i ∩ G_j), F_0 = G_0 = 0
/// and F_m = G_m = F_q^m, the result w satisfies w(j) = i exactly when
///   d(i,j) - d(i-1,j) - d(i,j-1) + d(i-1,j-1) = 1.
/// relative_position(F, F) is the identity; opposite flags give the longest
/// element.
Permutation relative_position(const Flag& f, const Flag& g);

/// Number of flags G with relative_position(base, G) = w.  Equals q^length(w).
std::size_t count_at_distance(const FieldSpec& field, std::size_t ambient_dim, const Flag& base,
                              const Permutation& w);

/// Same count against a precomputed flag list (avoids re-enumeration).
std::size_t count_at_distance(std::span<const Flag> all_flags, const Flag& base, const Permutation& w);

}  // namespace atorsion
