#pragma once

// Relation systems for the class [I] of the identity in the universal
// relation group: the free abelian group on the indicator classes modulo the
// boundary relations of a quotient graph or Ã₂ complex.  That group maps onto
// the true K₀ group, so every order computed here is an upper bound for the
// order of [I] in K₀.  Also closed forms for the bound m and for χ.

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "atorsion/complexes.hpp"
#include "atorsion/exactint.hpp"

namespace atorsion {

enum class GeneratorKind { identity, cell, cell_bar, edge, edge_bar, edge_hat };

struct Generator {
  GeneratorKind kind;
  std::size_t index;  // cell or edge index; 0 for the identity

  std::string label() const;
};

struct RelationPresentation {
  std::vector<Generator> generators;
  IntMatrix relations;              // one column per generator
  std::vector<std::string> origin;  // one tag per row, e.g. "vertex-partition"

  std::size_t identity_index() const;
  /// Index of a generator, or generators.size() if absent.
  std::size_t find(GeneratorKind kind, std::size_t index) const;
  /// Coefficient vector with the given multiple of [I].
  std::vector<BigInt> identity_multiple(const BigInt& m) const;
};

/// Per vertex v: Σ_{o(e)=v} [e] - [I] ("vertex-star"); per geometric edge:
/// [e] + [ē] - [I] ("edge-pair").  The graph must be connected.
RelationPresentation tree_relations(const QuotientGraph& g);

/// The Ã₂ system on generators I, d and d̄ per directed cell, e, ē and ê per
/// edge.  Row families, in order:
///   vertex-partition     Σ_{d(0)=x} [d] - [I]
///   chamber-partition    Σ_{d in chamber} ([d] + [d̄]) - [I]
///   edge-partition       [e] + [ē] + [ê] - [I]
///   edge-tail-partition  Σ_{tail e = x} [e] - [I]
///   edge-head-partition  Σ_{head e = x} [ē] - [I]
///   hat-split            [ê] - Σ_{d opposite e} [d̄]
///   sector-refine-k1/k2  [c] - Σ_d M_k(d,c) [d]   (with include_mk)
/// Duplicate rows are dropped; rows are otherwise stored as assembled.
RelationPresentation a2_relations(const A2Complex& x, bool include_mk);

ElementOrder order_of_identity(const RelationPresentation& p);

/// Row-span membership of a consequence of the relations.
struct IdentityCheck {
  std::string name;
  bool holds;
};

/// Checks the identities the relations imply on a validated complex:
/// (n0 - n1 + n2)[I] = 0, the global hat sum Σ[ê] = Σ[d̄], and, with M_k
/// rows present, n0(q^2 - 1)[I] = 0.
std::vector<IdentityCheck> a2_identity_checks(const A2Complex& x, const RelationPresentation& p, unsigned q);

/// (n0 - n1)[I] = 0 for a tree quotient.
IdentityCheck tree_identity_check(const QuotientGraph& g, const RelationPresentation& p);

struct BoundResult {
  BigInt m;
  std::string case_tag;  // "n odd", "n even", "q ≡ 2 mod 3", ...
};

/// The annihilating multiple m of [I] for an Ãₙ group of order q with n0
/// vertex orbits.
BoundResult bound(unsigned n, const BigInt& q, const BigInt& n0);

/// (n0 (q^{k(n+1-k)} - 1)) for k = 1..n.
std::vector<BigInt> annihilator_family(unsigned n, const BigInt& q, const BigInt& n0);

struct ChiResult {
  mpq_class value;
  bool integral;
};

/// χ = (-1)^n/(n+1) · n0 · (q-1)(q^2-1)...(q^n-1); for n = 1 this is
/// n0(1-q)/2.
ChiResult chi(unsigned n, const BigInt& q, const BigInt& n0);

}  // namespace atorsion
