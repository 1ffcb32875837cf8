#ifndef PERIODICA_SUBSET_ALGEBRA_HPP_
#define PERIODICA_SUBSET_ALGEBRA_HPP_

#include <optional>
#include <utility>

#include "periodica/magma.hpp"
#include "periodica/subset.hpp"

namespace periodica {

// {a*b : a in A, b in B}. Throws SizeMismatch across carriers.
Subset product(const FiniteMagma& x, const Subset& a, const Subset& b);
// Elementwise inverses of a subset of a group.
Subset inverse_set(const FiniteMagma& g, const Subset& a);

// B with an identity adjoined. When the carrier has no left identity the
// result lives in with_identity(X) and `extended` is set.
struct Adjoined {
  FiniteMagma carrier;
  Subset set;
  Element identity;
  bool extended;
};
// With `l` absent: the unique left identity is used, X^1 is built when there
// is none, and several left identities is an error (NotLeftIdentity).
Adjoined adjoin_identity(const FiniteMagma& x, const Subset& b, std::optional<Element> l = {});

// |AB| == |A||B|.
bool is_direct(const FiniteMagma& x, const Subset& a, const Subset& b);
// Directness of (B with identity l adjoined) * E without building X^1: the
// product is BE u E and the factor has |B| or |B|+1 elements depending on
// whether l already lies in B. A missing l stands for a fresh identity.
bool is_direct_with_identity(const FiniteMagma& x, const Subset& b, const Subset& e,
                             std::optional<Element> l);

// A and BA are disjoint.
bool is_anti_left_transference(const FiniteMagma& x, const Subset& a, const Subset& b);

enum class SymmetryKind { Symmetric, AntiSymmetric, Neither };
const char* symmetry_name(SymmetryKind k);
// Compares B with its canonical inverse set.
SymmetryKind symmetry_kind(const FiniteMagma& x, const Subset& b, Element l);

// Direct factorization G = A*B with |A| = a, |B| = b in a finite group.
// Tries 1 in A and 1 in B first, then the unnormalized search.
// Throws NotGroup, BadFactorization (a*b != |G|), NotFound.
std::pair<Subset, Subset> search_factorization(const FiniteMagma& g, std::size_t a, std::size_t b);

}  // namespace periodica

#endif  // PERIODICA_SUBSET_ALGEBRA_HPP_
