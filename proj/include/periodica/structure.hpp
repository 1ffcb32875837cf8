#ifndef PERIODICA_STRUCTURE_HPP_
#define PERIODICA_STRUCTURE_HPP_

#include <optional>
#include <vector>

#include "periodica/magma.hpp"
#include "periodica/subset.hpp"

namespace periodica {

bool is_associative(const FiniteMagma& x);
Subset left_identities(const FiniteMagma& x);

// b*x1 == b*x2 implies x1 == x2, for every b in `by`.
bool is_left_cancellative_over(const FiniteMagma& x, const Subset& by);

// Closure of `gens` under the operation. Throws EmptyGenerator, NotAssociative.
Subset generate_subsemigroup(const FiniteMagma& x, const Subset& gens);

// True when `h` is closed and forms a group under the restricted operation.
bool is_subgroup_set(const FiniteMagma& x, const Subset& h);
// Identity of the group `h`, when it is one.
std::optional<Element> group_identity(const FiniteMagma& x, const Subset& h);
// Largest subgroup whose identity is the idempotent `e`.
Subset maximal_subgroup(const FiniteMagma& x, Element e);

// Least subgroup containing `gens`, or nullopt when none exists.
std::optional<Subset> generate_subgroup(const FiniteMagma& x, const Subset& gens);

// Every inclusion-minimal Y with: for each b in `b_set` some y in Y has y*b == l.
// Sorted in the canonical subset order, so front() is the canonical inverse.
// Throws NotLeftIdentity, NotLeftInvertible.
std::vector<Subset> inverses_of(const FiniteMagma& x, const Subset& b_set, Element l);
Subset canonical_inverse(const FiniteMagma& x, const Subset& b_set, Element l);

// Subgroup whose identity is a left identity of the (associative) carrier.
bool is_left_subgroup(const FiniteMagma& x, const Subset& h);
// Left subgroup h such that s == x*s with x in h forces x == 1_h.
// Throws NotLeftSubgroup.
bool is_left_factor_subgroup(const FiniteMagma& x, const Subset& h);

// Greedy right transversal: scan elements in index order and keep each one
// not yet covered by h*kept. Throws NotLeftFactor.
Subset right_transversal(const FiniteMagma& x, const Subset& h);

// A left factor subgroup with its identity and a chosen right transversal.
struct FactorContext {
  FiniteMagma carrier;
  Subset subgroup;
  Element identity;
  Subset transversal;
  bool is_left_factor;
};

// Uses the greedy transversal. Throws NotLeftSubgroup, NotLeftFactor.
FactorContext make_factor_context(const FiniteMagma& x, const Subset& h);
// Uses the given transversal, which must make h*transversal direct and full.
FactorContext make_factor_context(const FiniteMagma& x, const Subset& h, const Subset& transversal);

}  // namespace periodica

#endif  // PERIODICA_STRUCTURE_HPP_
