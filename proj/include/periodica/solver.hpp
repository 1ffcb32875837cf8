#ifndef PERIODICA_SOLVER_HPP_
#define PERIODICA_SOLVER_HPP_

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "periodica/magma.hpp"
#include "periodica/subset.hpp"

namespace periodica {

enum class SolutionKind { Upper, UpperInside, Sandwich };

// Solutions of an inequality, described by the largest solution `top`.
// `all` is filled (in canonical subset order) when |top| is at most 20.
struct SolutionSet {
  SolutionKind kind;
  Subset top;
  mpz_class count;
  std::optional<std::vector<Subset>> all;
};

inline constexpr std::size_t kEnumerateLimit = 20;

// BY within A: exactly the subsets of {x : Bx within A}.
SolutionSet solve_upper(const FiniteMagma& x, const Subset& b, const Subset& a);
// B^1 Y within A: subsets of the summand that also lie in A.
SolutionSet solve_upper_inside(const FiniteMagma& x, const Subset& b, const Subset& a);
// BY within Y within A: the upper periodic subsets of the upper kernel.
SolutionSet solve_sandwich(const FiniteMagma& x, const Subset& b, const Subset& a);

bool satisfies_upper(const FiniteMagma& x, const Subset& b, const Subset& a, const Subset& y);
bool satisfies_upper_inside(const FiniteMagma& x, const Subset& b, const Subset& a, const Subset& y);
bool satisfies_sandwich(const FiniteMagma& x, const Subset& b, const Subset& a, const Subset& y);

// All Y with BY == A, in canonical order. Throws SearchSpaceTooLarge when the
// summand has more than 22 elements.
std::vector<Subset> solve_equation(const FiniteMagma& x, const Subset& b, const Subset& a);

struct SplitSolutions {
  std::vector<Subset> solutions;
  bool unique;
};
// All Y with (bb*D u B*Y) and Y disjoint and their union equal to A.
// Throws SearchSpaceTooLarge above 20 elements.
SplitSolutions solve_split(const FiniteMagma& x, const Subset& bb, const Subset& b,
                           const Subset& d, const Subset& a);

// Ring Z/n: a nonempty I is an ideal when I+I within I, (Z/n)*I within I,
// I*(Z/n) within I and I == -I, each read as a subset inequality.
bool is_ring_ideal_by_inequalities(std::size_t n, const Subset& ideal);

}  // namespace periodica

#endif  // PERIODICA_SOLVER_HPP_
