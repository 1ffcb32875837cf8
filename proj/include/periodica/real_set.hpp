#ifndef PERIODICA_REAL_SET_HPP_
#define PERIODICA_REAL_SET_HPP_

#include <optional>
#include <vector>

#include "periodica/cell_set.hpp"
#include "periodica/exact_real.hpp"

namespace periodica::real {

// (Z + D) u (Z_{>=0} + E) with D inside [0, 1), E free of integer
// translates, and no element of E congruent mod 1 to an element of D.
// With `mirrored` set the represented set is the negation, which is lower
// periodic instead of upper periodic.
class UnitPeriodicRealSet {
 public:
  UnitPeriodicRealSet() = default;
  // Validates and canonicalizes; throws InvalidInput naming the violation.
  UnitPeriodicRealSet(std::vector<Cell> d, std::vector<Cell> e, bool mirrored = false);

  const CellSet& d() const noexcept { return d_; }
  const CellSet& e() const noexcept { return e_; }
  bool mirrored() const noexcept { return mirrored_; }
  bool all_points() const { return d_.all_points() && e_.all_points(); }

  friend bool operator==(const UnitPeriodicRealSet&, const UnitPeriodicRealSet&) = default;

 private:
  CellSet d_;
  CellSet e_;
  bool mirrored_ = false;
};

bool membership(const UnitPeriodicRealSet& a, const ExactReal& x);

// The set restricted to [lo, hi], as cells.
CellSet window_cells(const UnitPeriodicRealSet& a, const ExactReal& lo, const ExactReal& hi);

UnitPeriodicRealSet pk(const UnitPeriodicRealSet& a);
UnitPeriodicRealSet pf(const UnitPeriodicRealSet& a);
// Elements x of A with x - 1 outside A; for an upper periodic set this is E.
CellSet st(const UnitPeriodicRealSet& a);

enum class SupKind { Finite, ZeroConvention };
struct Supremum {
  SupKind kind;
  ExactReal value;
  bool attained;
};
// sup of A \ (A + 1), or the zero convention when that set is empty.
Supremum delta(const UnitPeriodicRealSet& a);

enum class RayKind { AllReals, ClosedRay, OpenRay, Empty };
const char* ray_kind_name(RayKind k);
struct RayInterval {
  RayKind kind;
  ExactReal lo;
};
// Shifts c for which every a in A keeps a - floor(a - c) inside A.
RayInterval coc(const UnitPeriodicRealSet& a);

// {x : x + n in A for all n >= 1}, which is A - 1.
UnitPeriodicRealSet summand_zplus(const UnitPeriodicRealSet& a);
// sup of summand \ A, or the zero convention.
Supremum sigma(const UnitPeriodicRealSet& a);

// Closed-form semigroup test; point cells only (Unsupported otherwise).
bool is_semigroup(const UnitPeriodicRealSet& a);

struct SemigroupCheck {
  bool criterion;
  // Pairwise sums from E may land on an E class with any integer offset.
  bool shift_agnostic_criterion;
  // Every pairwise sum of members in a window lies in A.
  bool oracle;
  bool agree() const { return criterion == oracle; }
};
SemigroupCheck semigroup_dual_check(const UnitPeriodicRealSet& a);

// Point cells only. Returns false when (D, E) does not describe a valid set.
bool is_additive_couple(const std::vector<ExactReal>& d, const std::vector<ExactReal>& e);

// E empty and frac(d - d') in D for all d, d'. Point cells only.
bool is_subgroup(const UnitPeriodicRealSet& a);

enum class RealClass { FirstClass, SecondClass, ThirdClass };
const char* real_class_name(RealClass c);
// Throws EmptySet.
RealClass classify_real(const UnitPeriodicRealSet& a);

// (H1 + H2) u H2 for a first class semigroup H1 and a second class one H2.
// Throws PreconditionFailed, Clash (H1 meets H2 - H2).
UnitPeriodicRealSet construct_mixed(const UnitPeriodicRealSet& h1, const UnitPeriodicRealSet& h2);

// A / b. Needs |b| + A' within A' for the unmirrored body A', so that the
// result is again unit periodic (NotRepresentable otherwise). Throws
// ZeroModulus.
UnitPeriodicRealSet rescale(const UnitPeriodicRealSet& a, const mpq_class& b);

enum class ProjectionKind { Kernel, Free };
struct Projection {
  ProjectionKind kind;
  ExactReal generator;
  mpz_class shift;
};
// x = generator + shift with the generator in D (any integer shift) or in E
// (non-negative shift). Throws NotInSet.
Projection projections(const UnitPeriodicRealSet& a, const ExactReal& x);

}  // namespace periodica::real

#endif  // PERIODICA_REAL_SET_HPP_
