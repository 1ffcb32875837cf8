#ifndef PERIODICA_REPRESENTATION_HPP_
#define PERIODICA_REPRESENTATION_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "periodica/magma.hpp"
#include "periodica/structure.hpp"
#include "periodica/subset.hpp"

namespace periodica {

// Elements of a group equal to their own inverse. Throws NotGroup.
Subset g_two(const FiniteMagma& g);

// G = positive u negative u G2 with negative the inverse of positive.
struct PositivePartition {
  Subset positive;
  Subset negative;
  Subset g2;
};

// Lazily walks the 2^k positive partitions, k being the number of inverse
// pairs {x, x^-1} with x != x^-1. Pair i is ordered by its smaller index and
// bit i of the counter puts the larger member on the positive side.
class PositivePartitions {
 public:
  // Throws NotGroup, TooManyPairs (more than 20 pairs).
  explicit PositivePartitions(const FiniteMagma& g);

  std::uint64_t size() const noexcept { return std::uint64_t{1} << pairs_.size(); }
  std::size_t pair_count() const noexcept { return pairs_.size(); }
  PositivePartition at(std::uint64_t mask) const;

  class iterator {
   public:
    using value_type = PositivePartition;
    using difference_type = std::ptrdiff_t;
    iterator(const PositivePartitions* owner, std::uint64_t mask) : owner_(owner), mask_(mask) {}
    PositivePartition operator*() const { return owner_->at(mask_); }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    bool operator==(const iterator& o) const { return mask_ == o.mask_; }

   private:
    const PositivePartitions* owner_;
    std::uint64_t mask_;
  };
  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size()}; }

 private:
  std::size_t n_;
  Subset g2_;
  std::vector<std::pair<Element, Element>> pairs_;
};

PositivePartitions enumerate_positive_partitions(const FiniteMagma& g);

// (G \ B)^-1 \ G2 == B and B misses G2.
bool is_positive_subset(const FiniteMagma& g, const Subset& b);
// A nonempty positive subset closed under the operation.
bool is_positive_subsemigroup(const FiniteMagma& g, const Subset& b);

// For A with (factor subgroup)*A == A: D = transversal n A. Throws NotPeriodic.
Subset periodic_representation(const FactorContext& ctx, const Subset& a);

struct RepresentationReport {
  Subset kernel;
  Subset d;
  Subset e;
  bool first_half_direct;
  bool second_half_direct;
  bool halves_disjoint;
  bool e_unique;
  bool d_unique_given_transversal;
  bool b_is_subsemigroup;
  bool well_started;
  // bb*D u B^1*E == A
  bool reconstructs;
};
// Requires BA within A (NotUpperPeriodic). Never throws because the
// representation fails; failures show up as false flags. Without a
// transversal, D is picked greedily inside the kernel and D is not claimed
// unique.
RepresentationReport representation_report(const FiniteMagma& x, const Subset& a,
                                           const Subset& bb, const Subset& b,
                                           const std::optional<Subset>& transversal = {});

// bb*D u <B>^1 * E.
Subset generate_upper_periodic(const FiniteMagma& x, const Subset& bb, const Subset& b,
                               const Subset& d, const Subset& e);

struct NormalFactorMonoidReport {
  std::optional<Element> identity;
  bool identity_is_subgroup_identity;
  bool transversal_times_subgroup_direct;
  bool transversal_times_subgroup_full;
  std::optional<Element> subgroup_meets_transversal;
};
// For a left-cancellative carrier whose factor subgroup is left normal
// (x*H within H*x for all x). Throws PreconditionFailed otherwise.
NormalFactorMonoidReport check_normal_factor_monoid(const FactorContext& ctx);

enum class GeneratorKind { Kernel, Free };
struct BiProjection {
  GeneratorKind kind;
  Element generator;
};
// Generator in D u E whose shift produces `point`, for A = H*D u B^1*E with
// both halves direct and disjoint. Throws PreconditionFailed, NotInSet.
BiProjection bi_projection(const FactorContext& ctx, const Subset& b, const Subset& a,
                           const Subset& d, const Subset& e, Element point);

// Experiment: for subsemigroups bb and B with B*bb == bb, is every
// A = bb*D u B^1*E well started, and is its bb-kernel exactly bb*D?
// Exhaustive over bb, B, D, E; throws SearchSpaceTooLarge above 5 elements.
struct StartedProbeCase {
  Subset bb;
  Subset b;
  Subset d;
  Subset e;
  bool well_started;
  bool kernel_is_generated;
};
struct StartedProbe {
  std::uint64_t cases = 0;
  std::uint64_t not_well_started = 0;
  std::uint64_t kernel_mismatch = 0;
  std::vector<StartedProbeCase> witnesses;  // first few failures
};
StartedProbe probe_generated_well_started(const FiniteMagma& x, std::size_t max_witnesses = 5);

}  // namespace periodica

#endif  // PERIODICA_REPRESENTATION_HPP_
