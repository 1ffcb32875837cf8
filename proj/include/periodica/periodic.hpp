#ifndef PERIODICA_PERIODIC_HPP_
#define PERIODICA_PERIODIC_HPP_

#include <cstddef>
#include <optional>

#include "periodica/magma.hpp"
#include "periodica/subset.hpp"

namespace periodica {

// BA within A, A within BA, and BA == A.
bool is_upper_periodic(const FiniteMagma& x, const Subset& a, const Subset& b);
bool is_lower_periodic(const FiniteMagma& x, const Subset& a, const Subset& b);
bool is_periodic(const FiniteMagma& x, const Subset& a, const Subset& b);

struct Fixpoint {
  Subset set;
  std::size_t iterations;
};

// Largest B-periodic subset of A, as the greatest fixpoint of
// Y -> {y in Y : By within Y and y in BY}.
Fixpoint periodic_kernel_traced(const FiniteMagma& x, const Subset& a, const Subset& b);
Subset periodic_kernel(const FiniteMagma& x, const Subset& a, const Subset& b);

// Largest Y within A with BY within Y.
Fixpoint upper_periodic_kernel_traced(const FiniteMagma& x, const Subset& a, const Subset& b);
Subset upper_periodic_kernel(const FiniteMagma& x, const Subset& a, const Subset& b);

// {x : Bx within A}.
Subset summand(const FiniteMagma& x, const Subset& a, const Subset& b);
// Complement of B * complement(A); agrees with the kernel when B is a left
// subgroup. Throws NotLeftSubgroup.
Subset summand_closed_form(const FiniteMagma& x, const Subset& a, const Subset& b);

// A \ BA.
Subset start(const FiniteMagma& x, const Subset& a, const Subset& b);

enum class PeriodicTag { Periodic, PeriodicFree, Mixed };
const char* periodic_tag_name(PeriodicTag t);

struct PeriodicClass {
  PeriodicTag tag;
  Subset kernel;
  Subset free_part;
};
// The empty set is tagged Periodic.
PeriodicClass classify(const FiniteMagma& x, const Subset& a, const Subset& b);

struct WellStartedReport {
  // BA \ kernel within B * start, with the kernel taken for `bb`.
  bool well_started;
  // The same inclusion with the kernel replaced by the upper periodic kernel
  // and by the summand {x : bb*x within A}.
  bool via_upper_kernel;
  bool via_summand;
  // BA n (bb * complement(A)) within B * start.
  bool complement_form;
};
// Throws NotUpperPeriodic when BA is not within A.
WellStartedReport well_started_report(const FiniteMagma& x, const Subset& a, const Subset& bb,
                                      const Subset& b);
bool is_well_started(const FiniteMagma& x, const Subset& a, const Subset& bb, const Subset& b);

struct ThreeParts {
  Subset kernel;
  Subset shifted_free;  // B * (A \ kernel)
  Subset start;
};
// Splits A as kernel u B*free u start under the hypotheses
//   B*bb within bb, B^-1 within bb u B, B^-1 n bb nonempty, BA within A,
// where B^-1 is the canonical inverse for the left identity l (the unique
// left identity of the carrier when omitted).
// Throws PreconditionFailed naming the failed hypothesis.
ThreeParts decompose_three_parts(const FiniteMagma& x, const Subset& a, const Subset& bb,
                                 const Subset& b, std::optional<Element> l = {});

}  // namespace periodica

#endif  // PERIODICA_PERIODIC_HPP_
