#ifndef PERIODICA_TOPOLOGY_HPP_
#define PERIODICA_TOPOLOGY_HPP_

#include <gmpxx.h>

#include <string>
#include <vector>

#include "periodica/magma.hpp"
#include "periodica/subset.hpp"

namespace periodica {

// nbhd[y] = smallest set containing y and closed under left multiplication
// by B; in an associative carrier this is <B>^1 y.
std::vector<Subset> minimal_neighborhoods(const FiniteMagma& x, const Subset& b);

// Number of Y within `within` such that y in Y forces nbhd[y] n within into Y.
mpz_class count_closed_families(const std::vector<Subset>& nbhd, const Subset& within);

enum class TopologyKind { UpperPeriodic, Periodic };
const char* topology_kind_name(TopologyKind k);

// Conditions under which the B-periodic sets form a topology. The transfer
// condition has two readings: every A with BA == A has bA == A for each b in
// B, or literally bA == B. Both are checked over every subset.
struct TopologyConditions {
  bool left_cancellative;
  bool transfer_each_b;
  bool transfer_literal;
};
// Exhaustive over subsets; throws TooLarge when the carrier exceeds `max_n`.
TopologyConditions periodic_topology_conditions(const FiniteMagma& x, const Subset& b,
                                                std::size_t max_n = 20);

// Alexandrov topology given by minimal neighborhoods: reach[y] is the
// smallest open set containing y.
struct AlexandrovTopology {
  FiniteMagma carrier;
  Subset generator;
  std::vector<Subset> reach;
  TopologyKind kind;
  TopologyConditions conditions;
};

// Periodic kind throws NotATopology unless left cancellativity and the
// each-b transfer reading hold.
AlexandrovTopology build_topology(const FiniteMagma& x, const Subset& b,
                                  TopologyKind kind = TopologyKind::UpperPeriodic);
bool is_open(const AlexandrovTopology& t, const Subset& a);
// Throws TooLarge past 24 strongly connected classes.
mpz_class count_opens(const AlexandrovTopology& t);

struct SemigroupTopologyReport {
  bool b_is_subsemigroup;
  bool left_normal;  // xB within Bx for every x
  // nbhd(x) * nbhd(y) within nbhd(xy) for every x, y.
  bool continuous;
  // The sets B^1 x are open, and the product inclusion holds for them.
  bool basis_open;
  bool basis_continuous;
};
SemigroupTopologyReport is_topological_semigroup(const FiniteMagma& x, const Subset& b);

struct GroupTopologyReport {
  bool normal_subgroup;
  bool multiplication_continuous;
  bool inversion_continuous;
  bool topological_group;
  std::vector<Subset> cosets;  // distinct Bx, in canonical order
};
// Throws NotGroup.
GroupTopologyReport is_topological_group(const FiniteMagma& g, const Subset& b);

// Opens are the sets with XA within A.
AlexandrovTopology ideal_topology(const FiniteMagma& x);

std::string to_dot(const AlexandrovTopology& t);

}  // namespace periodica

#endif  // PERIODICA_TOPOLOGY_HPP_
