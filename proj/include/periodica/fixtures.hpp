#ifndef PERIODICA_FIXTURES_HPP_
#define PERIODICA_FIXTURES_HPP_

#include <string>
#include <vector>

#include "periodica/magma.hpp"

namespace periodica {

struct NamedMagma {
  std::string name;
  FiniteMagma magma;
};

// Maps on {1,2} with elements e (identity), s (swap), c1, c2 (constants).
FiniteMagma fixture_m2();
// All maps on {1,2,3}.
FiniteMagma fixture_f3();
FiniteMagma fixture_l2();
FiniteMagma fixture_s3();

// Small associative carriers used by exhaustive checks, up to `max_n` elements.
std::vector<NamedMagma> small_fixtures(std::size_t max_n);
// Groups produced by the builders, up to the given order.
std::vector<NamedMagma> builder_groups(std::size_t max_order);

// "cyclic:6", "dihedral:3", "function_monoid:2", "left_zero:2",
// "right_zero:3", "m2", "f3", "l2", "s3", "product:cyclic:2:cyclic:3",
// "with_identity:left_zero:2". Throws InvalidInput.
FiniteMagma build_named(const std::string& spec);

}  // namespace periodica

#endif  // PERIODICA_FIXTURES_HPP_
