#ifndef PERIODICA_MAGMA_HPP_
#define PERIODICA_MAGMA_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "periodica/subset.hpp"

namespace periodica {

// A finite set with a binary operation given by its Cayley table. Copies
// share the table and the lazily computed structural flags.
class FiniteMagma {
 public:
  // table[x * n + y] is the product x*y.
  FiniteMagma(std::size_t n, std::vector<Element> table, std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return n_; }
  Element op(Element x, Element y) const noexcept { return table_[x * n_ + y]; }
  const std::vector<Element>& table() const noexcept { return *table_ptr_; }
  const std::string& label(Element x) const { return labels_->at(x); }
  const std::vector<std::string>& labels() const noexcept { return *labels_; }
  // Element whose label is `name`; plain decimal indices are accepted too.
  std::optional<Element> find(const std::string& name) const;

  bool is_associative() const;
  const Subset& left_identities() const;
  // Two-sided identity, if any.
  std::optional<Element> identity() const;
  // Associative, with a two-sided identity, and every element invertible.
  bool is_group() const;
  // Inverse in a group; only meaningful when is_group().
  Element inverse(Element x) const;

  Subset empty_set() const { return Subset(n_); }
  Subset whole() const { return Subset::full(n_); }
  Subset singleton(Element x) const { return Subset::of(n_, {x}); }

  // Throws SizeMismatch unless `s` lives over this carrier.
  void check(const Subset& s) const;

  friend bool operator==(const FiniteMagma& a, const FiniteMagma& b);

 private:
  struct Flags;

  std::size_t n_;
  std::shared_ptr<const std::vector<Element>> table_ptr_;
  const Element* table_;
  std::shared_ptr<const std::vector<std::string>> labels_;
  std::shared_ptr<Flags> flags_;
};

// Builders. Element order is part of each builder's contract.
FiniteMagma cyclic(std::size_t n);
FiniteMagma left_zero(std::size_t n);
FiniteMagma right_zero(std::size_t n);
// All maps {1..k} -> {1..k} under composition (f*g = f after g). Bijections
// come first, identity leading, then the rest, each block in lexicographic
// order of image tuples. k is at most 4.
FiniteMagma function_monoid(std::size_t k);
// Symmetries of a regular n-gon: rotations r^0..r^(n-1) then reflections
// s r^0..s r^(n-1). Order 2n.
FiniteMagma dihedral(std::size_t n);
FiniteMagma direct_product(const FiniteMagma& a, const FiniteMagma& b);
// X with a fresh identity appended as element n, labelled "1".
FiniteMagma with_identity(const FiniteMagma& x);
// Multiplication of the ring Z/n.
FiniteMagma multiplicative_cyclic(std::size_t n);

}  // namespace periodica

#endif  // PERIODICA_MAGMA_HPP_
