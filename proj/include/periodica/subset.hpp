#ifndef PERIODICA_SUBSET_HPP_
#define PERIODICA_SUBSET_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace periodica {

using Element = std::uint32_t;

// A subset of {0, ..., universe-1}. Universes up to 64 live in a single
// inline word; larger ones spill to a heap vector. Subsets only combine with
// subsets over the same universe.
class Subset {
 public:
  static constexpr std::size_t kWord = 64;

  Subset() = default;
  explicit Subset(std::size_t universe);

  static Subset full(std::size_t universe);
  static Subset of(std::size_t universe, std::initializer_list<Element> xs);
  static Subset of(std::size_t universe, const std::vector<Element>& xs);
  // Low 64 bits only; the universe must be at most 64.
  static Subset from_bits(std::size_t universe, std::uint64_t bits);

  std::size_t universe() const noexcept { return n_; }
  std::size_t word_count() const noexcept { return (n_ + kWord - 1) / kWord; }
  std::uint64_t word(std::size_t i) const noexcept {
    return n_ <= kWord ? small_ : large_[i];
  }
  // Bits of a universe of at most 64 elements.
  std::uint64_t bits() const;

  bool contains(Element x) const noexcept {
    return x < n_ && ((word(x / kWord) >> (x % kWord)) & 1U);
  }
  void insert(Element x);
  void erase(Element x);

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_subset_of(const Subset& other) const;
  bool intersects(const Subset& other) const;

  Subset& operator|=(const Subset& other);
  Subset& operator&=(const Subset& other);
  Subset& operator-=(const Subset& other);
  Subset complement() const;

  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

  friend bool operator==(const Subset& a, const Subset& b);
  // Numeric order of the bit strings, element 0 being the least significant
  // bit. This is the canonical order for every reported list of subsets.
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b);

  std::vector<Element> elements() const;
  // Smallest member, or universe() when empty.
  Element first() const noexcept;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < word_count(); ++w) {
      std::uint64_t bits = word(w);
      while (bits != 0) {
        f(static_cast<Element>(w * kWord + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  // "0x" followed by upper-case hex digits, most significant first.
  std::string to_hex() const;
  // "{0,2,4}"
  std::string to_list() const;

 private:
  std::uint64_t& word_ref(std::size_t i) noexcept {
    return n_ <= kWord ? small_ : large_[i];
  }
  void check_same(const Subset& other) const;
  void trim() noexcept;

  std::size_t n_ = 0;
  std::uint64_t small_ = 0;
  std::vector<std::uint64_t> large_;
};

// Calls f on every subset of `base`, in increasing numeric order.
template <typename F>
void for_each_subset_of(const Subset& base, F&& f) {
  std::vector<Element> pool = base.elements();
  if (pool.size() >= 63) {
    throw std::length_error("subset enumeration over more than 62 elements");
  }
  std::uint64_t total = std::uint64_t{1} << pool.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Subset y(base.universe());
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if ((mask >> i) & 1U) y.insert(pool[i]);
    }
    f(y);
  }
}

}  // namespace periodica

#endif  // PERIODICA_SUBSET_HPP_
