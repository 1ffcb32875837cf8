#include "periodica/subset.hpp"

#include <stdexcept>

#include "periodica/error.hpp"

namespace periodica {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::EmptyGenerator: return "EmptyGenerator";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NotGroup: return "NotGroup";
    case ErrorCode::NoSubgroup: return "NoSubgroup";
    case ErrorCode::NotLeftIdentity: return "NotLeftIdentity";
    case ErrorCode::NotLeftInvertible: return "NotLeftInvertible";
    case ErrorCode::NotLeftSubgroup: return "NotLeftSubgroup";
    case ErrorCode::NotLeftFactor: return "NotLeftFactor";
    case ErrorCode::BadFactorization: return "BadFactorization";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::NotUpperPeriodic: return "NotUpperPeriodic";
    case ErrorCode::NotPeriodic: return "NotPeriodic";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::TooManyPairs: return "TooManyPairs";
    case ErrorCode::NotInSet: return "NotInSet";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::NotATopology: return "NotATopology";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ZeroModulus: return "ZeroModulus";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::Clash: return "Clash";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::NotRepresentable: return "NotRepresentable";
  }
  return "Unknown";
}

Subset::Subset(std::size_t universe) : n_(universe) {
  if (n_ > kWord) large_.assign(word_count(), 0);
}

Subset Subset::full(std::size_t universe) {
  Subset s(universe);
  for (std::size_t w = 0; w < s.word_count(); ++w) s.word_ref(w) = ~std::uint64_t{0};
  s.trim();
  return s;
}

Subset Subset::of(std::size_t universe, std::initializer_list<Element> xs) {
  Subset s(universe);
  for (Element x : xs) s.insert(x);
  return s;
}

Subset Subset::of(std::size_t universe, const std::vector<Element>& xs) {
  Subset s(universe);
  for (Element x : xs) s.insert(x);
  return s;
}

Subset Subset::from_bits(std::size_t universe, std::uint64_t bits) {
  if (universe > kWord) {
    fail(ErrorCode::InvalidInput, "bit-word literal needs a universe of at most 64");
  }
  Subset s(universe);
  s.small_ = bits;
  if (universe < kWord && (bits >> universe) != 0) {
    fail(ErrorCode::InvalidInput, "subset literal has bits outside the universe");
  }
  return s;
}

std::uint64_t Subset::bits() const {
  if (n_ > kWord) throw std::logic_error("Subset::bits on a universe above 64");
  return small_;
}

void Subset::insert(Element x) {
  if (x >= n_) {
    fail(ErrorCode::InvalidInput,
         "element " + std::to_string(x) + " outside universe of size " + std::to_string(n_));
  }
  word_ref(x / kWord) |= std::uint64_t{1} << (x % kWord);
}

void Subset::erase(Element x) {
  if (x < n_) word_ref(x / kWord) &= ~(std::uint64_t{1} << (x % kWord));
}

std::size_t Subset::count() const noexcept {
  std::size_t c = 0;
  for (std::size_t w = 0; w < word_count(); ++w) c += std::popcount(word(w));
  return c;
}

bool Subset::empty() const noexcept {
  for (std::size_t w = 0; w < word_count(); ++w) {
    if (word(w) != 0) return false;
  }
  return true;
}

void Subset::check_same(const Subset& other) const {
  if (n_ != other.n_) {
    fail(ErrorCode::SizeMismatch, "subsets over universes of size " + std::to_string(n_) +
                                      " and " + std::to_string(other.n_));
  }
}

bool Subset::is_subset_of(const Subset& other) const {
  check_same(other);
  for (std::size_t w = 0; w < word_count(); ++w) {
    if ((word(w) & ~other.word(w)) != 0) return false;
  }
  return true;
}

bool Subset::intersects(const Subset& other) const {
  check_same(other);
  for (std::size_t w = 0; w < word_count(); ++w) {
    if ((word(w) & other.word(w)) != 0) return true;
  }
  return false;
}

Subset& Subset::operator|=(const Subset& other) {
  check_same(other);
  for (std::size_t w = 0; w < word_count(); ++w) word_ref(w) |= other.word(w);
  return *this;
}

Subset& Subset::operator&=(const Subset& other) {
  check_same(other);
  for (std::size_t w = 0; w < word_count(); ++w) word_ref(w) &= other.word(w);
  return *this;
}

Subset& Subset::operator-=(const Subset& other) {
  check_same(other);
  for (std::size_t w = 0; w < word_count(); ++w) word_ref(w) &= ~other.word(w);
  return *this;
}

Subset Subset::complement() const {
  Subset c(n_);
  for (std::size_t w = 0; w < word_count(); ++w) c.word_ref(w) = ~word(w);
  c.trim();
  return c;
}

void Subset::trim() noexcept {
  std::size_t rem = n_ % kWord;
  if (n_ == 0) {
    small_ = 0;
  } else if (rem != 0) {
    word_ref(word_count() - 1) &= (std::uint64_t{1} << rem) - 1;
  }
}

bool operator==(const Subset& a, const Subset& b) {
  if (a.n_ != b.n_) return false;
  for (std::size_t w = 0; w < a.word_count(); ++w) {
    if (a.word(w) != b.word(w)) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  for (std::size_t w = a.word_count(); w-- > 0;) {
    if (a.word(w) != b.word(w)) return a.word(w) <=> b.word(w);
  }
  return std::strong_ordering::equal;
}

std::vector<Element> Subset::elements() const {
  std::vector<Element> out;
  for_each([&](Element x) { out.push_back(x); });
  return out;
}

Element Subset::first() const noexcept {
  for (std::size_t w = 0; w < word_count(); ++w) {
    if (word(w) != 0) return static_cast<Element>(w * kWord + std::countr_zero(word(w)));
  }
  return static_cast<Element>(n_);
}

std::string Subset::to_hex() const {
  static constexpr char kDigits[] = "0123456789ABCDEF";
  std::string digits;
  std::size_t nibbles = (n_ + 3) / 4;
  for (std::size_t i = nibbles; i-- > 0;) {
    std::size_t bit = i * 4;
    unsigned v = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      if (contains(static_cast<Element>(bit + j))) v |= 1U << j;
    }
    digits.push_back(kDigits[v]);
  }
  std::size_t lead = digits.find_first_not_of('0');
  digits = lead == std::string::npos ? "0" : digits.substr(lead);
  return "0x" + digits;
}

std::string Subset::to_list() const {
  std::string out = "{";
  bool first_item = true;
  for_each([&](Element x) {
    if (!first_item) out += ',';
    out += std::to_string(x);
    first_item = false;
  });
  return out + "}";
}

}  // namespace periodica
