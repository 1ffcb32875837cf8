#ifndef PERIODICA_EXACT_REAL_HPP_
#define PERIODICA_EXACT_REAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <string>

namespace periodica::real {

// q0 + sum of q_m * sqrt(m) over distinct squarefree m >= 2. Zero
// coefficients are never stored, so equal values have equal maps.
class ExactReal {
 public:
  ExactReal() = default;
  ExactReal(long v) : rational_(v) {}  // NOLINT(google-explicit-constructor)
  ExactReal(const mpq_class& v) : rational_(v) { rational_.canonicalize(); }  // NOLINT

  // coefficient * sqrt(radicand); square factors are pulled out.
  static ExactReal root(std::uint64_t radicand, const mpq_class& coefficient = 1);
  // Parses "p/q" or an integer.
  static mpq_class parse_rational(const std::string& text);

  const mpq_class& rational() const noexcept { return rational_; }
  const std::map<std::uint64_t, mpq_class>& radicals() const noexcept { return radicals_; }
  bool is_rational() const noexcept { return radicals_.empty(); }
  bool is_zero() const noexcept { return radicals_.empty() && rational_ == 0; }

  ExactReal operator-() const;
  ExactReal& operator+=(const ExactReal& o);
  ExactReal& operator-=(const ExactReal& o);
  ExactReal& operator*=(const mpq_class& factor);
  friend ExactReal operator+(ExactReal a, const ExactReal& b) { return a += b; }
  friend ExactReal operator-(ExactReal a, const ExactReal& b) { return a -= b; }
  friend ExactReal operator*(ExactReal a, const mpq_class& f) { return a *= f; }
  friend ExactReal operator*(const mpq_class& f, ExactReal a) { return a *= f; }

  // Product of two values; radicals multiply as sqrt(a)sqrt(b) = sqrt(ab).
  ExactReal times(const ExactReal& o) const;

  int sign() const;
  mpz_class floor() const;
  ExactReal frac() const { return *this - ExactReal(mpq_class(floor())); }
  bool is_integer() const { return is_rational() && rational_.get_den() == 1; }

  // Rational lower and upper bounds at 2^-bits resolution per radical.
  void bounds(unsigned bits, mpq_class& lo, mpq_class& hi) const;
  double approx() const;

  // "3/2", "1+sqrt(2)", "-1/2*sqrt(3)".
  std::string to_string() const;

  friend bool operator==(const ExactReal& a, const ExactReal& b) {
    return a.rational_ == b.rational_ && a.radicals_ == b.radicals_;
  }
  friend std::strong_ordering operator<=>(const ExactReal& a, const ExactReal& b);

 private:
  void add_radical(std::uint64_t m, const mpq_class& q);

  mpq_class rational_ = 0;
  std::map<std::uint64_t, mpq_class> radicals_;
};

// Exact three-way comparison. Terminates because square roots of distinct
// squarefree integers are linearly independent over the rationals.
std::strong_ordering exact_compare(const ExactReal& a, const ExactReal& b);

// b * floor(x / b) and x - that. Throws ZeroModulus.
ExactReal floor_b(const ExactReal& x, const mpq_class& b);
ExactReal frac_b(const ExactReal& x, const mpq_class& b);

}  // namespace periodica::real

#endif  // PERIODICA_EXACT_REAL_HPP_
