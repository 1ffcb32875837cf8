#include "periodica/exact_real.hpp"

#include <stdexcept>

#include "periodica/error.hpp"

namespace periodica::real {

namespace {

std::string rational_text(const mpq_class& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

}  // namespace

mpq_class ExactReal::parse_rational(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (c != ' ') t.push_back(c);
  }
  if (!t.empty() && t.front() == '+') t.erase(0, 1);
  std::size_t slash = t.find('/');
  auto valid_int = [](const std::string& s) {
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    return s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos;
  };
  std::string num = slash == std::string::npos ? t : t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-') {
    fail(ErrorCode::InvalidInput, "malformed rational \"" + text + "\"");
  }
  mpz_class d(den);
  if (d == 0) fail(ErrorCode::InvalidInput, "zero denominator in \"" + text + "\"");
  mpq_class q{mpz_class(num), d};
  q.canonicalize();
  return q;
}

ExactReal ExactReal::root(std::uint64_t radicand, const mpq_class& coefficient) {
  ExactReal r;
  if (radicand == 0 || coefficient == 0) return r;
  std::uint64_t m = radicand;
  mpz_class outside = 1;
  for (std::uint64_t i = 2; i <= 1000000 && i * i <= m; ++i) {
    while (m % (i * i) == 0) {
      m /= i * i;
      outside *= static_cast<unsigned long>(i);
    }
  }
  mpq_class q = coefficient * mpq_class(outside);
  if (m == 1) {
    r.rational_ = q;
  } else {
    r.add_radical(m, q);
  }
  return r;
}

void ExactReal::add_radical(std::uint64_t m, const mpq_class& q) {
  mpq_class& slot = radicals_[m];
  slot += q;
  slot.canonicalize();
  if (slot == 0) radicals_.erase(m);
}

ExactReal ExactReal::operator-() const {
  ExactReal r = *this;
  r.rational_ = -r.rational_;
  for (auto& [m, q] : r.radicals_) q = -q;
  return r;
}

ExactReal& ExactReal::operator+=(const ExactReal& o) {
  rational_ += o.rational_;
  rational_.canonicalize();
  for (const auto& [m, q] : o.radicals_) add_radical(m, q);
  return *this;
}

ExactReal& ExactReal::operator-=(const ExactReal& o) { return *this += -o; }

ExactReal& ExactReal::operator*=(const mpq_class& factor) {
  if (factor == 0) {
    *this = ExactReal();
    return *this;
  }
  rational_ *= factor;
  rational_.canonicalize();
  for (auto& [m, q] : radicals_) {
    q *= factor;
    q.canonicalize();
  }
  return *this;
}

ExactReal ExactReal::times(const ExactReal& o) const {
  ExactReal r(rational_ * o.rational_);
  for (const auto& [m, q] : o.radicals_) r += root(m, q * rational_);
  for (const auto& [m, q] : radicals_) {
    r += root(m, q * o.rational_);
    for (const auto& [k, p] : o.radicals_) r += root(m * k, q * p);
  }
  return r;
}

void ExactReal::bounds(unsigned bits, mpq_class& lo, mpq_class& hi) const {
  lo = rational_;
  hi = rational_;
  mpz_class scale = 1;
  scale <<= bits;
  for (const auto& [m, q] : radicals_) {
    mpz_class big = mpz_class(static_cast<unsigned long>(m)) * scale * scale;
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), big.get_mpz_t());
    mpq_class down(s, scale);
    mpq_class up(s + 1, scale);
    down.canonicalize();
    up.canonicalize();
    if (q > 0) {
      lo += q * down;
      hi += q * up;
    } else {
      lo += q * up;
      hi += q * down;
    }
  }
}

int ExactReal::sign() const {
  if (radicals_.empty()) return sgn(rational_);
  for (unsigned bits = 32;; bits *= 2) {
    mpq_class lo, hi;
    bounds(bits, lo, hi);
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    if (bits > (1U << 24)) throw std::logic_error("sign refinement did not separate from zero");
  }
}

mpz_class ExactReal::floor() const {
  mpz_class f;
  if (radicals_.empty()) {
    mpz_fdiv_q(f.get_mpz_t(), rational_.get_num_mpz_t(), rational_.get_den_mpz_t());
    return f;
  }
  for (unsigned bits = 32;; bits *= 2) {
    mpq_class lo, hi;
    bounds(bits, lo, hi);
    mpz_class fl, fh;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    mpz_fdiv_q(fh.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
    // hi is never an integer once the bounds separate, since the value is irrational.
    if (fl == fh) return fl;
    if (bits > (1U << 24)) throw std::logic_error("floor refinement did not converge");
  }
}

double ExactReal::approx() const {
  mpq_class lo, hi;
  bounds(60, lo, hi);
  mpq_class mid = (lo + hi) / 2;
  return mid.get_d();
}

std::string ExactReal::to_string() const {
  std::string out;
  if (rational_ != 0 || radicals_.empty()) out = rational_text(rational_);
  for (const auto& [m, q] : radicals_) {
    mpq_class mag = abs(q);
    if (q < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (mag != 1) out += rational_text(mag) + "*";
    out += "sqrt(" + std::to_string(m) + ")";
  }
  return out;
}

std::strong_ordering exact_compare(const ExactReal& a, const ExactReal& b) {
  int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const ExactReal& a, const ExactReal& b) {
  return exact_compare(a, b);
}

ExactReal floor_b(const ExactReal& x, const mpq_class& b) {
  if (b == 0) fail(ErrorCode::ZeroModulus, "floor with modulus zero");
  mpq_class inv = 1 / b;
  mpz_class k = (x * inv).floor();
  return ExactReal(mpq_class(k) * b);
}

ExactReal frac_b(const ExactReal& x, const mpq_class& b) { return x - floor_b(x, b); }

}  // namespace periodica::real
