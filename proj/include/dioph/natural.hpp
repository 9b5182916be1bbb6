#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dioph {

/// Arbitrary-precision non-negative integer. All arithmetic is exact and
/// unbounded; operations that would leave the non-negative range throw.
class Natural {
 public:
  Natural() = default;
  Natural(unsigned long v) : v_(v) {}  // NOLINT: implicit on purpose
  explicit Natural(mpz_class v) : v_(std::move(v)) {
    if (sgn(v_) < 0) throw std::domain_error("Natural: negative value");
  }

  // Decimal digits only, no sign, no whitespace.
  static Natural from_decimal(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Natural: empty string");
    for (char c : s) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("Natural: not a decimal number: \"" + std::string(s) + "\"");
    }
    Natural n;
    n.v_.set_str(std::string(s), 10);
    return n;
  }

  static Natural pow2(std::uint64_t e) {
    Natural n;
    mpz_ui_pow_ui(n.v_.get_mpz_t(), 2, e);
    return n;
  }

  static Natural pow(const Natural& base, std::uint64_t e) {
    Natural n;
    mpz_pow_ui(n.v_.get_mpz_t(), base.v_.get_mpz_t(), e);
    return n;
  }

  const mpz_class& raw() const { return v_; }
  mpz_class& raw() { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }

  // Number of bits in the binary representation; 0 for zero.
  std::size_t bit_length() const {
    return is_zero() ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2);
  }

  unsigned long mod_u(unsigned long m) const {
    if (m == 0) throw std::domain_error("Natural: modulus zero");
    return mpz_fdiv_ui(v_.get_mpz_t(), m);
  }

  bool fits_u64() const { return v_.fits_ulong_p(); }
  std::uint64_t to_u64() const {
    if (!fits_u64()) throw std::domain_error("Natural: value does not fit in 64 bits");
    return v_.get_ui();
  }

  std::string str() const { return v_.get_str(); }

  Natural& operator+=(const Natural& o) { v_ += o.v_; return *this; }
  Natural& operator-=(const Natural& o) {
    if (v_ < o.v_) throw std::domain_error("Natural: subtraction underflow");
    v_ -= o.v_;
    return *this;
  }
  Natural& operator*=(const Natural& o) { v_ *= o.v_; return *this; }
  Natural& operator/=(const Natural& o) {
    if (o.is_zero()) throw std::domain_error("Natural: division by zero");
    v_ /= o.v_;
    return *this;
  }
  Natural& operator%=(const Natural& o) {
    if (o.is_zero()) throw std::domain_error("Natural: modulus zero");
    v_ %= o.v_;
    return *this;
  }
  Natural& operator<<=(std::uint64_t k) { v_ <<= k; return *this; }
  Natural& operator>>=(std::uint64_t k) { v_ >>= k; return *this; }

  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
  friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
  friend Natural operator/(Natural a, const Natural& b) { return a /= b; }
  friend Natural operator%(Natural a, const Natural& b) { return a %= b; }
  friend Natural operator<<(Natural a, std::uint64_t k) { return a <<= k; }
  friend Natural operator>>(Natural a, std::uint64_t k) { return a >>= k; }

  friend bool operator==(const Natural& a, const Natural& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  mpz_class v_{0};
};

inline Natural square(const Natural& a) { return a * a; }

}  // namespace dioph
