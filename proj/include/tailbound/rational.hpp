#pragma once

// Exact rational numbers backed by GMP.
//
// Values are always in lowest terms with a positive denominator, so equality
// is structural and ordering is exact.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tailbound {

class BigRational {
 public:
  BigRational() = default;
  BigRational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  BigRational(std::int64_t num, std::int64_t den);
  BigRational(const mpz_class& num, const mpz_class& den);
  explicit BigRational(mpq_class value);

  /// Parses "7", "-3/4" or a plain decimal such as "0.01" or "2.5e-3".
  /// Decimals are read exactly: "0.1" is 1/10, not the nearest double.
  static BigRational parse(std::string_view text);

  /// The exact value of a finite double (dyadic rational).
  static BigRational from_double(double value);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_integer() const;
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  mpz_class floor() const;
  mpz_class ceil() const;

  /// Nearest-or-adjacent double; error below one ulp.
  double to_double() const;

  /// "num/den", or just "num" for integers.
  std::string to_string() const;

  BigRational pow(unsigned exponent) const;
  BigRational abs() const;
  BigRational reciprocal() const;

  BigRational operator-() const;
  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }

  friend bool operator==(const BigRational& lhs, const BigRational& rhs);
  friend std::strong_ordering operator<=>(const BigRational& lhs, const BigRational& rhs);

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const BigRational& value);

BigRational min(const BigRational& a, const BigRational& b);
BigRational max(const BigRational& a, const BigRational& b);

}  // namespace tailbound
