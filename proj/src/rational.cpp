#include "tailbound/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace tailbound {

namespace {

mpz_class to_mpz(std::int64_t v) {
  // mpz_class has no int64 constructor on every platform; go through strings
  // only when the value does not fit a long.
  if (v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max()) {
    return mpz_class(static_cast<long>(v));
  }
  return mpz_class(std::to_string(v));
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class pow10(unsigned long e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, e);
  return out;
}

BigRational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string exp_text(s.substr(e + 1));
    std::size_t used = 0;
    try {
      exponent = std::stol(exp_text, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed exponent in '" + std::string(text) + "'");
    }
    if (used != exp_text.size()) {
      throw std::invalid_argument("malformed exponent in '" + std::string(text) + "'");
    }
    s = s.substr(0, e);
  }
  std::string digits;
  long frac_digits = 0;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto int_part = s.substr(0, dot);
    auto frac_part = s.substr(dot + 1);
    if ((!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)) || (int_part.empty() && frac_part.empty())) {
      throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    frac_digits = static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    digits = std::string(s);
  }
  mpz_class num(digits, 10);
  if (negative) num = -num;
  long scale = exponent - frac_digits;
  if (scale >= 0) return BigRational(num * pow10(static_cast<unsigned long>(scale)), mpz_class(1));
  return BigRational(num, pow10(static_cast<unsigned long>(-scale)));
}

}  // namespace

BigRational::BigRational(std::int64_t value) : value_(to_mpz(value)) {}

BigRational::BigRational(std::int64_t num, std::int64_t den) : BigRational(to_mpz(num), to_mpz(den)) {}

BigRational::BigRational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("BigRational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

BigRational::BigRational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw std::domain_error("BigRational: zero denominator");
  value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto lhs = text.substr(0, slash);
    auto rhs = text.substr(slash + 1);
    bool negative = !lhs.empty() && lhs.front() == '-';
    if (negative) lhs.remove_prefix(1);
    if (!all_digits(lhs) || !all_digits(rhs)) {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    mpz_class num(std::string(lhs), 10);
    if (negative) num = -num;
    return BigRational(num, mpz_class(std::string(rhs), 10));
  }
  return parse_decimal(text);
}

BigRational BigRational::from_double(double value) {
  if (!std::isfinite(value)) throw std::domain_error("BigRational: non-finite double");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), value);
  return BigRational(std::move(q));
}

bool BigRational::is_integer() const { return value_.get_den() == 1; }

mpz_class BigRational::floor() const {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return out;
}

mpz_class BigRational::ceil() const {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return out;
}

double BigRational::to_double() const { return value_.get_d(); }

std::string BigRational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigRational BigRational::pow(unsigned exponent) const {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return BigRational(num, den);
}

BigRational BigRational::abs() const { return BigRational(mpq_class(::abs(value_))); }

BigRational BigRational::reciprocal() const {
  if (is_zero()) throw std::domain_error("BigRational: reciprocal of zero");
  return BigRational(value_.get_den(), value_.get_num());
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-value_)); }

BigRational& BigRational::operator+=(const BigRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("BigRational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

bool operator==(const BigRational& lhs, const BigRational& rhs) { return cmp(lhs.value_, rhs.value_) == 0; }

std::strong_ordering operator<=>(const BigRational& lhs, const BigRational& rhs) {
  int c = cmp(lhs.value_, rhs.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const BigRational& value) { return os << value.to_string(); }

BigRational min(const BigRational& a, const BigRational& b) { return b < a ? b : a; }
BigRational max(const BigRational& a, const BigRational& b) { return a < b ? b : a; }

}  // namespace tailbound
