#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <string>

namespace mucheck {

using BigInt = boost::multiprecision::cpp_int;

// Exact arbitrary-precision rational; always reduced, denominator > 0.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(BigInt(n)) {}  // NOLINT: implicit on purpose
  Rational(const BigInt& num, const BigInt& den);

  // Accepts "a/b" or "a" with a, b unsigned decimal literals.
  static Rational parse(const std::string& text);

  const BigInt& num() const { return v_.numerator(); }
  const BigInt& den() const { return v_.denominator(); }
  bool is_integer() const { return v_.denominator() == 1; }

  Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
  Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
  Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
  Rational operator/(const Rational& o) const { return Rational(v_ / o.v_); }
  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

  // "a/b", or just "a" when the denominator is 1.
  std::string str() const;
  double to_double() const;

 private:
  explicit Rational(boost::rational<BigInt> v) : v_(std::move(v)) {}
  boost::rational<BigInt> v_;
};

BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace mucheck
