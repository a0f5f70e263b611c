#include "rational.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include "errors.hpp"

namespace mucheck {

Rational::Rational(const BigInt& num, const BigInt& den) : v_(0) {
  if (den <= 0) throw ValidationError("rational denominator must be positive");
  v_ = boost::rational<BigInt>(num, den);
}

Rational Rational::parse(const std::string& text) {
  auto is_digits = [](const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_digits(text))
      throw ValidationError("malformed rational '" + text + "'");
    return Rational(BigInt(text), 1);
  }
  std::string a = text.substr(0, slash), b = text.substr(slash + 1);
  if (!is_digits(a) || !is_digits(b))
    throw ValidationError("malformed rational '" + text + "'");
  BigInt den(b);
  if (den == 0) throw ValidationError("rational with zero denominator");
  return Rational(BigInt(a), den);
}

std::string Rational::str() const {
  std::string s = num().str();
  if (den() != 1) s += "/" + den().str();
  return s;
}

double Rational::to_double() const {
  return boost::rational_cast<double>(v_);
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  return boost::integer::lcm(a, b);
}

}  // namespace mucheck
