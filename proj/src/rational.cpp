#include "cremona/rational.hpp"

#include <functional>

namespace cremona {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) fail(ErrorKind::DivisionByZero, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  if (s.empty()) fail(ErrorKind::ParseError, "empty rational");
  auto slash = s.find('/');
  mpz_class num, den(1);
  auto read = [&](const std::string& part, mpz_class& out) {
    std::string digits = part;
    if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
    if (digits.empty() || digits == "-") fail(ErrorKind::ParseError, "bad rational '" + s + "'");
    for (std::size_t i = digits[0] == '-' ? 1 : 0; i < digits.size(); ++i)
      if (digits[i] < '0' || digits[i] > '9') fail(ErrorKind::ParseError, "bad rational '" + s + "'");
    if (out.set_str(digits, 10) != 0) fail(ErrorKind::ParseError, "bad rational '" + s + "'");
  };
  if (slash == std::string::npos) {
    read(s, num);
  } else {
    read(s.substr(0, slash), num);
    read(s.substr(slash + 1), den);
  }
  if (den == 0) fail(ErrorKind::DivisionByZero, "zero denominator in '" + s + "'");
  return Rational(num, den);
}

Rational Rational::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of 0");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorKind::DivisionByZero, str() + " / 0");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::size_t Rational::hash() const {
  std::hash<std::string> h;
  return h(str());
}

}  // namespace cremona
