#include "cremona/ratfun.hpp"

namespace cremona {

RationalFunction::RationalFunction(QPoly num, QPoly den) {
  if (den.is_zero()) fail(ErrorKind::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = QPoly(Rational(1));
    return;
  }
  QPoly g = gcd(num, den);
  num = num / g;
  den = den / g;
  Rational l = den.lc();
  num_ = num.scaled(l.inverse());
  den_ = den.monic();
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of the zero rational function");
  return RationalFunction(den_, num_);
}

Rational RationalFunction::operator()(const Rational& at) const { return num_(at) / den_(at); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

std::string RationalFunction::str() const {
  if (den_.degree() == 0) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RationalFunction RationalFunction::parse(std::string_view text) {
  std::string s(text);
  // Find a top-level '/' that separates two parenthesised polynomials.
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == '/' && depth == 0 && i > 0) {
      std::size_t l = s.find_last_not_of(' ', i - 1);
      if (l != std::string::npos && s[l] == ')') {
        auto strip = [](std::string t) {
          auto a = t.find_first_not_of(' ');
          auto b = t.find_last_not_of(' ');
          t = t.substr(a, b - a + 1);
          if (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
          return t;
        };
        return RationalFunction(parse_qpoly(strip(s.substr(0, i))), parse_qpoly(strip(s.substr(i + 1))));
      }
    }
  }
  auto a = s.find_first_not_of(' ');
  auto b = s.find_last_not_of(' ');
  if (a == std::string::npos) fail(ErrorKind::ParseError, "empty rational function");
  s = s.substr(a, b - a + 1);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  return RationalFunction(parse_qpoly(s));
}

}  // namespace cremona
