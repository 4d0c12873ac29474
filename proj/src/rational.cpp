#include "goeritz/rational.hpp"

#include <sstream>

namespace goeritz {

Rational::Rational(Int n, Int d) : num(std::move(n)), den(std::move(d)) {
  if (den == 0) fail("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Int g = gcd_pair(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num * o.den + o.num * den, den * o.den);
}

Rational Rational::operator-(const Rational& o) const {
  return Rational(num * o.den - o.num * den, den * o.den);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(num * o.num, den * o.den);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num == 0) fail("Rational: division by zero");
  return Rational(num * o.den, den * o.num);
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num = -r.num;
  return r;
}

bool Rational::operator<(const Rational& o) const {
  return num * o.den < o.num * den;
}

bool Rational::operator<=(const Rational& o) const {
  return num * o.den <= o.num * den;
}

Rational Rational::abs() const {
  Rational r = *this;
  if (r.num < 0) r.num = -r.num;
  return r;
}

std::string Rational::to_text() const {
  std::ostringstream os;
  os << num;
  if (den != 1) os << '/' << den;
  return os.str();
}

std::string ExtRational::to_text() const {
  return infinite ? "inf" : value.to_text();
}

ExtRational parse_ext_rational(const std::string& text) {
  if (text == "inf" || text == "oo" || text == "infinity") return ExtRational::infinity();
  auto slash = text.find('/');
  if (slash == std::string::npos) return ExtRational::of(Rational(Int(text)));
  Int n(text.substr(0, slash));
  Int d(text.substr(slash + 1));
  return ExtRational::of(Rational(n, d));
}

}  // namespace goeritz
