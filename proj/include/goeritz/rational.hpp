#pragma once

#include <string>

#include "goeritz/ints.hpp"
#include "goeritz/matrix.hpp"

namespace goeritz {

// Exact rational, denominator kept positive and the fraction reduced.
struct Rational {
  Int num = 0;
  Int den = 1;

  Rational() = default;
  Rational(Int n) : num(std::move(n)), den(1) {}
  Rational(Int n, Int d);

  bool is_integer() const { return den == 1; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational operator-() const;
  bool operator==(const Rational& o) const = default;
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const;

  Rational abs() const;
  std::string to_text() const;
};

// A point of the extended real line R union {infinity}, stored exactly.
struct ExtRational {
  bool infinite = false;
  Rational value;  // meaningful only when finite

  static ExtRational infinity() { return ExtRational{true, Rational()}; }
  static ExtRational of(Rational r) { return ExtRational{false, std::move(r)}; }

  bool operator==(const ExtRational& o) const {
    if (infinite != o.infinite) return false;
    return infinite || value == o.value;
  }

  std::string to_text() const;
};

// Parses "p/q", a bare integer, or "inf".
ExtRational parse_ext_rational(const std::string& text);

}  // namespace goeritz
