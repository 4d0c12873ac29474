#include "goeritz/star_map.hpp"

namespace goeritz {

namespace {

Mat4 from_rows(std::initializer_list<long> rows) {
  Mat4 m;
  size_t i = 0;
  for (long v : rows) m.e[i++] = v;
  return m;
}

}  // namespace

Mat4 generator_matrix(Gen g, long p) {
  if (!generator_valid(g, p))
    fail(std::string("generator ") + generator_name(g) + " is not valid for p = " +
         std::to_string(p));
  switch (g) {
    case Gen::Alpha:
      return -Mat4::identity();
    case Gen::Beta:
      return from_rows({1, 0, 0, 0,  //
                        0, -1, 0, 0,  //
                        0, 0, 1, 0,  //
                        0, 0, 0, -1});
    case Gen::Gamma:
      return from_rows({1, 1, 0, 0,  //
                        0, -1, 0, 0,  //
                        0, 0, 1, 0,  //
                        0, 0, 1, -1});
    case Gen::Delta:
      return from_rows({-2, -1, 1, -1,  //
                        3, 1, -1, 0,  //
                        0, 0, 1, -3,  //
                        0, 0, 1, -2});
    case Gen::Rho:
      return from_rows({1, 1, 1, -1,  //
                        -2, -1, -1, 0,  //
                        0, 0, -1, 2,  //
                        0, 0, -1, 1});
    case Gen::Sigma: {
      Mat4 m = from_rows({1, 0, 0, 1,  //
                          0, -1, -1, 0,  //
                          0, 0, 1, 0,  //
                          0, 0, 0, -1});
      m.at(1, 0) = -p;
      m.at(2, 3) = -p;
      return m;
    }
  }
  fail("generator_matrix: unreachable");
}

Mat4 star(const GroupWord& w) {
  Mat4 acc = Mat4::identity();
  for (const Letter& l : w.letters())
    acc = acc * generator_matrix(l.gen, w.p()).pow(l.exp);
  return acc;
}

Mat2 q_project(const Mat4& m) {
  Mat2 q;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) q.at(i, j) = m.at(i, j);
  return q;
}

ExtRational mobius_apply(const Mat2& m, const ExtRational& t) {
  Int num, den;
  if (t.infinite) {
    num = m.at(0, 0);
    den = m.at(1, 0);
  } else {
    num = m.at(0, 0) * t.value.num + m.at(0, 1) * t.value.den;
    den = m.at(1, 0) * t.value.num + m.at(1, 1) * t.value.den;
  }
  if (den == 0) {
    if (num == 0) fail("mobius_apply: 0/0 (matrix not invertible)");
    return ExtRational::infinity();
  }
  return ExtRational::of(Rational(num, den));
}

std::string IntervalSet::to_text() const {
  std::string s;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!s.empty()) s += ", ";
    s += name;
  };
  add(gamma_minus, "I_gamma-");
  add(gamma_plus, "I_gamma+");
  add(sigma_minus, "I_sigma-");
  add(sigma_plus, "I_sigma+");
  return s.empty() ? "none" : s;
}

IntervalSet interval_classify(const ExtRational& t, long p) {
  if (p < 4) fail("interval_classify: defined only for p >= 4");
  IntervalSet s;
  if (t.infinite) {
    s.gamma_minus = s.gamma_plus = true;
    return s;
  }
  const Rational& v = t.value;
  Rational half(Int(1), Int(2));
  Rational bound(Int(2), Int(p));
  Rational zero(Int(0));
  s.gamma_minus = v <= -half;
  s.gamma_plus = half <= v;
  s.sigma_minus = (-bound <= v) && (v <= zero);
  s.sigma_plus = (zero <= v) && (v <= bound);
  return s;
}

}  // namespace goeritz
