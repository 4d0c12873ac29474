#include "goeritz/sp_element.hpp"

#include <sstream>

namespace goeritz {

bool determinant_condition(const Int& k, const Int& ell, const Int& m, const Int& n,
                           long p, int delta) {
  return k * n * p + delta * k + n - ell * m == 0;
}

bool SpElement::determinant_condition_holds() const {
  return determinant_condition(k, ell, m, n, p, delta);
}

SpElement SpElement::canonicalize() const {
  if (p != 2 || omega == 1) return *this;
  SpElement e = *this;
  e.omega = 1;
  e.k = -k - 1;
  e.ell = -ell;
  e.m = -m;
  e.n = -n - delta;
  return e;
}

std::string SpElement::to_text() const {
  std::ostringstream os;
  os << "(omega=" << omega << ", k=" << k << ", l=" << ell << ", m=" << m
     << ", n=" << n << ", Delta=" << delta << ", p=" << p << ')';
  return os.str();
}

Mat2 a_block(const SpElement& e) {
  Mat2 a;
  a.at(0, 0) = e.k * e.p + 1;
  a.at(0, 1) = e.ell;
  a.at(1, 0) = e.m * e.p;
  a.at(1, 1) = e.n * e.p + e.delta;
  return a;
}

Mat2 d_block(const SpElement& e) {
  Mat2 d;
  d.at(0, 0) = e.k - e.delta * e.n;
  d.at(0, 1) = e.delta * e.m;
  d.at(1, 0) = e.m;
  d.at(1, 1) = 0;
  return d;
}

Mat4 assemble(const SpElement& e) {
  if (!e.determinant_condition_holds())
    fail("assemble: determinant condition violated for " + e.to_text());
  int eps = epsilon_for(e.p);
  Mat2 a = a_block(e);
  Mat2 d = d_block(e);
  Mat4 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      m.at(i, j) = a.at(i, j) * e.omega;
      m.at(i, j + 2) = d.at(i, j) * eps * e.omega;
    }
  // Lower-right block (A^T)^-1 = [ Delta*np+1  -Delta*mp ; -Delta*l  Delta*(kp+1) ].
  m.at(2, 2) = (e.delta * e.n * e.p + 1) * e.omega;
  m.at(2, 3) = (-e.delta * e.m * e.p) * e.omega;
  m.at(3, 2) = (-e.delta * e.ell) * e.omega;
  m.at(3, 3) = (e.delta * (e.k * e.p + 1)) * e.omega;
  return m;
}

namespace {

// Reads the A_p pattern off a 2x2 matrix for a fixed global sign; requires
// top-left = kp+1, bottom-left = mp, det = Delta in {+1, -1}.
std::optional<SpElement> match_pattern(const Mat2& a, long p, int omega) {
  Int d = a.det();
  if (d != 1 && d != -1) return std::nullopt;
  if (!divides(Int(p), a.at(0, 0) - 1)) return std::nullopt;
  if (!divides(Int(p), a.at(1, 0))) return std::nullopt;
  int delta = d == 1 ? 1 : -1;
  if (!divides(Int(p), a.at(1, 1) - delta)) return std::nullopt;
  SpElement e;
  e.omega = omega;
  e.k = (a.at(0, 0) - 1) / p;
  e.ell = a.at(0, 1);
  e.m = a.at(1, 0) / p;
  e.n = (a.at(1, 1) - delta) / p;
  e.delta = delta;
  e.p = p;
  return e;
}

}  // namespace

std::optional<SpElement> try_decompose_sp(const Mat4& m, long p) {
  for (int i = 2; i < 4; ++i)
    for (int j = 0; j < 2; ++j)
      if (m.at(i, j) != 0) return std::nullopt;
  Mat2 q;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) q.at(i, j) = m.at(i, j);
  for (int omega : {1, -1}) {
    Mat2 a = omega == 1 ? q : -q;
    auto e = match_pattern(a, p, omega);
    if (!e) continue;
    if (assemble(*e) == m) return e->canonicalize();
    // The 2x2 pattern matched but the D block or lower-right block did not;
    // for p >= 3 no other sign can match either, for p = 2 trying omega = -1
    // re-tests the same matrix, so this is conclusive.
    return std::nullopt;
  }
  return std::nullopt;
}

SpElement decompose_sp(const Mat4& m, long p) {
  auto e = try_decompose_sp(m, p);
  if (!e) fail("decompose_sp: matrix is not in S_p");
  return *e;
}

SpElement compose_sp(const SpElement& e1, const SpElement& e2) {
  if (e1.p != e2.p) fail("compose_sp: mismatched p");
  long p = e1.p;
  SpElement e;
  e.p = p;
  e.omega = e1.omega * e2.omega;
  e.delta = e1.delta * e2.delta;
  e.k = e1.k * e2.k * p + e1.k + e2.k + e1.ell * e2.m;
  e.ell = e2.ell * (e1.k * p + 1) + e1.ell * (e2.n * p + e2.delta);
  e.m = e1.m * (e2.k * p + 1) + e2.m * (e1.n * p + e1.delta);
  e.n = e1.m * e2.ell + e1.n * e2.n * p + e1.n * e2.delta + e2.n * e1.delta;
  return e.canonicalize();
}

SpElement invert_sp(const SpElement& e) {
  SpElement r;
  r.p = e.p;
  r.omega = e.omega;
  r.delta = e.delta;
  r.k = e.delta * e.n;
  r.ell = -e.delta * e.ell;
  r.m = -e.delta * e.m;
  r.n = e.delta * e.k;
  return r.canonicalize();
}

bool in_A_p(const Mat2& a, long p) {
  return match_pattern(a, p, 1).has_value() || match_pattern(-a, p, -1).has_value();
}

bool in_B_p(const SpElement& e) {
  Int lhs1 = abs_val(e.m * e.p);
  Int rhs1 = 2 * abs_val(e.k * e.p + 1);
  Int lhs2 = Int(e.p) * abs_val(e.ell);
  Int rhs2 = 2 * abs_val(e.n * e.p + e.delta);
  return lhs1 <= rhs1 || lhs2 <= rhs2;
}

Int kappa(const SpElement& e) {
  return abs_val(e.k * e.p + 1) + abs_val(e.n * e.p + e.delta);
}

}  // namespace goeritz
