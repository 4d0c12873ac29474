#include "goeritz/synthesis.hpp"

#include "goeritz/star_map.hpp"

namespace goeritz {

namespace {

// Word with q(star) = [1 l; 0 1].
GroupWord upper_word(long p, const Int& ell) {
  GroupWord w(p);
  long long reps = static_cast<long long>(abs_val(ell));
  long long sgn = ell < 0 ? -1 : 1;
  for (long long i = 0; i < reps; ++i) {
    if (sgn > 0) {
      w.append(Gen::Beta, 1);
      w.append(Gen::Gamma, 1);
    } else {
      w.append(Gen::Gamma, -1);
      w.append(Gen::Beta, -1);
    }
  }
  return w;
}

// Word with q(star) = [1 0; mp 1]: (rho^2 beta gamma rho)^m for p = 2,
// (beta gamma delta)^m for p = 3, (beta sigma)^m for p >= 4.
GroupWord lower_word(long p, const Int& m) {
  GroupWord w(p);
  long long reps = static_cast<long long>(abs_val(m));
  long long sgn = m < 0 ? -1 : 1;
  for (long long i = 0; i < reps; ++i) {
    if (p == 2) {
      if (sgn > 0) {
        w.append(Gen::Rho, 2);
        w.append(Gen::Beta, 1);
        w.append(Gen::Gamma, 1);
        w.append(Gen::Rho, 1);
      } else {
        w.append(Gen::Rho, -1);
        w.append(Gen::Gamma, -1);
        w.append(Gen::Beta, -1);
        w.append(Gen::Rho, -2);
      }
    } else if (p == 3) {
      if (sgn > 0) {
        w.append(Gen::Beta, 1);
        w.append(Gen::Gamma, 1);
        w.append(Gen::Delta, 1);
      } else {
        w.append(Gen::Delta, -1);
        w.append(Gen::Gamma, -1);
        w.append(Gen::Beta, -1);
      }
    } else {
      if (sgn > 0) {
        w.append(Gen::Beta, 1);
        w.append(Gen::Sigma, 1);
      } else {
        w.append(Gen::Sigma, -1);
        w.append(Gen::Beta, -1);
      }
    }
  }
  return w;
}

GroupWord negation_word(long p) {
  GroupWord w(p);
  if (p == 2)
    w.append(Gen::Rho, 2);
  else
    w.append(Gen::Alpha, 1);
  return w;
}

GroupWord beta_word(long p) {
  GroupWord w(p);
  w.append(Gen::Beta, 1);
  return w;
}

GroupWord gamma_word(long p) {
  GroupWord w(p);
  w.append(Gen::Gamma, 1);
  return w;
}

Int kappa_of(const Mat2& a) { return abs_val(a.at(0, 0)) + abs_val(a.at(1, 1)); }

// Base case: kappa(a) = 2, i.e. both diagonal entries are units.  For
// p >= 3 the determinant forces l = 0 or m = 0; for p = 2 the mixed
// patterns with |l| = |m| = 1 also occur and are built from the two
// parabolic words plus beta.
GroupWord base_word(const Mat2& a, long p) {
  Int u = a.at(0, 0);
  Int ell = a.at(0, 1);
  Int m = a.at(1, 0) / p;
  Int v = a.at(1, 1);

  if (m == 0) {
    // [1 t; 0 1] * q(gamma) = [1 1-t; 0 -1], so t = 1 - l below.
    if (u == 1 && v == 1) return upper_word(p, ell);
    if (u == 1 && v == -1)
      return multiply(upper_word(p, Int(1) - ell), gamma_word(p));
    if (u == -1 && v == -1)
      return multiply(negation_word(p), upper_word(p, -ell));
    return multiply(negation_word(p),
                    multiply(upper_word(p, Int(1) + ell), gamma_word(p)));
  }
  if (ell == 0) {
    if (u == 1 && v == 1) return lower_word(p, m);
    if (u == 1 && v == -1) return multiply(lower_word(p, m), beta_word(p));
    if (u == -1 && v == -1)
      return multiply(negation_word(p), lower_word(p, -m));
    return multiply(negation_word(p),
                    multiply(lower_word(p, -m), beta_word(p)));
  }
  // Mixed base case: only reachable for p = 2 with |l| = |m| = 1.
  if (p != 2) fail("synthesize_word: unexpected mixed base case for p != 2");
  if (u == -1 && v == 1)
    return multiply(upper_word(p, ell), lower_word(p, m));
  if (u == 1 && v == -1)
    return multiply(lower_word(p, m), upper_word(p, ell));
  if (u == 1 && v == 1)
    return multiply(beta_word(p),
                    multiply(lower_word(p, -m), upper_word(p, ell)));
  return multiply(negation_word(p),
                  multiply(beta_word(p),
                           multiply(lower_word(p, m), upper_word(p, -ell))));
}

Mat2 upper_move(int sign) {
  Mat2 t = Mat2::identity();
  t.at(0, 1) = sign;
  return t;
}

Mat2 lower_move(long p, int sign) {
  Mat2 t = Mat2::identity();
  t.at(1, 0) = Int(sign) * p;
  return t;
}

}  // namespace

GroupWord synthesize_word(const SpElement& e_in) {
  SpElement e = e_in.canonicalize();
  if (!e.determinant_condition_holds())
    fail("synthesize_word: determinant condition violated");
  if (!in_B_p(e)) fail("synthesize_word: element is not in B_p");
  long p = e.p;

  Mat2 cur = a_block(e);
  GroupWord prefix(p);  // inverses of the applied moves, in application order

  while (kappa_of(cur) > 2) {
    Int u = cur.at(0, 0);
    Int c = cur.at(1, 0);  // = mp
    Int ell = cur.at(0, 1);
    Int v = cur.at(1, 1);
    bool row_ok = c != 0 && abs_val(c) < 2 * abs_val(u);
    bool col_ok = ell != 0 && Int(p) * abs_val(ell) < 2 * abs_val(v);
    if (!row_ok && !col_ok)
      fail("synthesize_word: descent stalled (element not in the image)");

    if (row_ok) {
      // New top-left is u + sign*c; pick the sign that shrinks it, breaking
      // a tie toward the smaller |new l| then the + sign.
      Int plus = abs_val(u + c);
      Int minus = abs_val(u - c);
      int sign;
      if (plus != minus) {
        sign = plus < minus ? 1 : -1;
      } else {
        Int lp = abs_val(ell + v);
        Int lm = abs_val(ell - v);
        sign = lp <= lm ? 1 : -1;
      }
      cur = upper_move(sign) * cur;
      prefix = multiply(prefix, upper_word(p, Int(-sign)));
    } else {
      Int plus = abs_val(v + Int(p) * ell);
      Int minus = abs_val(v - Int(p) * ell);
      int sign;
      if (plus != minus) {
        sign = plus < minus ? 1 : -1;
      } else {
        Int mp_ = abs_val(c + Int(p) * u);
        Int mm = abs_val(c - Int(p) * u);
        sign = mp_ <= mm ? 1 : -1;
      }
      cur = lower_move(p, sign) * cur;
      prefix = multiply(prefix, lower_word(p, Int(-sign)));
    }
  }

  GroupWord w = multiply(prefix, base_word(cur, p));
  if (e.omega == -1) w = multiply(negation_word(p), w);

  if (!(star(w) == assemble(e)))
    fail("synthesize_word: internal verification failed for " + e.to_text());
  return w;
}

}  // namespace goeritz
