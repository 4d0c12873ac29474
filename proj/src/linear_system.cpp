#include "goeritz/linear_system.hpp"

namespace goeritz {

namespace {

struct Snf {
  Mat4 d;  // diagonal
  Mat4 u;  // left unimodular:  d = u * m * v
  Mat4 v;  // right unimodular
};

void swap_rows(Mat4& a, int i, int j) {
  for (int c = 0; c < 4; ++c) std::swap(a.at(i, c), a.at(j, c));
}

void swap_cols(Mat4& a, int i, int j) {
  for (int r = 0; r < 4; ++r) std::swap(a.at(r, i), a.at(r, j));
}

// row i -= q * row j
void row_op(Mat4& a, int i, int j, const Int& q) {
  for (int c = 0; c < 4; ++c) a.at(i, c) -= q * a.at(j, c);
}

void col_op(Mat4& a, int i, int j, const Int& q) {
  for (int r = 0; r < 4; ++r) a.at(r, i) -= q * a.at(r, j);
}

Snf smith_normal_form(const Mat4& m) {
  Snf s{m, Mat4::identity(), Mat4::identity()};
  for (int t = 0; t < 4; ++t) {
    // Find a pivot of least absolute value in the trailing block.
    int pr = -1, pc = -1;
    Int best = 0;
    for (int i = t; i < 4; ++i)
      for (int j = t; j < 4; ++j) {
        Int a = abs_val(s.d.at(i, j));
        if (a != 0 && (pr < 0 || a < best)) {
          best = a;
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;  // trailing block is zero
    if (pr != t) {
      swap_rows(s.d, t, pr);
      swap_rows(s.u, t, pr);
    }
    if (pc != t) {
      swap_cols(s.d, t, pc);
      swap_cols(s.v, t, pc);
    }
    // Clear the pivot row and column; re-pivot while remainders appear.
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < 4; ++i) {
        if (s.d.at(i, t) == 0) continue;
        Int q = s.d.at(i, t) / s.d.at(t, t);
        row_op(s.d, i, t, q);
        row_op(s.u, i, t, q);
        if (s.d.at(i, t) != 0) {
          swap_rows(s.d, t, i);
          swap_rows(s.u, t, i);
          dirty = true;
        }
      }
      for (int j = t + 1; j < 4; ++j) {
        if (s.d.at(t, j) == 0) continue;
        Int q = s.d.at(t, j) / s.d.at(t, t);
        col_op(s.d, j, t, q);
        col_op(s.v, j, t, q);
        if (s.d.at(t, j) != 0) {
          swap_cols(s.d, t, j);
          swap_cols(s.v, t, j);
          dirty = true;
        }
      }
    }
  }
  return s;
}

}  // namespace

IntegerSolutions solve_integer_system(const Mat4& m, const Vec4& r) {
  Snf s = smith_normal_form(m);
  // d * h = u * r with g = v * h.
  Vec4 ur;
  for (int i = 0; i < 4; ++i) {
    Int acc = 0;
    for (int j = 0; j < 4; ++j) acc += s.u.at(i, j) * r[j];
    ur[i] = acc;
  }
  IntegerSolutions out;
  Vec4 h;
  for (int i = 0; i < 4; ++i) {
    const Int& di = s.d.at(i, i);
    if (di == 0) {
      if (ur[i] != 0) return out;  // inconsistent
      h[i] = 0;
    } else {
      if (!divides(di, ur[i])) return out;  // no integer solution
      h[i] = ur[i] / di;
    }
  }
  out.consistent = true;
  for (int i = 0; i < 4; ++i) {
    Int acc = 0;
    for (int j = 0; j < 4; ++j) acc += s.v.at(i, j) * h[j];
    out.particular[i] = acc;
  }
  for (int j = 0; j < 4; ++j) {
    if (s.d.at(j, j) != 0) continue;
    Vec4 b;
    for (int i = 0; i < 4; ++i) b[i] = s.v.at(i, j);
    out.basis.push_back(b);
  }
  return out;
}

}  // namespace goeritz
