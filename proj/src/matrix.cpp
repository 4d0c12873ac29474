#include "goeritz/matrix.hpp"

#include <cctype>
#include <sstream>

namespace goeritz {

Mat2 Mat2::identity() {
  Mat2 m;
  m.at(0, 0) = 1;
  m.at(1, 1) = 1;
  return m;
}

Int Mat2::det() const { return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0); }

Mat2 Mat2::operator*(const Mat2& o) const {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.at(i, j) = at(i, 0) * o.at(0, j) + at(i, 1) * o.at(1, j);
  return r;
}

Mat2 Mat2::operator+(const Mat2& o) const {
  Mat2 r;
  for (size_t i = 0; i < 4; ++i) r.e[i] = e[i] + o.e[i];
  return r;
}

Mat2 Mat2::operator-() const {
  Mat2 r;
  for (size_t i = 0; i < 4; ++i) r.e[i] = -e[i];
  return r;
}

Mat2 Mat2::inverse() const {
  Int d = det();
  if (d != 1 && d != -1) fail("Mat2::inverse: determinant is not a unit");
  Mat2 r;
  r.at(0, 0) = at(1, 1) * d;
  r.at(0, 1) = -at(0, 1) * d;
  r.at(1, 0) = -at(1, 0) * d;
  r.at(1, 1) = at(0, 0) * d;
  return r;
}

Mat2 Mat2::transpose() const {
  Mat2 r = *this;
  std::swap(r.e[1], r.e[2]);
  return r;
}

Mat2 Mat2::pow(long long n) const {
  Mat2 base = *this;
  if (n < 0) {
    base = base.inverse();
    n = -n;
  }
  Mat2 acc = Mat2::identity();
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

std::string Mat2::to_text() const {
  std::ostringstream os;
  for (int i = 0; i < 2; ++i) {
    os << at(i, 0) << ' ' << at(i, 1);
    if (i == 0) os << '\n';
  }
  return os.str();
}

Vec4 Vec4::operator-() const {
  Vec4 r;
  for (size_t i = 0; i < 4; ++i) r.e[i] = -e[i];
  return r;
}

std::string Vec4::to_text() const {
  std::ostringstream os;
  os << e[0] << ',' << e[1] << ',' << e[2] << ',' << e[3];
  return os.str();
}

Mat4 Mat4::identity() {
  Mat4 m;
  for (int i = 0; i < 4; ++i) m.at(i, i) = 1;
  return m;
}

namespace {

Int det3(const Mat4& m, int r0, int r1, int r2, int c0, int c1, int c2) {
  return m.at(r0, c0) * (m.at(r1, c1) * m.at(r2, c2) - m.at(r1, c2) * m.at(r2, c1)) -
         m.at(r0, c1) * (m.at(r1, c0) * m.at(r2, c2) - m.at(r1, c2) * m.at(r2, c0)) +
         m.at(r0, c2) * (m.at(r1, c0) * m.at(r2, c1) - m.at(r1, c1) * m.at(r2, c0));
}

}  // namespace

Int Mat4::det() const {
  Int d = 0;
  int sign = 1;
  for (int c = 0; c < 4; ++c) {
    int cc[3];
    int k = 0;
    for (int j = 0; j < 4; ++j)
      if (j != c) cc[k++] = j;
    d += Int(sign) * at(0, c) * det3(*this, 1, 2, 3, cc[0], cc[1], cc[2]);
    sign = -sign;
  }
  return d;
}

Mat4 Mat4::operator*(const Mat4& o) const {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Int s = 0;
      for (int k = 0; k < 4; ++k) s += at(i, k) * o.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

Vec4 Mat4::operator*(const Vec4& v) const {
  Vec4 r;
  for (int i = 0; i < 4; ++i) {
    Int s = 0;
    for (int k = 0; k < 4; ++k) s += at(i, k) * v[k];
    r[i] = s;
  }
  return r;
}

Mat4 Mat4::operator-() const {
  Mat4 r;
  for (size_t i = 0; i < 16; ++i) r.e[i] = -e[i];
  return r;
}

bool Mat4::is_identity() const { return *this == Mat4::identity(); }

Mat4 Mat4::inverse() const {
  Int d = det();
  if (d != 1 && d != -1) fail("Mat4::inverse: determinant is not a unit");
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int rr[3], cc[3];
      int a = 0, b = 0;
      for (int t = 0; t < 4; ++t) {
        if (t != j) rr[a++] = t;
        if (t != i) cc[b++] = t;
      }
      Int cof = det3(*this, rr[0], rr[1], rr[2], cc[0], cc[1], cc[2]);
      if ((i + j) % 2 != 0) cof = -cof;
      r.at(i, j) = cof * d;
    }
  return r;
}

Mat4 Mat4::pow(long long n) const {
  Mat4 base = *this;
  if (n < 0) {
    base = base.inverse();
    n = -n;
  }
  Mat4 acc = Mat4::identity();
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

std::string Mat4::to_text() const {
  std::ostringstream os;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      os << at(i, j);
      if (j < 3) os << ' ';
    }
    if (i < 3) os << '\n';
  }
  return os.str();
}

std::vector<Int> parse_matrix_entries(const std::string& text) {
  std::vector<Int> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      out.emplace_back(Int(cur));
      cur.clear();
    }
  };
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+') {
      cur.push_back(ch);
    } else {
      flush();
      if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '[' && ch != ']' && ch != ',')
        fail("matrix parse: unexpected character '" + std::string(1, ch) + "'");
    }
  }
  flush();
  if (out.size() != 4 && out.size() != 16)
    fail("matrix parse: expected 4 or 16 integers, got " + std::to_string(out.size()));
  return out;
}

Mat2 mat2_from_entries(const std::vector<Int>& v) {
  if (v.size() != 4) fail("mat2_from_entries: need 4 entries");
  Mat2 m;
  for (size_t i = 0; i < 4; ++i) m.e[i] = v[i];
  return m;
}

Mat4 mat4_from_entries(const std::vector<Int>& v) {
  if (v.size() != 16) fail("mat4_from_entries: need 16 entries");
  Mat4 m;
  for (size_t i = 0; i < 16; ++i) m.e[i] = v[i];
  return m;
}

}  // namespace goeritz
