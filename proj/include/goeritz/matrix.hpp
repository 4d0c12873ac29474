#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "goeritz/ints.hpp"

namespace goeritz {

struct Mat2 {
  // Row-major entries.
  std::array<Int, 4> e{};

  static Mat2 identity();

  Int& at(int r, int c) { return e[static_cast<size_t>(2 * r + c)]; }
  const Int& at(int r, int c) const { return e[static_cast<size_t>(2 * r + c)]; }

  Int det() const;
  Mat2 operator*(const Mat2& o) const;
  Mat2 operator+(const Mat2& o) const;
  Mat2 operator-() const;
  bool operator==(const Mat2& o) const = default;

  // Exact inverse; requires det = +-1.
  Mat2 inverse() const;
  Mat2 transpose() const;
  Mat2 pow(long long n) const;

  std::string to_text() const;
};

struct Vec4 {
  std::array<Int, 4> e{};

  Int& operator[](int i) { return e[static_cast<size_t>(i)]; }
  const Int& operator[](int i) const { return e[static_cast<size_t>(i)]; }
  bool operator==(const Vec4& o) const = default;
  Vec4 operator-() const;

  std::string to_text() const;
};

struct Mat4 {
  std::array<Int, 16> e{};

  static Mat4 identity();

  Int& at(int r, int c) { return e[static_cast<size_t>(4 * r + c)]; }
  const Int& at(int r, int c) const { return e[static_cast<size_t>(4 * r + c)]; }

  Int det() const;
  Mat4 operator*(const Mat4& o) const;
  Vec4 operator*(const Vec4& v) const;
  Mat4 operator-() const;
  bool operator==(const Mat4& o) const = default;

  bool is_identity() const;

  // Exact inverse via the adjugate; requires det = +-1.
  Mat4 inverse() const;

  // Binary powering; negative exponents go through inverse().
  Mat4 pow(long long n) const;

  std::string to_text() const;
};

// Parses a whitespace-separated list of 4 or 16 integers (2x2 or 4x4,
// row-major).  Accepts the plain text format and JSON nested arrays.
// Returns the flat entries; size tells the caller which shape it was.
std::vector<Int> parse_matrix_entries(const std::string& text);

Mat2 mat2_from_entries(const std::vector<Int>& v);
Mat4 mat4_from_entries(const std::vector<Int>& v);

}  // namespace goeritz
