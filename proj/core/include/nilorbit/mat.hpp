#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "nilorbit/field.hpp"

namespace nilorbit {

/// 2x2 matrix, row-major entries a11 a12 a21 a22.
struct Mat2 {
  std::array<Fe, 4> a;

  const Fe& operator()(int r, int c) const { return a[static_cast<size_t>(2 * r + c)]; }
  Fe& operator()(int r, int c) { return a[static_cast<size_t>(2 * r + c)]; }
  bool operator==(const Mat2&) const = default;
};

/// n x n matrix for n in {2,3}, row-major.
struct MatN {
  int n = 2;
  std::array<Fe, 9> a;

  const Fe& operator()(int r, int c) const { return a[static_cast<size_t>(n * r + c)]; }
  Fe& operator()(int r, int c) { return a[static_cast<size_t>(n * r + c)]; }
  bool operator==(const MatN&) const = default;
};

/// m-tuple of nilpotent 2x2 matrices. Use make_nil_tuple to validate.
struct NilTuple {
  std::vector<Mat2> mats;

  int m() const { return static_cast<int>(mats.size()); }
  bool operator==(const NilTuple&) const = default;
};

Mat2 mat2_zero(const Field& F);
Mat2 mat2_identity(const Field& F);
/// Matrix from entry values (a11, a12, a21, a22).
Mat2 mat2(const Fe& a11, const Fe& a12, const Fe& a21, const Fe& a22);
/// Matrix from integer entries via Field::from_int.
Mat2 mat2_of(const Field& F, long a11, long a12, long a21, long a22);
Mat2 e12(const Field& F);
Mat2 e21(const Field& F);
/// Trace-zero matrix [[b, c], [d, -b]].
Mat2 mat2_d(const Field& F, const Fe& b, const Fe& c, const Fe& d);

MatN matn_zero(const Field& F, int n);
MatN matn_identity(const Field& F, int n);
MatN mat2_to_matn(const Mat2& A);
Mat2 matn_to_mat2(const MatN& A);

Mat2 add(const Field& F, const Mat2& A, const Mat2& B);
Mat2 sub(const Field& F, const Mat2& A, const Mat2& B);
Mat2 mul(const Field& F, const Mat2& A, const Mat2& B);
Mat2 smul(const Field& F, const Fe& c, const Mat2& A);
Mat2 neg(const Field& F, const Mat2& A);

MatN add(const Field& F, const MatN& A, const MatN& B);
MatN mul(const Field& F, const MatN& A, const MatN& B);
MatN smul(const Field& F, const Fe& c, const MatN& A);
MatN neg(const Field& F, const MatN& A);

Fe trace(const Field& F, const Mat2& A);
Fe trace(const Field& F, const MatN& A);
Fe det2(const Field& F, const Mat2& A);
Fe det(const Field& F, const MatN& A);

bool is_zero(const Field& F, const Mat2& A);
bool is_zero(const Field& F, const MatN& A);

/// 2x2 nilpotency: trace 0 and determinant 0 (equivalent to A^2 = 0).
bool is_nilpotent(const Field& F, const Mat2& A);
/// n x n nilpotency: A^n = 0.
bool is_nilpotent(const Field& F, const MatN& A);

bool is_invertible(const Field& F, const Mat2& A);
bool is_invertible(const Field& F, const MatN& A);
Mat2 inverse(const Field& F, const Mat2& A);  ///< throws on singular input
MatN inverse(const Field& F, const MatN& A);  ///< adjugate/determinant, n <= 3

/// g A g^{-1}.
Mat2 conjugate(const Field& F, const Mat2& g, const Mat2& A);
MatN conjugate(const Field& F, const MatN& g, const MatN& A);
/// Entrywise conjugation (g A_1 g^{-1}, ..., g A_m g^{-1}).
NilTuple conjugate_tuple(const Field& F, const Mat2& g, const NilTuple& T);
std::vector<MatN> conjugate_tuple(const Field& F, const MatN& g,
                                  const std::vector<MatN>& T);

NilTuple make_nil_tuple(const Field& F, std::vector<Mat2> mats);

/// All nilpotent n x n matrices over a finite field, in base-q
/// lexicographic entry order (row-major, first entry most significant).
/// Count is q^{n(n-1)}.
std::vector<MatN> enumerate_nilpotent(const Field& F, int n);
std::vector<Mat2> enumerate_nilpotent2(const Field& F);

/// All invertible n x n matrices over a finite field, same order.
std::vector<MatN> enumerate_gl(const Field& F, int n);
std::vector<Mat2> enumerate_gl2(const Field& F);

/// Base-q entry code of a matrix (first entry most significant); the
/// enumeration functions above emit codes in increasing order.
long mat_code(const Field& F, const Mat2& A);
long mat_code(const Field& F, const MatN& A);
Mat2 mat2_from_code(const Field& F, long code);
MatN matn_from_code(const Field& F, int n, long code);

}  // namespace nilorbit
