#include "nilorbit/mat.hpp"

#include <stdexcept>

namespace nilorbit {

namespace {

void check_n(int n) {
  if (n < 2 || n > 3) throw std::invalid_argument("matrix size must be 2 or 3");
}

long checked_pow(long q, int e) {
  long v = 1;
  for (int i = 0; i < e; ++i) v *= q;
  return v;
}

}  // namespace

Mat2 mat2_zero(const Field& F) {
  Fe z = F.zero();
  return Mat2{{z, z, z, z}};
}

Mat2 mat2_identity(const Field& F) {
  Fe z = F.zero(), o = F.one();
  return Mat2{{o, z, z, o}};
}

Mat2 mat2(const Fe& a11, const Fe& a12, const Fe& a21, const Fe& a22) {
  return Mat2{{a11, a12, a21, a22}};
}

Mat2 mat2_of(const Field& F, long a11, long a12, long a21, long a22) {
  return Mat2{{F.from_int(a11), F.from_int(a12), F.from_int(a21), F.from_int(a22)}};
}

Mat2 e12(const Field& F) { return mat2_of(F, 0, 1, 0, 0); }
Mat2 e21(const Field& F) { return mat2_of(F, 0, 0, 1, 0); }

Mat2 mat2_d(const Field& F, const Fe& b, const Fe& c, const Fe& d) {
  return Mat2{{b, c, d, F.neg(b)}};
}

MatN matn_zero(const Field& F, int n) {
  check_n(n);
  MatN A;
  A.n = n;
  for (int i = 0; i < n * n; ++i) A.a[static_cast<size_t>(i)] = F.zero();
  return A;
}

MatN matn_identity(const Field& F, int n) {
  MatN A = matn_zero(F, n);
  for (int i = 0; i < n; ++i) A(i, i) = F.one();
  return A;
}

MatN mat2_to_matn(const Mat2& A) {
  MatN B;
  B.n = 2;
  for (int i = 0; i < 4; ++i) B.a[static_cast<size_t>(i)] = A.a[static_cast<size_t>(i)];
  return B;
}

Mat2 matn_to_mat2(const MatN& A) {
  if (A.n != 2) throw std::invalid_argument("matrix is not 2x2");
  return Mat2{{A.a[0], A.a[1], A.a[2], A.a[3]}};
}

Mat2 add(const Field& F, const Mat2& A, const Mat2& B) {
  Mat2 C;
  for (int i = 0; i < 4; ++i)
    C.a[static_cast<size_t>(i)] = F.add(A.a[static_cast<size_t>(i)], B.a[static_cast<size_t>(i)]);
  return C;
}

Mat2 sub(const Field& F, const Mat2& A, const Mat2& B) { return add(F, A, neg(F, B)); }

Mat2 mul(const Field& F, const Mat2& A, const Mat2& B) {
  Mat2 C;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      C(i, j) = F.add(F.mul(A(i, 0), B(0, j)), F.mul(A(i, 1), B(1, j)));
  return C;
}

Mat2 smul(const Field& F, const Fe& c, const Mat2& A) {
  Mat2 C;
  for (int i = 0; i < 4; ++i) C.a[static_cast<size_t>(i)] = F.mul(c, A.a[static_cast<size_t>(i)]);
  return C;
}

Mat2 neg(const Field& F, const Mat2& A) {
  Mat2 C;
  for (int i = 0; i < 4; ++i) C.a[static_cast<size_t>(i)] = F.neg(A.a[static_cast<size_t>(i)]);
  return C;
}

MatN add(const Field& F, const MatN& A, const MatN& B) {
  if (A.n != B.n) throw std::invalid_argument("matrix shape mismatch");
  MatN C;
  C.n = A.n;
  for (int i = 0; i < A.n * A.n; ++i)
    C.a[static_cast<size_t>(i)] = F.add(A.a[static_cast<size_t>(i)], B.a[static_cast<size_t>(i)]);
  return C;
}

MatN mul(const Field& F, const MatN& A, const MatN& B) {
  if (A.n != B.n) throw std::invalid_argument("matrix shape mismatch");
  const int n = A.n;
  MatN C = matn_zero(F, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Fe s = F.zero();
      for (int t = 0; t < n; ++t) s = F.add(s, F.mul(A(i, t), B(t, j)));
      C(i, j) = s;
    }
  return C;
}

MatN smul(const Field& F, const Fe& c, const MatN& A) {
  MatN C;
  C.n = A.n;
  for (int i = 0; i < A.n * A.n; ++i)
    C.a[static_cast<size_t>(i)] = F.mul(c, A.a[static_cast<size_t>(i)]);
  return C;
}

MatN neg(const Field& F, const MatN& A) {
  MatN C;
  C.n = A.n;
  for (int i = 0; i < A.n * A.n; ++i)
    C.a[static_cast<size_t>(i)] = F.neg(A.a[static_cast<size_t>(i)]);
  return C;
}

Fe trace(const Field& F, const Mat2& A) { return F.add(A(0, 0), A(1, 1)); }

Fe trace(const Field& F, const MatN& A) {
  Fe s = F.zero();
  for (int i = 0; i < A.n; ++i) s = F.add(s, A(i, i));
  return s;
}

Fe det2(const Field& F, const Mat2& A) {
  return F.sub(F.mul(A(0, 0), A(1, 1)), F.mul(A(0, 1), A(1, 0)));
}

Fe det(const Field& F, const MatN& A) {
  if (A.n == 2)
    return F.sub(F.mul(A(0, 0), A(1, 1)), F.mul(A(0, 1), A(1, 0)));
  // Sarrus
  Fe s = F.zero();
  s = F.add(s, F.mul(A(0, 0), F.mul(A(1, 1), A(2, 2))));
  s = F.add(s, F.mul(A(0, 1), F.mul(A(1, 2), A(2, 0))));
  s = F.add(s, F.mul(A(0, 2), F.mul(A(1, 0), A(2, 1))));
  s = F.sub(s, F.mul(A(0, 2), F.mul(A(1, 1), A(2, 0))));
  s = F.sub(s, F.mul(A(0, 0), F.mul(A(1, 2), A(2, 1))));
  s = F.sub(s, F.mul(A(0, 1), F.mul(A(1, 0), A(2, 2))));
  return s;
}

bool is_zero(const Field& F, const Mat2& A) {
  for (const Fe& x : A.a)
    if (!F.is_zero(x)) return false;
  return true;
}

bool is_zero(const Field& F, const MatN& A) {
  for (int i = 0; i < A.n * A.n; ++i)
    if (!F.is_zero(A.a[static_cast<size_t>(i)])) return false;
  return true;
}

bool is_nilpotent(const Field& F, const Mat2& A) {
  return F.is_zero(trace(F, A)) && F.is_zero(det2(F, A));
}

bool is_nilpotent(const Field& F, const MatN& A) {
  MatN P = A;
  for (int i = 1; i < A.n; ++i) P = mul(F, P, A);
  return is_zero(F, P);
}

bool is_invertible(const Field& F, const Mat2& A) { return !F.is_zero(det2(F, A)); }
bool is_invertible(const Field& F, const MatN& A) { return !F.is_zero(det(F, A)); }

Mat2 inverse(const Field& F, const Mat2& A) {
  Fe d = det2(F, A);
  if (F.is_zero(d)) throw std::domain_error("matrix is singular");
  Fe di = F.inv(d);
  return Mat2{{F.mul(di, A(1, 1)), F.mul(di, F.neg(A(0, 1))),
               F.mul(di, F.neg(A(1, 0))), F.mul(di, A(0, 0))}};
}

MatN inverse(const Field& F, const MatN& A) {
  Fe d = det(F, A);
  if (F.is_zero(d)) throw std::domain_error("matrix is singular");
  Fe di = F.inv(d);
  if (A.n == 2) {
    MatN B = matn_zero(F, 2);
    B(0, 0) = F.mul(di, A(1, 1));
    B(0, 1) = F.mul(di, F.neg(A(0, 1)));
    B(1, 0) = F.mul(di, F.neg(A(1, 0)));
    B(1, 1) = F.mul(di, A(0, 0));
    return B;
  }
  MatN B = matn_zero(F, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
      const int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      // cofactor expansion; the cyclic index choice absorbs the sign
      Fe cof = F.sub(F.mul(A(r0, c0), A(r1, c1)), F.mul(A(r0, c1), A(r1, c0)));
      B(j, i) = F.mul(di, cof);  // transposed
    }
  return B;
}

Mat2 conjugate(const Field& F, const Mat2& g, const Mat2& A) {
  return mul(F, mul(F, g, A), inverse(F, g));
}

MatN conjugate(const Field& F, const MatN& g, const MatN& A) {
  return mul(F, mul(F, g, A), inverse(F, g));
}

NilTuple conjugate_tuple(const Field& F, const Mat2& g, const NilTuple& T) {
  Mat2 gi = inverse(F, g);
  NilTuple R;
  R.mats.reserve(T.mats.size());
  for (const Mat2& A : T.mats) R.mats.push_back(mul(F, mul(F, g, A), gi));
  return R;
}

std::vector<MatN> conjugate_tuple(const Field& F, const MatN& g,
                                  const std::vector<MatN>& T) {
  MatN gi = inverse(F, g);
  std::vector<MatN> R;
  R.reserve(T.size());
  for (const MatN& A : T) R.push_back(mul(F, mul(F, g, A), gi));
  return R;
}

NilTuple make_nil_tuple(const Field& F, std::vector<Mat2> mats) {
  if (mats.empty()) throw std::invalid_argument("tuple length m must be >= 1");
  for (const Mat2& A : mats)
    if (!is_nilpotent(F, A))
      throw std::invalid_argument("tuple entry is not nilpotent");
  return NilTuple{std::move(mats)};
}

long mat_code(const Field& F, const Mat2& A) {
  long v = 0;
  for (const Fe& x : A.a) v = v * F.q() + F.encode(x);
  return v;
}

long mat_code(const Field& F, const MatN& A) {
  long v = 0;
  for (int i = 0; i < A.n * A.n; ++i) v = v * F.q() + F.encode(A.a[static_cast<size_t>(i)]);
  return v;
}

Mat2 mat2_from_code(const Field& F, long code) {
  const long q = F.q();
  Mat2 A;
  for (int i = 3; i >= 0; --i) {
    A.a[static_cast<size_t>(i)] = F.decode(code % q);
    code /= q;
  }
  return A;
}

MatN matn_from_code(const Field& F, int n, long code) {
  check_n(n);
  const long q = F.q();
  MatN A;
  A.n = n;
  for (int i = n * n - 1; i >= 0; --i) {
    A.a[static_cast<size_t>(i)] = F.decode(code % q);
    code /= q;
  }
  return A;
}

std::vector<MatN> enumerate_nilpotent(const Field& F, int n) {
  check_n(n);
  if (!F.finite()) throw std::domain_error("enumeration requires a finite field");
  const long total = checked_pow(F.q(), n * n);
  std::vector<MatN> out;
  for (long code = 0; code < total; ++code) {
    MatN A = matn_from_code(F, n, code);
    if (is_nilpotent(F, A)) out.push_back(std::move(A));
  }
  return out;
}

std::vector<Mat2> enumerate_nilpotent2(const Field& F) {
  if (!F.finite()) throw std::domain_error("enumeration requires a finite field");
  const long total = checked_pow(F.q(), 4);
  std::vector<Mat2> out;
  out.reserve(static_cast<size_t>(F.q() * F.q()));
  for (long code = 0; code < total; ++code) {
    Mat2 A = mat2_from_code(F, code);
    if (is_nilpotent(F, A)) out.push_back(std::move(A));
  }
  return out;
}

std::vector<MatN> enumerate_gl(const Field& F, int n) {
  check_n(n);
  if (!F.finite()) throw std::domain_error("enumeration requires a finite field");
  const long total = checked_pow(F.q(), n * n);
  std::vector<MatN> out;
  for (long code = 0; code < total; ++code) {
    MatN A = matn_from_code(F, n, code);
    if (is_invertible(F, A)) out.push_back(std::move(A));
  }
  return out;
}

std::vector<Mat2> enumerate_gl2(const Field& F) {
  if (!F.finite()) throw std::domain_error("enumeration requires a finite field");
  const long total = checked_pow(F.q(), 4);
  std::vector<Mat2> out;
  for (long code = 0; code < total; ++code) {
    Mat2 A = mat2_from_code(F, code);
    if (is_invertible(F, A)) out.push_back(std::move(A));
  }
  return out;
}

}  // namespace nilorbit
