#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilorbit/mat.hpp"
#include "oracle.hpp"

using namespace nilorbit;

TEST_CASE("basic 2x2 algebra") {
  Field F = Field::gf(2);
  CHECK(mul(F, e12(F), e21(F)) == mat2_of(F, 1, 0, 0, 0));
  CHECK(mul(F, e12(F), e12(F)) == mat2_zero(F));

  Field F3 = Field::gf(3);
  CHECK(smul(F3, F3.from_int(2), e12(F3)) == mat2_of(F3, 0, 2, 0, 0));
  CHECK(add(F3, e12(F3), e21(F3)) == mat2_of(F3, 0, 1, 1, 0));
  CHECK(neg(F3, e12(F3)) == mat2_of(F3, 0, 2, 0, 0));
}

TEST_CASE("trace and determinant") {
  Field F = Field::gf(5);
  CHECK(trace(F, mat2_of(F, 1, 0, 0, 0)) == F.one());
  CHECK(det2(F, e12(F)) == F.zero());
  CHECK(det2(F, mat2_of(F, 1, 2, 3, 4)) == F.from_int(4 - 6));
  MatN I3 = matn_identity(F, 3);
  CHECK(trace(F, I3) == F.from_int(3));
  CHECK(det(F, I3) == F.one());
}

TEST_CASE("nilpotency criteria agree") {
  Field F2 = Field::gf(2);
  CHECK(is_nilpotent(F2, e12(F2)));
  CHECK_FALSE(is_nilpotent(F2, mat2_identity(F2)));

  Field F = Field::gf(3);
  CHECK(is_nilpotent(F, e12(F)));
  CHECK_FALSE(is_nilpotent(F, mat2_of(F, 1, 0, 0, 0)));
  Mat2 A = mat2_of(F, 1, 1, 2, 2);
  CHECK(is_nilpotent(F, A));
  CHECK(mul(F, A, A) == mat2_zero(F));

  // trace/det criterion == A^2 = 0, exhaustively
  for (const char* s : {"q=2", "q=3", "q=2^2"}) {
    Field K = Field::make(s);
    for (long code = 0; code < K.q() * K.q() * K.q() * K.q(); ++code) {
      Mat2 M = mat2_from_code(K, code);
      CHECK(is_nilpotent(K, M) == is_zero(K, mul(K, M, M)));
      CHECK(is_nilpotent(K, M) == is_nilpotent(K, mat2_to_matn(M)));
    }
  }
}

TEST_CASE("nilpotent enumeration counts q^{n(n-1)}") {
  auto count = [](const char* s, int n) {
    Field F = Field::make(s);
    return enumerate_nilpotent(F, n).size();
  };
  CHECK(count("q=2", 2) == 4);
  CHECK(count("q=3", 2) == 9);
  CHECK(count("q=2^2", 2) == 16);
  CHECK(count("q=5", 2) == 25);
  CHECK(count("q=2", 3) == 64);
  CHECK(count("q=3", 3) == 729);

  Field F = Field::gf(3);
  auto nil = enumerate_nilpotent(F, 3);
  for (const MatN& A : nil) CHECK(is_nilpotent(F, A));
  // deterministic: codes strictly increasing
  for (size_t i = 1; i < nil.size(); ++i)
    CHECK(mat_code(F, nil[i - 1]) < mat_code(F, nil[i]));

  auto nil2 = enumerate_nilpotent2(F);
  auto niln = enumerate_nilpotent(F, 2);
  REQUIRE(nil2.size() == niln.size());
  for (size_t i = 0; i < nil2.size(); ++i)
    CHECK(mat2_to_matn(nil2[i]) == niln[i]);

  CHECK_THROWS_AS(enumerate_nilpotent(F, 4), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_nilpotent(Field::rationals(), 2), std::domain_error);
}

TEST_CASE("general linear group enumeration") {
  CHECK(enumerate_gl(Field::gf(2), 2).size() == 6);
  CHECK(enumerate_gl(Field::gf(3), 2).size() == 48);
  CHECK(enumerate_gl(Field::gf(2), 3).size() == 168);
  CHECK(enumerate_gl2(Field::gf(5)).size() == 480);

  Field F = Field::gf(2);
  for (const MatN& g : enumerate_gl(F, 3)) {
    CHECK(is_invertible(F, g));
    CHECK(mul(F, g, inverse(F, g)) == matn_identity(F, 3));
  }
}

TEST_CASE("conjugation") {
  Field F = Field::gf(2);
  NilTuple T = make_nil_tuple(F, {e21(F)});
  Mat2 swap = mat2_of(F, 0, 1, 1, 0);
  CHECK(conjugate_tuple(F, swap, T).mats[0] == e12(F));
  CHECK(conjugate_tuple(F, mat2_identity(F), T) == T);

  NilTuple Z = make_nil_tuple(F, {mat2_zero(F), mat2_zero(F)});
  for (const Mat2& g : enumerate_gl2(F)) CHECK(conjugate_tuple(F, g, Z) == Z);

  // composition: g.(h.T) = (gh).T, exhaustive over GL2(F2)
  NilTuple S = make_nil_tuple(F, {e12(F), e21(F)});
  for (const Mat2& g : enumerate_gl2(F))
    for (const Mat2& h : enumerate_gl2(F))
      CHECK(conjugate_tuple(F, g, conjugate_tuple(F, h, S)) ==
            conjugate_tuple(F, mul(F, g, h), S));

  CHECK_THROWS_AS(conjugate(F, mat2_zero(F), e12(F)), std::domain_error);

  // conjugation preserves nilpotency, traces, determinants
  Field F3 = Field::gf(3);
  Mat2 A = mat2_of(F3, 1, 1, 2, 2);
  for (const Mat2& g : enumerate_gl2(F3)) {
    Mat2 B = conjugate(F3, g, A);
    CHECK(is_nilpotent(F3, B));
    CHECK(trace(F3, B) == trace(F3, A));
    CHECK(det2(F3, B) == det2(F3, A));
  }
}

TEST_CASE("triple-trace antisymmetry on nilpotent matrices") {
  for (const char* s : {"q=2", "q=3"}) {
    Field F = Field::make(s);
    auto nil = enumerate_nilpotent2(F);
    for (const Mat2& A : nil)
      for (const Mat2& B : nil)
        for (const Mat2& C : nil) {
          Fe lhs = trace(F, mul(F, mul(F, A, B), C));
          Fe rhs = F.neg(trace(F, mul(F, mul(F, A, C), B)));
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("matrix codes round-trip") {
  Field F = Field::gf(3);
  for (long code = 0; code < 81; ++code)
    CHECK(mat_code(F, mat2_from_code(F, code)) == code);
  Field F2 = Field::gf(2);
  for (long code = 0; code < 64; ++code)
    CHECK(mat_code(F2, matn_from_code(F2, 3, code)) == code);
}

TEST_CASE("shape mismatch is rejected") {
  Field F = Field::gf(2);
  CHECK_THROWS_AS(add(F, matn_identity(F, 2), matn_identity(F, 3)), std::invalid_argument);
  CHECK_THROWS_AS(mul(F, matn_identity(F, 3), matn_identity(F, 2)), std::invalid_argument);
}

TEST_CASE("nil tuple validation") {
  Field F = Field::gf(3);
  CHECK_THROWS_AS(make_nil_tuple(F, {mat2_of(F, 1, 0, 0, 0)}), std::invalid_argument);
  CHECK_THROWS_AS(make_nil_tuple(F, {}), std::invalid_argument);
  CHECK(make_nil_tuple(F, {e12(F), e21(F)}).m() == 2);
}

TEST_CASE("rational-mode matrices") {
  Field Q = Field::rationals();
  Mat2 A = mat2(Q.from_int(1), Q.from_int(1), Q.from_int(-1), Q.from_int(-1));
  CHECK(is_nilpotent(Q, A));
  CHECK(mul(Q, A, A) == mat2_zero(Q));
  Mat2 g = mat2(Q.from_int(2), Q.from_int(1), Q.from_int(1), Q.from_int(1));
  CHECK(mul(Q, g, inverse(Q, g)) == mat2_identity(Q));
  CHECK(trace(Q, conjugate(Q, g, A)) == Q.zero());
}
