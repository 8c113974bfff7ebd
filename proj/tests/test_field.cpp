#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilorbit/field.hpp"

using namespace nilorbit;

TEST_CASE("field spec parsing") {
  Field f2 = Field::make("q=2");
  CHECK(f2.q() == 2);
  CHECK(f2.p() == 2);
  CHECK(f2.k() == 1);

  Field f4 = Field::make("q=2^2");
  CHECK(f4.q() == 4);
  CHECK(f4.modulus() == std::vector<long>{1, 1, 1});

  Field f9 = Field::make("q=3^2;poly=1,0,1");
  CHECK(f9.q() == 9);
  CHECK(f9.modulus() == std::vector<long>{1, 0, 1});

  Field qq = Field::make("rational");
  CHECK(qq.kind() == FieldKind::rational);
  CHECK(qq.p() == 0);

  // round-trip
  for (const char* s : {"q=2", "q=7", "q=2^2;poly=1,1,1", "rational"})
    CHECK(Field::make(Field::make(s).spec()).spec() == Field::make(s).spec());
}

TEST_CASE("field spec rejection") {
  CHECK_THROWS_AS(Field::make("q=6"), std::invalid_argument);        // not prime
  CHECK_THROWS_AS(Field::make("q=4"), std::invalid_argument);        // 4 = 2^2, wrong form
  CHECK_THROWS_AS(Field::make("q=2^8"), std::invalid_argument);      // q > 128
  CHECK_THROWS_AS(Field::make("q=257"), std::invalid_argument);
  CHECK_THROWS_AS(Field::make("q=3^2;poly=2,0,1"), std::invalid_argument);  // x^2+2 reducible
  CHECK_THROWS_AS(Field::make("q=3^2;poly=1,0,2"), std::invalid_argument);  // not monic
  CHECK_THROWS_AS(Field::make("q=3^2;poly=1,0"), std::invalid_argument);    // wrong length
  CHECK_THROWS_AS(Field::make("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(Field::make("q=2^5"), std::invalid_argument);  // no built-in modulus
  // explicit modulus works where the table has none: x^5+x^2+1 over GF(2)
  CHECK(Field::make("q=2^5;poly=1,0,1,0,0,1").q() == 32);
}

TEST_CASE("prime field arithmetic") {
  Field F = Field::gf(3);
  CHECK(F.encode(F.add(F.from_int(2), F.from_int(2))) == 1);
  CHECK(F.encode(F.mul(F.from_int(2), F.from_int(2))) == 1);
  CHECK(F.encode(F.neg(F.from_int(1))) == 2);

  Field F5 = Field::gf(5);
  CHECK(F5.encode(F5.inv(F5.from_int(2))) == 3);
  CHECK(F5.encode(F5.pow(F5.from_int(2), 4)) == 1);
  CHECK(F5.encode(F5.pow(F5.zero(), 0)) == 1);  // 0^0 = 1
  CHECK_THROWS_AS(F5.inv(F5.zero()), std::domain_error);
  CHECK_THROWS_AS(F5.div(F5.one(), F5.zero()), std::domain_error);
}

TEST_CASE("extension field arithmetic") {
  Field F4 = Field::gf(2, 2);  // x^2+x+1
  Fe x = F4.decode(2);
  CHECK(F4.encode(F4.mul(x, x)) == 3);  // x^2 = x+1

  Field F9 = Field::make("q=3^2;poly=1,0,1");
  Fe y = F9.decode(3);                   // the adjoined root
  CHECK(F9.encode(F9.mul(y, y)) == 2);   // y^2 = -1 = 2

  // every built-in modulus constructs (each is re-verified irreducible)
  for (auto [p, k] : {std::pair<long, int>{2, 2}, {2, 3}, {2, 4}, {2, 6}, {2, 7},
                      {3, 2}, {3, 3}, {3, 4}, {5, 2}, {7, 2}, {11, 2}}) {
    Field F = Field::gf(p, k);
    long q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    CHECK(F.q() == q);
  }
}

TEST_CASE("element enumeration order") {
  Field F4 = Field::gf(2, 2);
  auto es = F4.elements();
  REQUIRE(es.size() == 4);
  for (long i = 0; i < 4; ++i) CHECK(F4.encode(es[static_cast<size_t>(i)]) == i);
  CHECK(F4.is_zero(es[0]));
  CHECK(F4.is_one(es[1]));

  Field F3 = Field::gf(3);
  auto nz = F3.elements(true);
  REQUIRE(nz.size() == 2);
  CHECK(F3.encode(nz[0]) == 1);
  CHECK(F3.encode(nz[1]) == 2);

  CHECK_THROWS_AS(Field::rationals().elements(), std::domain_error);
}

TEST_CASE("field axioms and classical identities") {
  for (const char* s : {"q=2", "q=3", "q=5", "q=2^2", "q=2^3", "q=3^2", "q=5^2",
                        "q=3^3", "q=7^2", "q=2^7", "q=11^2", "q=3^4"}) {
    Field F = Field::make(s);
    const long q = F.q();
    CAPTURE(s);

    auto all = F.elements();
    // sum of all elements vanishes for q > 2; product of units is -1
    Fe sum = F.zero();
    Fe prod = F.one();
    for (const Fe& x : all) {
      sum = F.add(sum, x);
      if (!F.is_zero(x)) prod = F.mul(prod, x);
    }
    if (q > 2) CHECK(F.is_zero(sum));
    CHECK(prod == F.neg(F.one()));

    // x^{q-1} = 1 and inv(x) * x = 1 for units
    for (const Fe& x : F.elements(true)) {
      CHECK(F.is_one(F.pow(x, static_cast<uint64_t>(q - 1))));
      CHECK(F.is_one(F.mul(F.inv(x), x)));
    }

    // Frobenius is additive (exhaustive; q <= 128)
    const uint64_t p = static_cast<uint64_t>(F.p());
    for (const Fe& a : all)
      for (const Fe& b : all)
        CHECK(F.pow(F.add(a, b), p) == F.add(F.pow(a, p), F.pow(b, p)));
  }
}

TEST_CASE("rational field") {
  Field Q = Field::rationals();
  Fe half = Q.from_ratio(1, 2);
  Fe third = Q.from_ratio(1, 3);
  CHECK(Q.str(Q.add(half, third)) == "5/6");
  CHECK(Q.str(Q.mul(half, third)) == "1/6");
  CHECK(Q.is_one(Q.mul(half, Q.from_int(2))));
  CHECK(Q.str(Q.inv(Q.from_ratio(2, 3))) == "3/2");
  CHECK(Q.str(Q.neg(Q.one())) == "-1");
  CHECK(Q.q() == 0);
  CHECK_THROWS_AS(Q.decode(1), std::domain_error);
  CHECK_THROWS_AS(Q.encode(Q.one()), std::domain_error);
}

TEST_CASE("field mismatch is rejected") {
  Field a = Field::gf(3);
  Field b = Field::gf(3);  // distinct instance
  CHECK_THROWS_AS(a.add(a.one(), b.one()), std::invalid_argument);
}

TEST_CASE("encode/decode round-trip") {
  Field F = Field::gf(3, 3);
  for (long c = 0; c < F.q(); ++c) CHECK(F.encode(F.decode(c)) == c);
}
