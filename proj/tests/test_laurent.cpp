#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cmfock/laurent.hpp"

using namespace cmfock;

namespace {

LaurentPoly q() { return LaurentPoly::q_power(1); }
LaurentPoly qi() { return LaurentPoly::q_power(-1); }

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), expo(-5, 5), coef(-6, 6);
  LaurentPoly p;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i)
    p += LaurentPoly::monomial(expo(rng), coef(rng));
  return p;
}

long factorial(long n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("basic arithmetic") {
  CHECK(q() + LaurentPoly::one() + LaurentPoly::constant(-1) == q());
  // (q - q^-1)(q + q^-1) = q^2 - q^-2
  CHECK((q() - qi()) * (q() + qi()) ==
        LaurentPoly::q_power(2) - LaurentPoly::q_power(-2));
}

TEST_CASE("zero annihilates") {
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    LaurentPoly p = random_poly(rng);
    CHECK(LaurentPoly::zero() * p == LaurentPoly::zero());
    CHECK(p - p == LaurentPoly::zero());
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(42);
  for (int t = 0; t < 50; ++t) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("bar involution") {
  CHECK((LaurentPoly::q_power(2) + LaurentPoly::monomial(-1, 3)).bar() ==
        LaurentPoly::q_power(-2) + LaurentPoly::monomial(1, 3));
  CHECK(LaurentPoly::constant(5).bar() == LaurentPoly::constant(5));
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    LaurentPoly p = random_poly(rng), r = random_poly(rng);
    CHECK(p.bar().bar() == p);
    CHECK((p * r).bar() == p.bar() * r.bar());  // ring automorphism
    CHECK((p + r).bar() == p.bar() + r.bar());
  }
}

TEST_CASE("quantum integers and factorials") {
  CHECK(quantum_factorial(0) == LaurentPoly::one());
  CHECK(quantum_factorial(1) == LaurentPoly::one());
  CHECK(quantum_factorial(2) == q() + qi());
  // [3]! = (q^2 + 1 + q^-2)(q + q^-1), expanded through the ring ops
  LaurentPoly three = LaurentPoly::q_power(2) + LaurentPoly::one() + LaurentPoly::q_power(-2);
  CHECK(quantum_factorial(3) == three * (q() + qi()));
  LaurentPoly expected = LaurentPoly::q_power(3) + LaurentPoly::monomial(1, 2) +
                         LaurentPoly::monomial(-1, 2) + LaurentPoly::q_power(-3);
  CHECK(quantum_factorial(3) == expected);

  SUBCASE("bar invariance up to 12") {
    for (long n = 0; n <= 12; ++n) CHECK(quantum_factorial(n).is_bar_symmetric());
  }
  SUBCASE("evaluation at one gives n!") {
    for (long n = 0; n <= 8; ++n)
      CHECK(quantum_factorial(n).eval_one() == Int(factorial(n)));
  }
  SUBCASE("negative argument mirrors") {
    CHECK(quantum_int(-3) == -quantum_int(3));
    CHECK(quantum_int(0) == LaurentPoly::zero());
  }
}

TEST_CASE("eval_one") {
  CHECK((q() + qi()).eval_one() == 2);
  CHECK(LaurentPoly::zero().eval_one() == 0);
  CHECK((LaurentPoly::q_power(3) - q()).eval_one() == 0);
}

TEST_CASE("exact division") {
  LaurentPoly d = q() + qi();
  CHECK(LaurentPoly::exact_divide(d, d) == LaurentPoly::one());
  CHECK(LaurentPoly::exact_divide(LaurentPoly::zero(), d) == LaurentPoly::zero());
  // (q^2 - q^-2)/(q - q^-1): verified by multiplying the value back
  LaurentPoly quot = LaurentPoly::exact_divide(
      LaurentPoly::q_power(2) - LaurentPoly::q_power(-2), q() - qi());
  CHECK(quot == q() + qi());
  CHECK(quot * (q() - qi()) == LaurentPoly::q_power(2) - LaurentPoly::q_power(-2));

  SUBCASE("random products divide back exactly") {
    std::mt19937 rng(11);
    for (int t = 0; t < 60; ++t) {
      LaurentPoly a = random_poly(rng);
      LaurentPoly b = random_poly(rng);
      if (b.is_zero()) continue;
      CHECK(LaurentPoly::exact_divide(a * b, b) == a);
    }
  }
  SUBCASE("non-divisible fails loudly") {
    CHECK_THROWS_AS(LaurentPoly::exact_divide(q() + LaurentPoly::one(),
                                              LaurentPoly::constant(2)),
                    DomainError);
    CHECK_THROWS_AS(LaurentPoly::exact_divide(q(), LaurentPoly::zero()), DomainError);
  }
}

TEST_CASE("serialization order is deterministic") {
  LaurentPoly p = LaurentPoly::monomial(3, 1) + LaurentPoly::monomial(-1, 2);
  std::vector<long> exps;
  for (const auto& [e, c] : p.terms()) exps.push_back(e);
  CHECK(exps == std::vector<long>{-1, 3});
  CHECK(p.str() == "q^3 + 2*q^-1");
}
