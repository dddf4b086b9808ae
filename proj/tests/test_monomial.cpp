#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <random>

#include "frobsplit/error.hpp"
#include "frobsplit/monomial.hpp"
#include "frobsplit/ring.hpp"

using namespace frobsplit;

namespace {

Monomial mk(std::initializer_list<int32_t> exps) {
  Monomial m;
  m.n = static_cast<int>(exps.size());
  int i = 0;
  for (int32_t e : exps) m.e[i++] = e;
  return m;
}

bool throws_code(Err want, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const AlgebraError& e) {
    return e.code() == want;
  }
  return false;
}

}  // namespace

TEST_CASE("product, quotient, lcm act componentwise", "[monomial]") {
  Monomial a = mk({2, 0, 3}), b = mk({1, 4, 0});
  CHECK(mono_mul(a, b) == mk({3, 4, 3}));
  CHECK(mono_lcm(a, b) == mk({2, 4, 3}));
  CHECK_FALSE(mono_divides(a, b));
  CHECK(mono_divides(a, mono_mul(a, b)));
  CHECK(mono_div(mono_mul(a, b), b) == a);
  CHECK(mono_coprime(mk({1, 0}), mk({0, 5})));
  CHECK_FALSE(mono_coprime(a, b));
  CHECK(mono_scale(a, 3) == mk({6, 0, 9}));
  CHECK(a.degree() == 5);
  CHECK(Monomial::one(3).is_one());
}

TEST_CASE("inexact quotient and arity mismatch are rejected", "[monomial]") {
  CHECK(throws_code(Err::BadExponent, [] { mono_div(mk({1, 0}), mk({0, 1})); }));
  CHECK(throws_code(Err::RingMismatch, [] { mono_mul(mk({1}), mk({1, 2})); }));
  CHECK(throws_code(Err::BadExponent, [] { Monomial::var(2, 0, -1); }));
  CHECK(throws_code(Err::BadIndex, [] { Monomial::var(2, 2); }));
}

TEST_CASE("exponent arithmetic overflows loudly, never wraps", "[monomial]") {
  Monomial big = mk({INT32_MAX, 0});
  CHECK(throws_code(Err::Overflow, [&] { mono_mul(big, mk({1, 0})); }));
  CHECK(mono_mul(big, mk({0, 1})) == mk({INT32_MAX, 1}));
  CHECK(throws_code(Err::Overflow, [&] { mono_scale(mk({2, 0}), int64_t(INT32_MAX)); }));
  CHECK(mono_scale(mk({1, 0}), int64_t(INT32_MAX)) == big);
}

TEST_CASE("textbook order comparisons", "[monomial]") {
  // x^2 y z vs x y^3 in three variables x > y > z
  Monomial a = mk({2, 1, 1}), b = mk({1, 3, 0});
  CHECK(monomial_compare(a, b, Order::lex) == 1);
  CHECK(monomial_compare(a, b, Order::grlex) == 1);
  CHECK(monomial_compare(a, b, Order::grevlex) == -1);  // b avoids the last variable
  // degree dominates in the graded orders
  CHECK(monomial_compare(mk({0, 0, 3}), mk({2, 0, 0}), Order::grlex) == 1);
  CHECK(monomial_compare(mk({0, 0, 3}), mk({2, 0, 0}), Order::grevlex) == 1);
  CHECK(monomial_compare(mk({0, 0, 3}), mk({2, 0, 0}), Order::lex) == -1);
  // classic grevlex vs grlex split: x y^2 z vs x^2 z^2 (degree 4 both)
  CHECK(monomial_compare(mk({1, 2, 1}), mk({2, 0, 2}), Order::grlex) == -1);
  CHECK(monomial_compare(mk({1, 2, 1}), mk({2, 0, 2}), Order::grevlex) == 1);
  CHECK(monomial_compare(a, a, Order::grevlex) == 0);
}

TEST_CASE("comparisons form a strict total order on random samples", "[monomial]") {
  std::mt19937_64 g(7);
  auto rnd = [&] {
    Monomial m;
    m.n = 3;
    for (int i = 0; i < 3; ++i) m.e[i] = static_cast<int32_t>(g() % 4);
    return m;
  };
  for (Order ord : {Order::lex, Order::grlex, Order::grevlex}) {
    for (int k = 0; k < 400; ++k) {
      Monomial a = rnd(), b = rnd(), c = rnd();
      int ab = monomial_compare(a, b, ord);
      CHECK(ab == -monomial_compare(b, a, ord));
      CHECK((ab == 0) == (a == b));
      // multiplicativity: a > b implies ac > bc
      if (ab != 0)
        CHECK(monomial_compare(mono_mul(a, c), mono_mul(b, c), ord) == ab);
      // transitivity on a sorted triple
      if (ab >= 0 && monomial_compare(b, c, ord) >= 0)
        CHECK(monomial_compare(a, c, ord) >= 0);
    }
    // 1 is the least monomial in graded orders
    if (ord != Order::lex)
      for (int k = 0; k < 50; ++k) {
        Monomial a = rnd();
        if (!a.is_one()) CHECK(monomial_compare(a, Monomial::one(3), ord) == 1);
      }
  }
}

TEST_CASE("string form names variables with exponents", "[monomial]") {
  Ring r = make_ring(7, {"x", "y", "z"}, Order::grevlex);
  CHECK(mono_to_string(mk({2, 1, 0}), r) == "x^2*y");
  CHECK(mono_to_string(mk({0, 0, 0}), r) == "1");
  CHECK(mono_to_string(mk({0, 0, 5}), r) == "z^5");
}
