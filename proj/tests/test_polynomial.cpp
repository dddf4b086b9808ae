#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "frobsplit/error.hpp"
#include "frobsplit/polynomial.hpp"
#include "frobsplit/ring.hpp"

using namespace frobsplit;

namespace {

struct Sampler {
  Ring r;
  std::mt19937_64 g;
  Sampler(Ring ring, uint64_t seed) : r(std::move(ring)), g(seed) {}

  Polynomial draw(int max_terms = 4, int max_deg = 3) {
    std::vector<Term> ts;
    size_t nt = 1 + g() % max_terms;
    for (size_t k = 0; k < nt; ++k) {
      Monomial m;
      m.n = r->nvars();
      int deg = static_cast<int>(g() % (max_deg + 1));
      for (int d = 0; d < deg; ++d) ++m.e[g() % m.n];
      ts.push_back({m, 1 + static_cast<uint32_t>(g() % (r->p - 1))});
    }
    return poly_from_terms(r, std::move(ts));
  }
};

Polynomial naive_pow(const Polynomial& f, int64_t k) {
  Polynomial acc = poly_const(f.ring, 1);
  for (int64_t i = 0; i < k; ++i) acc = poly_mul(acc, f);
  return acc;
}

}  // namespace

TEST_CASE("ring axioms hold on random triples", "[polynomial]") {
  for (uint32_t p : {2u, 3u, 7u}) {
    Ring r = make_ring(p, {"x", "y"}, Order::grevlex);
    Sampler s(r, 100 + p);
    for (int k = 0; k < 350; ++k) {
      Polynomial a = s.draw(), b = s.draw(), c = s.draw();
      CHECK(poly_equal(poly_add(poly_add(a, b), c), poly_add(a, poly_add(b, c))));
      CHECK(poly_equal(poly_add(a, b), poly_add(b, a)));
      CHECK(poly_equal(poly_mul(a, b), poly_mul(b, a)));
      CHECK(poly_equal(poly_mul(poly_mul(a, b), c), poly_mul(a, poly_mul(b, c))));
      CHECK(poly_equal(poly_mul(a, poly_add(b, c)),
                       poly_add(poly_mul(a, b), poly_mul(a, c))));
      CHECK(poly_sub(a, a).is_zero());
      CHECK(poly_equal(poly_add(a, poly_neg(a)), poly_zero(r)));
      CHECK(poly_equal(poly_mul(a, poly_const(r, 1)), a));
      CHECK(poly_mul(a, poly_zero(r)).is_zero());
    }
  }
}

TEST_CASE("normalization collapses duplicates and drops zeros", "[polynomial]") {
  Ring r = make_ring(3, {"x", "y"}, Order::grevlex);
  Monomial x = Monomial::var(2, 0);
  Polynomial f = poly_from_terms(r, {{x, 2}, {x, 1}});  // 2x + x = 3x = 0
  CHECK(f.is_zero());
  Polynomial g = poly_from_terms(r, {{x, 2}, {Monomial::one(2), 1}, {x, 2}});
  CHECK(g.t.size() == 2);
  CHECK(g.lm() == x);
  CHECK(g.lc() == 1);  // 2+2 = 4 = 1 mod 3
}

TEST_CASE("terms stay strictly sorted under the ring order", "[polynomial]") {
  for (Order ord : {Order::lex, Order::grlex, Order::grevlex}) {
    Ring r = make_ring(7, {"x", "y", "z"}, ord);
    Sampler s(r, 17);
    for (int k = 0; k < 100; ++k) {
      Polynomial f = poly_mul(s.draw(), s.draw());
      for (size_t i = 0; i + 1 < f.t.size(); ++i)
        CHECK(monomial_compare(f.t[i].m, f.t[i + 1].m, ord) == 1);
      for (const auto& t : f.t) {
        CHECK(t.c >= 1);
        CHECK(t.c < r->p);
      }
    }
  }
}

TEST_CASE("power matches repeated multiplication", "[polynomial]") {
  Ring r = make_ring(5, {"x", "y"}, Order::grevlex);
  Sampler s(r, 23);
  for (int k = 0; k < 60; ++k) {
    Polynomial f = s.draw(3, 2);
    for (int64_t e : {0, 1, 2, 3, 5})
      CHECK(poly_equal(poly_pow(f, e), naive_pow(f, e)));
  }
}

TEST_CASE("p-th power is the termwise bracket in char p", "[polynomial]") {
  // freshman's dream: f^p = sum c_i m_i^p
  for (uint32_t p : {2u, 3u, 7u}) {
    Ring r = make_ring(p, {"x", "y"}, Order::grevlex);
    Sampler s(r, 31 + p);
    for (int k = 0; k < 80; ++k) {
      Polynomial f = s.draw();
      CHECK(poly_equal(poly_pow(f, p), poly_pow_charp(f, 1)));
      CHECK(poly_equal(poly_pow(f, static_cast<int64_t>(p) * p), poly_pow_charp(f, 2)));
    }
  }
}

TEST_CASE("boxed power drops exactly the terms with an exponent at q", "[polynomial]") {
  Ring r = make_ring(3, {"x", "y"}, Order::grevlex);
  Sampler s(r, 47);
  for (int k = 0; k < 60; ++k) {
    Polynomial f = s.draw(3, 2);
    int64_t q = 9;
    Polynomial full = poly_pow(f, 4);
    std::vector<Term> kept;
    for (const auto& t : full.t) {
      bool in_box = true;
      for (int i = 0; i < t.m.n; ++i)
        if (t.m.e[i] >= q) in_box = false;
      if (in_box) kept.push_back(t);
    }
    CHECK(poly_equal(poly_pow_mod_q(f, 4, q), poly_from_terms(r, kept)));
  }
}

TEST_CASE("base-q digit split reassembles the polynomial", "[polynomial]") {
  for (uint32_t p : {2u, 3u}) {
    Ring r = make_ring(p, {"x", "y", "z"}, Order::grevlex);
    Sampler s(r, 53 + p);
    for (int e : {1, 2}) {
      int32_t q = 1;
      for (int i = 0; i < e; ++i) q *= static_cast<int32_t>(p);
      for (int k = 0; k < 120; ++k) {
        Polynomial f = s.draw(5, 6);
        auto parts = pe_decompose(f, e);
        Polynomial back = poly_zero(r);
        for (const auto& [a, ga] : parts) {
          CHECK_FALSE(ga.is_zero());
          for (int i = 0; i < a.n; ++i) CHECK(a.e[i] < q);  // residue exponents lie below q
          back = poly_add(back, poly_mul(poly_mono(r, a), poly_pow_charp(ga, e)));
        }
        CHECK(poly_equal(back, f));
      }
    }
  }
}

TEST_CASE("derivative satisfies the product rule and partials commute", "[polynomial]") {
  for (uint32_t p : {2u, 5u}) {
    Ring r = make_ring(p, {"x", "y"}, Order::grevlex);
    Sampler s(r, 61 + p);
    for (int k = 0; k < 100; ++k) {
      Polynomial f = s.draw(), g = s.draw();
      for (int i = 0; i < 2; ++i) {
        Polynomial lhs = partial_derivative(poly_mul(f, g), i);
        Polynomial rhs = poly_add(poly_mul(partial_derivative(f, i), g),
                                  poly_mul(f, partial_derivative(g, i)));
        CHECK(poly_equal(lhs, rhs));
      }
      CHECK(poly_equal(partial_derivative(partial_derivative(f, 0), 1),
                       partial_derivative(partial_derivative(f, 1), 0)));
    }
    // d/dx x^p = p x^{p-1} = 0
    CHECK(partial_derivative(poly_var(r, 0, static_cast<int32_t>(p)), 0).is_zero());
  }
}

TEST_CASE("exact division inverts multiplication and rejects the rest", "[polynomial]") {
  Ring r = make_ring(7, {"x", "y"}, Order::grevlex);
  Sampler s(r, 71);
  for (int k = 0; k < 80; ++k) {
    Polynomial f = s.draw(), g = s.draw();
    while (g.is_zero()) g = s.draw();
    CHECK(poly_equal(divide_exact(poly_mul(f, g), g), f));
  }
  Polynomial x = poly_var(r, 0), y = poly_var(r, 1);
  CHECK_THROWS_AS(divide_exact(poly_add(x, poly_const(r, 1)), y), AlgebraError);
  CHECK_THROWS_AS(divide_exact(x, poly_zero(r)), AlgebraError);
  CHECK(divide_exact(poly_zero(r), x).is_zero());
}

TEST_CASE("variable usage report", "[polynomial]") {
  Ring r = make_ring(5, {"x", "y", "z"}, Order::grevlex);
  Polynomial f = poly_add(poly_var(r, 0), poly_var(r, 2));
  CHECK(poly_vars_used(f) == std::vector<int>{0, 2});
  CHECK(poly_vars_used(poly_const(r, 1)).empty());
}

TEST_CASE("string form is monic-friendly and stable", "[polynomial]") {
  Ring r = make_ring(7, {"x", "y"}, Order::grevlex);
  Polynomial f = poly_add(poly_mul(poly_const(r, 3), poly_var(r, 0, 2)), poly_var(r, 1));
  CHECK(poly_to_string(f) == "3*x^2 + y");
  CHECK(poly_to_string(poly_zero(r)) == "0");
  CHECK(poly_to_string(poly_const(r, 6)) == "6");
}
