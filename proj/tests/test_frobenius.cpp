#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "frobsplit/frobenius.hpp"
#include "frobsplit/parse.hpp"

using namespace frobsplit;

namespace {

bool throws_code(Err want, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const AlgebraError& e) {
    return e.code() == want;
  }
  return false;
}

Polynomial rand_poly(std::mt19937_64& g, const Ring& r, int max_terms, int max_deg) {
  for (;;) {
    std::vector<Term> ts;
    size_t nt = 1 + g() % max_terms;
    for (size_t k = 0; k < nt; ++k) {
      Monomial m;
      m.n = r->nvars();
      int deg = 1 + static_cast<int>(g() % max_deg);
      for (int d = 0; d < deg; ++d) ++m.e[g() % m.n];
      ts.push_back({m, 1 + static_cast<uint32_t>(g() % (r->p - 1))});
    }
    Polynomial f = poly_from_terms(r, std::move(ts));
    if (!f.is_zero()) return f;
  }
}

Ring ring41() { return make_ring(7, {"x0", "x1", "x2", "x3"}, Order::grevlex); }
Polynomial f41(const Ring& r) { return parse_poly("x0^2 - x1^6*x2^2 + x3^3", r); }
Ring ring42() { return make_ring(7, {"x", "y", "z", "w"}, Order::grevlex); }
Polynomial f42(const Ring& r) { return parse_poly("x^3 + y^3 + z^3", r); }

}  // namespace

TEST_CASE("prime power helper", "[frobenius]") {
  CHECK(frobenius_q(2, 1) == 2);
  CHECK(frobenius_q(3, 2) == 9);
  CHECK(frobenius_q(2, 30) == (int64_t(1) << 30));
  CHECK(throws_code(Err::BadExponent, [] { frobenius_q(2, 0); }));
  CHECK(throws_code(Err::Overflow, [] { frobenius_q(2, 63); }));
  CHECK(checked_pow_i64(7, 3) == 343);
  CHECK(throws_code(Err::Overflow, [] { checked_pow_i64(10, 30); }));
}

TEST_CASE("bracket root inverts the bracket power", "[frobenius]") {
  std::mt19937_64 g(311);
  for (uint32_t p : {2u, 3u}) {
    Ring r = make_ring(p, {"x", "y"}, Order::grevlex);
    for (int e : {1, 2}) {
      for (int k = 0; k < 50; ++k) {
        std::vector<Polynomial> gens = {rand_poly(g, r, 3, 3), rand_poly(g, r, 3, 3)};
        Ideal I = ideal_make(r, gens);
        CHECK(ideal_equal(frobenius_root(bracket_power(I, e), e), I));
      }
    }
  }
}

TEST_CASE("bracket root sees through rewritten generators", "[frobenius]") {
  // x^p + y^p and (x+y)^p generate the same ideal; the root must be (x+y)
  for (uint32_t p : {2u, 3u, 7u}) {
    Ring r = make_ring(p, {"x", "y"}, Order::grevlex);
    Polynomial xpyp = poly_add(poly_var(r, 0, static_cast<int32_t>(p)),
                               poly_var(r, 1, static_cast<int32_t>(p)));
    Ideal root = frobenius_root(ideal_make(r, {xpyp}), 1);
    CHECK(ideal_equal(root, ideal_make(r, {parse_poly("x + y", r)})));
  }
  // and mixing in redundant generators does not change the root ideal
  std::mt19937_64 g(313);
  Ring r = make_ring(3, {"x", "y"}, Order::grevlex);
  for (int k = 0; k < 40; ++k) {
    Polynomial a = rand_poly(g, r, 3, 3), b = rand_poly(g, r, 3, 3);
    Ideal I = ideal_make(r, {a, b});
    Ideal J = ideal_make(r, {a, b, poly_add(poly_mul(rand_poly(g, r, 2, 2), a), b)});
    Ideal BI = bracket_power(I, 1), BJ = bracket_power(J, 1);
    if (!ideal_equal(BI, BJ)) continue;
    CHECK(ideal_equal(frobenius_root(BI, 1), frobenius_root(BJ, 1)));
  }
}

TEST_CASE("purity test pins", "[frobenius]") {
  CHECK(fedder_fpure(make_context(ring41(), f41(ring41()))));
  CHECK(fedder_fpure(make_context(ring42(), f42(ring42()))));

  Ring r2 = make_ring(2, {"x", "y"}, Order::grevlex);
  CHECK_FALSE(fedder_fpure(make_context(r2, parse_poly("x^2 + y^2", r2))));
  CHECK(fedder_fpure(make_context(r2, parse_poly("x*y", r2))));

  Ring r3 = make_ring(3, {"x", "y"}, Order::grevlex);
  CHECK(fedder_fpure(make_context(r3, parse_poly("x*y", r3))));
  CHECK_FALSE(fedder_fpure(make_context(r3, parse_poly("x^2", r3))));
}

TEST_CASE("context construction rejects degenerate data", "[frobenius]") {
  Ring r = make_ring(3, {"x", "y"}, Order::grevlex);
  CHECK(throws_code(Err::DivisionByZero, [&] { make_context(r, poly_zero(r)); }));
  CHECK(throws_code(Err::UnitIdeal, [&] { make_context(r, parse_poly("x + 1", r)); }));
  // non-default frames must be zero-dimensional
  CHECK(throws_code(Err::NotZeroDim, [&] {
    make_context(r, parse_poly("x*y", r), std::vector<Polynomial>{poly_var(r, 0)});
  }));
}

TEST_CASE("purity threshold equals a positive first splitting number", "[frobenius]") {
  std::mt19937_64 g(317);
  for (uint32_t p : {2u, 3u, 5u}) {
    Ring r = make_ring(p, {"x", "y", "z"}, Order::grevlex);
    for (int k = 0; k < 35; ++k) {
      Polynomial f = rand_poly(g, r, 4, 4);
      HypersurfaceContext ctx = make_context(r, f);
      CHECK(fedder_fpure(ctx) == (splitting_number(ctx, 1) >= 1));
    }
  }
}

TEST_CASE("splitting ideal pins and chain", "[frobenius]") {
  Ring r3 = make_ring(3, {"x", "y"}, Order::grevlex);
  HypersurfaceContext cxy = make_context(r3, parse_poly("x*y", r3));
  CHECK(ideal_equal(splitting_ideal(cxy, 1), maximal_ideal(r3)));
  CHECK(splitting_number(cxy, 1) == 1);
  CHECK(splitting_number(cxy, 2) == 1);

  Ring r2 = make_ring(2, {"x", "y"}, Order::grevlex);
  HypersurfaceContext cx = make_context(r2, parse_poly("x", r2));
  CHECK(ideal_equal(splitting_ideal(cx, 1),
                    ideal_make(r2, {parse_poly("x", r2), parse_poly("y^2", r2)})));
  CHECK(splitting_number(cx, 1) == 2);

  // deeper levels only shrink
  std::mt19937_64 g(331);
  for (uint32_t p : {2u, 3u}) {
    Ring r = make_ring(p, {"x", "y"}, Order::grevlex);
    for (int k = 0; k < 25; ++k) {
      HypersurfaceContext ctx = make_context(r, rand_poly(g, r, 3, 3));
      if (!fedder_fpure(ctx)) continue;
      CHECK(ideal_subset(splitting_ideal(ctx, 2), splitting_ideal(ctx, 1)));
    }
  }
}

TEST_CASE("worked instance: two-variable cusp family lift", "[frobenius]") {
  // f = x0^2 - x1^6 x2^2 + x3^3 over p = 7
  Ring r = ring41();
  HypersurfaceContext ctx = make_context(r, f41(r));
  Ideal I1 = splitting_ideal(ctx, 1);
  Ideal want = ideal_make(r, {parse_poly("x0", r), parse_poly("x1", r), parse_poly("x2^5", r),
                              parse_poly("x3", r)});
  CHECK(ideal_equal(I1, want));
  CHECK(splitting_number(ctx, 1) == 5);

  SplittingPrimeResult pr = splitting_prime(ctx);
  CHECK_FALSE(pr.zero_in_quotient);
  CHECK(ideal_equal(pr.prime, ideal_make(r, {parse_poly("x0", r), parse_poly("x1", r),
                                             parse_poly("x3", r)})));
  CHECK(pr.method == PrimeMethod::EscapingChain);
  CHECK(pr.primality_certified);
  CHECK(splitting_dimension(ctx, pr) == 1);

  Rational rt = splitting_ratio_estimate(ctx, 1);
  CHECK(rt.num == 5);
  CHECK(rt.den == 7);
}

TEST_CASE("worked instance: diagonal cubic in four variables", "[frobenius]") {
  Ring r = ring42();
  HypersurfaceContext ctx = make_context(r, f42(r));
  CHECK(splitting_number(ctx, 1) == 7);
  Ideal want1 = ideal_make(r, {parse_poly("x", r), parse_poly("y", r), parse_poly("z", r),
                               parse_poly("w^7", r)});
  CHECK(ideal_equal(splitting_ideal(ctx, 1), want1));

  // the unused variable contracts away, so the second level stays affordable
  CHECK(splitting_number(ctx, 2) == 49);

  SplittingPrimeResult pr = splitting_prime(ctx);
  CHECK(ideal_equal(pr.prime, ideal_make(r, {parse_poly("x", r), parse_poly("y", r),
                                             parse_poly("z", r)})));
  CHECK(pr.primality_certified);
  CHECK(splitting_dimension(ctx, pr) == 1);
  Rational rt = splitting_ratio_estimate(ctx, 1);
  CHECK(rational_eq(rt, Rational{1, 1}));

  // w witnesses strong F-regularity only after the perturbation
  CHECK_FALSE(glassbrenner_witness(ctx, parse_poly("w", r)).verdict);
  HypersurfaceContext pert = make_context(r, parse_poly("x^3 + y^3 + z^3 + w^8", r));
  WitnessResult wr = glassbrenner_witness(pert, parse_poly("w", r));
  CHECK(wr.verdict);
  CHECK(wr.witness_e == 1);
  SplittingPrimeResult pp = splitting_prime(pert);
  CHECK(pp.zero_in_quotient);
  CHECK(splitting_dimension(pert, pp) == 3);
}

TEST_CASE("chain with a mixed non-variable core still certifies", "[frobenius]") {
  Ring r = make_ring(5, {"x0", "x1", "x2"}, Order::grevlex);
  HypersurfaceContext ctx = make_context(r, parse_poly("3*x0*x1^2 + 2*x0*x2", r));
  SplittingPrimeResult pr = splitting_prime(ctx);
  CHECK(pr.method == PrimeMethod::EscapingChain);
  CHECK(pr.primality_certified);
  CHECK(ideal_equal(pr.prime, ideal_make(r, {parse_poly("x0", r),
                                             parse_poly("x1^2 + 4*x2", r)})));
  CHECK(splitting_dimension(ctx, pr) == 1);
}

TEST_CASE("monomial hypersurface stabilizes at the variable prime", "[frobenius]") {
  Ring r = make_ring(3, {"x", "y"}, Order::grevlex);
  HypersurfaceContext ctx = make_context(r, parse_poly("x*y", r));
  SplittingPrimeResult pr = splitting_prime(ctx);
  CHECK(ideal_equal(pr.prime, maximal_ideal(r)));
  CHECK(pr.primality_certified);

  Ring r2 = make_ring(2, {"x", "y"}, Order::grevlex);
  HypersurfaceContext cx = make_context(r2, parse_poly("x", r2));
  SplittingPrimeResult px = splitting_prime(cx);
  CHECK(ideal_equal(px.prime, ideal_make(r2, {parse_poly("x", r2)})));
  CHECK(px.zero_in_quotient);  // (f) itself: the quotient is a domain and splits
  CHECK(splitting_dimension(cx, px) == 1);
}

TEST_CASE("the purity gate guards the prime computation", "[frobenius]") {
  Ring r = make_ring(2, {"x", "y"}, Order::grevlex);
  HypersurfaceContext ctx = make_context(r, parse_poly("x^2 + y^2", r));
  CHECK(throws_code(Err::NotFPure, [&] { splitting_prime(ctx); }));
  CHECK(throws_code(Err::NotFPure, [&] { theoremC_battery(ctx); }));
}

TEST_CASE("regularity witness pins", "[frobenius]") {
  Ring r = make_ring(2, {"x", "y"}, Order::grevlex);
  HypersurfaceContext ctx = make_context(r, parse_poly("x", r));
  CHECK(throws_code(Err::BadWitness, [&] { glassbrenner_witness(ctx, poly_zero(r)); }));
  WitnessResult w = glassbrenner_witness(ctx, poly_const(r, 1));
  CHECK(w.verdict);
  CHECK(w.witness_e == 1);

  // x^3+y^3+z^3+w^2: the added square makes w a unit-power witness
  Ring r4 = ring42();
  HypersurfaceContext c4 = make_context(r4, parse_poly("x^3 + y^3 + z^3 + w^2", r4));
  CHECK(glassbrenner_witness(c4, parse_poly("w", r4)).verdict);
}

TEST_CASE("sharp-split detectors agree on both sides", "[frobenius]") {
  Ring r2 = make_ring(2, {"x", "y"}, Order::grevlex);
  TheoremCReport away = theoremC_battery(make_context(r2, parse_poly("x", r2)));
  CHECK(away.consistent);
  CHECK_FALSE(away.prime_is_m);
  CHECK(away.a_values == std::vector<int64_t>{2, 4});

  Ring r3 = make_ring(3, {"x", "y"}, Order::grevlex);
  TheoremCReport at = theoremC_battery(make_context(r3, parse_poly("x*y", r3)));
  CHECK(at.consistent);
  CHECK(at.prime_is_m);
  CHECK(at.a_values == std::vector<int64_t>{1, 1});

  Ring r5 = make_ring(5, {"x0", "x1", "x2"}, Order::grevlex);
  TheoremCReport mixed = theoremC_battery(make_context(r5, parse_poly("4*x0*x1*x2 + 4*x1^2*x2", r5)));
  CHECK(mixed.consistent);
  CHECK(mixed.prime_is_m);
}

TEST_CASE("coordinate hypersurfaces calibrate the splitting numbers", "[frobenius]") {
  // for f = x0 the quotient is a polynomial ring: a_e = p^{e(n-1)} exactly
  for (uint32_t p : {2u, 3u}) {
    for (int n = 1; n <= 3; ++n) {
      std::vector<std::string> names;
      for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
      Ring r = make_ring(p, names, Order::grevlex);
      HypersurfaceContext ctx = make_context(r, poly_var(r, 0));
      for (int e : {1, 2}) {
        int64_t want = checked_pow_i64(static_cast<int64_t>(p),
                                       static_cast<int64_t>(e) * (n - 1));
        CHECK(splitting_number(ctx, e) == want);
      }
    }
  }
}

TEST_CASE("non-default frames rescale the splitting ideal", "[frobenius]") {
  // frame (x^2, y^2) with multiplier 1 on f = xy over p = 3:
  // ((x^6, y^6) : x^2 y^2) = (x^4, y^4)
  Ring r = make_ring(3, {"x", "y"}, Order::grevlex);
  HypersurfaceContext ctx =
      make_context(r, parse_poly("x*y", r),
                   std::vector<Polynomial>{parse_poly("x^2", r), parse_poly("y^2", r)});
  CHECK(ideal_equal(splitting_ideal(ctx, 1),
                    ideal_make(r, {parse_poly("x^4", r), parse_poly("y^4", r)})));
  CHECK(splitting_number(ctx, 1) == 16);
}

TEST_CASE("full report assembles the level data", "[frobenius]") {
  Ring r = ring42();
  HypersurfaceContext ctx = make_context(r, f42(r));
  SplittingReport rep = compute_splitting_report(ctx, 2);
  CHECK(rep.fpure);
  REQUIRE(rep.levels.size() == 2);
  CHECK(rep.levels[0].feasible);
  CHECK(rep.levels[0].a == 7);
  CHECK(rep.levels[1].a == 49);
  CHECK(rep.prime_known);
  CHECK(rep.dimension == 1);
  CHECK(rep.prime_method == "escaping-chain");
  REQUIRE(rep.ratios.size() == 2);
  CHECK(rep.ratios[0] == std::make_pair(int64_t(7), int64_t(7)));
  CHECK(rep.ratios[1] == std::make_pair(int64_t(49), int64_t(49)));

  Ring r2 = make_ring(2, {"x", "y"}, Order::grevlex);
  SplittingReport off =
      compute_splitting_report(make_context(r2, parse_poly("x^2 + y^2", r2)));
  CHECK_FALSE(off.fpure);
  CHECK(off.levels.empty());
}

TEST_CASE("a bracket-square bump can collapse the witness to a proper prime",
          "[frobenius]") {
  // f has an isolated singularity and a degree-one strong-regularity witness,
  // so the prime is (f) itself. Adding x1^4*x2 (a member of m^[4], hence of
  // m^[2]) kills every witness and the chain lands on a certified height-2
  // prime instead: the dimension drops from 2 to 1.
  Ring r = make_ring(2, {"x0", "x1", "x2"}, Order::grevlex);
  Polynomial f = parse_poly("x0^2*x1 + x0*x1^2 + x2^3 + x0*x2", r);
  HypersurfaceContext ctx = make_context(r, f);
  CHECK(fedder_fpure(ctx));
  SplittingPrimeResult pr = splitting_prime(ctx);
  CHECK(pr.method == PrimeMethod::SfrWitness);
  CHECK(pr.zero_in_quotient);
  CHECK(pr.iterations == 2);
  CHECK_FALSE(pr.primality_certified);
  CHECK(ideal_equal(pr.prime, ideal_make(r, {f})));
  CHECK(splitting_dimension(ctx, pr) == 2);

  HypersurfaceContext ctx2 =
      make_context(r, poly_add(f, parse_poly("x1^4*x2", r)));
  CHECK(fedder_fpure(ctx2));
  SplittingPrimeResult pr2 = splitting_prime(ctx2);
  CHECK(pr2.method == PrimeMethod::EscapingChain);
  CHECK_FALSE(pr2.zero_in_quotient);
  CHECK(pr2.iterations == 5);
  CHECK(pr2.primality_certified);
  CHECK(ideal_equal(pr2.prime, ideal_make(r, {parse_poly("x0", r),
                                              parse_poly("x1^2 + x2", r)})));
  CHECK(splitting_dimension(ctx2, pr2) == 1);
}
