#ifndef FROBSPLIT_FROBENIUS_HPP
#define FROBSPLIT_FROBENIUS_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frobsplit/error.hpp"
#include "frobsplit/fp.hpp"
#include "frobsplit/ideal.hpp"
#include "frobsplit/monomial.hpp"
#include "frobsplit/polynomial.hpp"
#include "frobsplit/quotient.hpp"
#include "frobsplit/ring.hpp"

namespace frobsplit {

struct Rational {
  int64_t num;
  int64_t den;  // > 0
};

inline Rational rational_reduce(Rational r) {
  int64_t g = std::gcd(r.num, r.den);
  if (g > 1) {
    r.num /= g;
    r.den /= g;
  }
  return r;
}

inline bool rational_eq(const Rational& a, const Rational& b) {
  return a.num * b.den == b.num * a.den;
}

inline int64_t frobenius_q(uint32_t p, int e) {
  if (e < 1) fail(Err::BadExponent, "e must be at least 1");
  int64_t q = 1;
  for (int i = 0; i < e; ++i) {
    q *= static_cast<int64_t>(p);
    if (q > static_cast<int64_t>(INT32_MAX))
      fail(Err::Overflow, "p^e exceeds the exponent range");
  }
  return q;
}

inline int64_t checked_pow_i64(int64_t base, int64_t exp) {
  int64_t r = 1;
  for (int64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > INT64_MAX / base) fail(Err::Overflow, "integer power overflow");
    r *= base;
  }
  return r;
}

// Componentwise p^e-th root of a generated ideal: the ideal generated by all
// decomposition components of all generators.
inline Ideal frobenius_root(const Ideal& I, int e) {
  std::vector<Polynomial> comps;
  for (const auto& g : I.gens) {
    auto dec = pe_decompose(g, e);
    for (auto& pr : dec) comps.push_back(std::move(pr.second));
  }
  return ideal_make(I.ring, std::move(comps));
}

struct HypersurfaceContext {
  Ring ring;
  Polynomial f;
  Ideal sop;     // frame ideal; default is the maximal ideal of the variables
  Polynomial u;  // frame multiplier; default 1
  bool default_frame = true;
};

inline HypersurfaceContext make_context(
    const Ring& r, Polynomial f,
    std::optional<std::vector<Polynomial>> sop_gens = std::nullopt,
    std::optional<Polynomial> u = std::nullopt) {
  check_same_ring(r, f.ring);
  if (f.is_zero()) fail(Err::DivisionByZero, "f must be nonzero");
  for (const auto& t : f.t)
    if (t.m.degree() == 0) fail(Err::UnitIdeal, "f must lie in the maximal ideal");
  HypersurfaceContext ctx;
  ctx.ring = r;
  ctx.f = std::move(f);
  ctx.sop = sop_gens ? ideal_make(r, *sop_gens) : maximal_ideal(r);
  ctx.u = u ? *u : poly_const(r, 1);
  if (ctx.u.is_zero()) fail(Err::DivisionByZero, "frame multiplier must be nonzero");
  bool u_is_one = ctx.u.t.size() == 1 && ctx.u.t[0].m.is_one() && ctx.u.t[0].c == 1;
  Ideal m = maximal_ideal(r);
  bool sop_is_vars = ctx.sop.gens.size() == m.gens.size();
  if (sop_is_vars)
    for (size_t i = 0; i < m.gens.size(); ++i)
      if (!poly_equal(ctx.sop.gens[i], m.gens[i])) {
        sop_is_vars = false;
        break;
      }
  ctx.default_frame = u_is_one && sop_is_vars;
  if (!ctx.default_frame) zero_dim_length(groebner_basis(ctx.sop));  // frame must be m-primary
  return ctx;
}

namespace detail {

inline Polynomial truncate_box(const Polynomial& f, int64_t limit) {
  std::vector<Term> kept;
  for (const auto& t : f.t) {
    bool alive = true;
    for (int i = 0; i < t.m.n; ++i)
      if (t.m.e[i] >= limit) {
        alive = false;
        break;
      }
    if (alive) kept.push_back(t);
  }
  return poly_from_terms(f.ring, std::move(kept));
}

}  // namespace detail

// f^{p^e - 1} truncated to exponents below p^e, assembled from the factors
// (f^{p-1})^{p^i} so no full power is ever expanded.
inline Polynomial frobenius_multiplier_boxed(const Polynomial& f, int e) {
  uint32_t p = f.ring->p;
  int64_t q = frobenius_q(p, e);
  Polynomial base = poly_pow_mod_q(f, static_cast<int64_t>(p) - 1, q);
  Polynomial acc = base;
  int64_t limit = q;
  for (int i = 1; i < e; ++i) {
    limit /= p;  // factor exponents scale by p^i, so only this much survives
    Polynomial fac = poly_pow_charp(detail::truncate_box(base, limit), i);
    acc = poly_mul_mod_q(acc, fac, q);
  }
  return acc;
}

// f^{p-1} outside the variable bracket ideal (x_i^p) decides F-purity.
inline bool fedder_fpure(const HypersurfaceContext& ctx) {
  return !frobenius_multiplier_boxed(ctx.f, 1).is_zero();
}

namespace detail {

inline Ring contracted_ring(const Ring& r, const std::vector<int>& used) {
  std::vector<std::string> names;
  names.reserve(used.size());
  for (int i : used) names.push_back(r->vars[static_cast<size_t>(i)]);
  return make_ring(r->p, names, r->order);
}

inline Polynomial poly_contract_to(const Polynomial& f, const Ring& rU,
                                   const std::vector<int>& used) {
  std::vector<Term> terms;
  terms.reserve(f.t.size());
  for (const auto& t : f.t) {
    Monomial m;
    m.n = static_cast<int>(used.size());
    for (size_t k = 0; k < used.size(); ++k) m.e[k] = t.m.e[used[k]];
    terms.push_back(Term{m, t.c});
  }
  return poly_from_terms(rU, std::move(terms));
}

inline Polynomial poly_extend_from(const Polynomial& g, const Ring& full,
                                   const std::vector<int>& used) {
  std::vector<Term> terms;
  terms.reserve(g.t.size());
  for (const auto& t : g.t) {
    Monomial m;
    m.n = full->nvars();
    for (size_t k = 0; k < used.size(); ++k) m.e[used[k]] = t.m.e[k];
    terms.push_back(Term{m, t.c});
  }
  return poly_from_terms(full, std::move(terms));
}

}  // namespace detail

// I_e lift: (sop^{[p^e]} : u^{p^e} f^{p^e-1}).  In the default frame this is
// computed inside the subring of variables actually appearing in f; the
// missing variables contribute their bare bracket powers.
inline Ideal splitting_ideal(const HypersurfaceContext& ctx, int e,
                             int64_t cap = kDefaultQuotientCap) {
  int64_t q = frobenius_q(ctx.ring->p, e);
  if (!ctx.default_frame) {
    Ideal M = bracket_power(ctx.sop, e);
    Polynomial mult = poly_mul(poly_pow(ctx.u, q), poly_pow(ctx.f, q - 1));
    return ideal_colon(M, mult, cap);
  }
  int n = ctx.ring->nvars();
  std::vector<int> used = poly_vars_used(ctx.f);
  if (static_cast<int>(used.size()) == n) {
    Ideal M = bracket_power(maximal_ideal(ctx.ring), e);
    Polynomial mult = frobenius_multiplier_boxed(ctx.f, e);
    // multiplier inside the box: the colon is everything and the level is empty
    if (mult.is_zero()) return unit_ideal(ctx.ring);
    return ideal_colon(M, mult, cap);
  }
  Ring rU = detail::contracted_ring(ctx.ring, used);
  Polynomial fU = detail::poly_contract_to(ctx.f, rU, used);
  Ideal MU = bracket_power(maximal_ideal(rU), e);
  Polynomial multU = frobenius_multiplier_boxed(fU, e);
  if (multU.is_zero()) return unit_ideal(ctx.ring);
  Ideal cU = ideal_colon(MU, multU, cap);
  if (!cU.has_gb()) cU = groebner_basis(cU);
  std::vector<Polynomial> gens;
  for (const auto& g : *cU.gb) gens.push_back(detail::poly_extend_from(g, ctx.ring, used));
  std::vector<bool> is_used(static_cast<size_t>(n), false);
  for (int i : used) is_used[static_cast<size_t>(i)] = true;
  for (int i = 0; i < n; ++i)
    if (!is_used[static_cast<size_t>(i)]) {
      Monomial m;
      m.n = n;
      m.e[i] = static_cast<int32_t>(q);
      gens.push_back(poly_mono(ctx.ring, m));
    }
  Ideal out = ideal_make(ctx.ring, std::move(gens));
  // disjoint variable supports keep the union a reduced GB
  out.gb = std::make_shared<const std::vector<Polynomial>>(out.gens);
  return out;
}

inline int64_t splitting_number(const HypersurfaceContext& ctx, int e,
                                int64_t cap = kDefaultQuotientCap) {
  return zero_dim_length(splitting_ideal(ctx, e, cap));
}

inline Ideal jacobian_ideal(const Polynomial& f) {
  std::vector<Polynomial> gens;
  for (int i = 0; i < f.ring->nvars(); ++i) gens.push_back(partial_derivative(f, i));
  return ideal_make(f.ring, std::move(gens));
}

struct WitnessResult {
  bool verdict;
  std::optional<int> witness_e;
};

// Strong F-regularity witness: c times the boxed multiplier escapes the
// bracket ideal at some level, and c lies in the radical of Jac(f) + (f).
inline WitnessResult glassbrenner_witness(const HypersurfaceContext& ctx, const Polynomial& c,
                                          int max_e = 2) {
  check_same_ring(ctx.ring, c.ring);
  if (c.is_zero()) fail(Err::BadWitness, "witness candidate is zero");
  Ideal jac_f = ideal_sum(jacobian_ideal(ctx.f), ideal_make(ctx.ring, {ctx.f}));
  bool in_radical = radical_member(c, jac_f);
  std::optional<int> esc;
  for (int e = 1; e <= max_e; ++e) {
    int64_t q;
    try {
      q = frobenius_q(ctx.ring->p, e);
    } catch (const AlgebraError&) {
      break;
    }
    Polynomial mult = frobenius_multiplier_boxed(ctx.f, e);
    if (!poly_mul_mod_q(mult, c, q).is_zero()) {
      esc = e;
      break;
    }
  }
  bool verdict = in_radical && esc.has_value();
  WitnessResult w;
  w.verdict = verdict;
  if (verdict) w.witness_e = esc;
  return w;
}

enum class PrimeMethod { Stabilized, EscapingChain, SfrWitness };

inline const char* prime_method_name(PrimeMethod m) {
  switch (m) {
    case PrimeMethod::Stabilized: return "stabilized";
    case PrimeMethod::EscapingChain: return "escaping-chain";
    case PrimeMethod::SfrWitness: return "sfr-witness";
  }
  return "?";
}

struct SplittingPrimeResult {
  Ideal prime;                // the computed lift; equals (f) when zero in the quotient
  bool zero_in_quotient = false;
  PrimeMethod method = PrimeMethod::Stabilized;
  int iterations = 0;
  bool primality_certified = false;  // claimed only on structural grounds
};

namespace detail {

inline Ideal multiply_ideal(const Polynomial& h, const Ideal& I) {
  std::vector<Polynomial> gens;
  gens.reserve(I.gens.size());
  for (const auto& g : I.gens) gens.push_back(poly_mul(h, g));
  return ideal_make(I.ring, std::move(gens));
}

// root(f^{p-1} C) ⊆ C, equivalently f^{p-1} C ⊆ C^{[p]}.
inline bool is_compatible(const Polynomial& fp1, const Ideal& C) {
  Ideal rt = frobenius_root(multiply_ideal(fp1, C), 1);
  const Ideal& G = C.has_gb() ? C : groebner_basis(C);
  for (const auto& g : rt.gens)
    if (!ideal_member(g, G)) return false;
  return true;
}

// Grows the smallest ideal containing c that is closed under adding
// root(f^{p-1} ·); reaching the unit ideal proves c avoids every proper
// closed ideal, hence the splitting prime.
inline std::optional<bool> escapes_every_compatible(const Polynomial& fp1, const Polynomial& c,
                                                    int iter_cap = 24) {
  Ideal B = groebner_basis(ideal_make(c.ring, {c}));
  for (int it = 0; it < iter_cap; ++it) {
    if (is_unit_ideal(B)) return true;
    Ideal grown = ideal_sum(B, frobenius_root(multiply_ideal(fp1, B), 1));
    Ideal Bn = groebner_basis(grown);
    if (ideal_equal(Bn, B)) return false;
    B = Bn;
  }
  return std::nullopt;
}

// True when the quotient by I is visibly a polynomial ring: the reduced basis
// consists of variables plus at most one generator that is linear and
// solitary in some variable, which can then be eliminated.  Such an ideal is
// prime on structural grounds alone.
inline bool structurally_prime(const Ideal& I) {
  const Ideal& G = I.has_gb() ? I : groebner_basis(I);
  if (is_unit_ideal(G)) return false;
  const Polynomial* extra = nullptr;
  for (const auto& g : *G.gb) {
    if (g.t.size() == 1 && g.t[0].m.degree() == 1) continue;  // a variable
    if (extra) return false;
    extra = &g;
  }
  if (!extra) return true;
  int n = G.ring->nvars();
  for (int b = 0; b < n; ++b) {
    int occurs = 0;
    bool alone = true;
    for (const auto& t : extra->t)
      if (t.m.e[b]) {
        ++occurs;
        if (t.m.e[b] != 1 || t.m.degree() != 1) alone = false;
      }
    if (occurs == 1 && alone) return true;
  }
  return false;
}

// Detects a strictly descending chain whose reduced bases share a fixed core
// while every remaining generator is a monomial whose minimal degree grows
// from step to step.  The core certifies the whole chain when
//   - it is proper, compatible (hence inside the splitting prime) and
//     structurally prime, so the quotient S is a domain,
//   - every variable supporting an escaping monomial provably avoids all
//     proper compatible ideals, hence the prime,
//   - several escapers share a dividing variable, so the prime maps into the
//     principal ideal that variable generates in S and Krull descent
//     collapses it onto the core.
inline std::optional<Ideal> try_escape_certificate(const Polynomial& fp1,
                                                   const std::vector<Ideal>& hist) {
  size_t h = hist.size();
  if (h < 3) return std::nullopt;
  const Ideal* tri[3] = {&hist[h - 3], &hist[h - 2], &hist[h - 1]};
  std::vector<Polynomial> common;
  for (const auto& g : *tri[0]->gb) {
    bool everywhere = true;
    for (int t = 1; t < 3 && everywhere; ++t) {
      bool found = false;
      for (const auto& g2 : *tri[t]->gb)
        if (poly_equal(g, g2)) {
          found = true;
          break;
        }
      everywhere = found;
    }
    if (everywhere) common.push_back(g);
  }
  if (common.empty()) return std::nullopt;
  int n = tri[0]->ring->nvars();

  std::vector<std::vector<Monomial>> escapers(3);
  for (int t = 0; t < 3; ++t) {
    for (const auto& g : *tri[t]->gb) {
      bool in_common = false;
      for (const auto& c : common)
        if (poly_equal(g, c)) {
          in_common = true;
          break;
        }
      if (in_common) continue;
      if (g.t.size() != 1) return std::nullopt;
      escapers[static_cast<size_t>(t)].push_back(g.t[0].m);
    }
    if (escapers[static_cast<size_t>(t)].empty()) return std::nullopt;
  }
  auto min_deg = [](const std::vector<Monomial>& ms) {
    int64_t d = ms[0].degree();
    for (const auto& m : ms) d = std::min(d, m.degree());
    return d;
  };
  for (int t = 1; t < 3; ++t)
    if (min_deg(escapers[static_cast<size_t>(t)]) <=
        min_deg(escapers[static_cast<size_t>(t - 1)]))
      return std::nullopt;

  if (escapers[2].size() >= 2) {
    bool shared = false;
    for (int i = 0; i < n && !shared; ++i) {
      bool divides_all = true;
      for (const auto& m : escapers[2])
        if (!m.e[i]) {
          divides_all = false;
          break;
        }
      shared = divides_all;
    }
    if (!shared) return std::nullopt;
  }

  std::vector<bool> checked(static_cast<size_t>(n), false);
  for (const auto& level : escapers)
    for (const auto& m : level)
      for (int i = 0; i < n; ++i) {
        if (!m.e[i] || checked[static_cast<size_t>(i)]) continue;
        checked[static_cast<size_t>(i)] = true;
        auto esc = escapes_every_compatible(fp1, poly_var(tri[0]->ring, i));
        if (!esc.has_value() || !*esc) return std::nullopt;
      }

  Ideal core = groebner_basis(ideal_make(tri[0]->ring, common));
  if (is_unit_ideal(core)) return std::nullopt;
  if (!structurally_prime(core)) return std::nullopt;
  if (!is_compatible(fp1, core)) return std::nullopt;
  return core;
}

}  // namespace detail

// Iterates J ↦ J ∩ (J^{[p]} : f^{p-1}) from the maximal ideal.  The chain
// descends through the lifts I_e toward their intersection; it either
// stabilizes, exhibits escaping monomials over a certified core that is then
// returned, or the hypersurface proves strongly F-regular so the prime is
// zero in the quotient.
inline SplittingPrimeResult splitting_prime(const HypersurfaceContext& ctx, int max_iter = 30,
                                            int cross_check_E = 3,
                                            int64_t cap = kDefaultQuotientCap) {
  if (!fedder_fpure(ctx)) fail(Err::NotFPure, "f is not F-pure, there is no splitting prime");
  const Ring& r = ctx.ring;
  Polynomial fp1 = poly_pow(ctx.f, static_cast<int64_t>(r->p) - 1);
  std::vector<Ideal> hist;
  hist.push_back(groebner_basis(maximal_ideal(r)));
  std::optional<Ideal> fixed;
  PrimeMethod method = PrimeMethod::Stabilized;
  int iters = 0;
  bool probed = false;
  auto probe_sfr = [&]() {
    std::vector<Polynomial> candidates;
    for (int i = 0; i < r->nvars(); ++i) candidates.push_back(poly_var(r, i));
    for (int i = 0; i < r->nvars(); ++i) {
      Polynomial d = partial_derivative(ctx.f, i);
      if (!d.is_zero()) candidates.push_back(std::move(d));
    }
    for (const auto& c : candidates) {
      try {
        if (glassbrenner_witness(ctx, c, 2).verdict) {
          fixed = groebner_basis(ideal_make(r, {ctx.f}));
          method = PrimeMethod::SfrWitness;
          return;
        }
      } catch (const AlgebraError& err) {
        // a candidate too expensive to test is simply not a usable witness
        if (err.code() != Err::TooLarge && err.code() != Err::Overflow) throw;
      }
    }
  };
  auto try_certificate = [&]() -> std::optional<Ideal> {
    try {
      return detail::try_escape_certificate(fp1, hist);
    } catch (const AlgebraError& err) {
      if (err.code() == Err::TooLarge || err.code() == Err::Overflow) return std::nullopt;
      throw;
    }
  };
  for (int k = 1; k <= max_iter && !fixed; ++k) {
    iters = k;
    if (auto cert = try_certificate()) {
      fixed = std::move(*cert);
      method = PrimeMethod::EscapingChain;
      break;
    }
    if (hist.size() >= 2 && !probed) {
      probed = true;
      probe_sfr();
      if (fixed) break;
    }
    const Ideal& J = hist.back();
    try {
      Ideal D = ideal_colon(bracket_power(J, 1), fp1, cap);
      Ideal Jn = groebner_basis(ideal_intersect(J, D));
      if (ideal_equal(Jn, J)) {
        fixed = J;
        method = PrimeMethod::Stabilized;
        break;
      }
      hist.push_back(std::move(Jn));
    } catch (const AlgebraError& err) {
      // a chain that outgrows the exponent or size budget cannot stabilize
      if (err.code() == Err::Overflow || err.code() == Err::TooLarge) break;
      throw;
    }
  }
  if (!fixed) {
    if (auto cert = try_certificate()) {
      fixed = std::move(*cert);
      method = PrimeMethod::EscapingChain;
    }
  }
  if (!fixed && !probed) probe_sfr();
  if (!fixed)
    fail(Err::NoStabilize,
         "no stabilization after " + std::to_string(iters) + " iterations");

  // cross checks; any failure aborts rather than returning a doubtful ideal
  if (!ideal_member(ctx.f, *fixed))
    fail(Err::NoStabilize, "cross-check failed: f is outside the computed ideal");
  Ideal rt = frobenius_root(detail::multiply_ideal(fp1, *fixed), 1);
  if (!ideal_equal(ideal_intersect(*fixed, rt), *fixed))
    fail(Err::NoStabilize, "cross-check failed: fixed-point identity");
  if (!detail::is_compatible(fp1, *fixed))
    fail(Err::NoStabilize, "cross-check failed: compatibility");
  for (int e = 1; e <= cross_check_E; ++e) {
    int64_t q;
    try {
      q = frobenius_q(r->p, e);
    } catch (const AlgebraError&) {
      break;  // deeper levels exceed the exponent range; stop checking there
    }
    if (ctx.default_frame) {
      Polynomial mult = frobenius_multiplier_boxed(ctx.f, e);
      for (const auto& g : *fixed->gb)
        if (!poly_mul_mod_q(mult, g, q).is_zero())
          fail(Err::NoStabilize,
               "cross-check failed: result not inside the level-" + std::to_string(e) +
                   " splitting ideal");
    } else {
      if (!ideal_subset(*fixed, splitting_ideal(ctx, e, cap)))
        fail(Err::NoStabilize,
             "cross-check failed: result not inside the level-" + std::to_string(e) +
                 " splitting ideal");
    }
  }

  SplittingPrimeResult res;
  res.prime = *fixed;
  res.method = method;
  res.iterations = iters;
  res.zero_in_quotient =
      method == PrimeMethod::SfrWitness ||
      ideal_equal(*fixed, groebner_basis(ideal_make(r, {ctx.f})));
  res.primality_certified = detail::structurally_prime(res.prime);
  return res;
}

inline int splitting_dimension(const HypersurfaceContext& ctx, const SplittingPrimeResult& pr) {
  if (pr.zero_in_quotient) return ctx.ring->nvars() - 1;
  return krull_dimension(pr.prime);
}

inline int splitting_dimension(const HypersurfaceContext& ctx, int max_iter = 30) {
  return splitting_dimension(ctx, splitting_prime(ctx, max_iter));
}

// a_e / p^{e n}, exact; kept unreduced so the numerator stays recognizable.
inline Rational splitting_ratio_estimate(const HypersurfaceContext& ctx, int e,
                                         int max_iter = 30) {
  int64_t a = splitting_number(ctx, e);
  int n = splitting_dimension(ctx, max_iter);
  int64_t den = checked_pow_i64(static_cast<int64_t>(ctx.ring->p),
                                static_cast<int64_t>(e) * n);
  return Rational{a, den};
}

struct TheoremCReport {
  std::vector<int> e_list;
  std::vector<int64_t> a_values;
  std::vector<bool> a_is_one;
  std::vector<bool> ideal_is_m;
  bool prime_is_m = false;
  bool consistent = false;
};

// Three independently computed detectors of the sharply-split case (a_e = 1,
// I_e = m, P = m) that must agree with each other at every level.
inline TheoremCReport theoremC_battery(const HypersurfaceContext& ctx, int E = 2,
                                       int max_iter = 30) {
  if (!fedder_fpure(ctx)) fail(Err::NotFPure, "battery requires an F-pure hypersurface");
  TheoremCReport rep;
  Ideal m = groebner_basis(maximal_ideal(ctx.ring));
  for (int e = 1; e <= E; ++e) {
    Ideal Ie = splitting_ideal(ctx, e);
    int64_t a = zero_dim_length(Ie);
    rep.e_list.push_back(e);
    rep.a_values.push_back(a);
    rep.a_is_one.push_back(a == 1);
    rep.ideal_is_m.push_back(ideal_equal(Ie, m));
  }
  SplittingPrimeResult pr = splitting_prime(ctx, max_iter);
  rep.prime_is_m = !pr.zero_in_quotient && ideal_equal(pr.prime, m);
  bool ref = rep.prime_is_m;
  rep.consistent = true;
  for (size_t i = 0; i < rep.e_list.size(); ++i)
    if (rep.a_is_one[i] != ref || rep.ideal_is_m[i] != ref) rep.consistent = false;
  return rep;
}

struct SplittingLevel {
  int e = 0;
  bool feasible = false;
  std::string reason;  // "budget" or "overflow" when infeasible
  int64_t a = -1;
  std::vector<std::string> ideal_gens;
};

struct SplittingReport {
  bool fpure = false;
  std::vector<SplittingLevel> levels;
  bool prime_known = false;
  std::vector<std::string> prime_gens;
  std::string prime_method;
  bool primality_certified = false;
  bool zero_in_quotient = false;
  int iterations = 0;
  int dimension = -1;
  std::vector<std::pair<int64_t, int64_t>> ratios;  // aligned with feasible levels
};

inline SplittingReport compute_splitting_report(const HypersurfaceContext& ctx, int max_e = 2,
                                                int max_iter = 30,
                                                int64_t cap = kDefaultQuotientCap) {
  SplittingReport rep;
  rep.fpure = fedder_fpure(ctx);
  if (!rep.fpure) return rep;
  for (int e = 1; e <= max_e; ++e) {
    SplittingLevel lv;
    lv.e = e;
    try {
      Ideal Ie = splitting_ideal(ctx, e, cap);
      lv.a = zero_dim_length(Ie);
      lv.feasible = true;
      const Ideal& G = Ie.has_gb() ? Ie : groebner_basis(Ie);
      for (const auto& g : *G.gb) lv.ideal_gens.push_back(poly_to_string(g));
    } catch (const AlgebraError& err) {
      if (err.code() != Err::Overflow && err.code() != Err::TooLarge) throw;
      lv.feasible = false;
      lv.reason = err.code() == Err::Overflow ? "overflow" : "budget";
    }
    rep.levels.push_back(std::move(lv));
  }
  try {
    SplittingPrimeResult pr = splitting_prime(ctx, max_iter, 3, cap);
    rep.prime_known = true;
    rep.prime_method = prime_method_name(pr.method);
    rep.primality_certified = pr.primality_certified;
    rep.zero_in_quotient = pr.zero_in_quotient;
    rep.iterations = pr.iterations;
    for (const auto& g : *pr.prime.gb) rep.prime_gens.push_back(poly_to_string(g));
    rep.dimension = splitting_dimension(ctx, pr);
    for (const auto& lv : rep.levels)
      if (lv.feasible) {
        int64_t den = checked_pow_i64(static_cast<int64_t>(ctx.ring->p),
                                      static_cast<int64_t>(lv.e) * rep.dimension);
        rep.ratios.emplace_back(lv.a, den);
      }
  } catch (const AlgebraError& err) {
    if (err.code() != Err::NoStabilize && err.code() != Err::TooLarge &&
        err.code() != Err::Overflow)
      throw;
    rep.prime_known = false;
  }
  return rep;
}

}  // namespace frobsplit

#endif
