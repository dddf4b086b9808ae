#ifndef FROBSPLIT_POLYNOMIAL_HPP
#define FROBSPLIT_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "frobsplit/error.hpp"
#include "frobsplit/fp.hpp"
#include "frobsplit/monomial.hpp"
#include "frobsplit/ring.hpp"

namespace frobsplit {

struct Term {
  Monomial m;
  uint32_t c = 0;  // in [1, p-1] once normalized
};

// Terms sorted strictly descending under ring->order, no zero coefficients.
struct Polynomial {
  Ring ring;
  std::vector<Term> t;

  bool is_zero() const { return t.empty(); }
  int64_t degree() const {
    int64_t d = -1;
    for (const auto& tm : t) d = std::max(d, tm.m.degree());
    return d;
  }
  const Term& lt() const {
    if (t.empty()) fail(Err::BadIndex, "leading term of the zero polynomial");
    return t.front();
  }
  const Monomial& lm() const { return lt().m; }
  uint32_t lc() const { return lt().c; }
};

inline Polynomial poly_zero(const Ring& r) { return Polynomial{r, {}}; }

inline void poly_normalize(Polynomial& f) {
  auto& v = f.t;
  uint32_t p = f.ring->p;
  std::sort(v.begin(), v.end(), [&](const Term& a, const Term& b) {
    return monomial_compare(a.m, b.m, f.ring->order) > 0;
  });
  size_t w = 0;
  for (size_t i = 0; i < v.size();) {
    uint32_t c = v[i].c % p;
    size_t j = i + 1;
    while (j < v.size() && v[j].m == v[i].m) {
      c = fp_add(c, v[j].c % p, p);
      ++j;
    }
    if (c) {
      v[w].m = v[i].m;
      v[w].c = c;
      ++w;
    }
    i = j;
  }
  v.resize(w);
}

inline Polynomial poly_from_terms(const Ring& r, std::vector<Term> terms) {
  Polynomial f{r, std::move(terms)};
  for (auto& tm : f.t)
    if (tm.m.n != r->nvars()) fail(Err::RingMismatch, "term arity does not match ring");
  poly_normalize(f);
  return f;
}

inline Polynomial poly_const(const Ring& r, int64_t c) {
  return poly_from_terms(r, {Term{Monomial::one(r->nvars()), fp_reduce(c, r->p)}});
}

inline Polynomial poly_var(const Ring& r, int i, int32_t k = 1) {
  return poly_from_terms(r, {Term{Monomial::var(r->nvars(), i, k), 1}});
}

inline Polynomial poly_mono(const Ring& r, const Monomial& m, uint32_t c = 1) {
  return poly_from_terms(r, {Term{m, c}});
}

inline Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a.ring, b.ring);
  uint32_t p = a.ring->p;
  Polynomial r{a.ring, {}};
  r.t.reserve(a.t.size() + b.t.size());
  size_t i = 0, j = 0;
  while (i < a.t.size() && j < b.t.size()) {
    int cmp = monomial_compare(a.t[i].m, b.t[j].m, a.ring->order);
    if (cmp > 0) {
      r.t.push_back(a.t[i++]);
    } else if (cmp < 0) {
      r.t.push_back(b.t[j++]);
    } else {
      uint32_t c = fp_add(a.t[i].c, b.t[j].c, p);
      if (c) r.t.push_back(Term{a.t[i].m, c});
      ++i;
      ++j;
    }
  }
  while (i < a.t.size()) r.t.push_back(a.t[i++]);
  while (j < b.t.size()) r.t.push_back(b.t[j++]);
  return r;
}

inline Polynomial poly_neg(const Polynomial& a) {
  Polynomial r = a;
  for (auto& tm : r.t) tm.c = fp_neg(tm.c, a.ring->p);
  return r;
}

inline Polynomial poly_sub(const Polynomial& a, const Polynomial& b) {
  return poly_add(a, poly_neg(b));
}

inline Polynomial poly_scale(const Polynomial& a, uint32_t c) {
  c %= a.ring->p;
  if (!c) return poly_zero(a.ring);
  Polynomial r = a;
  for (auto& tm : r.t) tm.c = fp_mul(tm.c, c, a.ring->p);
  return r;
}

inline Polynomial term_mul(const Polynomial& a, const Term& s) {
  if (!s.c) return poly_zero(a.ring);
  Polynomial r{a.ring, {}};
  r.t.reserve(a.t.size());
  uint32_t p = a.ring->p;
  for (const auto& tm : a.t) r.t.push_back(Term{mono_mul(tm.m, s.m), fp_mul(tm.c, s.c, p)});
  // multiplying by a fixed monomial preserves relative order
  return r;
}

// q <= 0 means no truncation; otherwise terms with any exponent >= q are dropped.
// Such terms lie in the q-th bracket power of the maximal ideal and every multiple
// stays there, so dropping them mid-product is sound for work modulo that ideal.
inline Polynomial poly_mul_mod_q(const Polynomial& a, const Polynomial& b, int64_t q) {
  check_same_ring(a.ring, b.ring);
  uint32_t p = a.ring->p;
  std::unordered_map<Monomial, uint32_t, MonomialHash> acc;
  acc.reserve(a.t.size() * 2 + 16);
  for (const auto& ta : a.t) {
    for (const auto& tb : b.t) {
      Monomial m = mono_mul(ta.m, tb.m);
      if (q > 0) {
        bool out = false;
        for (int i = 0; i < m.n; ++i)
          if (m.e[i] >= q) {
            out = true;
            break;
          }
        if (out) continue;
      }
      uint32_t& slot = acc[m];
      slot = fp_add(slot, fp_mul(ta.c, tb.c, p), p);
    }
  }
  Polynomial r{a.ring, {}};
  r.t.reserve(acc.size());
  for (auto& kv : acc)
    if (kv.second) r.t.push_back(Term{kv.first, kv.second});
  std::sort(r.t.begin(), r.t.end(), [&](const Term& x, const Term& y) {
    return monomial_compare(x.m, y.m, r.ring->order) > 0;
  });
  return r;
}

inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  return poly_mul_mod_q(a, b, 0);
}

inline Polynomial poly_pow_mod_q(const Polynomial& f, int64_t k, int64_t q) {
  if (k < 0) fail(Err::BadExponent, "negative power");
  Polynomial acc = poly_const(f.ring, 1);
  Polynomial base = f;
  int64_t e = k;
  while (e > 0) {
    if (e & 1) acc = poly_mul_mod_q(acc, base, q);
    e >>= 1;
    if (e) base = poly_mul_mod_q(base, base, q);
  }
  return acc;
}

inline Polynomial poly_pow(const Polynomial& f, int64_t k) { return poly_pow_mod_q(f, k, 0); }

// f^(p^e) computed by stretching exponents; coefficients are fixed by c -> c^p.
inline Polynomial poly_pow_charp(const Polynomial& f, int e) {
  int64_t q = 1;
  for (int i = 0; i < e; ++i) {
    q *= f.ring->p;
    if (q > INT32_MAX) fail(Err::Overflow, "p^e too large");
  }
  Polynomial r{f.ring, {}};
  r.t.reserve(f.t.size());
  for (const auto& tm : f.t) r.t.push_back(Term{mono_scale(tm.m, q), tm.c});
  // stretching is order-preserving for lex/grlex/grevlex/elim_last
  return r;
}

inline Polynomial partial_derivative(const Polynomial& f, int i) {
  if (i < 0 || i >= f.ring->nvars()) fail(Err::BadIndex, "variable index " + std::to_string(i));
  uint32_t p = f.ring->p;
  std::vector<Term> out;
  for (const auto& tm : f.t) {
    if (!tm.m.e[i]) continue;
    uint32_t k = fp_reduce(tm.m.e[i], p);
    if (!k) continue;
    Term d = tm;
    d.c = fp_mul(d.c, k, p);
    d.m.e[i] -= 1;
    out.push_back(d);
  }
  return poly_from_terms(f.ring, std::move(out));
}

// Writes f = sum over a of (g_a)^(p^e) * x^a with every exponent of a below p^e.
// Components are returned sorted by a, descending in the ring order.
inline std::vector<std::pair<Monomial, Polynomial>> pe_decompose(const Polynomial& f, int e) {
  if (e < 1) fail(Err::BadExponent, "e must be positive");
  int64_t q = 1;
  for (int i = 0; i < e; ++i) {
    q *= f.ring->p;
    if (q > INT32_MAX) fail(Err::Overflow, "p^e too large");
  }
  std::unordered_map<Monomial, std::vector<Term>, MonomialHash> buckets;
  for (const auto& tm : f.t) {
    Monomial a = tm.m, beta = tm.m;
    for (int i = 0; i < tm.m.n; ++i) {
      a.e[i] = static_cast<int32_t>(tm.m.e[i] % q);
      beta.e[i] = static_cast<int32_t>(tm.m.e[i] / q);
    }
    buckets[a].push_back(Term{beta, tm.c});
  }
  std::vector<std::pair<Monomial, Polynomial>> out;
  out.reserve(buckets.size());
  for (auto& kv : buckets)
    out.emplace_back(kv.first, poly_from_terms(f.ring, std::move(kv.second)));
  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    return monomial_compare(x.first, y.first, f.ring->order) > 0;
  });
  return out;
}

inline Polynomial make_monic(const Polynomial& f) {
  if (f.is_zero()) return f;
  return poly_scale(f, fp_inv(f.lc(), f.ring->p));
}

// Exact single-divisor division; members of (g) always divide out cleanly.
inline Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  check_same_ring(f.ring, g.ring);
  if (g.is_zero()) fail(Err::DivisionByZero, "division by the zero polynomial");
  uint32_t p = f.ring->p;
  Polynomial r = f;
  std::vector<Term> qt;
  uint32_t glc_inv = fp_inv(g.lc(), p);
  while (!r.is_zero()) {
    if (!mono_divides(g.lm(), r.lm()))
      fail(Err::DivisionByZero, "inexact division: dividend is not a multiple");
    Term s{mono_div(r.lm(), g.lm()), fp_mul(r.lc(), glc_inv, p)};
    qt.push_back(s);
    r = poly_sub(r, term_mul(g, s));
  }
  return poly_from_terms(f.ring, std::move(qt));
}

inline std::vector<int> poly_vars_used(const Polynomial& f) {
  std::array<bool, RingSpec::kMaxVarsInternal> seen{};
  for (const auto& tm : f.t)
    for (int i = 0; i < tm.m.n; ++i)
      if (tm.m.e[i]) seen[i] = true;
  std::vector<int> out;
  for (int i = 0; i < f.ring->nvars(); ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

inline std::string poly_to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& tm : f.t) {
    if (!s.empty()) s += " + ";
    if (tm.m.is_one()) {
      s += std::to_string(tm.c);
    } else {
      if (tm.c != 1) s += std::to_string(tm.c) + "*";
      s += mono_to_string(tm.m, f.ring);
    }
  }
  return s;
}

// Total order used to keep generator lists and cache keys deterministic.
inline int poly_compare(const Polynomial& a, const Polynomial& b) {
  size_t n = std::min(a.t.size(), b.t.size());
  for (size_t i = 0; i < n; ++i) {
    int cmp = monomial_compare(a.t[i].m, b.t[i].m, a.ring->order);
    if (cmp) return cmp;
    if (a.t[i].c != b.t[i].c) return a.t[i].c > b.t[i].c ? 1 : -1;
  }
  if (a.t.size() != b.t.size()) return a.t.size() > b.t.size() ? 1 : -1;
  return 0;
}

inline bool poly_equal(const Polynomial& a, const Polynomial& b) {
  return same_ring(a.ring, b.ring) && poly_compare(a, b) == 0;
}

}  // namespace frobsplit

#endif
