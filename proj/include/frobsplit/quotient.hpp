#ifndef FROBSPLIT_QUOTIENT_HPP
#define FROBSPLIT_QUOTIENT_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "frobsplit/error.hpp"
#include "frobsplit/fp.hpp"
#include "frobsplit/ideal.hpp"
#include "frobsplit/monomial.hpp"
#include "frobsplit/polynomial.hpp"
#include "frobsplit/ring.hpp"

namespace frobsplit {

constexpr int64_t kDefaultQuotientCap = 3000000;

inline std::vector<Monomial> monomial_min_gens(const Ideal& M) {
  std::vector<Monomial> all;
  all.reserve(M.gens.size());
  for (const auto& g : M.gens) {
    if (g.t.size() != 1) fail(Err::BadIndex, "not a monomial ideal");
    all.push_back(g.t[0].m);
  }
  std::sort(all.begin(), all.end(), [&](const Monomial& a, const Monomial& b) {
    return monomial_compare(a, b, M.ring->order) < 0;
  });
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<Monomial> out;
  for (size_t i = 0; i < all.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < i && !redundant; ++j)  // a proper divisor is smaller in any order
      if (mono_divides(all[j], all[i])) redundant = true;
    if (!redundant) out.push_back(all[i]);
  }
  return out;
}

inline std::vector<Monomial> monomial_minimalize(const Ring& r, std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(), [&](const Monomial& a, const Monomial& b) {
    return monomial_compare(a, b, r->order) < 0;
  });
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  std::vector<Monomial> out;
  for (size_t i = 0; i < ms.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < i && !redundant; ++j)
      if (mono_divides(ms[j], ms[i])) redundant = true;
    if (!redundant) out.push_back(ms[i]);
  }
  return out;
}

inline Ideal ideal_from_monomials(const Ring& r, const std::vector<Monomial>& ms) {
  std::vector<Polynomial> gens;
  gens.reserve(ms.size());
  for (const auto& m : ms) gens.push_back(poly_mono(r, m));
  Ideal I = ideal_make(r, gens);
  // minimal monomial generators are their own reduced GB
  I.gb = std::make_shared<const std::vector<Polynomial>>(I.gens);
  return I;
}

inline Ideal unit_ideal(const Ring& r) {
  Ideal I = ideal_make(r, {poly_const(r, 1)});
  I.gb = std::make_shared<const std::vector<Polynomial>>(I.gens);
  return I;
}

// (M : x^mu) for monomial M, by clipping exponents; no size caps involved.
inline Ideal monomial_colon(const Ideal& M, const Monomial& mu) {
  std::vector<Monomial> mins = monomial_min_gens(M);
  std::vector<Monomial> out;
  out.reserve(mins.size());
  for (const auto& nu : mins) {
    Monomial q;
    q.n = nu.n;
    bool trivial = true;
    for (int i = 0; i < nu.n; ++i) {
      q.e[i] = nu.e[i] > mu.e[i] ? nu.e[i] - mu.e[i] : 0;
      if (q.e[i]) trivial = false;
    }
    if (trivial) return unit_ideal(M.ring);  // mu is a multiple of a generator
    out.push_back(q);
  }
  return ideal_from_monomials(M.ring, monomial_minimalize(M.ring, out));
}

// Finite monomial basis of R modulo a monomial ideal containing a power of
// every variable.
struct QuotientBasis {
  Ring ring;
  std::vector<Monomial> modulus_min_gens;
  std::array<int64_t, RingSpec::kMaxVarsInternal> pure_bound{};
  std::vector<Monomial> mixed_gens;
  std::vector<Monomial> standard_monomials;  // ascending in the ring order
  std::unordered_map<Monomial, int32_t, MonomialHash> index;

  bool in_modulus(const Monomial& m) const {
    for (int i = 0; i < m.n; ++i)
      if (m.e[i] >= pure_bound[i]) return true;
    for (const auto& g : mixed_gens)
      if (mono_divides(g, m)) return true;
    return false;
  }
};

inline QuotientBasis quotient_basis(const Ideal& M, int64_t cap = kDefaultQuotientCap) {
  if (!is_monomial_ideal(M) || M.gens.empty())
    fail(Err::NotZeroDim, "modulus must be a nonzero monomial ideal");
  QuotientBasis qb;
  qb.ring = M.ring;
  qb.modulus_min_gens = monomial_min_gens(M);
  int n = M.ring->nvars();
  bool unit = false;
  for (int i = 0; i < n; ++i) qb.pure_bound[i] = INT32_MAX;
  for (const auto& g : qb.modulus_min_gens) {
    int support = -1;
    int count = 0;
    for (int i = 0; i < n; ++i)
      if (g.e[i]) {
        ++count;
        support = i;
      }
    if (count == 0) {
      unit = true;
    } else if (count == 1) {
      qb.pure_bound[support] = std::min<int64_t>(qb.pure_bound[support], g.e[support]);
    } else {
      qb.mixed_gens.push_back(g);
    }
  }
  if (unit) {
    for (int i = 0; i < n; ++i) qb.pure_bound[i] = 0;
    return qb;  // empty standard set
  }
  for (int i = 0; i < n; ++i)
    if (qb.pure_bound[i] == INT32_MAX)
      fail(Err::NotZeroDim,
           "no pure power of " + M.ring->vars[static_cast<size_t>(i)] + " in the modulus");

  std::vector<std::pair<Monomial, int>> stack;
  stack.emplace_back(Monomial::one(n), n - 1);
  while (!stack.empty()) {
    auto [m, maxv] = stack.back();
    stack.pop_back();
    qb.standard_monomials.push_back(m);
    if (static_cast<int64_t>(qb.standard_monomials.size()) > cap)
      fail(Err::TooLarge, "quotient dimension exceeds cap " + std::to_string(cap));
    for (int j = 0; j <= maxv; ++j) {
      Monomial c = m;
      c.e[j] += 1;
      if (!qb.in_modulus(c)) stack.emplace_back(c, j);
    }
  }
  std::sort(qb.standard_monomials.begin(), qb.standard_monomials.end(),
            [&](const Monomial& a, const Monomial& b) {
              return monomial_compare(a, b, qb.ring->order) < 0;
            });
  qb.index.reserve(qb.standard_monomials.size() * 2);
  for (size_t i = 0; i < qb.standard_monomials.size(); ++i)
    qb.index.emplace(qb.standard_monomials[i], static_cast<int32_t>(i));
  return qb;
}

inline Polynomial reduce_mod_monomial_box(const Polynomial& g, const QuotientBasis& qb) {
  std::vector<Term> kept;
  for (const auto& tm : g.t)
    if (!qb.in_modulus(tm.m)) kept.push_back(tm);
  return poly_from_terms(g.ring, std::move(kept));
}

namespace detail {

using SpVec = std::vector<std::pair<int32_t, uint32_t>>;  // index -> value, sorted

// dst += c * src over F_p, keeping the sorted-sparse form.
inline void sp_axpy(SpVec& dst, const SpVec& src, uint32_t c, uint32_t p, SpVec& scratch) {
  if (!c || src.empty()) return;
  scratch.clear();
  scratch.reserve(dst.size() + src.size());
  size_t i = 0, j = 0;
  while (i < dst.size() && j < src.size()) {
    if (dst[i].first < src[j].first) {
      scratch.push_back(dst[i++]);
    } else if (dst[i].first > src[j].first) {
      uint32_t v = fp_mul(c, src[j].second, p);
      if (v) scratch.emplace_back(src[j].first, v);
      ++j;
    } else {
      uint32_t v = fp_add(dst[i].second, fp_mul(c, src[j].second, p), p);
      if (v) scratch.emplace_back(dst[i].first, v);
      ++i;
      ++j;
    }
  }
  while (i < dst.size()) scratch.push_back(dst[i++]);
  for (; j < src.size(); ++j) {
    uint32_t v = fp_mul(c, src[j].second, p);
    if (v) scratch.emplace_back(src[j].first, v);
  }
  dst.swap(scratch);
}

// Incremental echelon of multiplication-map columns with combination tracking.
// Offering the standard monomials of the modulus in ascending order yields, for
// each linearly dependent column, the unique reduced relation led by that
// monomial; those relations are kernel vectors of the multiplication map and,
// when multiples of accepted leading terms are skipped, the non-monomial part
// of the reduced GB of (modulus : multiplier).
struct MultEngine {
  const QuotientBasis& qb;
  const Polynomial& gred;
  uint32_t p;
  struct ERow {
    SpVec val;    // reduced column, first entry is the unit pivot
    SpVec combo;  // expansion of val over the kept columns
  };
  std::vector<int32_t> pivot_of;
  std::vector<ERow> rows;
  std::vector<Monomial> kept;
  SpVec scratch;

  MultEngine(const QuotientBasis& q, const Polynomial& g) : qb(q), gred(g), p(q.ring->p) {
    pivot_of.assign(qb.standard_monomials.size(), -1);
  }

  SpVec eval_column(const Monomial& s) const {
    SpVec col;
    col.reserve(gred.t.size());
    for (const auto& tm : gred.t) {
      Monomial m = mono_mul(s, tm.m);
      auto it = qb.index.find(m);
      if (it != qb.index.end()) col.emplace_back(it->second, tm.c);
    }
    std::sort(col.begin(), col.end());
    return col;
  }

  // Dependent columns return the relation polynomial; independent ones are kept.
  std::optional<Polynomial> offer(const Monomial& s) {
    SpVec v = eval_column(s);
    SpVec combo;
    while (!v.empty()) {
      int32_t r = v[0].first;
      int32_t k = pivot_of[static_cast<size_t>(r)];
      if (k < 0) break;
      uint32_t c = v[0].second;
      sp_axpy(v, rows[static_cast<size_t>(k)].val, fp_neg(c, p), p, scratch);
      sp_axpy(combo, rows[static_cast<size_t>(k)].combo, c, p, scratch);
    }
    if (v.empty()) {
      std::vector<Term> terms;
      terms.reserve(combo.size() + 1);
      terms.push_back(Term{s, 1});
      for (const auto& kv : combo)
        terms.push_back(Term{kept[static_cast<size_t>(kv.first)], fp_neg(kv.second, p)});
      return poly_from_terms(qb.ring, std::move(terms));
    }
    uint32_t inv = fp_inv(v[0].second, p);
    for (auto& e : v) e.second = fp_mul(e.second, inv, p);
    SpVec rc;
    rc.reserve(combo.size() + 1);
    for (const auto& kv : combo) rc.emplace_back(kv.first, fp_neg(fp_mul(inv, kv.second, p), p));
    rc.emplace_back(static_cast<int32_t>(kept.size()), inv);
    pivot_of[static_cast<size_t>(v[0].first)] = static_cast<int32_t>(rows.size());
    rows.push_back(ERow{std::move(v), std::move(rc)});
    kept.push_back(s);
    return std::nullopt;
  }
};

}  // namespace detail

// Kernel basis and rank of multiplication by g on R/M.
inline std::pair<std::vector<Polynomial>, int64_t> quotient_mult_kernel(
    const Ideal& M, const Polynomial& g, int64_t cap = kDefaultQuotientCap) {
  check_same_ring(M.ring, g.ring);
  QuotientBasis qb = quotient_basis(M, cap);
  Polynomial gr = reduce_mod_monomial_box(g, qb);
  std::vector<Polynomial> kernel;
  if (gr.is_zero()) {
    kernel.reserve(qb.standard_monomials.size());
    for (const auto& s : qb.standard_monomials) kernel.push_back(poly_mono(M.ring, s));
    return {kernel, 0};
  }
  detail::MultEngine eng(qb, gr);
  for (const auto& s : qb.standard_monomials)
    if (auto dep = eng.offer(s)) kernel.push_back(std::move(*dep));
  return {kernel, static_cast<int64_t>(eng.kept.size())};
}

struct ColonOutcome {
  Ideal colon;        // reduced GB cached
  int64_t image_rank;  // = length of R/(M : g)
};

// (M : g) through the multiplication-map echelon; emits the reduced GB directly,
// skipping multiples of already-found leading terms, so the work is proportional
// to the colon quotient's length rather than to λ(R/M).
inline ColonOutcome colon_via_quotient(const Ideal& M, const Polynomial& g,
                                       int64_t cap = kDefaultQuotientCap) {
  check_same_ring(M.ring, g.ring);
  QuotientBasis qb = quotient_basis(M, cap);
  Polynomial gr = reduce_mod_monomial_box(g, qb);
  if (gr.is_zero()) return {unit_ideal(M.ring), 0};
  detail::MultEngine eng(qb, gr);
  std::vector<Polynomial> emitted;
  std::vector<Monomial> emitted_lt;
  for (const auto& s : qb.standard_monomials) {
    bool skip = false;
    for (const auto& l : emitted_lt)
      if (mono_divides(l, s)) {
        skip = true;
        break;
      }
    if (skip) continue;
    if (auto dep = eng.offer(s)) {
      emitted.push_back(std::move(*dep));
      emitted_lt.push_back(s);
    }
  }
  std::vector<Polynomial> gb = emitted;
  for (const auto& m : qb.modulus_min_gens) {
    bool covered = false;
    for (const auto& l : emitted_lt)
      if (mono_divides(l, m)) {
        covered = true;
        break;
      }
    if (!covered) gb.push_back(poly_mono(M.ring, m));
  }
  std::sort(gb.begin(), gb.end(),
            [](const Polynomial& a, const Polynomial& b) { return poly_compare(a, b) > 0; });
  Ideal out{M.ring, gb, nullptr};
  out.gb = std::make_shared<const std::vector<Polynomial>>(std::move(gb));
  return {out, static_cast<int64_t>(eng.kept.size())};
}

// Colon dispatch: closed monomial form when possible, then the quotient fast
// path for monomial moduli of manageable length, elimination otherwise.
inline Ideal ideal_colon(const Ideal& I, const Polynomial& g,
                         int64_t cap = kDefaultQuotientCap) {
  check_same_ring(I.ring, g.ring);
  if (g.is_zero()) fail(Err::DivisionByZero, "colon by zero");
  if (is_monomial_ideal(I) && !I.gens.empty()) {
    std::vector<Monomial> mins = monomial_min_gens(I);
    std::vector<Term> kept;
    for (const auto& tm : g.t) {
      bool inside = false;
      for (const auto& m : mins)
        if (mono_divides(m, tm.m)) {
          inside = true;
          break;
        }
      if (!inside) kept.push_back(tm);
    }
    if (kept.empty()) return unit_ideal(I.ring);
    if (kept.size() == 1) return monomial_colon(I, kept[0].m);
    if (is_m_primary_monomial(I)) {
      Polynomial gr = poly_from_terms(I.ring, kept);
      try {
        return colon_via_quotient(I, gr, cap).colon;
      } catch (const AlgebraError& e) {
        if (e.code() != Err::TooLarge) throw;
        // fall through to elimination
      }
    }
  }
  return ideal_colon_elim(I, g);
}

}  // namespace frobsplit

#endif
