#ifndef FROBSPLIT_IDEAL_HPP
#define FROBSPLIT_IDEAL_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "frobsplit/error.hpp"
#include "frobsplit/monomial.hpp"
#include "frobsplit/polynomial.hpp"
#include "frobsplit/ring.hpp"

namespace frobsplit {

struct Ideal {
  Ring ring;
  std::vector<Polynomial> gens;  // nonzero, sorted descending, deduplicated
  std::shared_ptr<const std::vector<Polynomial>> gb;  // reduced GB in ring->order

  bool has_gb() const { return static_cast<bool>(gb); }
  const std::vector<Polynomial>& basis() const {
    if (!gb) fail(Err::NeedsGB, "ideal has no cached basis");
    return *gb;
  }
};

inline Ideal ideal_make(const Ring& r, std::vector<Polynomial> gens) {
  std::vector<Polynomial> kept;
  kept.reserve(gens.size());
  for (auto& g : gens) {
    check_same_ring(r, g.ring);
    if (!g.is_zero()) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end(),
            [](const Polynomial& a, const Polynomial& b) { return poly_compare(a, b) > 0; });
  kept.erase(std::unique(kept.begin(), kept.end(),
                         [](const Polynomial& a, const Polynomial& b) {
                           return poly_compare(a, b) == 0;
                         }),
             kept.end());
  return Ideal{r, std::move(kept), nullptr};
}

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  check_same_ring(a.ring, b.ring);
  std::vector<Polynomial> g = a.gens;
  g.insert(g.end(), b.gens.begin(), b.gens.end());
  return ideal_make(a.ring, std::move(g));
}

inline Ideal variable_ideal(const Ring& r, const std::vector<int>& idx) {
  std::vector<Polynomial> g;
  for (int i : idx) g.push_back(poly_var(r, i));
  return ideal_make(r, std::move(g));
}

inline Ideal maximal_ideal(const Ring& r) {
  std::vector<int> idx(r->nvars());
  for (int i = 0; i < r->nvars(); ++i) idx[i] = i;
  return variable_ideal(r, idx);
}

// Generators raised to the p^e power; that generates the e-th bracket power
// because h -> h^(p^e) is a ring map.
inline Ideal bracket_power(const Ideal& I, int e) {
  std::vector<Polynomial> g;
  g.reserve(I.gens.size());
  for (const auto& f : I.gens) g.push_back(poly_pow_charp(f, e));
  return ideal_make(I.ring, std::move(g));
}

namespace detail {

// Work meter for basis computations.  Reduction steps are charged by the size
// of the polynomials they touch, so a runaway elimination aborts with
// TooLarge instead of stalling.
struct WorkBudget {
  int64_t left;
  void charge(int64_t c) {
    left -= c;
    if (left < 0) fail(Err::TooLarge, "basis computation exceeded its work budget");
  }
};

constexpr int64_t kDefaultGbWork = 40000000;
constexpr size_t kMaxBasisSize = 2000;

}  // namespace detail

// Full multivariate division against an arbitrary basis list, scanned in order.
inline Polynomial poly_reduce(const Polynomial& g, const std::vector<Polynomial>& basis,
                              detail::WorkBudget* budget = nullptr) {
  uint32_t p = g.ring->p;
  Polynomial work = g;
  std::vector<Term> rem;
  while (!work.is_zero()) {
    const Monomial& lm = work.lm();
    const Polynomial* div = nullptr;
    for (const auto& b : basis) {
      if (!b.is_zero() && mono_divides(b.lm(), lm)) {
        div = &b;
        break;
      }
    }
    if (div) {
      if (budget)
        budget->charge(static_cast<int64_t>(work.t.size()) +
                       static_cast<int64_t>(div->t.size()));
      Term s{mono_div(lm, div->lm()), fp_mul(work.lc(), fp_inv(div->lc(), p), p)};
      work = poly_sub(work, term_mul(*div, s));
    } else {
      if (budget) budget->charge(1);
      rem.push_back(work.lt());
      work.t.erase(work.t.begin());
    }
  }
  return poly_from_terms(g.ring, std::move(rem));
}

namespace detail {

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  uint32_t p = f.ring->p;
  Monomial l = mono_lcm(f.lm(), g.lm());
  Term tf{mono_div(l, f.lm()), fp_inv(f.lc(), p)};
  Term tg{mono_div(l, g.lm()), fp_inv(g.lc(), p)};
  return poly_sub(term_mul(f, tf), term_mul(g, tg));
}

// Minimize and tail-reduce a basis whose S-pairs all reduce to zero.
inline std::vector<Polynomial> interreduce(const Ring&, std::vector<Polynomial> G,
                                           WorkBudget* budget = nullptr) {
  for (auto& g : G) g = make_monic(g);
  std::sort(G.begin(), G.end(),
            [](const Polynomial& a, const Polynomial& b) { return poly_compare(a, b) > 0; });
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      if (mono_divides(G[j].lm(), G[i].lm())) {
        // on equal leading monomials keep the later (smaller) element
        if (G[j].lm() == G[i].lm() && j > i) continue;
        redundant = true;
      }
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  std::vector<Polynomial> out;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial red = poly_reduce(minimal[i], others, budget);
    if (!red.is_zero()) out.push_back(make_monic(red));
  }
  std::sort(out.begin(), out.end(),
            [](const Polynomial& a, const Polynomial& b) { return poly_compare(a, b) > 0; });
  return out;
}

inline std::vector<Polynomial> buchberger(const Ring& r, const std::vector<Polynomial>& gens) {
  WorkBudget wb{kDefaultGbWork};
  std::vector<Polynomial> G;
  for (const auto& g : gens)
    if (!g.is_zero()) G.push_back(make_monic(g));
  std::sort(G.begin(), G.end(),
            [](const Polynomial& a, const Polynomial& b) { return poly_compare(a, b) > 0; });
  G.erase(std::unique(G.begin(), G.end(),
                      [](const Polynomial& a, const Polynomial& b) {
                        return poly_compare(a, b) == 0;
                      }),
          G.end());
  if (G.empty()) return G;

  struct Pair {
    int i, j;
    Monomial lcm;
    int64_t deg;
  };
  auto make_pair = [&](int i, int j) {
    Pair pr;
    pr.i = i;
    pr.j = j;
    pr.lcm = mono_lcm(G[i].lm(), G[j].lm());
    pr.deg = pr.lcm.degree();
    return pr;
  };
  std::vector<Pair> pending;
  std::set<std::pair<int, int>> treated;
  auto mark = [&](int i, int j) { treated.insert({std::min(i, j), std::max(i, j)}); };
  auto is_treated = [&](int i, int j) {
    return treated.count({std::min(i, j), std::max(i, j)}) > 0;
  };
  for (int i = 0; i < static_cast<int>(G.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(G.size()); ++j) pending.push_back(make_pair(i, j));

  while (!pending.empty()) {
    wb.charge(1 + static_cast<int64_t>(G.size()));
    size_t best = 0;
    for (size_t k = 1; k < pending.size(); ++k) {
      const Pair& a = pending[k];
      const Pair& b = pending[best];
      if (a.deg < b.deg || (a.deg == b.deg && (a.j < b.j || (a.j == b.j && a.i < b.i)))) best = k;
    }
    Pair pr = pending[best];
    pending.erase(pending.begin() + static_cast<long>(best));
    mark(pr.i, pr.j);

    if (mono_coprime(G[pr.i].lm(), G[pr.j].lm())) continue;
    bool chained = false;
    for (int k = 0; k < static_cast<int>(G.size()) && !chained; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (mono_divides(G[k].lm(), pr.lcm) && is_treated(pr.i, k) && is_treated(pr.j, k))
        chained = true;
    }
    if (chained) continue;

    Polynomial red = poly_reduce(s_polynomial(G[pr.i], G[pr.j]), G, &wb);
    if (red.is_zero()) continue;
    red = make_monic(red);
    if (red.degree() == 0) return {poly_const(r, 1)};  // unit ideal short-circuit
    G.push_back(red);
    if (G.size() > kMaxBasisSize)
      fail(Err::TooLarge, "basis computation exceeded its size budget");
    int m = static_cast<int>(G.size()) - 1;
    for (int i = 0; i < m; ++i) pending.push_back(make_pair(i, m));
  }
  auto out = interreduce(r, std::move(G), &wb);
  for (const auto& g : out)
    if (g.degree() == 0) return {poly_const(r, 1)};
  return out;
}

}  // namespace detail

// On-disk cache hook; the header-only file cache installs itself here.
struct GbCacheHook {
  virtual ~GbCacheHook() = default;
  virtual std::optional<std::vector<Polynomial>> load(const Ring& r,
                                                      const std::vector<Polynomial>& gens) = 0;
  virtual void store(const Ring& r, const std::vector<Polynomial>& gens,
                     const std::vector<Polynomial>& gb) = 0;
};

inline GbCacheHook*& gb_cache_hook() {
  thread_local GbCacheHook* hook = nullptr;
  return hook;
}

inline Ideal groebner_basis(const Ideal& I) {
  if (I.has_gb()) return I;
  Ideal out = I;
  if (GbCacheHook* hook = gb_cache_hook()) {
    if (auto hit = hook->load(I.ring, I.gens)) {
      out.gb = std::make_shared<const std::vector<Polynomial>>(std::move(*hit));
      return out;
    }
    auto gb = detail::buchberger(I.ring, I.gens);
    hook->store(I.ring, I.gens, gb);
    out.gb = std::make_shared<const std::vector<Polynomial>>(std::move(gb));
    return out;
  }
  out.gb = std::make_shared<const std::vector<Polynomial>>(detail::buchberger(I.ring, I.gens));
  return out;
}

inline Polynomial normal_form(const Polynomial& g, const Ideal& I) {
  check_same_ring(g.ring, I.ring);
  return poly_reduce(g, I.basis());
}

inline bool ideal_member(const Polynomial& g, const Ideal& I) {
  if (g.is_zero()) return true;
  if (I.has_gb()) return poly_reduce(g, *I.gb).is_zero();
  Ideal G = groebner_basis(I);
  return poly_reduce(g, *G.gb).is_zero();
}

inline bool is_unit_ideal(const Ideal& I) {
  const Ideal G = I.has_gb() ? I : groebner_basis(I);
  return !G.gb->empty() && G.gb->front().degree() == 0;
}

inline bool is_zero_ideal(const Ideal& I) { return I.gens.empty(); }

inline bool ideal_subset(const Ideal& I, const Ideal& J) {
  const Ideal GJ = J.has_gb() ? J : groebner_basis(J);
  for (const auto& g : I.gens)
    if (!poly_reduce(g, *GJ.gb).is_zero()) return false;
  return true;
}

inline bool ideal_equal(const Ideal& I, const Ideal& J) {
  const Ideal GI = I.has_gb() ? I : groebner_basis(I);
  const Ideal GJ = J.has_gb() ? J : groebner_basis(J);
  if (GI.gb->size() != GJ.gb->size()) return false;
  for (size_t i = 0; i < GI.gb->size(); ++i)
    if (!poly_equal((*GI.gb)[i], (*GJ.gb)[i])) return false;
  return true;
}

namespace detail {

constexpr const char* kElimVarName = "_elim";

inline Polynomial poly_extend(const Polynomial& f, const Ring& ext) {
  Polynomial r{ext, {}};
  r.t.reserve(f.t.size());
  for (const auto& tm : f.t) {
    Monomial m = tm.m;
    m.n = ext->nvars();
    r.t.push_back(Term{m, tm.c});
  }
  poly_normalize(r);
  return r;
}

inline Polynomial poly_contract(const Polynomial& f, const Ring& base) {
  std::vector<Term> out;
  out.reserve(f.t.size());
  for (const auto& tm : f.t) {
    if (tm.m.e[tm.m.n - 1] != 0)
      fail(Err::BadIndex, "cannot contract a term involving the eliminated variable");
    Monomial m = tm.m;
    m.e[m.n - 1] = 0;
    m.n = base->nvars();
    out.push_back(Term{m, tm.c});
  }
  return poly_from_terms(base, std::move(out));
}

}  // namespace detail

inline bool is_monomial_ideal(const Ideal& I);

// I ∩ J by eliminating t from t·I + (1−t)·J.
inline Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
  check_same_ring(I.ring, J.ring);
  if (is_zero_ideal(I) || is_zero_ideal(J)) return ideal_make(I.ring, {});
  if (is_monomial_ideal(I) && is_monomial_ideal(J)) {
    // pairwise lcms generate the intersection of monomial ideals
    std::vector<Monomial> lcms;
    lcms.reserve(I.gens.size() * J.gens.size());
    for (const auto& a : I.gens)
      for (const auto& b : J.gens) lcms.push_back(mono_lcm(a.t[0].m, b.t[0].m));
    std::sort(lcms.begin(), lcms.end(), [&](const Monomial& a, const Monomial& b) {
      return monomial_compare(a, b, I.ring->order) < 0;
    });
    lcms.erase(std::unique(lcms.begin(), lcms.end()), lcms.end());
    std::vector<Polynomial> kept;
    for (size_t i = 0; i < lcms.size(); ++i) {
      bool redundant = false;
      for (size_t j = 0; j < i && !redundant; ++j)
        if (mono_divides(lcms[j], lcms[i])) redundant = true;
      if (!redundant) kept.push_back(poly_mono(I.ring, lcms[i]));
    }
    Ideal out = ideal_make(I.ring, std::move(kept));
    out.gb = std::make_shared<const std::vector<Polynomial>>(out.gens);
    return out;
  }
  Ring ext = extend_ring(I.ring, detail::kElimVarName, Order::elim_last);
  Polynomial t = poly_var(ext, ext->nvars() - 1);
  Polynomial one_minus_t = poly_sub(poly_const(ext, 1), t);
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens) gens.push_back(poly_mul(t, detail::poly_extend(g, ext)));
  for (const auto& g : J.gens) gens.push_back(poly_mul(one_minus_t, detail::poly_extend(g, ext)));
  Ideal E = groebner_basis(ideal_make(ext, std::move(gens)));
  std::vector<Polynomial> kept;
  for (const auto& g : *E.gb) {
    if (g.lm().e[ext->nvars() - 1] == 0)  // leading term free of t forces every term free of t
      kept.push_back(detail::poly_contract(g, I.ring));
  }
  return ideal_make(I.ring, std::move(kept));
}

/// (I : g) through (I ∩ (g))/g; the quotient-basis fast path lives elsewhere.
inline Ideal ideal_colon_elim(const Ideal& I, const Polynomial& g) {
  check_same_ring(I.ring, g.ring);
  if (g.is_zero()) fail(Err::DivisionByZero, "colon by zero");
  Ideal gi = ideal_make(I.ring, {g});
  Ideal meet = ideal_intersect(I, gi);
  std::vector<Polynomial> quot;
  quot.reserve(meet.gens.size());
  for (const auto& h : meet.gens) quot.push_back(divide_exact(h, g));
  return ideal_make(I.ring, std::move(quot));
}

// g ∈ √I, via 1 ∈ I + (1 − t·g).
inline bool radical_member(const Polynomial& g, const Ideal& I) {
  check_same_ring(g.ring, I.ring);
  if (g.is_zero()) return true;
  Ring ext = extend_ring(I.ring, detail::kElimVarName, Order::elim_last);
  Polynomial t = poly_var(ext, ext->nvars() - 1);
  std::vector<Polynomial> gens;
  for (const auto& h : I.gens) gens.push_back(detail::poly_extend(h, ext));
  gens.push_back(poly_sub(poly_const(ext, 1), poly_mul(t, detail::poly_extend(g, ext))));
  return is_unit_ideal(ideal_make(ext, std::move(gens)));
}

inline bool is_monomial_ideal(const Ideal& I) {
  for (const auto& g : I.gens)
    if (g.t.size() != 1) return false;
  return true;
}

// Monomial ideal containing a pure power of every variable.
inline bool is_m_primary_monomial(const Ideal& I) {
  if (!is_monomial_ideal(I) || I.gens.empty()) return false;
  int n = I.ring->nvars();
  std::vector<bool> covered(static_cast<size_t>(n), false);
  for (const auto& g : I.gens) {
    const Monomial& m = g.t[0].m;
    int support = -1;
    bool pure = true;
    for (int i = 0; i < n; ++i) {
      if (m.e[i]) {
        if (support >= 0) pure = false;
        support = i;
      }
    }
    if (pure && support >= 0) covered[static_cast<size_t>(support)] = true;
  }
  for (int i = 0; i < n; ++i)
    if (!covered[static_cast<size_t>(i)]) return false;
  return true;
}

namespace detail {

inline std::vector<Monomial> leading_monomials(const Ideal& G) {
  std::vector<Monomial> lts;
  lts.reserve(G.gb->size());
  for (const auto& g : *G.gb) lts.push_back(g.lm());
  return lts;
}

}  // namespace detail

// Count of standard monomials under the leading-term staircase. Each lattice
// point below the staircase has a unique parent (divide by its lowest-index
// variable), so a stack walk that only appends variables with index at most the
// current lowest index visits every point exactly once.
inline int64_t zero_dim_length(const Ideal& I, int64_t cap = 100000000) {
  const Ideal G = I.has_gb() ? I : groebner_basis(I);
  if (G.gb->empty()) fail(Err::NotZeroDim, "zero ideal");
  if (is_unit_ideal(G)) return 0;
  int n = I.ring->nvars();
  auto lts = detail::leading_monomials(G);
  for (int i = 0; i < n; ++i) {
    bool pure = false;
    for (const auto& m : lts) {
      bool ok = m.e[i] > 0;
      for (int j = 0; ok && j < n; ++j)
        if (j != i && m.e[j]) ok = false;
      if (ok) {
        pure = true;
        break;
      }
    }
    if (!pure)
      fail(Err::NotZeroDim, "no pure power of " + I.ring->vars[static_cast<size_t>(i)] +
                                " among leading terms");
  }
  auto divisible = [&](const Monomial& m) {
    for (const auto& l : lts)
      if (mono_divides(l, m)) return true;
    return false;
  };
  int64_t count = 0;
  std::vector<std::pair<Monomial, int>> stack;  // (monomial, lowest extendable index)
  stack.emplace_back(Monomial::one(n), n - 1);
  while (!stack.empty()) {
    auto [m, maxvar] = stack.back();
    stack.pop_back();
    ++count;
    if (count > cap) fail(Err::TooLarge, "staircase exceeds cap " + std::to_string(cap));
    for (int j = 0; j <= maxvar; ++j) {
      Monomial child = m;
      child.e[j] += 1;
      if (!divisible(child)) stack.emplace_back(child, j);
    }
  }
  return count;
}

// Largest subset of variables meeting no leading-term support; that size is
// dim(R/I) for the monomial leading-term ideal and hence for I.
inline int krull_dimension(const Ideal& I) {
  const Ideal G = I.has_gb() ? I : groebner_basis(I);
  if (is_unit_ideal(G)) fail(Err::UnitIdeal, "dimension of the empty scheme");
  int n = I.ring->nvars();
  auto lts = detail::leading_monomials(G);
  int best = 0;
  for (uint32_t s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (const auto& m : lts) {
      bool inside = true;
      for (int i = 0; i < n && inside; ++i)
        if (m.e[i] && !(s & (1u << i))) inside = false;
      if (inside) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

}  // namespace frobsplit

#endif
