#ifndef FROBSPLIT_MONOMIAL_HPP
#define FROBSPLIT_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <string>

#include "frobsplit/error.hpp"
#include "frobsplit/ring.hpp"

namespace frobsplit {

// Exponent vector, fixed capacity. Slots >= n are zero and stay zero.
struct Monomial {
  std::array<int32_t, RingSpec::kMaxVarsInternal> e{};
  int n = 0;

  static Monomial one(int nvars) {
    Monomial m;
    m.n = nvars;
    return m;
  }

  static Monomial var(int nvars, int i, int32_t k = 1) {
    if (i < 0 || i >= nvars) fail(Err::BadIndex, "variable index " + std::to_string(i));
    if (k < 0) fail(Err::BadExponent, std::to_string(k));
    Monomial m;
    m.n = nvars;
    m.e[i] = k;
    return m;
  }

  int64_t degree() const {
    int64_t d = 0;
    for (int i = 0; i < n; ++i) d += e[i];
    return d;
  }

  bool is_one() const {
    for (int i = 0; i < n; ++i)
      if (e[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    if (a.n != b.n) return false;
    for (int i = 0; i < a.n; ++i)
      if (a.e[i] != b.e[i]) return false;
    return true;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  if (a.n != b.n) fail(Err::RingMismatch, "monomials of different arity");
  Monomial r;
  r.n = a.n;
  for (int i = 0; i < a.n; ++i) {
    int64_t s = int64_t(a.e[i]) + int64_t(b.e[i]);
    if (s > INT32_MAX) fail(Err::Overflow, "exponent overflow in variable slot " + std::to_string(i));
    r.e[i] = static_cast<int32_t>(s);
  }
  return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
  // a | b
  if (a.n != b.n) fail(Err::RingMismatch, "monomials of different arity");
  for (int i = 0; i < a.n; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {
  // a / b, requires b | a
  if (a.n != b.n) fail(Err::RingMismatch, "monomials of different arity");
  Monomial r;
  r.n = a.n;
  for (int i = 0; i < a.n; ++i) {
    if (b.e[i] > a.e[i]) fail(Err::BadExponent, "inexact monomial division");
    r.e[i] = a.e[i] - b.e[i];
  }
  return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  if (a.n != b.n) fail(Err::RingMismatch, "monomials of different arity");
  Monomial r;
  r.n = a.n;
  for (int i = 0; i < a.n; ++i) r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
  return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.n; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

// Raise every exponent by the scalar q (used for bracket powers m -> m^[q]).
inline Monomial mono_scale(const Monomial& a, int64_t q) {
  Monomial r;
  r.n = a.n;
  for (int i = 0; i < a.n; ++i) {
    int64_t s = int64_t(a.e[i]) * q;
    if (s > INT32_MAX) fail(Err::Overflow, "exponent overflow scaling by " + std::to_string(q));
    r.e[i] = static_cast<int32_t>(s);
  }
  return r;
}

// Returns +1 if a > b, 0 if equal, -1 if a < b under the given order.
inline int monomial_compare(const Monomial& a, const Monomial& b, Order ord) {
  if (a.n != b.n) fail(Err::BadIndex, "monomials of different arity");
  auto lex_cmp = [&](int lo, int hi) {
    for (int i = lo; i < hi; ++i) {
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
    }
    return 0;
  };
  auto grevlex_cmp = [&](int lo, int hi) {
    int64_t da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
      da += a.e[i];
      db += b.e[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (int i = hi - 1; i >= lo; --i) {
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
  };
  switch (ord) {
    case Order::lex:
      return lex_cmp(0, a.n);
    case Order::grlex: {
      int64_t da = a.degree(), db = b.degree();
      if (da != db) return da > db ? 1 : -1;
      return lex_cmp(0, a.n);
    }
    case Order::grevlex:
      return grevlex_cmp(0, a.n);
    case Order::elim_last: {
      int last = a.n - 1;
      if (a.e[last] != b.e[last]) return a.e[last] > b.e[last] ? 1 : -1;
      return grevlex_cmp(0, last);
    }
  }
  fail(Err::BadOrder, "unknown order");
}

struct MonomialHash {
  size_t operator()(const Monomial& m) const {
    uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < m.n; ++i) {
      h ^= static_cast<uint64_t>(static_cast<uint32_t>(m.e[i]));
      h *= 1099511628211ull;
    }
    h ^= static_cast<uint64_t>(m.n);
    h *= 1099511628211ull;
    return static_cast<size_t>(h);
  }
};

inline std::string mono_to_string(const Monomial& m, const Ring& r) {
  if (m.is_one()) return "1";
  std::string s;
  for (int i = 0; i < m.n; ++i) {
    if (!m.e[i]) continue;
    if (!s.empty()) s += "*";
    s += r->vars[i];
    if (m.e[i] != 1) s += "^" + std::to_string(m.e[i]);
  }
  return s;
}

}  // namespace frobsplit

#endif
