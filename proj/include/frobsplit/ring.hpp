#ifndef FROBSPLIT_RING_HPP
#define FROBSPLIT_RING_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "frobsplit/error.hpp"
#include "frobsplit/fp.hpp"

namespace frobsplit {

// Monomial orders. elim_last is internal: it makes the last variable dominant
// (degree in that variable compared first, grevlex on the rest as tie-break),
// which is what ideal_intersect/radical_member need for their adjoined variable.
enum class Order { lex, grlex, grevlex, elim_last };

inline const char* order_name(Order o) {
  switch (o) {
    case Order::lex: return "lex";
    case Order::grlex: return "grlex";
    case Order::grevlex: return "grevlex";
    case Order::elim_last: return "elim_last";
  }
  return "?";
}

struct RingSpec {
  uint32_t p = 2;
  std::vector<std::string> vars;
  Order order = Order::grevlex;

  static constexpr int kMaxVars = 8;       // public limit
  static constexpr int kMaxVarsInternal = 9;  // one elimination slot

  int nvars() const { return static_cast<int>(vars.size()); }

  int var_index(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return static_cast<int>(i);
    return -1;
  }

  friend bool operator==(const RingSpec& a, const RingSpec& b) {
    return a.p == b.p && a.vars == b.vars && a.order == b.order;
  }
};

using Ring = std::shared_ptr<const RingSpec>;

inline Ring make_ring(uint32_t p, std::vector<std::string> vars, Order order) {
  if (p < 2 || p > 65536 || !is_prime_u32(p)) fail(Err::NotPrime, "p = " + std::to_string(p));
  if (vars.empty() || vars.size() > RingSpec::kMaxVars)
    fail(Err::TooManyVars, "need 1.." + std::to_string(RingSpec::kMaxVars) + " variables, got " +
                               std::to_string(vars.size()));
  for (size_t i = 0; i < vars.size(); ++i)
    for (size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j]) fail(Err::DuplicateVar, vars[i]);
  auto r = std::make_shared<RingSpec>();
  r->p = p;
  r->vars = std::move(vars);
  r->order = order;
  return r;
}

// Appends one elimination variable. Bypasses the public variable cap by exactly
// one slot; nesting past that is an error.
inline Ring extend_ring(const Ring& base, const std::string& tname, Order order) {
  if (base->nvars() + 1 > RingSpec::kMaxVarsInternal)
    fail(Err::TooManyVars, "no elimination slot left in a " + std::to_string(base->nvars()) +
                               "-variable ring");
  auto r = std::make_shared<RingSpec>();
  r->p = base->p;
  r->vars = base->vars;
  r->vars.push_back(tname);
  r->order = order;
  return r;
}

inline bool same_ring(const Ring& a, const Ring& b) {
  return a == b || (a && b && *a == *b);
}

inline void check_same_ring(const Ring& a, const Ring& b) {
  if (!same_ring(a, b)) fail(Err::RingMismatch, "operands live in different rings");
}

}  // namespace frobsplit

#endif
