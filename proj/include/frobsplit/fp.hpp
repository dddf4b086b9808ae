#ifndef FROBSPLIT_FP_HPP
#define FROBSPLIT_FP_HPP

#include <cstdint>

#include "frobsplit/error.hpp"

namespace frobsplit {

inline bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline uint32_t fp_reduce(int64_t v, uint32_t p) {
  int64_t r = v % static_cast<int64_t>(p);
  if (r < 0) r += p;
  return static_cast<uint32_t>(r);
}

inline uint32_t fp_add(uint32_t a, uint32_t b, uint32_t p) {
  uint32_t s = a + b;  // p < 2^16 so no wraparound
  return s >= p ? s - p : s;
}

inline uint32_t fp_sub(uint32_t a, uint32_t b, uint32_t p) { return a >= b ? a - b : a + p - b; }

inline uint32_t fp_neg(uint32_t a, uint32_t p) { return a == 0 ? 0 : p - a; }

inline uint32_t fp_mul(uint32_t a, uint32_t b, uint32_t p) {
  return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
}

inline uint32_t fp_pow(uint32_t a, uint64_t k, uint32_t p) {
  uint32_t r = 1 % p;
  uint32_t base = a % p;
  while (k) {
    if (k & 1) r = fp_mul(r, base, p);
    base = fp_mul(base, base, p);
    k >>= 1;
  }
  return r;
}

inline uint32_t fp_inv(uint32_t a, uint32_t p) {
  a %= p;
  if (a == 0) fail(Err::DivisionByZero, "inverse of 0 mod " + std::to_string(p));
  // extended Euclid
  int64_t t = 0, new_t = 1;
  int64_t r = p, new_r = a;
  while (new_r != 0) {
    int64_t q = r / new_r;
    int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<uint32_t>(t);
}

inline uint32_t fp_div(uint32_t a, uint32_t b, uint32_t p) { return fp_mul(a, fp_inv(b, p), p); }

// Residue together with its modulus; the element type named by the library API.
struct FpElement {
  uint32_t value = 0;
  uint32_t p = 2;

  friend bool operator==(const FpElement&, const FpElement&) = default;
};

inline FpElement fp_make(int64_t v, uint32_t p) { return FpElement{fp_reduce(v, p), p}; }

inline void check_same_modulus(const FpElement& a, const FpElement& b) {
  if (a.p != b.p) fail(Err::RingMismatch, "mixed moduli " + std::to_string(a.p) + " and " + std::to_string(b.p));
}

inline FpElement operator+(const FpElement& a, const FpElement& b) {
  check_same_modulus(a, b);
  return {fp_add(a.value, b.value, a.p), a.p};
}

inline FpElement operator-(const FpElement& a, const FpElement& b) {
  check_same_modulus(a, b);
  return {fp_sub(a.value, b.value, a.p), a.p};
}

inline FpElement operator*(const FpElement& a, const FpElement& b) {
  check_same_modulus(a, b);
  return {fp_mul(a.value, b.value, a.p), a.p};
}

inline FpElement ff_inv(const FpElement& a) { return {fp_inv(a.value, a.p), a.p}; }

}  // namespace frobsplit

#endif
