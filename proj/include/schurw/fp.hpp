#pragma once
#include <cstdint>

// Arithmetic in F_p for p < 2^31, value representatives in [0, p).
namespace schurw::fp {

inline uint32_t add(uint32_t a, uint32_t b, uint32_t p) {
  uint32_t s = a + b;
  return s >= p ? s - p : s;
}

inline uint32_t sub(uint32_t a, uint32_t b, uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

inline uint32_t neg(uint32_t a, uint32_t p) { return a == 0 ? 0 : p - a; }

inline uint32_t mul(uint32_t a, uint32_t b, uint32_t p) {
  return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
}

uint32_t inv(uint32_t a, uint32_t p);
uint32_t normalize(long long v, uint32_t p);

bool is_prime(uint64_t n);
uint64_t next_prime(uint64_t n);  // smallest prime > n

// Two fixed certification primes above 2^30, used for characteristic-0
// rank certificates.
uint32_t cert_prime_a();
uint32_t cert_prime_b();

}  // namespace schurw::fp
