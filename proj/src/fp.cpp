#include "schurw/fp.hpp"

#include <stdexcept>

namespace schurw::fp {

uint32_t inv(uint32_t a, uint32_t p) {
  // extended Euclid; p prime, a != 0 mod p
  long long t = 0, newt = 1, r = p, newr = a % p;
  while (newr != 0) {
    long long q = r / newr;
    long long tmp = t - q * newt;
    t = newt; newt = tmp;
    tmp = r - q * newr;
    r = newr; newr = tmp;
  }
  if (r != 1) throw std::domain_error("fp::inv: not invertible");
  if (t < 0) t += p;
  return static_cast<uint32_t>(t);
}

uint32_t normalize(long long v, uint32_t p) {
  long long m = v % static_cast<long long>(p);
  if (m < 0) m += p;
  return static_cast<uint32_t>(m);
}

namespace {
uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}
uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}
}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  // deterministic Miller-Rabin base set for n < 3.3e24
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

uint64_t next_prime(uint64_t n) {
  uint64_t c = n + 1;
  if (c <= 2) return 2;
  if (c % 2 == 0) ++c;
  while (!is_prime(c)) c += 2;
  return c;
}

uint32_t cert_prime_a() {
  static const uint32_t p = static_cast<uint32_t>(next_prime(1ull << 30));
  return p;
}

uint32_t cert_prime_b() {
  static const uint32_t p = static_cast<uint32_t>(next_prime(cert_prime_a()));
  return p;
}

}  // namespace schurw::fp
