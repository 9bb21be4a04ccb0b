#include "schurw/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "schurw/bigint.hpp"
#include "schurw/fp.hpp"

namespace schurw::bounds {

namespace {

void check_odd_prime(int64_t p) {
  if (p < 3 || !fp::is_prime(static_cast<uint64_t>(p)))
    throw std::invalid_argument("need an odd prime characteristic");
}

}  // namespace

int64_t t_s(int64_t m, int64_t n, int64_t p, int64_t s) {
  if (m < n || n < 1) throw std::invalid_argument("need m >= n >= 1");
  check_odd_prime(p);
  if (s < 1) throw std::invalid_argument("need s >= 1");
  return s * (m + 1) + (p - s) * (n + 1 - s) - 1;
}

int64_t t_p(int64_t m, int64_t n, int64_t p) {
  if (m < n || n < 1) throw std::invalid_argument("need m >= n >= 1");
  check_odd_prime(p);
  int64_t best = t_s(m, n, p, 1);
  for (int64_t s = 2; s <= n + 1; ++s) best = std::min(best, t_s(m, n, p, s));
  return best;
}

int64_t r_p_closed(int64_t m, int64_t n, int64_t p) {
  if (m < 0 || n < 0) throw std::invalid_argument("need m, n >= 0");
  if (p != 0 && (p < 2 || !fp::is_prime(static_cast<uint64_t>(p))))
    throw std::invalid_argument("characteristic must be 0 or prime");
  if (m < n) std::swap(m, n);
  if (p == 0) return m + n + m * n;
  if (n == 0) return m;
  if (p == 2) return m + n;
  int64_t d2 = p + n - m;  // 2d
  if (d2 < 4) return m + (p - 1) * n;
  if (d2 > 2 * n) return m + n + m * n;
  int64_t floor_d_sq = (d2 * d2 - (d2 % 2 == 0 ? 0 : 1)) / 4;
  return (n + 1) * p - 1 - floor_d_sq;
}

int64_t upper_bound(int64_t m, int64_t n, int64_t p) {
  if (m < 0 || n < 0) throw std::invalid_argument("need m, n >= 0");
  check_odd_prime(p);
  return m + n + std::min({m * n, (p - 2) * m, (p - 2) * n});
}

unsigned long long dim_endo_11(int r) {
  if (r < 1 || r > 34) throw std::invalid_argument("degree out of range");
  Int num = 1, den = 1;
  for (int i = 1; i <= r - 1; ++i) {
    num *= (r - 1) + i;
    den *= i;
  }
  Int b = num / den;
  return b.convert_to<unsigned long long>();
}

bool surjectivity_possible(int64_t m, int64_t n, int64_t p) {
  check_odd_prime(p);
  return m * n == 0 || m + n < p;
}

int64_t brauer_noninjective_threshold(int64_t m, int64_t n, int64_t p) {
  if (m < 0 || n < 0) throw std::invalid_argument("need m, n >= 0");
  if (p < 2 || !fp::is_prime(static_cast<uint64_t>(p)))
    throw std::invalid_argument("characteristic must be prime");
  if (p == 2) {
    if (m % 2 != 0) throw std::invalid_argument("p = 2 requires even m");
    return m / 2 + n;
  }
  return std::min(m + n + m * n, r_p_closed(m, 2 * n, p));
}

}  // namespace schurw::bounds
