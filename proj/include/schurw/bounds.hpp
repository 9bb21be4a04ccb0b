#pragma once
#include <cstdint>

// Closed-form injectivity thresholds and dimension bounds for the signed
// permutation action on tensor superspace.
namespace schurw::bounds {

// s(m+1) + (p-s)(n+1-s) - 1; requires m >= n >= 1, p >= 3 prime, s >= 1.
int64_t t_s(int64_t m, int64_t n, int64_t p, int64_t s);

// min of t_s over 1 <= s <= n+1 (equivalently over s <= min(p/2, n+1); the
// integer minimizer of the upward parabola lies at the clamp of
// d = (p+n-m)/2, which is below p/2 whenever m >= n).
int64_t t_p(int64_t m, int64_t n, int64_t p);

// The injectivity threshold, as a total function: symmetric in (m, n);
// m+n+mn for p = 0; m for n = 0; m+n for p = 2; otherwise piecewise in
// d = (p+n-m)/2 (exact half-integer arithmetic):
//   d < 2      -> m + (p-1)n
//   d > n      -> m + n + mn
//   2 <= d <=n -> (n+1)p - 1 - floor(d^2)
int64_t r_p_closed(int64_t m, int64_t n, int64_t p);

// m + n + min(mn, (p-2)m, (p-2)n), p >= 3 prime.
int64_t upper_bound(int64_t m, int64_t n, int64_t p);

// C(2r-2, r-1): the endomorphism algebra dimension in the 1|1 case, any
// characteristic except 2.
unsigned long long dim_endo_11(int r);

// Necessary condition for surjectivity of the action map at all degrees.
bool surjectivity_possible(int64_t m, int64_t n, int64_t p);

// Degree above which the Brauer action on k^{m|2n} is guaranteed
// non-injective: min(m+n+mn, r_p(m,2n)) for p > 2; m/2 + n for p = 2 with
// m even (odd m unsupported).
int64_t brauer_noninjective_threshold(int64_t m, int64_t n, int64_t p);

}  // namespace schurw::bounds
