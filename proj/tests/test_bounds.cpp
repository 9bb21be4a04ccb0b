#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "schurw/bounds.hpp"
#include "schurw/partitions.hpp"

using namespace schurw::bounds;

TEST_CASE("degree statistic t_s") {
  CHECK(t_s(7, 7, 5, 2) == 33);
  for (int64_t p : {3, 5, 7})
    for (int64_t m = 1; m <= 8; ++m)
      for (int64_t n = 1; n <= m; ++n) {
        CHECK(t_s(m, n, p, 1) == m + (p - 1) * n);
        CHECK(t_s(m, n, p, n + 1) == m + n + m * n);
      }
  CHECK_THROWS(t_s(1, 2, 3, 1));
  CHECK_THROWS(t_s(2, 1, 4, 1));
  CHECK_THROWS(t_s(2, 1, 3, 0));
}

TEST_CASE("minimized statistic t_p") {
  CHECK(t_p(7, 7, 5) == 33);
  CHECK(t_p(4, 1, 5) == 8);
  CHECK(t_p(3, 2, 3) == 7);
  for (int64_t p : {3, 5, 7, 11})
    for (int64_t m = 1; m <= 9; ++m) CHECK(t_p(m, 1, p) == m + 1 + std::min(m, p - 2));

  // the minimum sits at the clamped integer neighbors of the parabola vertex
  for (int64_t p : {3, 5, 7, 11})
    for (int64_t m = 1; m <= 9; ++m)
      for (int64_t n = 1; n <= m; ++n) {
        int64_t d2 = p + n - m;
        int64_t lo = std::clamp<int64_t>(d2 / 2, 1, n + 1);
        int64_t hi = std::clamp<int64_t>((d2 + 1) / 2, 1, n + 1);
        CHECK(t_p(m, n, p) == std::min(t_s(m, n, p, lo), t_s(m, n, p, hi)));
      }
}

TEST_CASE("closed-form threshold: pinned values") {
  CHECK(r_p_closed(1, 1, 3) == 3);
  CHECK(r_p_closed(2, 1, 3) == 4);
  CHECK(r_p_closed(2, 1, 5) == 5);
  CHECK(r_p_closed(3, 2, 3) == 7);
  CHECK(r_p_closed(7, 7, 5) == 33);
  CHECK(r_p_closed(3, 3, 7) == 15);
}

TEST_CASE("closed-form threshold: structure") {
  for (int64_t m = 0; m <= 6; ++m)
    for (int64_t n = 0; n <= 6; ++n) {
      CHECK(r_p_closed(m, n, 0) == m + n + m * n);
      CHECK(r_p_closed(m, n, 2) == (n == 0 ? m : (m == 0 ? n : m + n)));
      for (int64_t p : {3, 5, 7}) {
        CHECK(r_p_closed(m, n, p) == r_p_closed(n, m, p));
        if (p > m + n) CHECK(r_p_closed(m, n, p) == m + n + m * n);
      }
    }
  for (int64_t m = 0; m <= 8; ++m) CHECK(r_p_closed(m, 0, 7) == m);
  CHECK_THROWS(r_p_closed(2, 1, 6));
  CHECK_THROWS(r_p_closed(-1, 1, 3));
}

TEST_CASE("closed form equals the minimized statistic and obeys the cap") {
  for (int64_t p : {3, 5, 7, 11, 13})
    for (int64_t m = 1; m <= 12; ++m)
      for (int64_t n = 1; n <= m; ++n) {
        CHECK(r_p_closed(m, n, p) == t_p(m, n, p));
        CHECK(r_p_closed(m, n, p) <= upper_bound(m, n, p));
      }
}

TEST_CASE("upper bound") {
  CHECK(upper_bound(7, 7, 5) == 35);
  CHECK(upper_bound(1, 1, 3) == 3);
  for (int64_t m = 0; m <= 8; ++m) CHECK(upper_bound(m, 0, 5) == m);
  CHECK_THROWS(upper_bound(2, 1, 2));
}

TEST_CASE("endomorphism dimension in the 1|1 case") {
  CHECK(dim_endo_11(1) == 1);
  CHECK(dim_endo_11(2) == 2);
  CHECK(dim_endo_11(3) == 6);
  CHECK(dim_endo_11(5) == 70);
  CHECK(dim_endo_11(6) == 252);
  for (int r = 1; r <= 10; ++r)
    CHECK(dim_endo_11(r) == schurw::combinatorics::dim_endo_char0(1, 1, r));
  CHECK_THROWS(dim_endo_11(0));
  CHECK_THROWS(dim_endo_11(35));
}

TEST_CASE("surjectivity necessary condition") {
  CHECK(!surjectivity_possible(2, 1, 3));
  CHECK(surjectivity_possible(1, 1, 3));
  CHECK(surjectivity_possible(1, 1, 5));
  for (int64_t m = 0; m <= 5; ++m) {
    CHECK(surjectivity_possible(m, 0, 3));
    CHECK(surjectivity_possible(0, m, 3));
  }
  CHECK(!surjectivity_possible(3, 2, 5));
}

TEST_CASE("brauer non-injectivity threshold") {
  CHECK(brauer_noninjective_threshold(2, 1, 3) == 5);
  CHECK(brauer_noninjective_threshold(2, 0, 2) == 1);
  CHECK(brauer_noninjective_threshold(1, 1, 5) == 3);
  CHECK(brauer_noninjective_threshold(4, 2, 2) == 4);
  CHECK_THROWS(brauer_noninjective_threshold(3, 1, 2));
  CHECK_THROWS(brauer_noninjective_threshold(2, 1, 1));
}
