#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "oracle.hpp"
#include "schurw/elim.hpp"
#include "schurw/errors.hpp"
#include "schurw/exact.hpp"
#include "schurw/sparse.hpp"

using schurw::FpRow;
using schurw::Int;
using schurw::IntRow;
using schurw::SparseFpMatrix;
using schurw::SparseIntMatrix;
namespace exact = schurw::exact;

static SparseIntMatrix mk(int64_t ncols, const std::vector<std::vector<long>>& dense) {
  SparseIntMatrix m = SparseIntMatrix::zero(static_cast<int64_t>(dense.size()), ncols);
  for (size_t i = 0; i < dense.size(); ++i)
    for (size_t j = 0; j < dense[i].size(); ++j)
      if (dense[i][j] != 0) m.rows[i].push_back({static_cast<int32_t>(j), Int(dense[i][j])});
  return m;
}

static SparseIntMatrix mat_of(const exact::LatticeBasis& L) {
  SparseIntMatrix m;
  m.nrows = L.rank();
  m.ncols = L.ambient_dim;
  m.rows = L.rows;
  return m;
}

static oracle::DenseInt dense_of(const exact::LatticeBasis& L) {
  return oracle::to_dense(mat_of(L));
}

TEST_CASE("fp_rank and kernels match dense elimination") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    uint32_t p = std::vector<uint32_t>{2, 3, 5, 97}[static_cast<size_t>(trial % 4)];
    int64_t nr = 2 + trial % 9, nc = 2 + (trial * 7) % 11;
    SparseIntMatrix mi = oracle::random_int_matrix(rng, nr, nc);
    SparseFpMatrix m = schurw::reduce_mod_p(mi, p);
    int64_t want = oracle::dense_fp_rank(oracle::to_dense(m), p);
    CHECK(schurw::fp_rank(m) == want);
    CHECK(schurw::fp_rank(m, true) == want);
    CHECK(exact::rank_mod_p(mi, p) == want);

    auto ker = schurw::fp_kernel_basis(m);
    auto want_ker = oracle::dense_fp_kernel(oracle::to_dense(m), p);
    REQUIRE(ker.size() == want_ker.size());
    for (size_t v = 0; v < ker.size(); ++v) {
      std::vector<uint32_t> got(static_cast<size_t>(nc), 0);
      for (auto [c, x] : ker[v]) got[static_cast<size_t>(c)] = x;
      CHECK(got == want_ker[v]);
    }

    auto fast = schurw::fp_kernel_basis_fast(m, 1u << 24);
    CHECK(fast.size() == want_ker.size());
    for (const auto& v : fast) {
      // still an actual kernel vector even if not the canonical one
      std::vector<uint32_t> x(static_cast<size_t>(nc), 0);
      for (auto [c, val] : v) x[static_cast<size_t>(c)] = val;
      for (const auto& row : m.rows) {
        uint64_t dot = 0;
        for (auto [c, val] : row) dot += static_cast<uint64_t>(val) * x[static_cast<size_t>(c)];
        CHECK(dot % p == 0);
      }
    }
  }
}

TEST_CASE("FpEchelon incremental insert, reduce, rref") {
  std::mt19937 rng(7);
  SparseIntMatrix mi = oracle::random_int_matrix(rng, 8, 10);
  SparseFpMatrix m = schurw::reduce_mod_p(mi, 5);
  schurw::FpEchelon ech(5, 10);
  for (const auto& row : m.rows) ech.insert(row);
  CHECK(ech.rank() == schurw::fp_rank(m));

  // combinations of inserted rows reduce to zero
  FpRow combo;
  {
    std::vector<uint32_t> acc(10, 0);
    for (size_t i = 0; i < m.rows.size(); ++i)
      for (auto [c, v] : m.rows[i]) acc[static_cast<size_t>(c)] = (acc[static_cast<size_t>(c)] + (i + 1) * v) % 5;
    for (size_t c = 0; c < acc.size(); ++c)
      if (acc[c]) combo.push_back({static_cast<int32_t>(c), acc[c]});
  }
  CHECK(ech.reduce(combo).empty());

  ech.finalize_rref();
  for (size_t i = 0; i < ech.rows().size(); ++i) {
    int32_t piv = ech.pivots()[i];
    CHECK(ech.pivot_row_of_col(piv) == static_cast<int32_t>(i));
    for (size_t j = 0; j < ech.rows().size(); ++j) {
      uint32_t v = 0;
      for (auto [c, x] : ech.rows()[j])
        if (c == piv) v = x;
      CHECK(v == (i == j ? 1u : 0u));
    }
  }
}

TEST_CASE("FpEchelon honors nnz limit") {
  schurw::FpEchelon ech(3, 64);
  ech.set_nnz_limit(8);
  bool threw = false;
  try {
    for (int i = 0; i < 8; ++i) {
      FpRow v;
      for (int c = i; c < 64; ++c) v.push_back({c, static_cast<uint32_t>(1 + (c * i) % 2)});
      ech.insert(v);
    }
  } catch (const schurw::SizeLimitError&) {
    threw = true;
  }
  CHECK(threw);
}

TEST_CASE("hermite basis: frozen examples and canonicity") {
  auto L = exact::hnf_row_basis(mk(2, {{2, 4}, {1, 2}}));
  CHECK(L.rank() == 1);
  CHECK(dense_of(L) == oracle::DenseInt{{Int(1), Int(2)}});

  auto D = exact::hnf_row_basis(mk(2, {{2, 0}, {0, 3}}));
  CHECK(dense_of(D) == oracle::DenseInt{{Int(2), Int(0)}, {Int(0), Int(3)}});
  CHECK(D.pivots == std::vector<int32_t>{0, 1});

  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    SparseIntMatrix m = oracle::random_int_matrix(rng, 3 + trial % 4, 4 + trial % 3);
    auto H = exact::hnf_row_basis(m);
    CHECK(dense_of(H) == oracle::dense_hnf(oracle::to_dense(m)));

    // unimodular row operations leave the canonical basis unchanged
    SparseIntMatrix u = m;
    std::uniform_int_distribution<int> dr(0, static_cast<int>(m.nrows) - 1);
    for (int k = 0; k < 6; ++k) {
      int a = dr(rng), b = dr(rng);
      if (a == b) continue;
      u.rows[static_cast<size_t>(a)] =
          exact::row_sub_mul(u.rows[static_cast<size_t>(a)], Int(1 + k % 3), u.rows[static_cast<size_t>(b)]);
    }
    CHECK(exact::hnf_row_basis(u) == H);
  }
}

TEST_CASE("rank over Q matches rational elimination and bounds mod-p rank") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    SparseIntMatrix m = oracle::random_int_matrix(rng, 2 + trial % 7, 2 + (trial * 3) % 8);
    int64_t r0 = exact::rank_char0(m);
    CHECK(r0 == oracle::rational_rank(m));
    for (uint32_t p : {2u, 3u, 5u}) CHECK(exact::rank_mod_p(m, p) <= r0);
  }
}

TEST_CASE("p-saturation") {
  // prime-power content divides out; the prime-to-p part stays
  auto L12 = exact::hnf_row_basis(mk(1, {{12}}));
  auto S12 = exact::p_saturate(L12, 2);
  CHECK(dense_of(S12) == oracle::DenseInt{{Int(3)}});
  CHECK(exact::lattice_index_log_p(S12, L12, 2) == 2);

  auto Lid = exact::hnf_row_basis(mk(2, {{1, 0}, {0, 1}}));
  CHECK(exact::p_saturate(Lid, 3) == Lid);

  auto Lpp = exact::hnf_row_basis(mk(2, {{5, 5}}));
  CHECK(dense_of(exact::p_saturate(Lpp, 5)) == oracle::DenseInt{{Int(1), Int(1)}});

  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    uint32_t p = trial % 2 ? 3 : 2;
    SparseIntMatrix m = oracle::random_int_matrix(rng, 3, 5);
    auto L = exact::hnf_row_basis(m);
    auto S = exact::p_saturate(L, p);
    CHECK(exact::p_saturate(S, p) == S);
    CHECK(S.rank() == L.rank());
    for (const auto& row : L.rows) CHECK(exact::contains(S, row));
    // index of L in its saturation is always a finite p-power
    CHECK(exact::lattice_index_log_p(S, L, p) >= 0);
    // saturated basis keeps full rank after reduction mod p
    CHECK(exact::rank_mod_p(mat_of(S), p) == S.rank());
  }
}

TEST_CASE("lattice index exponents and failure modes") {
  auto Z2 = exact::hnf_row_basis(mk(2, {{1, 0}, {0, 1}}));
  auto pZ = exact::hnf_row_basis(mk(2, {{3, 0}, {0, 1}}));
  CHECK(exact::lattice_index_log_p(Z2, pZ, 3) == 1);
  CHECK(exact::lattice_index_log_p(Z2, Z2, 3) == 0);
  CHECK(exact::lattice_index_log_p(Z2, exact::hnf_row_basis(mk(2, {{9, 0}, {0, 3}})), 3) == 3);

  CHECK_THROWS_AS(exact::lattice_index_log_p(exact::hnf_row_basis(mk(2, {{2, 0}, {0, 2}})),
                                             exact::hnf_row_basis(mk(2, {{1, 1}})), 2),
                  schurw::NotASublatticeError);
  // index 6 is not a 2-power
  CHECK_THROWS_AS(exact::lattice_index_log_p(exact::hnf_row_basis(mk(1, {{1}})),
                                             exact::hnf_row_basis(mk(1, {{6}})), 2),
                  schurw::IndexNotPPowerError);
  // rank drop means infinite index
  CHECK_THROWS_AS(exact::lattice_index_log_p(Z2, exact::hnf_row_basis(mk(2, {{1, 0}})), 2),
                  schurw::IndexNotPPowerError);
}

TEST_CASE("membership in a hermite basis") {
  auto L = exact::hnf_row_basis(mk(2, {{1, 2}, {0, 5}}));
  IntRow v{{0, Int(3)}, {1, Int(16)}};
  CHECK(exact::contains(L, v));
  CHECK(exact::membership_coeffs(L, v) == std::vector<Int>{Int(3), Int(2)});
  IntRow w{{1, Int(3)}};
  CHECK(!exact::contains(L, w));
  CHECK_THROWS_AS(exact::membership_coeffs(L, w), schurw::NotASublatticeError);
}

TEST_CASE("bareiss determinant and rank") {
  CHECK(exact::bareiss_det({{Int(1), Int(2)}, {Int(3), Int(4)}}) == Int(-2));
  CHECK(exact::bareiss_det({{Int(7)}}) == Int(7));
  CHECK(exact::bareiss_det({{Int(2), Int(0), Int(1)},
                            {Int(1), Int(1), Int(0)},
                            {Int(0), Int(3), Int(4)}}) == Int(11));
  CHECK(exact::bareiss_rank({{Int(1), Int(2)}, {Int(2), Int(4)}}) == 1);
  std::mt19937 rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    SparseIntMatrix m = oracle::random_int_matrix(rng, 4, 4, 3, 0.7);
    CHECK(exact::bareiss_rank(oracle::to_dense(m)) == oracle::rational_rank(m));
  }
}

TEST_CASE("serialization round trips") {
  std::mt19937 rng(23);
  SparseIntMatrix m = oracle::random_int_matrix(rng, 5, 7);
  std::stringstream ss;
  schurw::write_matrix_market(ss, m, 7);
  uint32_t mod = 0;
  SparseIntMatrix back = schurw::read_matrix_market(ss, &mod);
  CHECK(back == m);
  CHECK(mod == 7);

  auto L = exact::hnf_row_basis(m);
  std::stringstream ls;
  exact::write_lattice(ls, L);
  CHECK(exact::read_lattice(ls) == L);
}

TEST_CASE("sparse row update") {
  IntRow a{{0, Int(2)}, {3, Int(5)}};
  IntRow b{{0, Int(1)}, {2, Int(1)}};
  IntRow got = exact::row_sub_mul(a, Int(2), b);
  CHECK(got == IntRow{{2, Int(-2)}, {3, Int(5)}});
  CHECK(exact::row_sub_mul(a, Int(0), b) == a);
  CHECK(exact::row_sub_mul(a, Int(1), a).empty());
}
