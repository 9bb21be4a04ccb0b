#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <tuple>

#include "oracle.hpp"
#include "schurw/bounds.hpp"
#include "schurw/commutant.hpp"
#include "schurw/elim.hpp"
#include "schurw/errors.hpp"
#include "schurw/superspace.hpp"

using namespace schurw::commutant;
using schurw::Int;
using schurw::Permutation;
using schurw::SparseIntMatrix;
using schurw::superspace::Word;

static int64_t enc(const Word& w, int base) {
  int64_t x = 0;
  for (uint8_t c : w) x = x * base + c;
  return x;
}

static Word dec(int64_t x, int base, int r) {
  Word w(static_cast<size_t>(r));
  for (int i = r - 1; i >= 0; --i) {
    w[static_cast<size_t>(i)] = static_cast<uint8_t>(x % base);
    x /= base;
  }
  return w;
}

static oracle::DenseInt perm_matrix(const Permutation& s, int m, int n, int r) {
  int64_t N = 1;
  for (int i = 0; i < r; ++i) N *= m + n;
  oracle::DenseInt mat(static_cast<size_t>(N), std::vector<Int>(static_cast<size_t>(N), 0));
  for (int64_t wi = 0; wi < N; ++wi) {
    auto [u, sgn] = schurw::superspace::act(s, dec(wi, m + n, r), m);
    mat[static_cast<size_t>(enc(u, m + n))][static_cast<size_t>(wi)] = sgn;
  }
  return mat;
}

// From-scratch generator matrix: bitmask subset enumeration instead of the
// library's combination walk.
static oracle::DenseInt oracle_gen(int m, int n, int src, int dst, bool odd_gen, int k, int r) {
  int base = m + n;
  int64_t N = 1;
  for (int i = 0; i < r; ++i) N *= base;
  oracle::DenseInt mat(static_cast<size_t>(N), std::vector<Int>(static_cast<size_t>(N), 0));
  for (int64_t wi = 0; wi < N; ++wi) {
    Word w = dec(wi, base, r);
    for (uint32_t mask = 0; mask < (1u << r); ++mask) {
      if (__builtin_popcount(mask) != k) continue;
      bool ok = true;
      int sgn = 1;
      Word u = w;
      for (int i = 0; i < r; ++i) {
        if (!(mask & (1u << i))) continue;
        if (w[static_cast<size_t>(i)] != src) {
          ok = false;
          break;
        }
        if (odd_gen) {
          for (int j = 0; j < i; ++j)
            if (w[static_cast<size_t>(j)] >= m) sgn = -sgn;
        }
        u[static_cast<size_t>(i)] = static_cast<uint8_t>(dst);
      }
      if (!ok) continue;
      mat[static_cast<size_t>(enc(u, base))][static_cast<size_t>(wi)] += sgn;
    }
  }
  return mat;
}

static std::vector<std::tuple<int, int, bool>> oracle_gen_list(int m, int n) {
  std::vector<std::tuple<int, int, bool>> out;
  for (int i = 0; i + 1 < m; ++i) {
    out.push_back({i + 1, i, false});
    out.push_back({i, i + 1, false});
  }
  for (int i = 0; i + 1 < n; ++i) {
    out.push_back({m + i + 1, m + i, false});
    out.push_back({m + i, m + i + 1, false});
  }
  if (m >= 1 && n >= 1) {
    out.push_back({m, m - 1, true});
    out.push_back({m - 1, m, true});
  }
  return out;
}

// Equations for the full commutant: [G, X] = 0 for every generator power,
// and X kills pairs of words of different letter content.
static SparseIntMatrix oracle_commutant_equations(int m, int n, int r) {
  int base = m + n;
  int64_t N = 1;
  for (int i = 0; i < r; ++i) N *= base;
  auto weight = [&](int64_t wi) {
    std::vector<int> cnt(static_cast<size_t>(base), 0);
    for (uint8_t c : dec(wi, base, r)) cnt[c]++;
    return cnt;
  };
  SparseIntMatrix eqs = SparseIntMatrix::zero(0, N * N);
  auto add_row = [&](schurw::IntRow row) {
    if (!row.empty()) {
      std::sort(row.begin(), row.end());
      eqs.rows.push_back(std::move(row));
    }
  };
  for (auto [src, dst, odd_gen] : oracle_gen_list(m, n)) {
    int kmax = odd_gen ? 1 : r;
    for (int k = 1; k <= kmax; ++k) {
      auto G = oracle_gen(m, n, src, dst, odd_gen, k, r);
      for (int64_t a = 0; a < N; ++a)
        for (int64_t b = 0; b < N; ++b) {
          schurw::IntRow row;
          for (int64_t c = 0; c < N; ++c) {
            Int coef = G[static_cast<size_t>(a)][static_cast<size_t>(c)];
            if (coef != 0) row.push_back({static_cast<int32_t>(c * N + b), coef});
            Int coef2 = G[static_cast<size_t>(c)][static_cast<size_t>(b)];
            if (coef2 != 0) row.push_back({static_cast<int32_t>(a * N + c), -coef2});
          }
          // duplicate columns cannot appear: src != dst separates the terms
          add_row(std::move(row));
        }
    }
  }
  for (int64_t a = 0; a < N; ++a)
    for (int64_t b = 0; b < N; ++b)
      if (weight(a) != weight(b)) add_row({{static_cast<int32_t>(a * N + b), Int(1)}});
  eqs.nrows = static_cast<int64_t>(eqs.rows.size());
  return eqs;
}

static int64_t oracle_commutant_dim(int m, int n, int r, uint32_t p) {
  auto eqs = oracle_commutant_equations(m, n, r);
  int64_t rank = p == 0 ? oracle::rational_rank(eqs)
                        : oracle::dense_fp_rank(oracle::to_dense(schurw::reduce_mod_p(eqs, p)), p);
  return eqs.ncols - rank;
}

TEST_CASE("generator inventory") {
  auto g11 = chevalley_generators(1, 1);
  REQUIRE(g11.size() == 2);
  CHECK(g11[0].kind == GenKind::OddRaise);
  CHECK(g11[0].src_letter() == 1);
  CHECK(g11[0].dst_letter() == 0);
  CHECK(g11[1].kind == GenKind::OddLower);
  CHECK(g11[1].src_letter() == 0);
  CHECK(g11[1].dst_letter() == 1);
  CHECK(g11[0].parity_changing());

  auto g21 = chevalley_generators(2, 1);
  REQUIRE(g21.size() == 4);
  CHECK(g21[0].src_letter() == 1);  // even raise consumes letter 1
  CHECK(g21[0].dst_letter() == 0);
  CHECK(!g21[0].parity_changing());
  CHECK(g21[2].src_letter() == 2);  // odd raise moves the first odd letter down
  CHECK(g21[2].dst_letter() == 1);

  CHECK(chevalley_generators(3, 0).size() == 4);
  CHECK(chevalley_generators(0, 3).size() == 4);
  CHECK(chevalley_generators(3, 2).size() == 8);
}

TEST_CASE("odd generator action: pinned 2x2 case") {
  LieGenerator raise{GenKind::OddRaise, 0, 1, 1};
  auto G = oracle::to_dense(divided_power_action_int(raise, 1, 2));
  oracle::DenseInt want(4, std::vector<Int>(4, 0));
  want[0][1] = 1;   // (0,1) -> (0,0)
  want[0][2] = 1;   // (1,0) -> (0,0)
  want[1][3] = 1;   // (1,1) -> (0,1), no odd letter before slot 0
  want[2][3] = -1;  // (1,1) -> (1,0), odd letter before slot 1
  CHECK(G == want);

  LieGenerator lower{GenKind::OddLower, 0, 1, 1};
  auto L = oracle::to_dense(divided_power_action_int(lower, 1, 2));
  oracle::DenseInt wantl(4, std::vector<Int>(4, 0));
  wantl[2][0] = 1;
  wantl[1][0] = 1;
  wantl[3][1] = 1;
  wantl[3][2] = -1;
  CHECK(L == wantl);
}

TEST_CASE("generator matrices match the subset-sum construction") {
  for (auto [m, n, r] : std::vector<std::array<int, 3>>{{2, 1, 3}, {1, 2, 3}, {2, 0, 4}, {1, 1, 4}}) {
    auto libgens = chevalley_generators(m, n);
    auto refgens = oracle_gen_list(m, n);
    REQUIRE(libgens.size() == refgens.size());
    for (size_t gi = 0; gi < libgens.size(); ++gi) {
      auto [src, dst, odd_gen] = refgens[gi];
      CHECK(libgens[gi].src_letter() == src);
      CHECK(libgens[gi].dst_letter() == dst);
      int kmax = odd_gen ? 1 : r;
      for (int k = 1; k <= kmax; ++k)
        CHECK(oracle::to_dense(divided_power_action_int(libgens[gi], k, r)) ==
              oracle_gen(m, n, src, dst, odd_gen, k, r));
    }
  }
}

TEST_CASE("divided power identities") {
  // G^k = k! G^(k) for even generators; odd generators square to zero
  LieGenerator even{GenKind::EvenRaise, 0, 2, 0};
  auto G1 = oracle::to_dense(divided_power_action_int(even, 1, 3));
  auto G2 = oracle::to_dense(divided_power_action_int(even, 2, 3));
  auto G3 = oracle::to_dense(divided_power_action_int(even, 3, 3));
  CHECK(oracle::mat_mul(G1, G1) == oracle::mat_scale(G2, 2));
  CHECK(oracle::mat_mul(G1, oracle::mat_mul(G1, G1)) == oracle::mat_scale(G3, 6));

  for (auto kind : {GenKind::OddRaise, GenKind::OddLower}) {
    LieGenerator odd{kind, 0, 1, 1};
    auto O = oracle::to_dense(divided_power_action_int(odd, 1, 3));
    auto sq = oracle::mat_mul(O, O);
    for (const auto& row : sq)
      for (const auto& v : row) CHECK(v == 0);
  }

  // degree above the slot count vanishes
  auto Z = divided_power_action_int(even, 4, 3);
  CHECK(Z.nnz() == 0);
  CHECK_THROWS_AS(divided_power_action_int({GenKind::OddRaise, 0, 1, 1}, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(divided_power_action_int(even, 0, 3), std::invalid_argument);
}

TEST_CASE("generators commute with the signed permutation action") {
  for (auto [m, n, r] : std::vector<std::array<int, 3>>{{1, 1, 3}, {2, 1, 3}}) {
    std::vector<Permutation> sigmas{Permutation::transposition(r, 0, 1), Permutation::forward_cycle(r)};
    for (const auto& g : chevalley_generators(m, n)) {
      int kmax = g.parity_changing() ? 1 : r;
      for (int k = 1; k <= kmax; ++k) {
        auto G = oracle::to_dense(divided_power_action_int(g, k, r));
        for (const auto& s : sigmas) {
          auto M = perm_matrix(s, m, n, r);
          CHECK(oracle::mat_mul(M, G) == oracle::mat_mul(G, M));
        }
      }
    }
  }
}

TEST_CASE("commutant dimension: pinned values") {
  CHECK(endo_dim(1, 1, 4, 3) == 20);
  CHECK(endo_dim(1, 1, 5, 3) == 70);
  CHECK(endo_dim(2, 1, 5, 3) == 120);
  for (uint32_t p : {2u, 3u, 5u}) CHECK(endo_dim(2, 0, 2, p) == 2);
  for (uint32_t p : {3u, 5u})
    for (int r = 2; r <= 5; ++r) CHECK(endo_dim(1, 1, r, p) == schurw::bounds::dim_endo_11(r));
  // characteristic zero falls back to the hook-formula count
  CHECK(endo_dim(2, 1, 5, 0) == 120);
  CHECK(endo_dim(1, 1, 6, 0) == 252);
}

TEST_CASE("commutant dimension against the dense full-space solver") {
  for (auto [m, n, r] : std::vector<std::array<int, 3>>{{1, 1, 2}, {1, 1, 3}, {2, 0, 2}, {2, 0, 3}, {1, 2, 2}, {2, 1, 2}}) {
    for (uint32_t p : {2u, 3u, 5u})
      CHECK(static_cast<int64_t>(endo_dim(m, n, r, p)) == oracle_commutant_dim(m, n, r, p));
    CHECK(static_cast<int64_t>(endo_dim(m, n, r, 0)) == oracle_commutant_dim(m, n, r, 0));
  }
  CHECK(static_cast<int64_t>(endo_dim(1, 1, 4, 3)) == oracle_commutant_dim(1, 1, 4, 3));
}

TEST_CASE("commutant contains the identity and the group action") {
  for (auto [m, n, r, p] : std::vector<std::array<int, 4>>{{1, 1, 3, 3}, {2, 1, 3, 3}, {1, 2, 3, 5}}) {
    auto eqs = commutant_equations_mod_p(m, n, r, static_cast<uint32_t>(p));
    auto dec_ = schurw::superspace::weight_blocks(m, n, r);
    auto in_kernel = [&](const std::vector<Int>& v) {
      for (const auto& row : eqs.rows) {
        Int dot = 0;
        for (auto [c, val] : row) dot += Int(val) * v[static_cast<size_t>(c)];
        if (dot % p != 0) return false;
      }
      return true;
    };
    CHECK(in_kernel(phi_apply_int(dec_, schurw::superspace::identity_element(r))));
    for (uint64_t rk = 0; rk < schurw::factorial(r); ++rk) {
      auto x = schurw::superspace::GroupAlgebraElement::zero(r);
      x.coeffs[rk] = 1;
      CHECK(in_kernel(phi_apply_int(dec_, x)));
    }
  }
}

TEST_CASE("kernel basis spans the commutant and the action image sits inside") {
  int m = 1, n = 1, r = 3;
  uint32_t p = 3;
  auto basis = endo_basis(m, n, r, p);
  CHECK(basis.size() == endo_dim(m, n, r, p));
  auto eqs = commutant_equations_mod_p(m, n, r, p);
  for (const auto& v : basis) {
    std::vector<uint32_t> x(static_cast<size_t>(eqs.ncols), 0);
    for (auto [c, val] : v) x[static_cast<size_t>(c)] = val;
    for (const auto& row : eqs.rows) {
      uint64_t dot = 0;
      for (auto [c, val] : row) dot += static_cast<uint64_t>(val) * x[static_cast<size_t>(c)];
      CHECK(dot % p == 0);
    }
  }

  // group action rows add nothing beyond the commutant span
  schurw::FpEchelon ech(p, eqs.ncols);
  for (const auto& v : basis) ech.insert(v);
  auto phi = schurw::superspace::phi_action_matrix_mod_p(m, n, r, p);
  for (const auto& row : phi.rows) CHECK(!ech.insert(row));
}

TEST_CASE("double centralizer closes back up") {
  CHECK(double_centralizer_dim(1, 1, 2, 3) == 2);
  CHECK(double_centralizer_dim(1, 1, 3, 3) == 6);
  CHECK(double_centralizer_dim(2, 0, 2, 3) == 2);
  CHECK(double_centralizer_dim(1, 2, 3, 3) == static_cast<int64_t>(endo_dim(1, 2, 3, 3)));
  CHECK(double_centralizer_dim(1, 1, 4, 3) == 20);
}

TEST_CASE("size guards") {
  CommutantConfig tiny;
  tiny.max_r = 2;
  CHECK_THROWS_AS(endo_dim(1, 1, 3, 3, tiny), schurw::SizeLimitError);
  CommutantConfig small;
  small.max_coords = 1;
  CHECK_THROWS_AS(endo_dim(1, 1, 3, 3, small), schurw::SizeLimitError);
  CommutantConfig dc;
  dc.max_r_double = 2;
  CHECK_THROWS_AS(double_centralizer_dim(1, 1, 3, 3, dc), schurw::SizeLimitError);
}
