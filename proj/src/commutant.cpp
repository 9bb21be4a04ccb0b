#include "schurw/commutant.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "schurw/elim.hpp"
#include "schurw/errors.hpp"
#include "schurw/fp.hpp"
#include "schurw/partitions.hpp"
#include "schurw/permutation.hpp"

namespace schurw::commutant {

using superspace::Word;

int LieGenerator::src_letter() const {
  switch (kind) {
    case GenKind::EvenRaise:
      return i + 1;
    case GenKind::EvenLower:
      return i;
    case GenKind::OddRaise:
      return m;  // first odd letter
    case GenKind::OddLower:
      return m - 1;  // last even letter
  }
  return -1;
}

int LieGenerator::dst_letter() const {
  switch (kind) {
    case GenKind::EvenRaise:
      return i;
    case GenKind::EvenLower:
      return i + 1;
    case GenKind::OddRaise:
      return m - 1;
    case GenKind::OddLower:
      return m;
  }
  return -1;
}

std::vector<LieGenerator> chevalley_generators(int m, int n) {
  std::vector<LieGenerator> gens;
  for (int i = 0; i + 1 < m; ++i) {
    gens.push_back({GenKind::EvenRaise, i, m, n});
    gens.push_back({GenKind::EvenLower, i, m, n});
  }
  for (int i = 0; i + 1 < n; ++i) {
    gens.push_back({GenKind::EvenRaise, m + i, m, n});
    gens.push_back({GenKind::EvenLower, m + i, m, n});
  }
  if (m >= 1 && n >= 1) {
    gens.push_back({GenKind::OddRaise, 0, m, n});
    gens.push_back({GenKind::OddLower, 0, m, n});
  }
  return gens;
}

namespace {

int64_t plain_word_count(int m, int n, int r) {
  int64_t c = 1;
  for (int i = 0; i < r; ++i) {
    if (c > 2'000'000) throw SizeLimitError("word space too large");
    c *= (m + n);
  }
  return c;
}

int64_t plain_index(const Word& w, int base) {
  int64_t idx = 0;
  for (uint8_t c : w) idx = idx * base + c;
  return idx;
}

// images of one input word under g^(k): (output word, +-1), subsets of the
// src-letter slots enumerated in increasing lexicographic order
template <typename F>
void divided_power_images(const LieGenerator& g, int k, const Word& w, F&& emit) {
  int src = g.src_letter(), dst = g.dst_letter();
  std::vector<int> slots;
  for (size_t i = 0; i < w.size(); ++i)
    if (w[i] == src) slots.push_back(static_cast<int>(i));
  int t = static_cast<int>(slots.size());
  if (k > t) return;
  std::vector<int> pick(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<size_t>(i)] = i;
  for (;;) {
    Word u = w;
    int sgn = 1;
    for (int i = 0; i < k; ++i) {
      int slot = slots[static_cast<size_t>(pick[static_cast<size_t>(i)])];
      if (g.parity_changing()) {
        int odd_before = 0;
        for (int j = 0; j < slot; ++j)
          if (w[static_cast<size_t>(j)] >= g.m) odd_before++;
        if (odd_before % 2 == 1) sgn = -sgn;
      }
      u[static_cast<size_t>(slot)] = static_cast<uint8_t>(dst);
    }
    emit(u, sgn);
    // next k-combination
    int i = k - 1;
    while (i >= 0 && pick[static_cast<size_t>(i)] == t - k + i) --i;
    if (i < 0) break;
    pick[static_cast<size_t>(i)]++;
    for (int j = i + 1; j < k; ++j)
      pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
  }
}

void check_divided_power_args(const LieGenerator& g, int k) {
  if (k < 1) throw std::invalid_argument("divided power degree must be positive");
  if (g.parity_changing() && k != 1)
    throw std::invalid_argument("odd generators carry no higher divided powers");
}

template <typename Matrix, typename MakeVal>
Matrix divided_power_matrix(const LieGenerator& g, int k, int r, Matrix out, MakeVal make) {
  int base = g.m + g.n;
  Word w(static_cast<size_t>(r), 0);
  for (int64_t wi = 0;; ++wi) {
    divided_power_images(g, k, w, [&](const Word& u, int sgn) {
      out.rows[static_cast<size_t>(plain_index(u, base))].push_back(
          {static_cast<int32_t>(wi), make(sgn)});
    });
    int i = r - 1;
    while (i >= 0) {
      if (++w[static_cast<size_t>(i)] < base) break;
      w[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

}  // namespace

SparseIntMatrix divided_power_action_int(const LieGenerator& g, int k, int r) {
  check_divided_power_args(g, k);
  int64_t nw = plain_word_count(g.m, g.n, r);
  return divided_power_matrix(g, k, r, SparseIntMatrix::zero(nw, nw),
                              [](int sgn) { return Int(sgn); });
}

SparseFpMatrix divided_power_action_mod_p(const LieGenerator& g, int k, int r, uint32_t p) {
  check_divided_power_args(g, k);
  int64_t nw = plain_word_count(g.m, g.n, r);
  return divided_power_matrix(g, k, r, SparseFpMatrix::zero(p, nw, nw),
                              [p](int sgn) { return sgn > 0 ? uint32_t{1} : p - 1; });
}

namespace {

std::vector<int> block_flat_weight(const superspace::WeightBlock& b) {
  std::vector<int> f = b.weight.even;
  f.insert(f.end(), b.weight.odd.begin(), b.weight.odd.end());
  return f;
}

superspace::SizeConfig space_config(const CommutantConfig& cfg) {
  superspace::SizeConfig sc;
  sc.max_r = cfg.max_r;
  sc.max_r_kernel = cfg.max_r;
  sc.max_matrix_coords = cfg.max_coords;
  return sc;
}

}  // namespace

SparseFpMatrix commutant_equations_mod_p(int m, int n, int r, uint32_t p,
                                         const CommutantConfig& cfg) {
  if (r > cfg.max_r) throw SizeLimitError("tensor degree above configured limit");
  superspace::BlockDecomposition dec = superspace::weight_blocks(m, n, r, space_config(cfg));
  int64_t coords = dec.total_matrix_coords;
  if (coords > cfg.max_coords) throw SizeLimitError("block coordinate space too large");

  std::map<std::vector<int>, int> block_ix;
  for (size_t i = 0; i < dec.blocks.size(); ++i)
    block_ix[block_flat_weight(dec.blocks[i])] = static_cast<int>(i);

  SparseFpMatrix eqs = SparseFpMatrix::zero(p, 0, coords);
  for (const LieGenerator& g : chevalley_generators(m, n)) {
    int kmax = g.parity_changing() ? 1 : r;
    for (int k = 1; k <= kmax; ++k) {
      for (size_t bi = 0; bi < dec.blocks.size(); ++bi) {
        const auto& bsrc = dec.blocks[bi];
        std::vector<int> wt = block_flat_weight(bsrc);
        if (wt[static_cast<size_t>(g.src_letter())] < k) continue;
        wt[static_cast<size_t>(g.src_letter())] -= k;
        wt[static_cast<size_t>(g.dst_letter())] += k;
        const auto& bdst = dec.blocks[static_cast<size_t>(block_ix.at(wt))];
        int ds = bsrc.dim(), dt = bdst.dim();

        // columns of the restricted generator matrix, and its transpose
        std::vector<std::vector<std::pair<int32_t, uint32_t>>> gcol(static_cast<size_t>(ds));
        std::vector<std::vector<std::pair<int32_t, uint32_t>>> grow(static_cast<size_t>(dt));
        for (int v = 0; v < ds; ++v) {
          divided_power_images(g, k, bsrc.words[static_cast<size_t>(v)], [&](const Word& u, int sgn) {
            int32_t ui = static_cast<int32_t>(bdst.index_of(u));
            uint32_t val = sgn > 0 ? uint32_t{1} : p - 1;
            gcol[static_cast<size_t>(v)].push_back({ui, val});
            grow[static_cast<size_t>(ui)].push_back({static_cast<int32_t>(v), val});
          });
        }

        // (G X - X G)[u', v] = 0 as rows over the X coordinates
        for (int up = 0; up < dt; ++up) {
          for (int v = 0; v < ds; ++v) {
            FpRow row;
            for (const auto& [w, val] : grow[static_cast<size_t>(up)])
              row.push_back({static_cast<int32_t>(bsrc.mat_offset + static_cast<int64_t>(w) * ds + v), val});
            for (const auto& [w, val] : gcol[static_cast<size_t>(v)])
              row.push_back({static_cast<int32_t>(bdst.mat_offset + static_cast<int64_t>(up) * dt + w),
                             fp::neg(val, p)});
            if (row.empty()) continue;
            std::sort(row.begin(), row.end());
            // merge duplicate coordinates (possible only if src==dst blocks)
            FpRow merged;
            for (const auto& e : row) {
              if (!merged.empty() && merged.back().first == e.first) {
                merged.back().second = fp::add(merged.back().second, e.second, p);
                if (merged.back().second == 0) merged.pop_back();
              } else {
                merged.push_back(e);
              }
            }
            if (!merged.empty()) eqs.rows.push_back(std::move(merged));
          }
        }
      }
    }
  }
  eqs.nrows = static_cast<int64_t>(eqs.rows.size());
  return eqs;
}

unsigned long long endo_dim(int m, int n, int r, uint32_t char_p, const CommutantConfig& cfg) {
  if (char_p == 0) return combinatorics::dim_endo_char0(m, n, r);
  if (!fp::is_prime(char_p)) throw std::invalid_argument("characteristic must be 0 or prime");
  SparseFpMatrix eqs = commutant_equations_mod_p(m, n, r, char_p, cfg);
  int64_t rank = fp_rank(eqs, /*col_reorder=*/true);
  return static_cast<unsigned long long>(eqs.ncols - rank);
}

std::vector<FpRow> endo_basis(int m, int n, int r, uint32_t p, const CommutantConfig& cfg) {
  return fp_kernel_basis(commutant_equations_mod_p(m, n, r, p, cfg));
}

int64_t double_centralizer_dim(int m, int n, int r, uint32_t p, const CommutantConfig& cfg) {
  if (!fp::is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (r > cfg.max_r_double) throw SizeLimitError("tensor degree above configured limit");
  int64_t nw = plain_word_count(m, n, r);
  if (nw > cfg.max_dim_double) throw SizeLimitError("tensor space above configured limit");
  int64_t nn = nw * nw;

  superspace::SizeConfig sc = space_config(cfg);
  sc.max_r = std::max(sc.max_r, r);
  superspace::BlockDecomposition dec = superspace::weight_blocks(m, n, r, sc);
  int64_t coords = dec.total_matrix_coords;

  // plain word index -> (block, position) for the block coordinate layout
  std::vector<int32_t> blk(static_cast<size_t>(nw)), pos(static_cast<size_t>(nw));
  for (size_t bi = 0; bi < dec.blocks.size(); ++bi)
    for (size_t wi = 0; wi < dec.blocks[bi].words.size(); ++wi) {
      int64_t pidx = plain_index(dec.blocks[bi].words[wi], m + n);
      blk[static_cast<size_t>(pidx)] = static_cast<int32_t>(bi);
      pos[static_cast<size_t>(pidx)] = static_cast<int32_t>(wi);
    }

  // first commutant: Y with Phi(g) Y = Y Phi(g) for the group generators
  std::vector<Permutation> gens;
  if (r >= 2) gens.push_back(Permutation::transposition(r, 0, 1));
  if (r >= 3) gens.push_back(Permutation::forward_cycle(r));
  SparseFpMatrix stage1 = SparseFpMatrix::zero(p, 0, nn);
  Word w(static_cast<size_t>(r));
  for (const Permutation& g : gens) {
    std::vector<int64_t> img(static_cast<size_t>(nw));
    std::vector<uint32_t> sgn(static_cast<size_t>(nw));
    for (int64_t wi = 0; wi < nw; ++wi) {
      int64_t t = wi;
      for (int i = r - 1; i >= 0; --i) {
        w[static_cast<size_t>(i)] = static_cast<uint8_t>(t % (m + n));
        t /= (m + n);
      }
      auto [u, s] = superspace::act(g, w, m);
      img[static_cast<size_t>(wi)] = plain_index(u, m + n);
      sgn[static_cast<size_t>(wi)] = s > 0 ? 1 : p - 1;
    }
    std::vector<int64_t> pre(static_cast<size_t>(nw));  // g^{-1} as an index map
    for (int64_t wi = 0; wi < nw; ++wi) pre[static_cast<size_t>(img[static_cast<size_t>(wi)])] = wi;
    for (int64_t a = 0; a < nw; ++a) {
      int64_t pa = pre[static_cast<size_t>(a)];
      for (int64_t b = 0; b < nw; ++b) {
        // sgn(pa) Y[pa, b] - sgn(b) Y[a, img b] = 0
        FpRow row;
        int64_t c1 = pa * nw + b, c2 = a * nw + img[static_cast<size_t>(b)];
        uint32_t v1 = sgn[static_cast<size_t>(pa)], v2 = fp::neg(sgn[static_cast<size_t>(b)], p);
        if (c1 == c2) {
          uint32_t v = fp::add(v1, v2, p);
          if (v != 0) row.push_back({static_cast<int32_t>(c1), v});
        } else if (c1 < c2) {
          row.push_back({static_cast<int32_t>(c1), v1});
          row.push_back({static_cast<int32_t>(c2), v2});
        } else {
          row.push_back({static_cast<int32_t>(c2), v2});
          row.push_back({static_cast<int32_t>(c1), v1});
        }
        if (!row.empty()) stage1.rows.push_back(std::move(row));
      }
    }
  }
  stage1.nrows = static_cast<int64_t>(stage1.rows.size());
  std::vector<FpRow> c1 = fp_kernel_basis(stage1);

  // second commutant, restricted to block-preserving endomorphisms
  FpEchelon ech(p, coords);
  std::vector<std::vector<std::pair<int32_t, uint32_t>>> yrow(static_cast<size_t>(nw));
  std::vector<std::vector<std::pair<int32_t, uint32_t>>> ycol(static_cast<size_t>(nw));
  for (const FpRow& y : c1) {
    for (auto& v : yrow) v.clear();
    for (auto& v : ycol) v.clear();
    for (const auto& [cidx, val] : y) {
      int64_t a = cidx / nw, c = cidx % nw;
      yrow[static_cast<size_t>(a)].push_back({static_cast<int32_t>(c), val});
      ycol[static_cast<size_t>(c)].push_back({static_cast<int32_t>(a), val});
    }
    for (int64_t a = 0; a < nw; ++a) {
      bool ra = !yrow[static_cast<size_t>(a)].empty();
      for (int64_t b = 0; b < nw; ++b) {
        if (!ra && ycol[static_cast<size_t>(b)].empty()) continue;
        // (Y X - X Y)[a, b] = 0 over block coordinates of X
        FpRow row;
        for (const auto& [c, val] : yrow[static_cast<size_t>(a)]) {
          if (blk[static_cast<size_t>(c)] != blk[static_cast<size_t>(b)]) continue;
          const auto& bb = dec.blocks[static_cast<size_t>(blk[static_cast<size_t>(c)])];
          row.push_back({static_cast<int32_t>(bb.mat_offset +
                             static_cast<int64_t>(pos[static_cast<size_t>(c)]) * bb.dim() +
                             pos[static_cast<size_t>(b)]),
                         val});
        }
        for (const auto& [c, val] : ycol[static_cast<size_t>(b)]) {
          if (blk[static_cast<size_t>(a)] != blk[static_cast<size_t>(c)]) continue;
          const auto& bb = dec.blocks[static_cast<size_t>(blk[static_cast<size_t>(a)])];
          row.push_back({static_cast<int32_t>(bb.mat_offset +
                             static_cast<int64_t>(pos[static_cast<size_t>(a)]) * bb.dim() +
                             pos[static_cast<size_t>(c)]),
                         fp::neg(val, p)});
        }
        if (row.empty()) continue;
        std::sort(row.begin(), row.end());
        FpRow merged;
        for (const auto& e : row) {
          if (!merged.empty() && merged.back().first == e.first) {
            merged.back().second = fp::add(merged.back().second, e.second, p);
            if (merged.back().second == 0) merged.pop_back();
          } else {
            merged.push_back(e);
          }
        }
        if (!merged.empty()) ech.insert(merged);
      }
    }
  }
  return coords - ech.rank();
}

}  // namespace schurw::commutant
