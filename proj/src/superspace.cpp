#include "schurw/superspace.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "schurw/elim.hpp"
#include "schurw/errors.hpp"
#include "schurw/exact.hpp"
#include "schurw/fp.hpp"

namespace schurw::superspace {

namespace {

std::vector<int> flat_weight(const Word& w, int m, int n) {
  std::vector<int> f(static_cast<size_t>(m + n), 0);
  for (uint8_t c : w) f[c]++;
  return f;
}

void check_space(int m, int n, int r) {
  if (m < 0 || n < 0 || m + n < 1) throw std::invalid_argument("need m,n >= 0 and m+n >= 1");
  if (r < 0) throw std::invalid_argument("need r >= 0");
}

}  // namespace

int64_t WeightBlock::index_of(const Word& w) const {
  auto it = std::lower_bound(words.begin(), words.end(), w);
  if (it == words.end() || *it != w) return -1;
  return it - words.begin();
}

int BlockDecomposition::block_of(const Word& w) const {
  std::vector<int> f = flat_weight(w, m, n);
  for (size_t i = 0; i < blocks.size(); ++i) {
    std::vector<int> g = blocks[i].weight.even;
    g.insert(g.end(), blocks[i].weight.odd.begin(), blocks[i].weight.odd.end());
    if (g == f) return static_cast<int>(i);
  }
  return -1;
}

int sign_exponent(const Permutation& s, const Word& w, int m) {
  int r = static_cast<int>(w.size());
  std::vector<int> odd_pos;
  for (int k = 0; k < r; ++k)
    if (w[static_cast<size_t>(k)] >= m) odd_pos.push_back(k);
  int e = 0;
  for (size_t a = 0; a < odd_pos.size(); ++a)
    for (size_t b = a + 1; b < odd_pos.size(); ++b)
      if (s(odd_pos[a]) > s(odd_pos[b])) e++;
  return e;
}

std::pair<Word, int> act(const Permutation& s, const Word& w, int m) {
  int r = static_cast<int>(w.size());
  Word out(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) out[s(i)] = w[static_cast<size_t>(i)];
  int sgn = (sign_exponent(s, w, m) % 2 == 0) ? 1 : -1;
  return {out, sgn};
}

bool word_is_valid(const Word& w, int m, int n) {
  for (uint8_t c : w)
    if (c >= m + n) return false;
  return true;
}

int64_t count_words(int m, int n, int r) {
  check_space(m, n, r);
  int64_t w = 1;
  for (int i = 0; i < r; ++i) {
    if (w > (int64_t{1} << 40)) throw SizeLimitError("word space too large");
    w *= (m + n);
  }
  return w;
}

Int total_matrix_coords(int m, int n, int r) {
  check_space(m, n, r);
  Int fact = 1;
  for (int i = 2; i <= r; ++i) fact *= i;
  Int total = 0;
  for (const auto& b : combinatorics::enumerate_bicompositions(m, n, r)) {
    Int d = fact;
    for (int part : b.even)
      for (int i = 2; i <= part; ++i) d /= i;
    for (int part : b.odd)
      for (int i = 2; i <= part; ++i) d /= i;
    total += d * d;
  }
  return total;
}

BlockDecomposition weight_blocks(int m, int n, int r, const SizeConfig& cfg) {
  check_space(m, n, r);
  if (r > std::max(cfg.max_r, cfg.max_r_kernel))
    throw SizeLimitError("tensor degree above configured limit");
  int64_t nwords = count_words(m, n, r);
  if (nwords > cfg.max_words) throw SizeLimitError("word space above configured limit");

  std::map<std::vector<int>, std::vector<Word>> buckets;
  Word cur(static_cast<size_t>(r), 0);
  for (int64_t t = 0;; ++t) {
    buckets[flat_weight(cur, m, n)].push_back(cur);
    // odometer, last letter least significant: ascending lexicographic
    int i = r - 1;
    while (i >= 0) {
      if (++cur[static_cast<size_t>(i)] < m + n) break;
      cur[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
  }

  BlockDecomposition dec;
  dec.m = m;
  dec.n = n;
  dec.r = r;
  dec.total_words = nwords;
  int64_t woff = 0, moff = 0;
  for (auto it = buckets.rbegin(); it != buckets.rend(); ++it) {  // descending weight
    WeightBlock b;
    b.weight.even.assign(it->first.begin(), it->first.begin() + m);
    b.weight.odd.assign(it->first.begin() + m, it->first.end());
    b.words = std::move(it->second);
    b.word_offset = woff;
    b.mat_offset = moff;
    woff += b.dim();
    moff += static_cast<int64_t>(b.dim()) * b.dim();
    dec.blocks.push_back(std::move(b));
  }
  dec.total_matrix_coords = moff;
  return dec;
}

std::vector<std::pair<int32_t, int>> phi_block_map(const Permutation& s, const WeightBlock& b,
                                                   int m) {
  std::vector<std::pair<int32_t, int>> col(static_cast<size_t>(b.dim()));
  for (int v = 0; v < b.dim(); ++v) {
    auto [u, sgn] = act(s, b.words[static_cast<size_t>(v)], m);
    int64_t ui = b.index_of(u);
    if (ui < 0) throw std::logic_error("action left the weight block");
    col[static_cast<size_t>(v)] = {static_cast<int32_t>(ui), sgn};
  }
  return col;
}

namespace {

// stacked matrix guard: rows r!, row nnz = total words
void check_stacked(int m, int n, int r, const SizeConfig& cfg, int64_t* fact_out,
                   int64_t* coords_out) {
  if (r > cfg.max_r) throw SizeLimitError("tensor degree above configured limit");
  int64_t fact = static_cast<int64_t>(factorial(r));
  int64_t nwords = count_words(m, n, r);
  Int coords = total_matrix_coords(m, n, r);
  if (coords > cfg.max_matrix_coords) throw SizeLimitError("matrix coordinate space too large");
  if (nwords > cfg.max_words) throw SizeLimitError("word space above configured limit");
  if (fact * nwords > 20'000'000) throw SizeLimitError("stacked action matrix too large");
  *fact_out = fact;
  *coords_out = coords.convert_to<int64_t>();
}

template <typename Row, typename Value>
void fill_action_row(const BlockDecomposition& dec, const Permutation& s, Row& row, Value plus,
                     Value minus) {
  for (const auto& b : dec.blocks) {
    size_t base = row.size();
    for (int v = 0; v < b.dim(); ++v) {
      auto [u, sgn] = act(s, b.words[static_cast<size_t>(v)], dec.m);
      int64_t ui = b.index_of(u);
      row.push_back({static_cast<int32_t>(b.mat_offset + ui * b.dim() + v), sgn > 0 ? plus : minus});
    }
    std::sort(row.begin() + base, row.end(),
              [](const auto& a, const auto& c) { return a.first < c.first; });
  }
}

}  // namespace

SparseIntMatrix phi_action_matrix_int(int m, int n, int r, const SizeConfig& cfg) {
  int64_t fact = 0, coords = 0;
  check_stacked(m, n, r, cfg, &fact, &coords);
  BlockDecomposition dec = weight_blocks(m, n, r, cfg);
  SparseIntMatrix out = SparseIntMatrix::zero(fact, coords);
  for (int64_t s = 0; s < fact; ++s) {
    Permutation perm = Permutation::from_rank(r, static_cast<uint64_t>(s));
    fill_action_row(dec, perm, out.rows[static_cast<size_t>(s)], Int(1), Int(-1));
  }
  return out;
}

SparseFpMatrix phi_action_matrix_mod_p(int m, int n, int r, uint32_t p, const SizeConfig& cfg) {
  if (p < 2) throw std::invalid_argument("modulus must be at least 2");
  int64_t fact = 0, coords = 0;
  check_stacked(m, n, r, cfg, &fact, &coords);
  BlockDecomposition dec = weight_blocks(m, n, r, cfg);
  SparseFpMatrix out = SparseFpMatrix::zero(p, fact, coords);
  for (int64_t s = 0; s < fact; ++s) {
    Permutation perm = Permutation::from_rank(r, static_cast<uint64_t>(s));
    fill_action_row(dec, perm, out.rows[static_cast<size_t>(s)], uint32_t{1}, p - 1);
  }
  return out;
}

int64_t phi_rank_mod_p(int m, int n, int r, uint32_t p, const SizeConfig& cfg) {
  if (r == 0) return 1;  // one permutation acting on the empty word
  return fp_rank(phi_action_matrix_mod_p(m, n, r, p, cfg), /*col_reorder=*/true);
}

int64_t phi_rank_char0(int m, int n, int r, const SizeConfig& cfg) {
  if (r == 0) return 1;
  exact::Limits lim;
  lim.max_rank_rows = int64_t{1} << 40;
  lim.max_rank_cols = int64_t{1} << 40;
  return exact::rank_char0(phi_action_matrix_int(m, n, r, cfg), lim);
}

std::vector<FpRow> phi_left_kernel_basis(int m, int n, int r, uint32_t p, const SizeConfig& cfg) {
  SparseFpMatrix mat = phi_action_matrix_mod_p(m, n, r, p, cfg);
  return fp_kernel_basis(transpose(mat));
}

namespace {

// Composition table s -> rank(s * g), acting left to right through ranks.
std::vector<uint32_t> right_translation_table(int r, const Permutation& g) {
  uint64_t fact = factorial(r);
  std::vector<uint32_t> table(static_cast<size_t>(fact));
  for (uint64_t s = 0; s < fact; ++s)
    table[static_cast<size_t>(s)] =
        static_cast<uint32_t>(Permutation::from_rank(r, s).compose(g).rank());
  return table;
}

FpRow translate_row(const FpRow& v, const std::vector<uint32_t>& table) {
  FpRow out;
  out.reserve(v.size());
  for (const auto& [c, x] : v) out.push_back({static_cast<int32_t>(table[static_cast<size_t>(c)]), x});
  std::sort(out.begin(), out.end());
  return out;
}

// Exact integer image of the skew symmetrizer on one probe word per block,
// reduced mod p.  skew * g = sgn(g) * skew, so the image of g*w is the image
// of w up to sign and vanishing on one word kills its whole block; blocks
// with the same multiplicities up to parity-respecting relabeling are
// isomorphic, so one representative per shape suffices.  Blocks that spread
// letters most evenly are checked first: they are the last to cancel, which
// makes the common refutation case cheap.
bool skew_annihilates_mod_p(int m, int n, int r, uint32_t p, const SizeConfig& cfg) {
  if (r < 2 || r > cfg.max_r_kernel) return false;
  if (count_words(m, n, r) > cfg.max_words) return false;
  BlockDecomposition dec = weight_blocks(m, n, r, cfg);
  const int64_t fact = static_cast<int64_t>(factorial(r));

  std::vector<const WeightBlock*> reps;
  {
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    for (const auto& b : dec.blocks) {
      auto ev = b.weight.even;
      auto od = b.weight.odd;
      std::sort(ev.begin(), ev.end());
      std::sort(od.begin(), od.end());
      if (seen.insert({std::move(ev), std::move(od)}).second) reps.push_back(&b);
    }
  }
  auto spread = [](const WeightBlock* b) {
    int64_t s2 = 0;
    for (int k : b->weight.even) s2 += int64_t{k} * k;
    for (int k : b->weight.odd) s2 += int64_t{k} * k;
    return s2;
  };
  std::sort(reps.begin(), reps.end(),
            [&](const WeightBlock* a, const WeightBlock* b) { return spread(a) < spread(b); });

  std::vector<Permutation> perms;
  std::vector<int> signs;
  perms.reserve(static_cast<size_t>(fact));
  signs.reserve(static_cast<size_t>(fact));
  for (int64_t s = 0; s < fact; ++s) {
    perms.push_back(Permutation::from_rank(r, static_cast<uint64_t>(s)));
    signs.push_back(perms.back().sign());
  }

  std::vector<int64_t> coeff;
  for (const WeightBlock* b : reps) {
    coeff.assign(static_cast<size_t>(b->dim()), 0);
    for (int64_t s = 0; s < fact; ++s) {
      auto [u, sgn] = act(perms[static_cast<size_t>(s)], b->words[0], m);
      coeff[static_cast<size_t>(b->index_of(u))] += signs[static_cast<size_t>(s)] * sgn;
    }
    for (int64_t c : coeff)
      if (c % static_cast<int64_t>(p) != 0) return false;
  }
  return true;
}

}  // namespace

int64_t phi_kernel_dim(int m, int n, int r, uint32_t p, const SizeConfig& cfg) {
  if (p < 2 || !fp::is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (r == 0) return 0;
  if (r <= cfg.max_r && count_words(m, n, r) <= cfg.max_words &&
      total_matrix_coords(m, n, r) <= cfg.max_matrix_coords &&
      static_cast<int64_t>(factorial(r)) * count_words(m, n, r) <= 20'000'000) {
    return static_cast<int64_t>(factorial(r)) - phi_rank_mod_p(m, n, r, p, cfg);
  }

  if (r > cfg.max_r_kernel) throw SizeLimitError("tensor degree above configured limit");
  BlockDecomposition dec = weight_blocks(m, n, r, cfg);
  int64_t fact = static_cast<int64_t>(factorial(r));

  // Constraint rows of one generator word per block (columns sigma, one row
  // per image word), then the row space is closed under right translation:
  // translating the constraints of a word gives the constraints of the
  // translated word, and each block is a single orbit, so the closed space
  // is spanned by the constraints of every word.  The kernel of the
  // group-algebra action is its annihilator, of dimension r! - rank.
  //
  // Two isomorphic blocks have the same annihilator, and relabeling letters
  // within a parity is an isomorphism that respects the sign rule, so one
  // representative per sorted multiplicity pattern suffices.
  std::vector<const WeightBlock*> reps;
  {
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    for (const auto& b : dec.blocks) {
      auto ev = b.weight.even;
      auto od = b.weight.odd;
      std::sort(ev.begin(), ev.end());
      std::sort(od.begin(), od.end());
      if (seen.insert({std::move(ev), std::move(od)}).second) reps.push_back(&b);
    }
  }

  // The row space reduces an integer row space, so its rank never exceeds
  // the rational rank, which the hook dimension sum computes; hitting that
  // bound pins the kernel dimension with no further work.
  const int64_t rank_bound = static_cast<int64_t>(combinatorics::dim_endo_char0(m, n, r));

  std::vector<std::vector<FpRow>> brows(reps.size());
  for (size_t bi = 0; bi < reps.size(); ++bi)
    brows[bi].assign(static_cast<size_t>(reps[bi]->dim()), FpRow{});
  for (int64_t s = 0; s < fact; ++s) {
    Permutation perm = Permutation::from_rank(r, static_cast<uint64_t>(s));
    for (size_t bi = 0; bi < reps.size(); ++bi) {
      const auto& b = *reps[bi];
      auto [u, sgn] = act(perm, b.words[0], m);
      brows[bi][static_cast<size_t>(b.index_of(u))].push_back(
          {static_cast<int32_t>(s), sgn > 0 ? uint32_t{1} : p - 1});
    }
  }
  std::vector<FpRow> init;
  for (auto& rows : brows)
    for (auto& v : rows)
      if (!v.empty()) init.push_back(std::move(v));
  brows.clear();
  std::sort(init.begin(), init.end(),
            [](const FpRow& a, const FpRow& b) { return a.size() < b.size(); });

  FpEchelon ech(p, fact);
  ech.set_nnz_limit(cfg.elim_nnz_limit);
  for (auto& v : init) {
    ech.insert(v);
    if (ech.rank() == rank_bound) return fact - rank_bound;
  }
  init.clear();
  init.shrink_to_fit();

  if (r >= 2) {
    std::vector<std::vector<uint32_t>> tables;
    tables.push_back(right_translation_table(r, Permutation::transposition(r, 0, 1)));
    if (r > 2) tables.push_back(right_translation_table(r, Permutation::forward_cycle(r)));
    // every stored row is translated exactly once, sparsest first; new pivot
    // rows join the queue as they appear
    using Item = std::pair<size_t, size_t>;  // (nnz, row index)
    std::priority_queue<Item, std::vector<Item>, std::greater<>> work;
    size_t enqueued = 0;
    auto sync = [&] {
      for (; enqueued < ech.rows().size(); ++enqueued)
        work.push({ech.rows()[enqueued].size(), enqueued});
    };
    sync();
    while (!work.empty()) {
      size_t i = work.top().second;
      work.pop();
      for (const auto& tab : tables) ech.insert(translate_row(ech.rows()[i], tab));
      if (ech.rank() == rank_bound) return fact - rank_bound;
      sync();
    }
  }
  return fact - ech.rank();
}

int max_faithful_r(int m, int n, uint32_t p, int r_max, const SizeConfig& cfg) {
  check_space(m, n, 0);
  if (p < 2 || !fp::is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (r_max < 1) throw std::invalid_argument("need r_max >= 1");
  for (int r = 1; r <= r_max; ++r) {
    // the skew symmetrizer is a nonzero element with +-1 coefficients, so a
    // verified zero image certifies a nontrivial kernel without the full rank
    if (skew_annihilates_mod_p(m, n, r, p, cfg)) return r - 1;
    if (phi_kernel_dim(m, n, r, p, cfg) > 0) return r - 1;
  }
  throw ThresholdBeyondLimitError("action still faithful at degree " + std::to_string(r_max));
}

GroupAlgebraElement GroupAlgebraElement::zero(int r) {
  GroupAlgebraElement x;
  x.r = r;
  x.coeffs.assign(static_cast<size_t>(factorial(r)), Int(0));
  return x;
}

GroupAlgebraElement identity_element(int r) {
  GroupAlgebraElement x = GroupAlgebraElement::zero(r);
  x.coeffs[0] = 1;
  return x;
}

GroupAlgebraElement skew_symmetrizer(int r) {
  if (r > 10) throw SizeLimitError("group algebra element too large");
  GroupAlgebraElement x = GroupAlgebraElement::zero(r);
  for (uint64_t s = 0; s < factorial(r); ++s)
    x.coeffs[static_cast<size_t>(s)] = Permutation::from_rank(r, s).sign();
  return x;
}

std::vector<Int> phi_apply_int(const BlockDecomposition& dec, const GroupAlgebraElement& x) {
  if (x.r != dec.r) throw std::invalid_argument("degree mismatch");
  if (dec.total_matrix_coords > 2'000'000) throw SizeLimitError("image coordinate space too large");
  std::vector<Int> out(static_cast<size_t>(dec.total_matrix_coords), Int(0));
  for (uint64_t s = 0; s < x.coeffs.size(); ++s) {
    const Int& c = x.coeffs[static_cast<size_t>(s)];
    if (c == 0) continue;
    Permutation perm = Permutation::from_rank(dec.r, s);
    for (const auto& b : dec.blocks) {
      for (int v = 0; v < b.dim(); ++v) {
        auto [u, sgn] = act(perm, b.words[static_cast<size_t>(v)], dec.m);
        int64_t idx = b.mat_offset + b.index_of(u) * b.dim() + v;
        if (sgn > 0)
          out[static_cast<size_t>(idx)] += c;
        else
          out[static_cast<size_t>(idx)] -= c;
      }
    }
  }
  return out;
}

void write_element(std::ostream& os, const GroupAlgebraElement& x) {
  for (size_t s = 0; s < x.coeffs.size(); ++s)
    if (x.coeffs[s] != 0) os << s << ":" << x.coeffs[s] << "\n";
}

GroupAlgebraElement read_element(std::istream& is, int r) {
  GroupAlgebraElement x = GroupAlgebraElement::zero(r);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '%' || line[0] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw std::runtime_error("bad term line: " + line);
    uint64_t rank = std::stoull(line.substr(0, colon));
    if (rank >= x.coeffs.size()) throw std::runtime_error("term rank out of range");
    Int c;
    std::istringstream val(line.substr(colon + 1));
    val >> c;
    if (val.fail()) throw std::runtime_error("bad coefficient: " + line);
    x.coeffs[static_cast<size_t>(rank)] = c;
  }
  return x;
}

}  // namespace schurw::superspace
