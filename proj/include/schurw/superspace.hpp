#pragma once
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "schurw/partitions.hpp"
#include "schurw/permutation.hpp"
#include "schurw/sparse.hpp"

// The signed place-permutation action of the symmetric group on tensor
// powers of a Z/2-graded space with m even and n odd basis letters, and the
// induced algebra map Phi from the group algebra into the block-preserving
// endomorphisms.  Letters 0..m-1 are even, m..m+n-1 are odd.
namespace schurw::superspace {

using Word = std::vector<uint8_t>;

struct SizeConfig {
  int max_r = 7;
  int64_t max_words = 1'000'000;
  int64_t max_matrix_coords = 200'000;  // full stacked matrix width
  int max_r_kernel = 8;                 // per-block generator path
  size_t elim_nnz_limit = 220'000'000;
};

struct WeightBlock {
  combinatorics::BiComposition weight;
  std::vector<Word> words;  // ascending lexicographic
  int64_t word_offset = 0;  // start in the concatenated word layout
  int64_t mat_offset = 0;   // start in the concatenated (u,v) matrix layout
  int dim() const { return static_cast<int>(words.size()); }
  int64_t index_of(const Word& w) const;  // -1 if absent
};

struct BlockDecomposition {
  int m = 0, n = 0, r = 0;
  std::vector<WeightBlock> blocks;  // lexicographically decreasing weight
  int64_t total_words = 0;
  int64_t total_matrix_coords = 0;
  int block_of(const Word& w) const;
};

// #{k < l : s(k) > s(l), letters k and l both odd}
int sign_exponent(const Permutation& s, const Word& w, int m);
// out[s(i)] = w[i] with the sign above
std::pair<Word, int> act(const Permutation& s, const Word& w, int m);

bool word_is_valid(const Word& w, int m, int n);
int64_t count_words(int m, int n, int r);                       // (m+n)^r, throws on overflow
Int total_matrix_coords(int m, int n, int r);                   // sum of squared block sizes

BlockDecomposition weight_blocks(int m, int n, int r, const SizeConfig& cfg = {});

// column v of the block action of s: (row index, sign)
std::vector<std::pair<int32_t, int>> phi_block_map(const Permutation& s, const WeightBlock& b, int m);

// Row sigma (by Lehmer rank) = the block-diagonal matrix of sigma flattened
// block-major, row-major inside each block.  The left kernel is the kernel
// of the group-algebra action.
SparseIntMatrix phi_action_matrix_int(int m, int n, int r, const SizeConfig& cfg = {});
SparseFpMatrix phi_action_matrix_mod_p(int m, int n, int r, uint32_t p, const SizeConfig& cfg = {});

int64_t phi_rank_mod_p(int m, int n, int r, uint32_t p, const SizeConfig& cfg = {});
int64_t phi_rank_char0(int m, int n, int r, const SizeConfig& cfg = {});

// Canonical basis of {c : c * Phi = 0} over F_p, coordinates by Lehmer rank.
std::vector<FpRow> phi_left_kernel_basis(int m, int n, int r, uint32_t p, const SizeConfig& cfg = {});

// Dimension of the kernel of Phi on the group algebra over F_p, i.e.
// r! - rank(phi_action_matrix).  Uses the stacked matrix when it fits;
// otherwise works per block with one generator word per block and closes
// the resulting annihilator under right translation.
int64_t phi_kernel_dim(int m, int n, int r, uint32_t p, const SizeConfig& cfg = {});

// Largest r <= r_max with trivial kernel.  Throws ThresholdBeyondLimitError
// if the kernel is still trivial at r_max.
int max_faithful_r(int m, int n, uint32_t p, int r_max, const SizeConfig& cfg = {});

struct GroupAlgebraElement {
  int r = 0;
  std::vector<Int> coeffs;  // indexed by Lehmer rank, size r!

  static GroupAlgebraElement zero(int r);
  bool operator==(const GroupAlgebraElement&) const = default;
};

GroupAlgebraElement identity_element(int r);
GroupAlgebraElement skew_symmetrizer(int r);  // sum of sign(s) * s

// Image of x under the integral action, as a dense coordinate vector in the
// block-major matrix layout of the decomposition.
std::vector<Int> phi_apply_int(const BlockDecomposition& dec, const GroupAlgebraElement& x);

// one "rank:coefficient" line per nonzero term, ranks ascending
void write_element(std::ostream& os, const GroupAlgebraElement& x);
GroupAlgebraElement read_element(std::istream& is, int r);

}  // namespace schurw::superspace
