#pragma once
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "schurw/bigint.hpp"

namespace schurw {

// Row-major sparse storage.  Within a row, entries are sorted by column and
// carry nonzero values.  Row and column counts are explicit so that empty
// trailing rows/columns survive serialization.
using IntRow = std::vector<std::pair<int32_t, Int>>;
using FpRow = std::vector<std::pair<int32_t, uint32_t>>;

struct SparseIntMatrix {
  int64_t nrows = 0;
  int64_t ncols = 0;
  std::vector<IntRow> rows;

  static SparseIntMatrix zero(int64_t r, int64_t c) {
    SparseIntMatrix m;
    m.nrows = r;
    m.ncols = c;
    m.rows.assign(static_cast<size_t>(r), {});
    return m;
  }
  void set(int64_t r, int64_t c, Int v);  // append-or-replace, keeps order
  Int get(int64_t r, int64_t c) const;
  size_t nnz() const;
  bool operator==(const SparseIntMatrix&) const = default;
};

struct SparseFpMatrix {
  uint32_t p = 0;
  int64_t nrows = 0;
  int64_t ncols = 0;
  std::vector<FpRow> rows;

  static SparseFpMatrix zero(uint32_t p, int64_t r, int64_t c) {
    SparseFpMatrix m;
    m.p = p;
    m.nrows = r;
    m.ncols = c;
    m.rows.assign(static_cast<size_t>(r), {});
    return m;
  }
  size_t nnz() const;
};

SparseFpMatrix reduce_mod_p(const SparseIntMatrix& m, uint32_t p);
SparseIntMatrix transpose(const SparseIntMatrix& m);
SparseFpMatrix transpose(const SparseFpMatrix& m);

// MatrixMarket coordinate integer format, 1-based indices, entries sorted
// row-major.  An optional "% modulus=p" comment records the prime for
// residue matrices.
void write_matrix_market(std::ostream& os, const SparseIntMatrix& m, uint32_t modulus = 0);
SparseIntMatrix read_matrix_market(std::istream& is, uint32_t* modulus_out = nullptr);

}  // namespace schurw
