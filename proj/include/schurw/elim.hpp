#pragma once
#include <cstdint>
#include <vector>

#include "schurw/sparse.hpp"

namespace schurw {

// Incremental row echelon accumulator over F_p.
//
// Stored rows keep their pivot as the leftmost entry with coefficient 1;
// entries to the right of a pivot are not reduced against later pivots
// unless finalize_rref() is called.  Inserting reduces the candidate left
// to right, so the pop order of touched columns is monotone and each
// insert terminates after one sweep.
class FpEchelon {
 public:
  FpEchelon(uint32_t p, int64_t ncols);

  // Reduce v against the echelon; if a nonzero remainder exists, adjoin it
  // as a new row and return true.
  bool insert(const FpRow& v);

  // Remainder of v after reduction; does not modify the echelon.
  FpRow reduce(const FpRow& v);

  int64_t rank() const { return static_cast<int64_t>(rows_.size()); }
  int64_t ncols() const { return ncols_; }
  uint32_t modulus() const { return p_; }
  size_t stored_nnz() const { return stored_nnz_; }

  // Also reduce entries above each pivot, making every pivot column a unit
  // column.  After this the row set is the canonical reduced echelon basis
  // of the row space.
  void finalize_rref();

  const std::vector<FpRow>& rows() const { return rows_; }
  // Pivot column of stored row i.
  const std::vector<int32_t>& pivots() const { return pivots_; }
  int32_t pivot_row_of_col(int32_t c) const { return pivot_of_col_[static_cast<size_t>(c)]; }

  // Abort with SizeLimitError if stored entries exceed this bound.
  void set_nnz_limit(size_t limit) { nnz_limit_ = limit; }

 private:
  FpRow sweep(const FpRow& v, bool adjoin);

  uint32_t p_;
  int64_t ncols_;
  std::vector<FpRow> rows_;
  std::vector<int32_t> pivots_;
  std::vector<int32_t> pivot_of_col_;
  size_t stored_nnz_ = 0;
  size_t nnz_limit_;

  // scratch for sweep(): value + generation stamps and a column min-heap
  std::vector<uint32_t> val_;
  std::vector<uint32_t> stamp_;
  std::vector<uint32_t> inheap_;
  std::vector<int32_t> heap_;
  uint32_t epoch_ = 0;
};

// Rank of a sparse matrix over F_p.  With col_reorder the columns are
// processed sparsest first (Markowitz-style static ordering, ties by
// lowest column index); the result is order-independent.
int64_t fp_rank(const SparseFpMatrix& m, bool col_reorder = false);

// Canonical basis of the right kernel {x : m x = 0}, derived from the
// reduced row echelon form: one vector per free column, unit at the free
// column, sorted by free column index.
std::vector<FpRow> fp_kernel_basis(const SparseFpMatrix& m);

// Right kernel through a sparsest-first column order; basis is a valid
// kernel basis but not the RREF-canonical one.
std::vector<FpRow> fp_kernel_basis_fast(const SparseFpMatrix& m, size_t nnz_limit);

}  // namespace schurw
