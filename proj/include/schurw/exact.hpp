#pragma once
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "schurw/sparse.hpp"

// Exact integer linear algebra: ranks over F_p and over Q, Hermite row
// bases of integer lattices, p-saturation and p-power lattice indices.
namespace schurw::exact {

// Canonical Hermite basis of a row lattice in Z^ambient_dim.  Rows are
// sorted by pivot column, pivots are positive, and every entry above a
// pivot lies in [0, pivot).  Two equal lattices produce identical objects.
struct LatticeBasis {
  int64_t ambient_dim = 0;
  std::vector<IntRow> rows;
  std::vector<int32_t> pivots;

  int64_t rank() const { return static_cast<int64_t>(rows.size()); }
  bool operator==(const LatticeBasis&) const = default;
};

struct Limits {
  int64_t max_hnf_cols = 50'000;
  int64_t max_rank_rows = 10'000;
  int64_t max_rank_cols = 10'000;
};

int64_t rank_mod_p(const SparseIntMatrix& m, uint32_t p, const Limits& lim = {});

// Canonical right-kernel basis of m over F_p (reduced echelon convention:
// one vector per free column with unit coordinate there).
std::vector<FpRow> kernel_basis_mod_p(const SparseIntMatrix& m, uint32_t p, const Limits& lim = {});

LatticeBasis hnf_row_basis(const SparseIntMatrix& m, const Limits& lim = {});

// Rank over Q.  Certified by agreement of ranks modulo two fixed primes
// above 2^30; on disagreement falls back to fraction-free elimination.
int64_t rank_char0(const SparseIntMatrix& m, const Limits& lim = {});

// Smallest lattice L' >= L with p-power index such that L' = {v : p^k v in L
// for some k} intersected with the rational span of L.  Iterates mod-p
// kernel lifting until reduction mod p has full rank.
LatticeBasis p_saturate(const LatticeBasis& L, uint32_t p);

// e with [sup : sub] = p^e.  Throws NotASublatticeError if sub is not
// contained in sup, IndexNotPPowerError if the index is infinite or has a
// factor prime to p.
int lattice_index_log_p(const LatticeBasis& sup, const LatticeBasis& sub, uint32_t p);

// Coefficients expressing v in the Hermite basis; throws NotASublatticeError
// if v is outside the lattice.
std::vector<Int> membership_coeffs(const LatticeBasis& L, const IntRow& v);
bool contains(const LatticeBasis& L, const IntRow& v);

Int bareiss_det(std::vector<std::vector<Int>> a);
int64_t bareiss_rank(std::vector<std::vector<Int>> a);

// Serialization: a single "ambient_dim=D" line followed by the rows as a
// MatrixMarket block.
void write_lattice(std::ostream& os, const LatticeBasis& L);
LatticeBasis read_lattice(std::istream& is);

// a - q*b on sorted sparse integer rows
IntRow row_sub_mul(const IntRow& a, const Int& q, const IntRow& b);

}  // namespace schurw::exact
