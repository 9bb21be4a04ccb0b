#pragma once
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "schurw/commutant.hpp"
#include "schurw/exact.hpp"
#include "schurw/superspace.hpp"

// The integral image lattice of the group algebra inside the block
// endomorphism ring, and its p-saturation.
namespace schurw::latticesat {

struct SigmaLattice {
  int m = 0, n = 0, r = 0;
  uint32_t p = 0;
  exact::LatticeBasis image_basis;      // Hermite basis of the integral image
  exact::LatticeBasis saturated_basis;  // its p-saturation
};

SigmaLattice build_sigma(int m, int n, int r, uint32_t p,
                         const superspace::SizeConfig& cfg = {});

// rank of the saturated lattice
int64_t sigma_dim(const SigmaLattice& s);

// p^e = index of the image in its saturation
int saturation_index_log_p(const SigmaLattice& s);

// whether dim End mod p equals the characteristic-zero dimension
bool phi_tilde_is_iso(int m, int n, int r, uint32_t p, const commutant::CommutantConfig& cfg = {});

// Does the image lattice together with image(x)/p^e for each extra (x, e)
// span exactly the saturated lattice?  Throws DivisibilityFailureError if
// some image(x) is not divisible by p^e.
bool verify_generators(const SigmaLattice& s,
                       const std::vector<std::pair<superspace::GroupAlgebraElement, int>>& extras,
                       const superspace::SizeConfig& cfg = {});

// Largest e with p^e dividing every coordinate of the integral image of x;
// throws ZeroImageError when the image vanishes.
int divisibility_exponent(int m, int n, int r, const superspace::GroupAlgebraElement& x,
                          uint32_t p, const superspace::SizeConfig& cfg = {});

// parameter line, then the two lattice blocks
void write_sigma(std::ostream& os, const SigmaLattice& s);
SigmaLattice read_sigma(std::istream& is);

}  // namespace schurw::latticesat
