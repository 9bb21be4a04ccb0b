#pragma once
#include <cstdint>
#include <vector>

#include "schurw/sparse.hpp"
#include "schurw/superspace.hpp"

// The equivariant endomorphism algebra of tensor superspace, computed as
// the commutant of divided powers of the Chevalley generators (even simple
// root vectors with all divided powers, the two odd simple generators in
// degree one; torus invariance is imposed structurally by restricting to
// block-preserving endomorphisms).
namespace schurw::commutant {

enum class GenKind { EvenRaise, EvenLower, OddRaise, OddLower };

struct LieGenerator {
  GenKind kind = GenKind::EvenRaise;
  int i = 0;  // simple-root index within the even or odd letter block
  int m = 0;
  int n = 0;

  int src_letter() const;  // letter the generator consumes
  int dst_letter() const;  // letter it produces
  bool parity_changing() const {
    return kind == GenKind::OddRaise || kind == GenKind::OddLower;
  }
};

// Raising and lowering operators for the simple roots of gl(m), gl(n),
// plus the two odd generators joining the blocks (when m, n >= 1).
std::vector<LieGenerator> chevalley_generators(int m, int n);

struct CommutantConfig {
  int max_r = 6;
  int64_t max_coords = 200'000;    // block coordinate count for endo_dim
  int max_r_double = 5;            // double centralizer works in the full
  int64_t max_dim_double = 250;    // endomorphism space of (m+n)^r
};

// Matrix of g^(k) = g^k / k! on the full word space (plain base-(m+n) word
// indexing, entry (output word, input word)).  Computed integrally as the
// sum over k-element slot subsets; Koszul signs for the odd generators.
// k > r gives the zero matrix; odd generators require k = 1.
SparseIntMatrix divided_power_action_int(const LieGenerator& g, int k, int r);
SparseFpMatrix divided_power_action_mod_p(const LieGenerator& g, int k, int r, uint32_t p);

// Stacked linear system in block coordinates whose kernel is the commutant:
// rows are the entries of g^(k) X - X g^(k) over all generators and degrees.
SparseFpMatrix commutant_equations_mod_p(int m, int n, int r, uint32_t p,
                                         const CommutantConfig& cfg = {});

// dim End of the tensor power over characteristic char_p (0 for the
// rational case, where the hook-formula count applies).
unsigned long long endo_dim(int m, int n, int r, uint32_t char_p, const CommutantConfig& cfg = {});

// Canonical kernel basis of the commutant equations, in block coordinates.
std::vector<FpRow> endo_basis(int m, int n, int r, uint32_t p, const CommutantConfig& cfg = {});

// Commutant, inside block-preserving endomorphisms, of the full commutant
// of the symmetric group action (the latter computed inside all of
// End(V^{\otimes r})).
int64_t double_centralizer_dim(int m, int n, int r, uint32_t p, const CommutantConfig& cfg = {});

}  // namespace schurw::commutant
