#pragma once
#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "schurw/permutation.hpp"
#include "schurw/sparse.hpp"

// Diagram algebra on r strands with parameterized loop value, acting on a
// formed superspace k^{m|2n} (even symmetric + odd symplectic form); loop
// value delta = m - 2n.
namespace schurw::brauer {

struct BrauerDiagram {
  int r = 0;
  std::vector<int> partner;  // nodes: top i = i, bottom i = r + i

  bool operator==(const BrauerDiagram&) const = default;
  bool is_permutation() const;      // no top-top or bottom-bottom pairs
  Permutation to_permutation() const;  // bottom i -> top sigma(i)
  std::string str() const;          // e.g. "(1,2')(2,1')"
};

// All (2r-1)!! matchings; deterministic order (first free node matched to
// each larger node in turn).  r <= 6.
std::vector<BrauerDiagram> enumerate_diagrams(int r);

BrauerDiagram identity_diagram(int r);
BrauerDiagram perm_diagram(const Permutation& s);
// top i -- top j, bottom i -- bottom j, other strands straight through
BrauerDiagram cup_cap_diagram(int r, int i, int j);

// Stack a over b (a's bottom glued to b's top): the product a * b, acting
// as action(a) after action(b).  Returns the reduced diagram and the number
// of closed loops removed.
std::pair<BrauerDiagram, int> multiply_count(const BrauerDiagram& a, const BrauerDiagram& b);
std::pair<BrauerDiagram, Int> multiply(const BrauerDiagram& a, const BrauerDiagram& b,
                                       const Int& delta);

struct FormedSuperspace {
  int m = 0;                     // even dimension
  int n = 0;                     // symplectic pairs; odd dimension is 2n
  bool hyperbolic_even = false;  // split even form (requires even m)

  int dim() const { return m + 2 * n; }
  int64_t delta() const { return m - 2 * n; }
};

// <v_a, v_b>: the supersymmetric bilinear form on basis letters
int form_pairing(const FormedSuperspace& w, int a, int b);
// terms (x, y, c) of the coform, satisfying the zigzag identities
std::vector<std::tuple<int, int, int>> coform(const FormedSuperspace& w);

// Matrix of the diagram on the dim^r word space (plain base-dim indexing,
// entry (output word, input word)).  Cups contract with the form, caps
// insert the coform, crossings of odd-odd strands contribute -1.
SparseIntMatrix diagram_action_int(const BrauerDiagram& d, const FormedSuperspace& w);

// Row per diagram (enumeration order) = its action matrix flattened
// (out * dim^r + in); the left kernel is the kernel of the algebra map.
SparseIntMatrix brauer_action_matrix_int(int r, const FormedSuperspace& w);

// Kernel dimension of the action of the diagram algebra on (k^{m|2n})^{x r}
// over F_p, or over the rationals for p = 0.  In characteristic 2 an even
// even-dimension uses the split (hyperbolic) form.
int64_t brauer_kernel_dim(int r, int m, int n, uint32_t p);

struct O2Result {
  int64_t kernel_dim = 0;
  int64_t cokernel_dim = 0;
  bool saturated_iso = false;
};

// The fixed char-2 instance: r = 2 strands on the split form k^{2|0},
// equivariance taken against the torus-and-flip symmetry group.  Computes
// the kernel and cokernel of the diagram algebra map into the invariant
// endomorphisms over F_2 and whether the 2-saturated image lattice fills
// the full invariant lattice.
O2Result o2_char2_check();

}  // namespace schurw::brauer
