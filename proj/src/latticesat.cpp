#include "schurw/latticesat.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "schurw/bigint.hpp"
#include "schurw/errors.hpp"
#include "schurw/partitions.hpp"

namespace schurw::latticesat {

SigmaLattice build_sigma(int m, int n, int r, uint32_t p, const superspace::SizeConfig& cfg) {
  SigmaLattice s;
  s.m = m;
  s.n = n;
  s.r = r;
  s.p = p;
  SparseIntMatrix mat = superspace::phi_action_matrix_int(m, n, r, cfg);
  exact::Limits lim;
  lim.max_hnf_cols = mat.ncols + 1;
  s.image_basis = exact::hnf_row_basis(mat, lim);
  s.saturated_basis = exact::p_saturate(s.image_basis, p);
  return s;
}

int64_t sigma_dim(const SigmaLattice& s) { return s.saturated_basis.rank(); }

int saturation_index_log_p(const SigmaLattice& s) {
  return exact::lattice_index_log_p(s.saturated_basis, s.image_basis, s.p);
}

bool phi_tilde_is_iso(int m, int n, int r, uint32_t p, const commutant::CommutantConfig& cfg) {
  return commutant::endo_dim(m, n, r, p, cfg) == combinatorics::dim_endo_char0(m, n, r);
}

namespace {

IntRow dense_to_row(const std::vector<Int>& v) {
  IntRow row;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) row.push_back({static_cast<int32_t>(i), v[i]});
  return row;
}

}  // namespace

bool verify_generators(const SigmaLattice& s,
                       const std::vector<std::pair<superspace::GroupAlgebraElement, int>>& extras,
                       const superspace::SizeConfig& cfg) {
  superspace::BlockDecomposition dec = superspace::weight_blocks(s.m, s.n, s.r, cfg);
  SparseIntMatrix gen = SparseIntMatrix::zero(0, s.image_basis.ambient_dim);
  for (const auto& row : s.image_basis.rows) gen.rows.push_back(row);
  Int pk = 1;
  for (const auto& [x, e] : extras) {
    std::vector<Int> img = superspace::phi_apply_int(dec, x);
    pk = 1;
    for (int i = 0; i < e; ++i) pk *= s.p;
    IntRow row = dense_to_row(img);
    for (auto& [c, v] : row) {
      if (v % pk != 0)
        throw DivisibilityFailureError("image coordinate not divisible by the declared p-power");
      v /= pk;
    }
    if (!row.empty()) gen.rows.push_back(std::move(row));
  }
  gen.nrows = static_cast<int64_t>(gen.rows.size());
  exact::Limits lim;
  lim.max_hnf_cols = gen.ncols + 1;
  return exact::hnf_row_basis(gen, lim) == s.saturated_basis;
}

int divisibility_exponent(int m, int n, int r, const superspace::GroupAlgebraElement& x,
                          uint32_t p, const superspace::SizeConfig& cfg) {
  superspace::BlockDecomposition dec = superspace::weight_blocks(m, n, r, cfg);
  std::vector<Int> img = superspace::phi_apply_int(dec, x);
  int best = -1;
  for (const Int& v : img) {
    if (v == 0) continue;
    int e = valuation(v, p);
    if (best < 0 || e < best) best = e;
    if (best == 0) break;
  }
  if (best < 0) throw ZeroImageError("group algebra element acts by zero");
  return best;
}

void write_sigma(std::ostream& os, const SigmaLattice& s) {
  os << "m=" << s.m << " n=" << s.n << " r=" << s.r << " p=" << s.p << "\n";
  exact::write_lattice(os, s.image_basis);
  exact::write_lattice(os, s.saturated_basis);
}

SigmaLattice read_sigma(std::istream& is) {
  SigmaLattice s;
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("missing lattice parameter line");
  std::istringstream hdr(line);
  std::string tok;
  while (hdr >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw std::runtime_error("bad parameter token: " + tok);
    std::string key = tok.substr(0, eq);
    long val = std::stol(tok.substr(eq + 1));
    if (key == "m")
      s.m = static_cast<int>(val);
    else if (key == "n")
      s.n = static_cast<int>(val);
    else if (key == "r")
      s.r = static_cast<int>(val);
    else if (key == "p")
      s.p = static_cast<uint32_t>(val);
    else
      throw std::runtime_error("unknown parameter: " + key);
  }
  s.image_basis = exact::read_lattice(is);
  s.saturated_basis = exact::read_lattice(is);
  return s;
}

}  // namespace schurw::latticesat
