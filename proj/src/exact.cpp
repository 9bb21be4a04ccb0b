#include "schurw/exact.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <string>

#include "schurw/elim.hpp"
#include "schurw/errors.hpp"
#include "schurw/fp.hpp"

namespace schurw::exact {

IntRow row_sub_mul(const IntRow& a, const Int& q, const IntRow& b) {
  IntRow out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i]);
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      Int v = -q * b[j].second;
      if (v != 0) out.push_back({b[j].first, std::move(v)});
      ++j;
    } else {
      Int v = a[i].second - q * b[j].second;
      if (v != 0) out.push_back({a[i].first, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

namespace {

Int floor_div(const Int& a, const Int& b) {
  // b > 0
  Int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

void negate_row(IntRow& r) {
  for (auto& e : r) e.second = -e.second;
}

}  // namespace

int64_t rank_mod_p(const SparseIntMatrix& m, uint32_t p, const Limits& lim) {
  if (m.nrows > lim.max_rank_rows || m.ncols > lim.max_rank_cols)
    throw SizeLimitError("rank_mod_p: matrix exceeds configured bounds");
  return fp_rank(reduce_mod_p(m, p), true);
}

std::vector<FpRow> kernel_basis_mod_p(const SparseIntMatrix& m, uint32_t p, const Limits& lim) {
  if (m.nrows > lim.max_rank_rows || m.ncols > lim.max_rank_cols)
    throw SizeLimitError("kernel_basis_mod_p: matrix exceeds configured bounds");
  return fp_kernel_basis(reduce_mod_p(m, p));
}

LatticeBasis hnf_row_basis(const SparseIntMatrix& m, const Limits& lim) {
  if (m.ncols > lim.max_hnf_cols)
    throw SizeLimitError("hnf_row_basis: width exceeds configured bound");
  // bucket working rows by leading column
  std::map<int32_t, std::vector<IntRow>> pending;
  for (const auto& row : m.rows)
    if (!row.empty()) pending[row[0].first].push_back(row);

  LatticeBasis L;
  L.ambient_dim = m.ncols;
  while (!pending.empty()) {
    auto it = pending.begin();
    int32_t c = it->first;
    std::vector<IntRow> rows = std::move(it->second);
    pending.erase(it);
    // gcd-combine all rows leading at column c down to a single pivot row
    while (rows.size() > 1) {
      // smallest |lead| last, so reduce the others against it
      size_t best = 0;
      for (size_t k = 1; k < rows.size(); ++k) {
        if (abs(rows[k][0].second) < abs(rows[best][0].second)) best = k;
      }
      std::swap(rows[best], rows.back());
      const IntRow& piv = rows.back();
      std::vector<IntRow> keep;
      for (size_t k = 0; k + 1 < rows.size(); ++k) {
        Int q = rows[k][0].second / piv[0].second;  // truncated: |rem| < |piv lead|
        IntRow red = row_sub_mul(rows[k], q, piv);
        if (red.empty()) continue;
        if (red[0].first == c) keep.push_back(std::move(red));
        else pending[red[0].first].push_back(std::move(red));
      }
      keep.push_back(std::move(rows.back()));
      rows = std::move(keep);
    }
    IntRow piv = std::move(rows[0]);
    if (piv[0].second < 0) negate_row(piv);
    L.pivots.push_back(c);
    L.rows.push_back(std::move(piv));
  }
  // reduce entries above each pivot into [0, pivot)
  for (size_t i = 1; i < L.rows.size(); ++i) {
    const Int& pv = L.rows[i][0].second;
    for (size_t j = 0; j < i; ++j) {
      Int e;
      const auto& row = L.rows[j];
      auto it = std::lower_bound(row.begin(), row.end(), L.pivots[i],
                                 [](const auto& a, int32_t col) { return a.first < col; });
      if (it == row.end() || it->first != L.pivots[i]) continue;
      e = it->second;
      Int q = floor_div(e, pv);
      if (q != 0) L.rows[j] = row_sub_mul(L.rows[j], q, L.rows[i]);
    }
  }
  return L;
}

int64_t rank_char0(const SparseIntMatrix& m, const Limits& lim) {
  if (m.nrows > lim.max_rank_rows || m.ncols > lim.max_rank_cols)
    throw SizeLimitError("rank_char0: matrix exceeds configured bounds");
  int64_t ra = fp_rank(reduce_mod_p(m, fp::cert_prime_a()), true);
  int64_t rb = fp_rank(reduce_mod_p(m, fp::cert_prime_b()), true);
  if (ra == rb) return ra;
  if (m.nrows * m.ncols > 4'000'000)
    throw SizeLimitError("rank_char0: certification primes disagreed on a matrix too large for dense fallback");
  std::vector<std::vector<Int>> dense(static_cast<size_t>(m.nrows),
                                      std::vector<Int>(static_cast<size_t>(m.ncols), 0));
  for (size_t i = 0; i < m.rows.size(); ++i)
    for (const auto& [c, v] : m.rows[i]) dense[i][static_cast<size_t>(c)] = v;
  return bareiss_rank(std::move(dense));
}

LatticeBasis p_saturate(const LatticeBasis& L, uint32_t p) {
  LatticeBasis cur = L;
  for (;;) {
    if (cur.rows.empty()) return cur;
    // relations among basis rows mod p = right kernel of the transpose
    SparseFpMatrix at = SparseFpMatrix::zero(p, cur.ambient_dim, static_cast<int64_t>(cur.rows.size()));
    for (size_t i = 0; i < cur.rows.size(); ++i) {
      for (const auto& [c, v] : cur.rows[i]) {
        Int r = v % p;
        if (r < 0) r += p;
        uint32_t rv = r.convert_to<uint32_t>();
        if (rv != 0) at.rows[static_cast<size_t>(c)].push_back({static_cast<int32_t>(i), rv});
      }
    }
    std::vector<FpRow> rel = fp_kernel_basis(at);
    if (rel.empty()) return cur;
    SparseIntMatrix next = SparseIntMatrix::zero(0, cur.ambient_dim);
    next.rows.reserve(cur.rows.size() + rel.size());
    for (const auto& r : cur.rows) next.rows.push_back(r);
    for (const auto& lam : rel) {
      IntRow acc;
      for (const auto& [i, coef] : lam)
        acc = row_sub_mul(acc, -Int(coef), cur.rows[static_cast<size_t>(i)]);
      IntRow divided;
      for (auto& [c, v] : acc) {
        if (v % p != 0)
          throw std::logic_error("p_saturate: mod-p relation lifted to a non-divisible vector");
        Int w = v / p;
        if (w != 0) divided.push_back({c, std::move(w)});
      }
      if (!divided.empty()) next.rows.push_back(std::move(divided));
    }
    next.nrows = static_cast<int64_t>(next.rows.size());
    Limits wide;
    wide.max_hnf_cols = cur.ambient_dim;
    cur = hnf_row_basis(next, wide);
  }
}

std::vector<Int> membership_coeffs(const LatticeBasis& L, const IntRow& v) {
  std::vector<Int> coeffs(L.rows.size(), 0);
  IntRow rem = v;
  for (size_t i = 0; i < L.rows.size(); ++i) {
    if (rem.empty()) break;
    // rows before pivot i are consumed; rem's leading col must not precede it
    if (rem[0].first < L.pivots[i])
      throw NotASublatticeError("membership: leading coordinate outside pivot span");
    if (rem[0].first > L.pivots[i]) continue;
    const Int& pv = L.rows[i][0].second;
    if (rem[0].second % pv != 0)
      throw NotASublatticeError("membership: pivot coordinate not divisible");
    Int q = rem[0].second / pv;
    coeffs[i] = q;
    rem = row_sub_mul(rem, q, L.rows[i]);
  }
  if (!rem.empty()) throw NotASublatticeError("membership: residual outside lattice");
  return coeffs;
}

bool contains(const LatticeBasis& L, const IntRow& v) {
  try {
    membership_coeffs(L, v);
    return true;
  } catch (const NotASublatticeError&) {
    return false;
  }
}

int lattice_index_log_p(const LatticeBasis& sup, const LatticeBasis& sub, uint32_t p) {
  for (const auto& row : sub.rows) {
    if (!contains(sup, row))
      throw NotASublatticeError("lattice_index_log_p: second lattice not inside first");
  }
  if (sup.rank() != sub.rank())
    throw IndexNotPPowerError("lattice_index_log_p: rank drop, index infinite");
  size_t k = sup.rows.size();
  if (k == 0) return 0;
  std::vector<std::vector<Int>> t(k, std::vector<Int>(k, 0));
  for (size_t i = 0; i < k; ++i) t[i] = membership_coeffs(sup, sub.rows[i]);
  Int det = bareiss_det(std::move(t));
  if (det < 0) det = -det;
  int e = 0;
  if (!is_p_power(det, p, e))
    throw IndexNotPPowerError("lattice_index_log_p: index " + det.str() + " is not a power of " + std::to_string(p));
  return e;
}

Int bareiss_det(std::vector<std::vector<Int>> a) {
  size_t n = a.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

int64_t bareiss_rank(std::vector<std::vector<Int>> a) {
  if (a.empty()) return 0;
  size_t nr = a.size(), nc = a[0].size();
  Int prev = 1;
  size_t row = 0;
  for (size_t col = 0; col < nc && row < nr; ++col) {
    size_t s = row;
    while (s < nr && a[s][col] == 0) ++s;
    if (s == nr) continue;
    std::swap(a[row], a[s]);
    for (size_t i = row + 1; i < nr; ++i) {
      for (size_t j = col + 1; j < nc; ++j) {
        a[i][j] = (a[i][j] * a[row][col] - a[i][col] * a[row][j]) / prev;
      }
      a[i][col] = 0;
    }
    prev = a[row][col];
    ++row;
  }
  return static_cast<int64_t>(row);
}

void write_lattice(std::ostream& os, const LatticeBasis& L) {
  os << "ambient_dim=" << L.ambient_dim << "\n";
  SparseIntMatrix m = SparseIntMatrix::zero(L.rank(), L.ambient_dim);
  m.rows = L.rows;
  write_matrix_market(os, m);
}

LatticeBasis read_lattice(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("ambient_dim=", 0) != 0)
    throw std::runtime_error("lattice: missing ambient_dim header");
  int64_t dim = std::stoll(line.substr(12));
  SparseIntMatrix m = read_matrix_market(is);
  if (m.ncols > dim) throw std::runtime_error("lattice: rows wider than ambient dimension");
  m.ncols = dim;
  Limits wide;
  wide.max_hnf_cols = dim;
  return hnf_row_basis(m, wide);
}

}  // namespace schurw::exact
