#include "schurw/sparse.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "schurw/fp.hpp"

namespace schurw {

void SparseIntMatrix::set(int64_t r, int64_t c, Int v) {
  auto& row = rows.at(static_cast<size_t>(r));
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, int64_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    if (v == 0) row.erase(it);
    else it->second = std::move(v);
  } else if (v != 0) {
    row.insert(it, {static_cast<int32_t>(c), std::move(v)});
  }
}

Int SparseIntMatrix::get(int64_t r, int64_t c) const {
  const auto& row = rows.at(static_cast<size_t>(r));
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, int64_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return 0;
}

size_t SparseIntMatrix::nnz() const {
  size_t n = 0;
  for (const auto& r : rows) n += r.size();
  return n;
}

size_t SparseFpMatrix::nnz() const {
  size_t n = 0;
  for (const auto& r : rows) n += r.size();
  return n;
}

SparseFpMatrix reduce_mod_p(const SparseIntMatrix& m, uint32_t p) {
  SparseFpMatrix out = SparseFpMatrix::zero(p, m.nrows, m.ncols);
  for (size_t i = 0; i < m.rows.size(); ++i) {
    for (const auto& [c, v] : m.rows[i]) {
      Int r = v % p;
      if (r < 0) r += p;
      uint32_t rv = r.convert_to<uint32_t>();
      if (rv != 0) out.rows[i].push_back({c, rv});
    }
  }
  return out;
}

SparseIntMatrix transpose(const SparseIntMatrix& m) {
  SparseIntMatrix out = SparseIntMatrix::zero(m.ncols, m.nrows);
  for (size_t i = 0; i < m.rows.size(); ++i)
    for (const auto& [c, v] : m.rows[i])
      out.rows[static_cast<size_t>(c)].push_back({static_cast<int32_t>(i), v});
  return out;
}

SparseFpMatrix transpose(const SparseFpMatrix& m) {
  SparseFpMatrix out = SparseFpMatrix::zero(m.p, m.ncols, m.nrows);
  for (size_t i = 0; i < m.rows.size(); ++i)
    for (const auto& [c, v] : m.rows[i])
      out.rows[static_cast<size_t>(c)].push_back({static_cast<int32_t>(i), v});
  return out;
}

void write_matrix_market(std::ostream& os, const SparseIntMatrix& m, uint32_t modulus) {
  os << "%%MatrixMarket matrix coordinate integer general\n";
  if (modulus != 0) os << "% modulus=" << modulus << "\n";
  os << m.nrows << " " << m.ncols << " " << m.nnz() << "\n";
  for (size_t i = 0; i < m.rows.size(); ++i)
    for (const auto& [c, v] : m.rows[i])
      os << (i + 1) << " " << (c + 1) << " " << v << "\n";
}

SparseIntMatrix read_matrix_market(std::istream& is, uint32_t* modulus_out) {
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("matrix market: empty stream");
  if (line.rfind("%%MatrixMarket matrix coordinate integer general", 0) != 0)
    throw std::runtime_error("matrix market: unsupported banner: " + line);
  if (modulus_out) *modulus_out = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '%') {
      auto pos = line.find("modulus=");
      if (pos != std::string::npos && modulus_out)
        *modulus_out = static_cast<uint32_t>(std::stoul(line.substr(pos + 8)));
      continue;
    }
    break;
  }
  std::istringstream head(line);
  int64_t nr, nc;
  size_t nnz;
  if (!(head >> nr >> nc >> nnz)) throw std::runtime_error("matrix market: bad size line");
  SparseIntMatrix m = SparseIntMatrix::zero(nr, nc);
  for (size_t k = 0; k < nnz; ++k) {
    int64_t i, j;
    std::string val;
    if (!(is >> i >> j >> val)) throw std::runtime_error("matrix market: truncated entries");
    if (i < 1 || i > nr || j < 1 || j > nc) throw std::runtime_error("matrix market: index out of range");
    m.rows[static_cast<size_t>(i - 1)].push_back({static_cast<int32_t>(j - 1), Int(val)});
  }
  for (auto& r : m.rows)
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  // leave the stream at the start of the next line so matrices can be
  // concatenated in one stream
  if (nnz > 0) std::getline(is, line);
  return m;
}

}  // namespace schurw
