#include "schurw/elim.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "schurw/errors.hpp"
#include "schurw/fp.hpp"

namespace schurw {

FpEchelon::FpEchelon(uint32_t p, int64_t ncols)
    : p_(p),
      ncols_(ncols),
      pivot_of_col_(static_cast<size_t>(ncols), -1),
      nnz_limit_(200'000'000),
      val_(static_cast<size_t>(ncols), 0),
      stamp_(static_cast<size_t>(ncols), 0),
      inheap_(static_cast<size_t>(ncols), 0) {}

FpRow FpEchelon::sweep(const FpRow& v, bool adjoin) {
  ++epoch_;
  heap_.clear();
  for (const auto& [c, x] : v) {
    val_[c] = x % p_;
    stamp_[c] = epoch_;
    if (val_[c] != 0) {
      inheap_[c] = epoch_;
      heap_.push_back(c);
    }
  }
  std::make_heap(heap_.begin(), heap_.end(), std::greater<>());

  FpRow rem;
  auto touch = [&](int32_t cc, uint32_t delta) {
    // subtract delta at column cc
    if (stamp_[cc] == epoch_) {
      val_[cc] = fp::sub(val_[cc], delta, p_);
    } else {
      stamp_[cc] = epoch_;
      val_[cc] = fp::neg(delta, p_);
    }
    if (inheap_[cc] != epoch_ && val_[cc] != 0) {
      inheap_[cc] = epoch_;
      heap_.push_back(cc);
      std::push_heap(heap_.begin(), heap_.end(), std::greater<>());
    }
  };

  while (!heap_.empty()) {
    std::pop_heap(heap_.begin(), heap_.end(), std::greater<>());
    int32_t c = heap_.back();
    heap_.pop_back();
    uint32_t x = val_[c];
    if (x == 0) continue;
    int32_t r = pivot_of_col_[c];
    if (r < 0) {
      rem.push_back({c, x});
      val_[c] = 0;
      continue;  // updates never touch columns at or before c again
    }
    val_[c] = 0;
    const FpRow& row = rows_[static_cast<size_t>(r)];
    for (size_t k = 1; k < row.size(); ++k)
      touch(row[k].first, fp::mul(x, row[k].second, p_));
  }

  if (rem.empty() || !adjoin) return rem;

  uint32_t lead_inv = fp::inv(rem[0].second, p_);
  if (lead_inv != 1)
    for (auto& e : rem) e.second = fp::mul(e.second, lead_inv, p_);
  pivot_of_col_[rem[0].first] = static_cast<int32_t>(rows_.size());
  pivots_.push_back(rem[0].first);
  stored_nnz_ += rem.size();
  if (stored_nnz_ > nnz_limit_)
    throw SizeLimitError("FpEchelon: fill-in exceeded configured entry bound");
  rows_.push_back(rem);
  return rem;
}

bool FpEchelon::insert(const FpRow& v) { return !sweep(v, true).empty(); }

FpRow FpEchelon::reduce(const FpRow& v) { return sweep(v, false); }

void FpEchelon::finalize_rref() {
  // Process pivots right to left; after a row is rewritten its entries sit
  // only on its pivot and on free columns, so reductions against already
  // rewritten rows cannot cascade.
  std::vector<size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return pivots_[a] > pivots_[b]; });
  for (size_t idx : order) {
    FpRow& row = rows_[idx];
    if (row.size() <= 1) continue;
    FpRow tail(row.begin() + 1, row.end());
    stored_nnz_ -= row.size();
    FpRow reduced_tail = reduce(tail);
    row.resize(1);
    row.insert(row.end(), reduced_tail.begin(), reduced_tail.end());
    stored_nnz_ += row.size();
  }
}

int64_t fp_rank(const SparseFpMatrix& m, bool col_reorder) {
  if (!col_reorder) {
    FpEchelon e(m.p, m.ncols);
    for (const auto& row : m.rows)
      if (!row.empty()) e.insert(row);
    return e.rank();
  }
  std::vector<int64_t> count(static_cast<size_t>(m.ncols), 0);
  for (const auto& row : m.rows)
    for (const auto& [c, v] : row) ++count[static_cast<size_t>(c)];
  std::vector<int32_t> cols(static_cast<size_t>(m.ncols));
  std::iota(cols.begin(), cols.end(), 0);
  std::sort(cols.begin(), cols.end(), [&](int32_t a, int32_t b) {
    if (count[a] != count[b]) return count[a] < count[b];
    return a < b;
  });
  std::vector<int32_t> pos(static_cast<size_t>(m.ncols));
  for (size_t i = 0; i < cols.size(); ++i) pos[static_cast<size_t>(cols[i])] = static_cast<int32_t>(i);

  std::vector<size_t> rorder(m.rows.size());
  std::iota(rorder.begin(), rorder.end(), size_t{0});
  std::sort(rorder.begin(), rorder.end(), [&](size_t a, size_t b) {
    if (m.rows[a].size() != m.rows[b].size()) return m.rows[a].size() < m.rows[b].size();
    return a < b;
  });

  FpEchelon e(m.p, m.ncols);
  FpRow tmp;
  for (size_t ri : rorder) {
    const auto& row = m.rows[ri];
    if (row.empty()) continue;
    tmp.clear();
    for (const auto& [c, v] : row) tmp.push_back({pos[static_cast<size_t>(c)], v});
    std::sort(tmp.begin(), tmp.end());
    e.insert(tmp);
  }
  return e.rank();
}

namespace {

std::vector<FpRow> kernel_from_rref(const FpEchelon& e, int64_t ncols, uint32_t p,
                                    const std::vector<int32_t>* back_map) {
  std::vector<char> is_pivot(static_cast<size_t>(ncols), 0);
  for (int32_t c : e.pivots()) is_pivot[static_cast<size_t>(c)] = 1;
  // bucket[c] lists (pivot column, coefficient) over rows having an entry in
  // free column c
  std::vector<std::vector<std::pair<int32_t, uint32_t>>> bucket(static_cast<size_t>(ncols));
  for (size_t i = 0; i < e.rows().size(); ++i) {
    const FpRow& row = e.rows()[i];
    for (size_t k = 1; k < row.size(); ++k)
      bucket[static_cast<size_t>(row[k].first)].push_back({e.pivots()[i], fp::neg(row[k].second, p)});
  }
  std::vector<FpRow> basis;
  for (int64_t f = 0; f < ncols; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    FpRow v;
    v.push_back({static_cast<int32_t>(f), 1});
    for (const auto& [pc, coef] : bucket[static_cast<size_t>(f)]) v.push_back({pc, coef});
    if (back_map) {
      for (auto& ent : v) ent.first = (*back_map)[static_cast<size_t>(ent.first)];
    }
    std::sort(v.begin(), v.end());
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<FpRow> fp_kernel_basis(const SparseFpMatrix& m) {
  FpEchelon e(m.p, m.ncols);
  for (const auto& row : m.rows)
    if (!row.empty()) e.insert(row);
  e.finalize_rref();
  return kernel_from_rref(e, m.ncols, m.p, nullptr);
}

std::vector<FpRow> fp_kernel_basis_fast(const SparseFpMatrix& m, size_t nnz_limit) {
  std::vector<int64_t> count(static_cast<size_t>(m.ncols), 0);
  for (const auto& row : m.rows)
    for (const auto& [c, v] : row) ++count[static_cast<size_t>(c)];
  std::vector<int32_t> cols(static_cast<size_t>(m.ncols));
  std::iota(cols.begin(), cols.end(), 0);
  std::sort(cols.begin(), cols.end(), [&](int32_t a, int32_t b) {
    if (count[a] != count[b]) return count[a] < count[b];
    return a < b;
  });
  std::vector<int32_t> pos(static_cast<size_t>(m.ncols));
  for (size_t i = 0; i < cols.size(); ++i) pos[static_cast<size_t>(cols[i])] = static_cast<int32_t>(i);

  std::vector<size_t> rorder(m.rows.size());
  std::iota(rorder.begin(), rorder.end(), size_t{0});
  std::sort(rorder.begin(), rorder.end(), [&](size_t a, size_t b) {
    if (m.rows[a].size() != m.rows[b].size()) return m.rows[a].size() < m.rows[b].size();
    return a < b;
  });

  FpEchelon e(m.p, m.ncols);
  e.set_nnz_limit(nnz_limit);
  FpRow tmp;
  for (size_t ri : rorder) {
    const auto& row = m.rows[ri];
    if (row.empty()) continue;
    tmp.clear();
    for (const auto& [c, v] : row) tmp.push_back({pos[static_cast<size_t>(c)], v});
    std::sort(tmp.begin(), tmp.end());
    e.insert(tmp);
    if (e.rank() == std::min<int64_t>(m.ncols, static_cast<int64_t>(m.rows.size()))) break;
  }
  e.finalize_rref();
  return kernel_from_rref(e, m.ncols, m.p, &cols);
}

}  // namespace schurw
