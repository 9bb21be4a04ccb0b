#include "schurw/partitions.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "schurw/bigint.hpp"

namespace schurw::combinatorics {

int BiComposition::total() const {
  int t = 0;
  for (int x : even) t += x;
  for (int x : odd) t += x;
  return t;
}

std::string BiComposition::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < even.size(); ++i) os << (i ? "," : "") << even[i];
  os << "|";
  for (size_t i = 0; i < odd.size(); ++i) os << (i ? "," : "") << odd[i];
  os << ")";
  return os.str();
}

std::vector<Partition> enumerate_partitions(int r) {
  if (r < 0) throw std::invalid_argument("enumerate_partitions: negative size");
  std::vector<Partition> out;
  Partition cur;
  // descending lexicographic: extend with the largest part allowed first
  auto rec = [&](auto&& self, int rem, int maxpart) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rem, maxpart); k >= 1; --k) {
      cur.push_back(k);
      self(self, rem - k, k);
      cur.pop_back();
    }
  };
  rec(rec, r, r);
  return out;
}

std::vector<BiComposition> enumerate_bicompositions(int m, int n, int r) {
  if (m < 0 || n < 0 || r < 0) throw std::invalid_argument("enumerate_bicompositions: negative argument");
  std::vector<BiComposition> out;
  std::vector<int> flat(static_cast<size_t>(m + n), 0);
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == m + n) {
      if (rem == 0) {
        BiComposition b;
        b.even.assign(flat.begin(), flat.begin() + m);
        b.odd.assign(flat.begin() + m, flat.end());
        out.push_back(std::move(b));
      }
      return;
    }
    if (pos == m + n - 1) {
      flat[pos] = rem;
      self(self, pos + 1, 0);
      flat[pos] = 0;
      return;
    }
    for (int k = rem; k >= 0; --k) {
      flat[pos] = k;
      self(self, pos + 1, rem - k);
      flat[pos] = 0;
    }
  };
  if (m + n == 0) {
    if (r == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, r);
  return out;
}

Partition hook(int r, int i) {
  if (r < 1 || i < 0 || i >= r) throw std::invalid_argument("hook: need r >= 1, 0 <= i < r");
  Partition a;
  a.push_back(r - i);
  for (int k = 0; k < i; ++k) a.push_back(1);
  return a;
}

bool is_partition(const std::vector<int>& a) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] <= 0) return false;
    if (i > 0 && a[i] > a[i - 1]) return false;
  }
  return true;
}

bool is_p_regular(const Partition& a, int p) {
  if (p == 0) return true;
  int run = 1;
  for (size_t i = 1; i < a.size(); ++i) {
    run = (a[i] == a[i - 1]) ? run + 1 : 1;
    if (run >= p) return false;
  }
  return true;
}

bool is_p_restricted(const Partition& a, int p) {
  for (int x : a)
    if (x >= p) return false;
  return true;
}

Partition p_regularize(const Partition& a, int p) {
  if (!is_partition(a)) throw std::invalid_argument("p_regularize: not a partition");
  if (p == 0) return a;
  if (p < 2) throw std::invalid_argument("p_regularize: modulus must be 0 or >= 2");
  // node (row i, col j), 1-based, lies on ladder i + (p-1)(j-1); count
  // nodes per ladder, then refill each ladder from its top (largest j).
  std::map<long long, long long> ladder_count;
  for (size_t i = 0; i < a.size(); ++i)
    for (int j = 1; j <= a[i]; ++j)
      ladder_count[static_cast<long long>(i + 1) + static_cast<long long>(p - 1) * (j - 1)]++;
  std::map<int, int> row_len;
  for (const auto& [ell, cnt] : ladder_count) {
    long long jmax = (ell - 1) / (p - 1) + 1;  // highest column on ladder ell with row >= 1
    for (long long t = 0; t < cnt; ++t) {
      long long j = jmax - t;
      long long i = ell - static_cast<long long>(p - 1) * (j - 1);
      row_len[static_cast<int>(i)]++;
    }
  }
  Partition out;
  for (int i = 1; !row_len.empty() && i <= row_len.rbegin()->first; ++i) {
    auto it = row_len.find(i);
    out.push_back(it == row_len.end() ? 0 : it->second);
  }
  if (!is_partition(out)) throw std::logic_error("p_regularize: refill did not produce a partition");
  return out;
}

bool hook_regularization_collision(int r, int p, int i, int j) {
  if (r < 1 || i < 0 || i >= r || j < 0 || j >= r)
    throw std::invalid_argument("hook_regularization_collision: index out of range");
  if (p < 2) throw std::invalid_argument("hook_regularization_collision: need p >= 2");
  if (i == j) return true;
  if (j > i) std::swap(i, j);
  if (r % p != 0) return false;
  return i == (p - 1) * (r / p) && j == i - 1;
}

Partition witness_partition(int m, int n, int s, int p) {
  if (m < 0 || n < 0) throw std::invalid_argument("witness_partition: need m, n >= 0");
  if (s < 1 || s > std::min(p - 1, n + 1))
    throw std::invalid_argument("witness_partition: need 1 <= s <= min(p-1, n+1)");
  int a = (n - s + 1) / s;
  int b = (n - s + 1) % s;
  Partition out;
  int lead = m + 1 + a * (p - s);
  for (int k = 0; k < lead; ++k) out.push_back(s);
  if (b > 0)
    for (int k = 0; k < p - s; ++k) out.push_back(b);
  return out;
}

std::pair<std::vector<int>, std::vector<int>> claim1_sequence(const Partition& alpha, int m, int p) {
  if (!is_partition(alpha)) throw std::invalid_argument("claim1_sequence: not a partition");
  int h = static_cast<int>(alpha.size());
  if (h <= m) throw std::invalid_argument("claim1_sequence: partition needs more than m nonzero parts");
  std::vector<int> as, bs;
  int a = m + 1;
  for (;;) {
    int b = alpha[static_cast<size_t>(a - 1)];
    as.push_back(a);
    bs.push_back(b);
    int next = a + p - b;
    if (next > h) break;
    a = next;
  }
  return {as, bs};
}

unsigned long long hook_dim(const Partition& a) {
  if (!is_partition(a)) throw std::invalid_argument("hook_dim: not a partition");
  int r = 0;
  for (int x : a) r += x;
  if (r > 20) throw std::invalid_argument("hook_dim: partitions beyond size 20 overflow the return type");
  if (r == 0) return 1;
  std::vector<int> conj(static_cast<size_t>(a[0]), 0);
  for (int x : a)
    for (int j = 0; j < x; ++j) conj[static_cast<size_t>(j)]++;
  Int num = 1;
  for (int k = 2; k <= r; ++k) num *= k;
  Int den = 1;
  for (size_t i = 0; i < a.size(); ++i)
    for (int j = 1; j <= a[i]; ++j) {
      int arm = a[i] - j;
      int leg = conj[static_cast<size_t>(j - 1)] - static_cast<int>(i) - 1;
      den *= arm + leg + 1;
    }
  Int f = num / den;
  if (num % den != 0) throw std::logic_error("hook_dim: hook product does not divide the factorial");
  return f.convert_to<unsigned long long>();
}

unsigned long long dim_endo_char0(int m, int n, int r) {
  if (m < 0 || n < 0 || r < 0) throw std::invalid_argument("dim_endo_char0: negative argument");
  if (r > 20) throw std::invalid_argument("dim_endo_char0: r beyond 20 overflows the return type");
  unsigned long long total = 0;
  for (const Partition& lam : enumerate_partitions(r)) {
    int part_m1 = static_cast<int>(lam.size()) > m ? lam[static_cast<size_t>(m)] : 0;
    if (part_m1 > n) continue;
    unsigned long long f = hook_dim(lam);
    total += f * f;
  }
  return total;
}

std::string partition_str(const Partition& a) {
  std::ostringstream os;
  for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  return os.str();
}

Partition parse_partition(const std::string& s) {
  Partition out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoi(tok));
  }
  if (!is_partition(out)) throw std::invalid_argument("parse_partition: parts must be weakly decreasing and positive");
  return out;
}

}  // namespace schurw::combinatorics
