#pragma once
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

// Partition and composition combinatorics used by the dimension formulas
// and the threshold formulas.  Partitions are weakly decreasing vectors of
// positive parts; the empty partition is {}.
namespace schurw::combinatorics {

using Partition = std::vector<int>;
// (even part | odd part), both compositions with nonnegative entries
struct BiComposition {
  std::vector<int> even;
  std::vector<int> odd;
  bool operator==(const BiComposition&) const = default;
  auto operator<=>(const BiComposition&) const = default;
  int total() const;
  std::string str() const;
};

// All partitions of r, lexicographically decreasing ((r) first, (1^r) last).
std::vector<Partition> enumerate_partitions(int r);

// All (m|n)-bicompositions of r, lexicographically decreasing on the
// concatenated (even|odd) vector.
std::vector<BiComposition> enumerate_bicompositions(int m, int n, int r);

// (r-i, 1^i) for 0 <= i < r.
Partition hook(int r, int i);

bool is_partition(const std::vector<int>& a);
// fewer than p equal nonzero parts everywhere
bool is_p_regular(const Partition& a, int p);
// every part < p
bool is_p_restricted(const Partition& a, int p);

// James-Kerber ladder regularization: slide nodes up ladders of slope
// (p-1 rows down, 1 column left) as far as they go.  p = 0 returns the
// input unchanged.  Result is always p-regular.
Partition p_regularize(const Partition& a, int p);

// Do the hooks (r-i,1^i) and (r-j,1^j) have equal p-regularizations?
// Closed form: exactly when p | r, i = (p-1)r/p, j = i-1 (for j < i).
bool hook_regularization_collision(int r, int p, int i, int j);

// The minimal-size partition family witnessing threshold sharpness:
// for 1 <= s <= min(p-1, n+1), parts s repeated m+1+a(p-s) times then b
// repeated p-s times, where n-s+1 = a s + b, 0 <= b < s.
Partition witness_partition(int m, int n, int s, int p);

// Ladder-step subsequence of a partition with more than m nonzero parts:
// a_0 = m+1, b_j = alpha_{a_j}, a_{j+1} = a_j + p - b_j while that stays
// within the nonzero parts.  Returns (a list, b list), 1-based positions.
std::pair<std::vector<int>, std::vector<int>> claim1_sequence(const Partition& a, int m, int p);

// Number of standard tableaux of shape a (hook length formula).
unsigned long long hook_dim(const Partition& a);

// Sum of squared standard-tableaux counts over partitions of r whose
// (m+1)-th part is at most n; the generic endomorphism algebra dimension.
unsigned long long dim_endo_char0(int m, int n, int r);

std::string partition_str(const Partition& a);
Partition parse_partition(const std::string& s);

}  // namespace schurw::combinatorics
