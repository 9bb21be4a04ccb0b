#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace schurw {

// Permutation of {0, ..., r-1} stored as the image list.  Lehmer-code
// ranking gives a bijection with [0, r!), rank 0 = identity.  r <= 20 so
// ranks fit in 64 bits.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<uint8_t> images);
  static Permutation identity(int r);
  static Permutation from_rank(int r, uint64_t rank);
  static Permutation transposition(int r, int a, int b);
  static Permutation forward_cycle(int r);  // 0 -> 1 -> ... -> r-1 -> 0

  uint64_t rank() const;
  int degree() const { return static_cast<int>(img_.size()); }
  uint8_t operator()(int i) const { return img_[static_cast<size_t>(i)]; }

  Permutation compose(const Permutation& other) const;  // (this*other)(i) = this(other(i))
  Permutation inverse() const;
  int sign() const;

  bool operator==(const Permutation&) const = default;
  std::string str() const;

  const std::vector<uint8_t>& images() const { return img_; }

 private:
  std::vector<uint8_t> img_;
};

uint64_t factorial(int r);

}  // namespace schurw
