#include "schurw/permutation.hpp"

#include <sstream>
#include <stdexcept>

namespace schurw {

uint64_t factorial(int r) {
  if (r < 0 || r > 20) throw std::invalid_argument("factorial: need 0 <= r <= 20");
  uint64_t f = 1;
  for (int k = 2; k <= r; ++k) f *= static_cast<uint64_t>(k);
  return f;
}

Permutation::Permutation(std::vector<uint8_t> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (uint8_t v : img_) {
    if (v >= img_.size() || seen[v]) throw std::invalid_argument("Permutation: not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int r) {
  std::vector<uint8_t> im(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) im[static_cast<size_t>(i)] = static_cast<uint8_t>(i);
  Permutation p;
  p.img_ = std::move(im);
  return p;
}

Permutation Permutation::from_rank(int r, uint64_t rank) {
  if (rank >= factorial(r)) throw std::invalid_argument("Permutation::from_rank: rank out of range");
  // Lehmer digits in factorial base, most significant first
  std::vector<uint8_t> digits(static_cast<size_t>(r), 0);
  for (int i = r - 1; i >= 0; --i) {
    digits[static_cast<size_t>(r - 1 - i)] = static_cast<uint8_t>(rank / factorial(i));
    rank %= factorial(i);
  }
  std::vector<uint8_t> pool;
  for (int i = 0; i < r; ++i) pool.push_back(static_cast<uint8_t>(i));
  Permutation p;
  p.img_.reserve(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) {
    uint8_t d = digits[static_cast<size_t>(i)];
    p.img_.push_back(pool[d]);
    pool.erase(pool.begin() + d);
  }
  return p;
}

uint64_t Permutation::rank() const {
  int r = degree();
  uint64_t rk = 0;
  for (int i = 0; i < r; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < r; ++j)
      if (img_[static_cast<size_t>(j)] < img_[static_cast<size_t>(i)]) ++smaller;
    rk += static_cast<uint64_t>(smaller) * factorial(r - 1 - i);
  }
  return rk;
}

Permutation Permutation::transposition(int r, int a, int b) {
  Permutation p = identity(r);
  std::swap(p.img_[static_cast<size_t>(a)], p.img_[static_cast<size_t>(b)]);
  return p;
}

Permutation Permutation::forward_cycle(int r) {
  std::vector<uint8_t> im(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) im[static_cast<size_t>(i)] = static_cast<uint8_t>((i + 1) % r);
  Permutation p;
  p.img_ = std::move(im);
  return p;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (degree() != other.degree()) throw std::invalid_argument("Permutation::compose: degree mismatch");
  Permutation p;
  p.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) p.img_[i] = img_[other.img_[i]];
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) p.img_[img_[i]] = static_cast<uint8_t>(i);
  return p;
}

int Permutation::sign() const {
  int inv = 0;
  for (size_t i = 0; i < img_.size(); ++i)
    for (size_t j = i + 1; j < img_.size(); ++j)
      if (img_[i] > img_[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

std::string Permutation::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < img_.size(); ++i) os << (i ? " " : "") << static_cast<int>(img_[i]) + 1;
  os << "]";
  return os.str();
}

}  // namespace schurw
