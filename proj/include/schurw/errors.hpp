#pragma once
#include <stdexcept>
#include <string>

// Failure conditions that callers are expected to catch and report.  Each one
// corresponds to a contract violation that is data-dependent, not a bug.
namespace schurw {

struct SizeLimitError : std::runtime_error {
  explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

// A claimed sublattice relation does not hold (membership solve failed).
struct NotASublatticeError : std::runtime_error {
  explicit NotASublatticeError(const std::string& what) : std::runtime_error(what) {}
};

// A lattice index is finite but not a power of the requested prime,
// or is not finite at all (rank drop).
struct IndexNotPPowerError : std::runtime_error {
  explicit IndexNotPPowerError(const std::string& what) : std::runtime_error(what) {}
};

// A threshold search ran out of its allowed range while the property
// still held; the answer lies beyond the configured limit.
struct ThresholdBeyondLimitError : std::runtime_error {
  explicit ThresholdBeyondLimitError(const std::string& what) : std::runtime_error(what) {}
};

// An element whose image was declared divisible by p^e is not.
struct DivisibilityFailureError : std::runtime_error {
  explicit DivisibilityFailureError(const std::string& what) : std::runtime_error(what) {}
};

// An element maps to zero where a nonzero image is required.
struct ZeroImageError : std::runtime_error {
  explicit ZeroImageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace schurw
