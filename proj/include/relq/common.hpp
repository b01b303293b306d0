#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace relq {

// Subset of a carrier with at most 64 elements, one bit per element.
using Mask = std::uint64_t;

inline constexpr int kMaxCarrier = 64;

inline constexpr Mask bit(int i) { return Mask{1} << i; }

inline constexpr bool has(Mask m, int i) { return (m >> i) & 1; }

inline constexpr Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline int popcount(Mask m) { return std::popcount(m); }

inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

// Calls f(i) for every set bit of m, ascending.
template <typename F>
void for_bits(Mask m, F&& f) {
  while (m) {
    int i = std::countr_zero(m);
    f(i);
    m &= m - 1;
  }
}

inline int lowest_bit(Mask m) { return std::countr_zero(m); }

struct RelqError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an enumeration would exceed its configured member guard.
struct GuardExceeded : RelqError {
  GuardExceeded(const std::string& what, std::size_t bound)
      : RelqError(what + " (guard " + std::to_string(bound) +
                  " exceeded; raise --max-tensors or RELQ_MAX_TENSORS)"),
        bound_(bound) {}
  std::size_t bound_;
};

}  // namespace relq
