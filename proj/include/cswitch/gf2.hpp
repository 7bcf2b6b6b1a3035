#pragma once

#include <cstdint>
#include <vector>

namespace cswitch::gf2 {

// Row space over GF(2) with rows as 64-bit masks. Supports rank queries and
// membership tests via incremental elimination.
class Span {
 public:
  // Returns true if the mask was independent (and was added).
  bool add(uint64_t m) {
    uint64_t r = reduce(m);
    if (r == 0) return false;
    basis_.push_back(r);
    return true;
  }
  // Reduces m against the basis; zero result means m is in the span.
  uint64_t reduce(uint64_t m) const {
    for (uint64_t b : basis_) {
      uint64_t top = highest_bit(b);
      if (m & top) m ^= b;
    }
    return m;
  }
  bool contains(uint64_t m) const { return reduce(m) == 0; }
  size_t rank() const { return basis_.size(); }

 private:
  static uint64_t highest_bit(uint64_t v) {
    return uint64_t(1) << (63 - __builtin_clzll(v));
  }
  std::vector<uint64_t> basis_;
};

inline size_t rank(const std::vector<uint64_t>& rows) {
  Span s;
  for (uint64_t r : rows) s.add(r);
  return s.rank();
}

// Expresses m as a combination of `rows` when possible; returns the
// coefficient mask (bit i set -> rows[i] used), or ~0ull when not in span.
uint64_t solve(const std::vector<uint64_t>& rows, uint64_t m);

}  // namespace cswitch::gf2
