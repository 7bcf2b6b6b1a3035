#include "cswitch/gf2.hpp"

namespace cswitch::gf2 {

uint64_t solve(const std::vector<uint64_t>& rows, uint64_t m) {
  // Gaussian elimination on [rows | e_i] tracking coefficients.
  std::vector<uint64_t> basis, coeff;
  auto top_bit = [](uint64_t v) { return uint64_t(1) << (63 - __builtin_clzll(v)); };
  for (size_t i = 0; i < rows.size(); ++i) {
    uint64_t r = rows[i], c = uint64_t(1) << i;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (r & top_bit(basis[j])) { r ^= basis[j]; c ^= coeff[j]; }
    }
    if (r) { basis.push_back(r); coeff.push_back(c); }
  }
  uint64_t c = 0;
  for (size_t j = 0; j < basis.size(); ++j) {
    if (m & top_bit(basis[j])) { m ^= basis[j]; c ^= coeff[j]; }
  }
  return m == 0 ? c : ~uint64_t(0);
}

}  // namespace cswitch::gf2
