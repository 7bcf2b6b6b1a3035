#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cswitch {

// n-qubit Pauli operator, stored as X/Z bit masks plus a global phase
// exponent k meaning i^k. The operator is i^k * prod_q X_q^{x_q} Z_q^{z_q},
// so Y = i*XZ is encoded as (x=1, z=1, phase=1). Supports n <= 64.
struct PauliString {
  uint32_t n = 0;
  uint64_t x = 0;
  uint64_t z = 0;
  uint8_t phase = 0;  // exponent of i, mod 4

  PauliString() = default;
  PauliString(uint32_t n_, uint64_t x_, uint64_t z_, uint8_t k = 0)
      : n(n_), x(x_), z(z_), phase(k & 3) {
    if (n_ > 64) throw std::invalid_argument("PauliString supports n <= 64");
  }

  static PauliString identity(uint32_t n) { return PauliString(n, 0, 0, 0); }
  static PauliString single(uint32_t n, uint32_t q, char p);
  // Pure X (Z) operator on the set bits of `mask`.
  static PauliString x_mask(uint32_t n, uint64_t mask) { return PauliString(n, mask, 0); }
  static PauliString z_mask(uint32_t n, uint64_t mask) { return PauliString(n, 0, mask); }
  // Parses "X0 X3 Z6 Y7" (0-based). Optional leading sign "+","-","+i","-i".
  static PauliString parse(uint32_t n, std::string_view text);

  bool is_identity() const { return x == 0 && z == 0 && phase == 0; }
  uint32_t weight() const { return static_cast<uint32_t>(std::popcount(x | z)); }
  uint64_t support() const { return x | z; }

  // Sign relative to the hermitian convention (each Y contributes one i):
  // +1 or -1 for hermitian operators, throws if the operator is not hermitian.
  int sign() const;

  bool operator==(const PauliString& o) const {
    return n == o.n && x == o.x && z == o.z && phase == o.phase;
  }

  std::string to_string() const;

  // Re-indexes qubits: qubit q of *this becomes map[q] in an m-qubit register.
  PauliString embed(uint32_t m, const std::vector<uint32_t>& map) const;
};

PauliString multiply(const PauliString& a, const PauliString& b);
bool commutes(const PauliString& a, const PauliString& b);

struct CliffordGate {
  enum Kind { I, H, S, Sdg, X, Y, Z, CNOT };
  Kind kind = I;
  uint32_t q0 = 0;
  uint32_t q1 = 0;  // CNOT target; unused otherwise

  static CliffordGate h(uint32_t q) { return {H, q, 0}; }
  static CliffordGate s(uint32_t q) { return {S, q, 0}; }
  static CliffordGate sdg(uint32_t q) { return {Sdg, q, 0}; }
  static CliffordGate x(uint32_t q) { return {X, q, 0}; }
  static CliffordGate y(uint32_t q) { return {Y, q, 0}; }
  static CliffordGate z(uint32_t q) { return {Z, q, 0}; }
  static CliffordGate cnot(uint32_t c, uint32_t t) {
    if (c == t) throw std::invalid_argument("CNOT requires distinct qubits");
    return {CNOT, c, t};
  }
};

// Returns g * p * g^dagger with exact phase.
PauliString conjugate(const CliffordGate& g, const PauliString& p);

}  // namespace cswitch
