#pragma once

#include <optional>
#include <vector>

#include "cswitch/pauli.hpp"
#include "cswitch/rng.hpp"

namespace cswitch {

// Stabilizer tableau (Aaronson-Gottesman style) with destabilizer rows,
// for Clifford-only circuits on n <= 64 qubits. Phases are tracked exactly
// as powers of i via PauliString.
class Tableau {
 public:
  explicit Tableau(uint32_t n);  // |0...0>

  uint32_t num_qubits() const { return n_; }

  void h(uint32_t q);
  void s(uint32_t q);
  void sdg(uint32_t q);
  void x(uint32_t q);
  void y(uint32_t q);
  void z(uint32_t q);
  void cnot(uint32_t c, uint32_t t);
  void apply_pauli(const PauliString& p);  // deterministic sign updates

  // Measures a hermitian Pauli, returns +1/-1. forced: 0 = random,
  // +1/-1 = post-select (throws when impossible).
  int measure_pauli(const PauliString& p, Rng& rng, int forced = 0);
  // Bit-valued measurements; forced: -1 = random, 0/1 = post-select.
  int measure_z(uint32_t q, Rng& rng, int forced = -1);
  int measure_x(uint32_t q, Rng& rng, int forced = -1);
  void reset_to_zero(uint32_t q, Rng& rng);

  // +1/-1 when P is +-(stabilizer product); 0 when indeterminate.
  int expectation(const PauliString& p) const;

  const std::vector<PauliString>& stabilizers() const { return stab_; }

 private:
  void conj_all(const CliffordGate& g);
  uint32_t n_;
  std::vector<PauliString> destab_;
  std::vector<PauliString> stab_;
};

}  // namespace cswitch
