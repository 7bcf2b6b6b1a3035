#pragma once

#include <complex>
#include <vector>

#include "cswitch/kernels.hpp"
#include "cswitch/pauli.hpp"
#include "cswitch/rng.hpp"

namespace cswitch {

// Dense statevector over n <= 20 qubits. Supports the full gate alphabet
// including T/Tdg; measurement projects and renormalizes.
class Statevector {
 public:
  explicit Statevector(uint32_t n);

  uint32_t num_qubits() const { return n_; }
  const std::vector<std::complex<double>>& amps() const { return a_; }
  std::vector<std::complex<double>>& amps() { return a_; }

  void h(uint32_t q);
  void s(uint32_t q);
  void sdg(uint32_t q);
  void t(uint32_t q);
  void tdg(uint32_t q);
  void x(uint32_t q);
  void y(uint32_t q);
  void z(uint32_t q);
  void cnot(uint32_t c, uint32_t t);
  void apply_pauli(const PauliString& p);

  double prob_one(uint32_t q) const;
  // Z-basis measurement; collapses. `forced` in {-1,0,1}: when >= 0 the
  // outcome is post-selected (requires nonzero branch probability).
  int measure_z(uint32_t q, Rng& rng, int forced = -1);
  int measure_x(uint32_t q, Rng& rng, int forced = -1);
  // Projective measurement of a hermitian Pauli; returns the +1/-1
  // eigenvalue. `forced`: 0 = Born-random, +1/-1 = post-select that branch.
  int measure_pauli(const PauliString& p, Rng& rng, int forced = 0);

  void reset_to_zero(uint32_t q, Rng& rng);  // measure, flip when 1

  double expectation(const PauliString& p) const;
  double fidelity(const Statevector& target) const;  // |<target|this>|^2
  double norm_sq() const;
  void normalize();

 private:
  uint32_t n_;
  std::vector<std::complex<double>> a_;
  const kernels::KernelTable& k_;
};

}  // namespace cswitch
