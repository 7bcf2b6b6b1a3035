#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>

namespace cswitch::kernels {

using cplx = std::complex<double>;

// Inner-loop kernels of the statevector engine. `amps` is a dense array of
// 2^n amplitudes; `q` is the target qubit (stride 2^q). The scalar table is
// the reference; the AVX2 table must be bit-for-bit compatible up to the
// usual non-associativity of floating point reductions.
struct KernelTable {
  // (a, b) -> ((a+b), (a-b)) / sqrt(2) over all pairs split by bit q.
  void (*apply_h)(cplx* amps, size_t n_amps, uint32_t q);
  // Multiplies amplitudes with bit q set by `phase`.
  void (*apply_phase)(cplx* amps, size_t n_amps, uint32_t q, cplx phase);
  // Swaps the two halves of every pair split by bit q (Pauli X).
  void (*apply_x)(cplx* amps, size_t n_amps, uint32_t q);
  // Pauli Y on qubit q.
  void (*apply_y)(cplx* amps, size_t n_amps, uint32_t q);
  // CNOT: swaps target-bit pairs within the control=1 subspace.
  void (*apply_cnot)(cplx* amps, size_t n_amps, uint32_t control, uint32_t target);
  // Sum of |amp|^2 over indices with bit q set.
  double (*prob_one)(const cplx* amps, size_t n_amps, uint32_t q);
  // Zeroes the branch with bit q == (1-outcome) and rescales by 1/sqrt(norm).
  void (*project)(cplx* amps, size_t n_amps, uint32_t q, int outcome, double norm);
  // <psi| P |psi> for a Pauli with X mask, Z mask and phase exponent k (i^k).
  double (*expect_pauli)(const cplx* amps, size_t n_amps, uint64_t xmask, uint64_t zmask, uint8_t k);
  // <a|b>.
  cplx (*inner_product)(const cplx* a, const cplx* b, size_t n_amps);
  double (*norm_sq)(const cplx* amps, size_t n_amps);
};

const KernelTable& scalar_table();
bool avx2_available();
const KernelTable* avx2_table();  // nullptr when not compiled in

// Active table: AVX2 when the CPU supports it, unless the environment
// variable CSWITCH_SIMD=scalar forces the reference path.
const KernelTable& active_table();

}  // namespace cswitch::kernels
