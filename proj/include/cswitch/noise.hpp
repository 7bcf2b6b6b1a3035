#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cswitch/circuit.hpp"
#include "cswitch/pauli.hpp"
#include "cswitch/rng.hpp"

namespace cswitch {

// Circuit-level depolarizing model: p1 on single-qubit gates (T/Tdg
// included), p2 on CNOTs, pi on preparations, pm on measurements. Prep and
// measurement faults invert the qubit in its native basis.
struct NoiseModel {
  double p1 = 0.0;
  double p2 = 0.0;
  double pi = 0.0;
  double pm = 0.0;

  static NoiseModel uniform(double p) { return {p, p, p, p}; }
  static NoiseModel ion_trap() { return {1e-4, 3e-3, 1e-3, 1e-3}; }
  static NoiseModel zero() { return {}; }

  bool is_zero() const { return p1 == 0 && p2 == 0 && pi == 0 && pm == 0; }

  double rate_for(LocKind kind) const {
    switch (kind) {
      case LocKind::H:
      case LocKind::S:
      case LocKind::Sdg:
      case LocKind::T:
      case LocKind::Tdg:
        return p1;
      case LocKind::CNOT:
        return p2;
      case LocKind::Prep0:
      case LocKind::PrepPlus:
        return pi;
      case LocKind::MeasureZ:
      case LocKind::MeasureX:
        return pm;
      case LocKind::Idle:
        return 0.0;
    }
    return 0.0;
  }
};

// One sampled fault: a Pauli applied after the location, or a flip of the
// recorded measurement bit.
struct Fault {
  uint32_t location = 0;
  PauliString op;          // identity for measurement flips
  bool measurement_flip = false;
};

struct FaultSet {
  std::vector<Fault> faults;
  bool empty() const { return faults.empty(); }
};

// Single-qubit depolarizing choice: X, Y or Z uniformly.
PauliString sample_pauli1(uint32_t n, uint32_t q, Rng& rng);
// Two-qubit depolarizing choice over the 15 non-identity pairs.
PauliString sample_pauli2(uint32_t n, uint32_t q0, uint32_t q1, Rng& rng);
// Enumerates the fault alphabet of a location kind (for exhaustive sweeps).
std::vector<Fault> fault_alphabet(const Location& loc, uint32_t location_index, uint32_t n);

// Samples one fault assignment for a static circuit.
FaultSet sample_faults(const Circuit& circuit, const NoiseModel& model, uint64_t rng_seed);

// Product over locations of (1 - rate).
double fault_free_probability(const Circuit& circuit, const NoiseModel& model);

}  // namespace cswitch
