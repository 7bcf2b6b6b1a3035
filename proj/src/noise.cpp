#include "cswitch/noise.hpp"

namespace cswitch {

PauliString sample_pauli1(uint32_t n, uint32_t q, Rng& rng) {
  static const char letters[3] = {'X', 'Y', 'Z'};
  return PauliString::single(n, q, letters[rng.next_below(3)]);
}

PauliString sample_pauli2(uint32_t n, uint32_t q0, uint32_t q1, Rng& rng) {
  // Index 1..15 over (a, b) pairs with a, b in {I, X, Y, Z}, skipping (I, I).
  uint32_t idx = static_cast<uint32_t>(rng.next_below(15)) + 1;
  static const char letters[4] = {'I', 'X', 'Y', 'Z'};
  PauliString a = PauliString::single(n, q0, letters[idx & 3]);
  PauliString b = PauliString::single(n, q1, letters[idx >> 2]);
  return multiply(a, b);
}

std::vector<Fault> fault_alphabet(const Location& loc, uint32_t location_index, uint32_t n) {
  std::vector<Fault> out;
  static const char letters[4] = {'I', 'X', 'Y', 'Z'};
  switch (loc.kind) {
    case LocKind::H:
    case LocKind::S:
    case LocKind::Sdg:
    case LocKind::T:
    case LocKind::Tdg:
      for (int i = 1; i < 4; ++i) {
        out.push_back({location_index, PauliString::single(n, loc.q0, letters[i]), false});
      }
      break;
    case LocKind::CNOT:
      for (uint32_t idx = 1; idx < 16; ++idx) {
        PauliString a = PauliString::single(n, loc.q0, letters[idx & 3]);
        PauliString b = PauliString::single(n, loc.q1, letters[idx >> 2]);
        out.push_back({location_index, multiply(a, b), false});
      }
      break;
    case LocKind::Prep0:
      out.push_back({location_index, PauliString::single(n, loc.q0, 'X'), false});
      break;
    case LocKind::PrepPlus:
      out.push_back({location_index, PauliString::single(n, loc.q0, 'Z'), false});
      break;
    case LocKind::MeasureZ:
    case LocKind::MeasureX:
      out.push_back({location_index, PauliString::identity(n), true});
      break;
    case LocKind::Idle:
      break;
  }
  return out;
}

FaultSet sample_faults(const Circuit& circuit, const NoiseModel& model, uint64_t rng_seed) {
  Rng rng(rng_seed);
  FaultSet fs;
  for (uint32_t i = 0; i < circuit.locs.size(); ++i) {
    const Location& loc = circuit.locs[i];
    double r = model.rate_for(loc.kind);
    if (r <= 0.0) continue;
    if (rng.next_double() >= r) continue;
    switch (loc.kind) {
      case LocKind::CNOT:
        fs.faults.push_back({i, sample_pauli2(circuit.n_qubits, loc.q0, loc.q1, rng), false});
        break;
      case LocKind::Prep0:
        fs.faults.push_back({i, PauliString::single(circuit.n_qubits, loc.q0, 'X'), false});
        break;
      case LocKind::PrepPlus:
        fs.faults.push_back({i, PauliString::single(circuit.n_qubits, loc.q0, 'Z'), false});
        break;
      case LocKind::MeasureZ:
      case LocKind::MeasureX:
        fs.faults.push_back({i, PauliString::identity(circuit.n_qubits), true});
        break;
      case LocKind::Idle:
        break;
      default:
        fs.faults.push_back({i, sample_pauli1(circuit.n_qubits, loc.q0, rng), false});
        break;
    }
  }
  return fs;
}

double fault_free_probability(const Circuit& circuit, const NoiseModel& model) {
  double p = 1.0;
  for (const auto& loc : circuit.locs) p *= 1.0 - model.rate_for(loc.kind);
  return p;
}

}  // namespace cswitch
