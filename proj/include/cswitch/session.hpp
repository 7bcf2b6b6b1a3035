#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "cswitch/circuit.hpp"
#include "cswitch/noise.hpp"
#include "cswitch/pauli.hpp"
#include "cswitch/rng.hpp"
#include "cswitch/statevector.hpp"
#include "cswitch/tableau.hpp"

namespace cswitch {

enum class Backend { Tableau, Statevector };

// One shot of circuit execution: a backend state plus noise sampling and
// location bookkeeping. Protocols drive a session imperatively so adaptive
// branches (flags, votes, rejects) stay ordinary control flow.
//
// Modes:
//   - sampled noise (model + fault stream seeded per shot),
//   - forced single fault at one location index (everything else ideal),
//   - recording (ideal; collects the location trace for resource counts
//     and the fault-free-path prescan).
class EngineSession {
 public:
  EngineSession(uint32_t n, Backend backend, const NoiseModel& model,
                uint64_t root_seed, uint64_t shot_index);

  static EngineSession recorder(uint32_t n, Backend backend, uint64_t seed = 0);

  void force_single_fault(const Fault& f);  // also zeroes the noise model

  uint32_t num_qubits() const { return n_; }
  Backend backend() const { return backend_; }
  uint32_t location_counter() const { return loc_counter_; }
  bool recording() const { return recording_; }
  const std::vector<Location>& trace() const { return trace_; }

  // Noisy locations.
  void prep0(uint32_t q);
  void prep_plus(uint32_t q);
  int measure_z(uint32_t q);
  int measure_x(uint32_t q);
  void h(uint32_t q);
  void s(uint32_t q);
  void sdg(uint32_t q);
  void t(uint32_t q);
  void tdg(uint32_t q);
  void cnot(uint32_t c, uint32_t t);

  // Plays a straight-line fragment; measurement bits appended to `bits`.
  void play(const Circuit& c, std::vector<int>* bits = nullptr);

  // Ideal (noiseless, location-free) operations used for Pauli-frame
  // corrections, gauge fixes and the end-of-shot ideal EC.
  void apply_pauli_exact(const PauliString& p);
  int measure_pauli_exact(const PauliString& p);  // +1/-1
  void reset_exact(uint32_t q);
  double expectation_exact(const PauliString& p) const;
  double fidelity_exact(const Statevector& target) const;  // statevector only

  const Statevector* statevector() const { return sv_.get(); }
  const Tableau* tableau() const { return tab_.get(); }

 private:
  void note_location(LocKind kind, uint32_t q0, uint32_t q1 = 0);
  std::optional<PauliString> sample_gate_fault(LocKind kind, uint32_t q0, uint32_t q1);
  bool sample_flip(LocKind kind);
  void apply_fault(const PauliString& p);

  uint32_t n_;
  Backend backend_;
  NoiseModel model_;
  Rng fault_rng_;
  Rng measure_rng_;
  bool recording_ = false;
  std::vector<Location> trace_;
  std::optional<Fault> forced_;
  uint32_t loc_counter_ = 0;
  std::unique_ptr<Tableau> tab_;
  std::unique_ptr<Statevector> sv_;
};

}  // namespace cswitch
