#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cswitch/pauli.hpp"

namespace cswitch {

enum class QubitRole { Data, Ancilla, Flag };

enum class LocKind {
  Prep0,
  PrepPlus,
  MeasureZ,
  MeasureX,
  H,
  S,
  Sdg,
  T,
  Tdg,
  CNOT,
  Idle,
};

struct Location {
  LocKind kind;
  uint32_t q0 = 0;
  uint32_t q1 = 0;   // CNOT target
  int32_t reg = -1;  // classical register for measurements
};

// Straight-line circuit fragment. Adaptive control flow lives in the
// protocol layer, which plays fragments against an engine session and
// branches on the recorded bits.
struct Circuit {
  uint32_t n_qubits = 0;
  std::vector<Location> locs;
  std::map<uint32_t, QubitRole> roles;
  std::vector<std::string> registers;

  explicit Circuit(uint32_t n = 0) : n_qubits(n) {}

  int32_t new_register(const std::string& name) {
    registers.push_back(name);
    return static_cast<int32_t>(registers.size()) - 1;
  }

  void set_role(uint32_t q, QubitRole r) { roles[q] = r; }

  void check(uint32_t q) const {
    if (q >= n_qubits) throw std::out_of_range("circuit qubit out of range");
  }

  void prep0(uint32_t q) { check(q); locs.push_back({LocKind::Prep0, q, 0, -1}); }
  void prep_plus(uint32_t q) { check(q); locs.push_back({LocKind::PrepPlus, q, 0, -1}); }
  int32_t measure_z(uint32_t q, const std::string& name) {
    check(q);
    int32_t r = new_register(name);
    locs.push_back({LocKind::MeasureZ, q, 0, r});
    return r;
  }
  int32_t measure_x(uint32_t q, const std::string& name) {
    check(q);
    int32_t r = new_register(name);
    locs.push_back({LocKind::MeasureX, q, 0, r});
    return r;
  }
  void h(uint32_t q) { check(q); locs.push_back({LocKind::H, q, 0, -1}); }
  void s(uint32_t q) { check(q); locs.push_back({LocKind::S, q, 0, -1}); }
  void sdg(uint32_t q) { check(q); locs.push_back({LocKind::Sdg, q, 0, -1}); }
  void t(uint32_t q) { check(q); locs.push_back({LocKind::T, q, 0, -1}); }
  void tdg(uint32_t q) { check(q); locs.push_back({LocKind::Tdg, q, 0, -1}); }
  void cnot(uint32_t c, uint32_t t) {
    check(c);
    check(t);
    if (c == t) throw std::invalid_argument("CNOT needs distinct qubits");
    locs.push_back({LocKind::CNOT, c, t, -1});
  }

  void append(const Circuit& other);

  uint32_t cnot_count() const;
  bool has_non_clifford() const;
};

struct ResourceCount {
  uint32_t qubits = 0;
  uint32_t cnot_count = 0;
};

// Line-oriented text form, one location per line ("CNOT 3 9",
// "MZ 15 -> r0"). Stable across versions; used for golden files.
std::string serialize(const Circuit& c);
Circuit deserialize(const std::string& text);

}  // namespace cswitch
