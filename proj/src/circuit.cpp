#include "cswitch/circuit.hpp"

#include <sstream>
#include <stdexcept>

namespace cswitch {

void Circuit::append(const Circuit& other) {
  if (other.n_qubits > n_qubits) throw std::invalid_argument("append: register too small");
  int32_t base = static_cast<int32_t>(registers.size());
  for (const auto& name : other.registers) registers.push_back(name);
  for (Location l : other.locs) {
    if (l.reg >= 0) l.reg += base;
    locs.push_back(l);
  }
  for (const auto& [q, r] : other.roles) roles[q] = r;
}

uint32_t Circuit::cnot_count() const {
  uint32_t c = 0;
  for (const auto& l : locs) {
    if (l.kind == LocKind::CNOT) ++c;
  }
  return c;
}

bool Circuit::has_non_clifford() const {
  for (const auto& l : locs) {
    if (l.kind == LocKind::T || l.kind == LocKind::Tdg) return true;
  }
  return false;
}

std::string serialize(const Circuit& c) {
  std::ostringstream os;
  os << "qubits " << c.n_qubits << "\n";
  for (const auto& [q, r] : c.roles) {
    os << "role " << q << ' '
       << (r == QubitRole::Data ? "data" : r == QubitRole::Ancilla ? "ancilla" : "flag") << "\n";
  }
  for (const auto& l : c.locs) {
    switch (l.kind) {
      case LocKind::Prep0: os << "P0 " << l.q0; break;
      case LocKind::PrepPlus: os << "P+ " << l.q0; break;
      case LocKind::MeasureZ: os << "MZ " << l.q0 << " -> r" << l.reg; break;
      case LocKind::MeasureX: os << "MX " << l.q0 << " -> r" << l.reg; break;
      case LocKind::H: os << "H " << l.q0; break;
      case LocKind::S: os << "S " << l.q0; break;
      case LocKind::Sdg: os << "SDG " << l.q0; break;
      case LocKind::T: os << "T " << l.q0; break;
      case LocKind::Tdg: os << "TDG " << l.q0; break;
      case LocKind::CNOT: os << "CNOT " << l.q0 << ' ' << l.q1; break;
      case LocKind::Idle: os << "IDLE " << l.q0; break;
    }
    os << "\n";
  }
  return os.str();
}

Circuit deserialize(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  Circuit c(0);
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string op;
    ls >> op;
    if (op == "qubits") {
      ls >> c.n_qubits;
    } else if (op == "role") {
      uint32_t q;
      std::string r;
      ls >> q >> r;
      c.roles[q] = r == "data" ? QubitRole::Data : r == "ancilla" ? QubitRole::Ancilla : QubitRole::Flag;
    } else if (op == "P0" || op == "P+") {
      uint32_t q;
      ls >> q;
      if (op == "P0") c.prep0(q); else c.prep_plus(q);
    } else if (op == "MZ" || op == "MX") {
      uint32_t q;
      std::string arrow, reg;
      ls >> q >> arrow >> reg;
      if (op == "MZ") c.measure_z(q, reg); else c.measure_x(q, reg);
    } else if (op == "H") { uint32_t q; ls >> q; c.h(q); }
    else if (op == "S") { uint32_t q; ls >> q; c.s(q); }
    else if (op == "SDG") { uint32_t q; ls >> q; c.sdg(q); }
    else if (op == "T") { uint32_t q; ls >> q; c.t(q); }
    else if (op == "TDG") { uint32_t q; ls >> q; c.tdg(q); }
    else if (op == "CNOT") { uint32_t a, b; ls >> a >> b; c.cnot(a, b); }
    else if (op == "IDLE") { uint32_t q; ls >> q; c.locs.push_back({LocKind::Idle, q, 0, -1}); }
    else throw std::invalid_argument("bad circuit line: " + line);
  }
  return c;
}

}  // namespace cswitch
