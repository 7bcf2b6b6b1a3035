#include "cswitch/states.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cswitch {

std::vector<uint32_t> identity_layout(uint32_t n) {
  std::vector<uint32_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

namespace {

void apply_projector(Statevector& sv, const PauliString& p) {
  // |psi> <- (I + P)|psi| / norm
  Statevector tmp = sv;
  tmp.apply_pauli(p);
  auto& a = sv.amps();
  const auto& b = tmp.amps();
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  sv.normalize();
}

}  // namespace

Statevector ideal_codestate(const CodeDefinition& code, LogicalLabel label,
                            const std::vector<uint32_t>& layout, uint32_t total_qubits) {
  if (layout.size() < code.n) throw std::invalid_argument("layout too short");
  Statevector sv(total_qubits);
  for (const auto& s : code.x_stabilizers) {
    apply_projector(sv, s.embed(total_qubits, layout));
  }
  // |0...0> already satisfies all Z stabilizers and logical Z = +1.
  if (label == LogicalLabel::Zero) return sv;
  PauliString lx = code.logical_x.at(0).embed(total_qubits, layout);
  if (label == LogicalLabel::One) {
    sv.apply_pauli(lx);
    return sv;
  }
  Statevector one = sv;
  one.apply_pauli(lx);
  auto& a = sv.amps();
  const auto& b = one.amps();
  std::complex<double> w = (label == LogicalLabel::Plus)
                               ? std::complex<double>(1.0, 0.0)
                               : std::complex<double>(std::sqrt(0.5), std::sqrt(0.5));
  for (size_t i = 0; i < a.size(); ++i) a[i] += w * b[i];
  sv.normalize();
  return sv;
}

}  // namespace cswitch
