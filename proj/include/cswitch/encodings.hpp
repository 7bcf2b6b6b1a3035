#pragma once

#include <optional>
#include <vector>

#include "cswitch/circuit.hpp"
#include "cswitch/code.hpp"

namespace cswitch {

// Unitary preparation circuit for one logical basis state plus the
// verification operators measured afterwards (empty when the paper's
// construction needs none). Verification outcomes must all be +1;
// protocols re-prepare on any -1.
struct EncodingCircuit {
  Circuit unitary;                        // data qubits only
  std::vector<PauliString> verifications; // measured with one ancilla each
  bool flagged_verification = false;      // all verifications here are bare
};

enum class EncodedState { Zero, Plus };

// Registry encodings (counts match the published resource table):
//   tetra |0>: 22 + 3 = 25 CNOTs      tetra |+>: 25 + 7 = 32
//   morphed |0>: 11 + 4 = 15          morphed |+>: 14 (no verification)
//   steane |0>/|+>: 9 + 3 = 12 (dual pair)
EncodingCircuit encoding_tetra(EncodedState s);
EncodingCircuit encoding_morphed(EncodedState s);
EncodingCircuit encoding_steane(EncodedState s);

// 13-CNOT |+> preparation on the morphed code used inside the magic-state
// protocol, where the separate X-error-detection round covers its single
// dangerous fault class (see protocols).
EncodingCircuit encoding_morphed_plus_compact();

// Bulk (yellow cell) preparation for switching back to the tetrahedron:
// 12 CNOTs + two weight-4 X verifications (Fig.-style 20 CNOT total).
EncodingCircuit encoding_bulk();

// Encoder for the [[8,3,2]] child code in child labels: qubits 0,1,2 carry
// the three logical inputs. Used (inverted) by the morphing validator.
Circuit child_encoder();

}  // namespace cswitch
