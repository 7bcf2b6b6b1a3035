#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cswitch/code.hpp"

namespace cswitch::codes {

// The five fixed code constructions. Qubit indexings:
//   steane()       0..6   standard labels, S^X_R = X0 X1 X2 X3.
//   tetrahedral()  0..14  labels of the tetrahedron figure; the Steane face
//                  lives on {0,3,6,7,10,13,14}.
//   morphed()      0..9   Steane labels 0..6 plus cell-center qubits 7,8,9.
//   child_832()    0..7   cube labels of the [[8,3,2]] appendix.
const CodeDefinition& steane();
const CodeDefinition& tetrahedral();
const CodeDefinition& morphed();
const CodeDefinition& child_832();

// Geometric data of the 15-qubit tetrahedron, as qubit-set masks.
struct TetraLayout {
  // Cells in color order R, B, G, Y.
  std::array<uint64_t, 4> cell;
  // Steane-face plaquettes of the distinguished side, order R, B, G.
  std::array<uint64_t, 3> side_plaquette;
  // Faces connecting the Steane side with the bulk: RB, RG, BG.
  std::array<uint64_t, 3> connecting_face;
  // Face of the same cell opposite each side plaquette (all bulk qubits),
  // order R, B, G: RY, BY, GY.
  std::array<uint64_t, 3> opposing_face;
  uint64_t bulk;       // yellow cell
  uint64_t steane_side;
  // All ten independent Z-face generators, matching tetrahedral().
  std::vector<uint64_t> z_faces;
};
const TetraLayout& tetra_layout();

// Index maps between the code registers.
// Standard Steane label -> tetrahedral qubit.
const std::array<uint32_t, 7>& steane_to_tetra();
// Morphed label -> tetrahedral qubit (0..6 via the side, 7,8,9 from the bulk).
const std::array<uint32_t, 10>& morphed_to_tetra();
// Child cube label -> tetrahedral (yellow cell) qubit.
const std::array<uint32_t, 8>& child_to_tetra();
// Tetrahedral qubits that decouple when the child code is un-encoded.
const std::array<uint32_t, 5>& morphing_decoupled_tetra();

// Gauge data of the morphed code in its own labels.
struct MorphedLayout {
  std::array<uint64_t, 3> plaquette;     // Steane X/Z plaquettes R, B, G
  std::array<uint64_t, 3> cell;          // weight-5 X cells R, B, G
  std::array<uint64_t, 3> weight3_gauge; // Z gauge ops GB, RG, RB
  std::array<uint32_t, 3> bare;          // {7, 8, 9}
};
const MorphedLayout& morphed_layout();

enum class SwitchDirection { T15_to_S7, S7_to_T15, M10_to_S7, S7_to_M10 };

// Measured operators plus the full 8-entry gauge-fix table. Outcome bit i is
// 1 when measured_operators[i] reported the -1 eigenvalue. Operators are in
// the source-register labels (tetrahedral for 15<->7, morphed for 10<->7).
struct SwitchTable {
  SwitchDirection direction;
  uint32_t n = 0;
  std::vector<PauliString> measured_operators;
  std::array<PauliString, 8> fix;
};
const SwitchTable& switch_table(SwitchDirection dir);

// T / Tdg split implementing the transversal logical T on the tetrahedron.
struct Bipartition {
  uint64_t t_mask = 0;     // qubits receiving T
  uint64_t tdg_mask = 0;   // qubits receiving Tdg
};
// Exhaustive search constrained by the cell conditions, then verified by a
// statevector oracle (gadget |+bar> = ideal magic state). Cached.
const Bipartition& find_t_bipartition();

}  // namespace cswitch::codes
