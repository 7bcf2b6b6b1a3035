#include "cswitch/codes.hpp"

#include <bit>
#include <mutex>
#include <stdexcept>

#include "cswitch/states.hpp"

namespace cswitch::codes {

namespace {

uint64_t mask_of(std::initializer_list<uint32_t> qs) {
  uint64_t m = 0;
  for (uint32_t q : qs) m |= uint64_t(1) << q;
  return m;
}

PauliString xop(uint32_t n, std::initializer_list<uint32_t> qs) {
  return PauliString::x_mask(n, mask_of(qs));
}
PauliString zop(uint32_t n, std::initializer_list<uint32_t> qs) {
  return PauliString::z_mask(n, mask_of(qs));
}

}  // namespace

const CodeDefinition& steane() {
  static const CodeDefinition c = [] {
    CodeDefinition c;
    c.name = "steane_713";
    c.n = 7;
    c.k = 1;
    c.x_stabilizers = {xop(7, {0, 1, 2, 3}), xop(7, {1, 2, 4, 5}), xop(7, {2, 3, 5, 6})};
    c.z_stabilizers = {zop(7, {0, 1, 2, 3}), zop(7, {1, 2, 4, 5}), zop(7, {2, 3, 5, 6})};
    c.logical_x = {xop(7, {4, 5, 6})};
    c.logical_z = {zop(7, {4, 5, 6})};
    c.metadata["x_colors"] = "R,G,B";
    return c;
  }();
  return c;
}

const TetraLayout& tetra_layout() {
  static const TetraLayout l = [] {
    TetraLayout l;
    l.cell = {mask_of({0, 1, 2, 3, 4, 5, 6, 7}),       // R
              mask_of({2, 3, 5, 6, 9, 10, 11, 13}),    // B
              mask_of({4, 5, 6, 7, 11, 12, 13, 14}),   // G
              mask_of({1, 2, 4, 5, 8, 9, 11, 12})};    // Y
    l.side_plaquette = {mask_of({0, 3, 6, 7}),    // R
                        mask_of({3, 6, 10, 13}),  // B
                        mask_of({6, 7, 13, 14})}; // G
    l.connecting_face = {mask_of({2, 3, 5, 6}),   // RB
                         mask_of({4, 5, 6, 7}),   // RG
                         mask_of({5, 6, 11, 13})};// BG
    l.opposing_face = {mask_of({1, 2, 4, 5}),     // RY (opposite side R)
                       mask_of({2, 5, 9, 11}),    // BY
                       mask_of({4, 5, 11, 12})};  // GY
    l.bulk = l.cell[3];
    l.steane_side = mask_of({0, 3, 6, 7, 10, 13, 14});
    l.z_faces = {
        mask_of({1, 2, 4, 5}),    // RY
        mask_of({2, 3, 5, 6}),    // RB
        mask_of({4, 5, 6, 7}),    // RG
        mask_of({5, 6, 11, 13}),  // BG
        mask_of({2, 5, 9, 11}),   // BY
        mask_of({4, 5, 11, 12}),  // GY
        mask_of({0, 3, 6, 7}),    // boundary R (Steane side)
        mask_of({3, 6, 10, 13}),  // boundary B
        mask_of({6, 7, 13, 14}),  // boundary G
        mask_of({8, 9, 11, 12}),  // boundary Y
    };
    return l;
  }();
  return l;
}

const CodeDefinition& tetrahedral() {
  static const CodeDefinition c = [] {
    const TetraLayout& l = tetra_layout();
    CodeDefinition c;
    c.name = "tetrahedral_15_1_3";
    c.n = 15;
    c.k = 1;
    for (uint64_t m : l.cell) c.x_stabilizers.push_back(PauliString::x_mask(15, m));
    for (uint64_t m : l.z_faces) c.z_stabilizers.push_back(PauliString::z_mask(15, m));
    c.logical_x = {PauliString::x_mask(15, l.steane_side)};
    c.logical_z = {zop(15, {10, 13, 14})};
    c.metadata["cells"] = "R,B,G,Y";
    c.metadata["faces"] = "RY,RB,RG,BG,BY,GY,R,B,G,Y";
    return c;
  }();
  return c;
}

const MorphedLayout& morphed_layout() {
  static const MorphedLayout l = [] {
    MorphedLayout l;
    l.plaquette = {mask_of({0, 1, 2, 3}),    // R
                   mask_of({2, 3, 5, 6}),    // B
                   mask_of({1, 2, 4, 5})};   // G
    l.cell = {mask_of({0, 1, 2, 3, 7}),      // R
              mask_of({2, 3, 5, 6, 9}),      // B
              mask_of({1, 2, 4, 5, 8})};     // G
    l.weight3_gauge = {mask_of({2, 5, 7}),   // GB
                       mask_of({1, 2, 9}),   // RG
                       mask_of({2, 3, 8})};  // RB
    l.bare = {7, 8, 9};
    return l;
  }();
  return l;
}

const CodeDefinition& morphed() {
  static const CodeDefinition c = [] {
    const MorphedLayout& l = morphed_layout();
    CodeDefinition c;
    c.name = "morphed_10_1_2";
    c.n = 10;
    c.k = 1;
    for (uint64_t m : l.cell) c.x_stabilizers.push_back(PauliString::x_mask(10, m));
    for (uint64_t m : l.plaquette) c.z_stabilizers.push_back(PauliString::z_mask(10, m));
    for (uint64_t m : l.weight3_gauge) c.z_stabilizers.push_back(PauliString::z_mask(10, m));
    c.logical_x = {xop(10, {4, 5, 6, 7})};
    c.logical_z = {zop(10, {4, 5, 6})};
    c.metadata["cells"] = "R,B,G";
    return c;
  }();
  return c;
}

const CodeDefinition& child_832() {
  static const CodeDefinition c = [] {
    CodeDefinition c;
    c.name = "child_832";
    c.n = 8;
    c.k = 3;
    c.x_stabilizers = {xop(8, {0, 1, 2, 3, 4, 5, 6, 7})};
    c.z_stabilizers = {zop(8, {0, 1, 2, 3, 4, 5, 6, 7}), zop(8, {0, 2, 4, 6}),
                       zop(8, {1, 2, 4, 7}), zop(8, {0, 1, 3, 4})};
    c.logical_x = {xop(8, {0, 3, 5, 6}), xop(8, {1, 3, 5, 7}), xop(8, {2, 5, 6, 7})};
    c.logical_z = {zop(8, {0, 4}), zop(8, {1, 4}), zop(8, {2, 4})};
    return c;
  }();
  return c;
}

const std::array<uint32_t, 7>& steane_to_tetra() {
  static const std::array<uint32_t, 7> m = {0, 7, 6, 3, 14, 13, 10};
  return m;
}

const std::array<uint32_t, 10>& morphed_to_tetra() {
  static const std::array<uint32_t, 10> m = {0, 7, 6, 3, 14, 13, 10, 11, 2, 4};
  return m;
}

const std::array<uint32_t, 8>& child_to_tetra() {
  static const std::array<uint32_t, 8> m = {4, 11, 2, 12, 5, 8, 1, 9};
  return m;
}

const std::array<uint32_t, 5>& morphing_decoupled_tetra() {
  static const std::array<uint32_t, 5> m = {12, 5, 8, 1, 9};
  return m;
}

namespace {

SwitchTable make_table(SwitchDirection dir, uint32_t n,
                       std::vector<PauliString> measured,
                       std::array<PauliString, 3> single_fix) {
  SwitchTable t;
  t.direction = dir;
  t.n = n;
  t.measured_operators = std::move(measured);
  for (uint32_t bits = 0; bits < 8; ++bits) {
    PauliString f = PauliString::identity(n);
    for (uint32_t i = 0; i < 3; ++i) {
      if (bits & (1u << i)) f = multiply(f, single_fix[i]);
    }
    t.fix[bits] = f;
  }
  return t;
}

}  // namespace

const SwitchTable& switch_table(SwitchDirection dir) {
  const TetraLayout& tl = tetra_layout();
  const MorphedLayout& ml = morphed_layout();
  switch (dir) {
    case SwitchDirection::T15_to_S7: {
      // Measure the Steane X-plaquettes of the side; each -1 is fixed by
      // the Z-face connecting the other two colors. The BG face resolves
      // the paper's inconsistent listing to Z5 Z6 Z11 Z13: the alternative
      // Z5 Z6 Z13 Z14 overlaps the green plaquette at three sites and is
      // not a face of any valid [[15,1,3]] assignment.
      static const SwitchTable t = make_table(
          dir, 15,
          {PauliString::x_mask(15, tl.side_plaquette[0]),
           PauliString::x_mask(15, tl.side_plaquette[1]),
           PauliString::x_mask(15, tl.side_plaquette[2])},
          {PauliString::z_mask(15, tl.connecting_face[2]),    // fix R: BG
           PauliString::z_mask(15, tl.connecting_face[1]),    // fix B: RG
           PauliString::z_mask(15, tl.connecting_face[0])});  // fix G: RB
      return t;
    }
    case SwitchDirection::S7_to_T15: {
      static const SwitchTable t = make_table(
          dir, 15,
          {PauliString::z_mask(15, tl.connecting_face[0]),
           PauliString::z_mask(15, tl.connecting_face[1]),
           PauliString::z_mask(15, tl.connecting_face[2])},
          {PauliString::x_mask(15, tl.side_plaquette[2]),     // fix RB: S^X_G
           PauliString::x_mask(15, tl.side_plaquette[1]),     // fix RG: S^X_B
           PauliString::x_mask(15, tl.side_plaquette[0])});   // fix BG: S^X_R
      return t;
    }
    case SwitchDirection::M10_to_S7: {
      static const SwitchTable t = make_table(
          dir, 10,
          {PauliString::x_mask(10, ml.plaquette[0]),
           PauliString::x_mask(10, ml.plaquette[1]),
           PauliString::x_mask(10, ml.plaquette[2])},
          {PauliString::z_mask(10, ml.weight3_gauge[0]),      // fix R: GB
           PauliString::z_mask(10, ml.weight3_gauge[1]),      // fix B: RG
           PauliString::z_mask(10, ml.weight3_gauge[2])});    // fix G: RB
      return t;
    }
    case SwitchDirection::S7_to_M10: {
      static const SwitchTable t = make_table(
          dir, 10,
          {PauliString::z_mask(10, ml.weight3_gauge[0]),
           PauliString::z_mask(10, ml.weight3_gauge[1]),
           PauliString::z_mask(10, ml.weight3_gauge[2])},
          {PauliString::x_mask(10, ml.plaquette[0]),          // fix GB: R
           PauliString::x_mask(10, ml.plaquette[1]),          // fix RG: B
           PauliString::x_mask(10, ml.plaquette[2])});        // fix RB: G
      return t;
    }
  }
  throw std::logic_error("unknown switch direction");
}

namespace {

// Applies T to qubits in t_mask and Tdg to qubits in tdg_mask.
void apply_t_pattern(Statevector& sv, uint64_t t_mask, uint64_t tdg_mask) {
  for (uint32_t q = 0; q < sv.num_qubits(); ++q) {
    uint64_t bit = uint64_t(1) << q;
    if (t_mask & bit) sv.t(q);
    else if (tdg_mask & bit) sv.tdg(q);
  }
}

}  // namespace

const Bipartition& find_t_bipartition() {
  static const Bipartition bp = [] {
    const CodeDefinition& code = tetrahedral();
    const TetraLayout& l = tetra_layout();
    const uint64_t all = (uint64_t(1) << 15) - 1;
    Statevector plus = ideal_codestate(code, LogicalLabel::Plus, identity_layout(15), 15);
    Statevector magic = ideal_codestate(code, LogicalLabel::Magic, identity_layout(15), 15);

    for (uint64_t m = 0; m <= all; ++m) {
      if (std::popcount(m) != 8) continue;
      bool ok = true;
      for (uint64_t cell : l.cell) {
        if (std::popcount(m & cell) != 4) { ok = false; break; }
      }
      if (!ok) continue;
      for (int polarity = 0; polarity < 2; ++polarity) {
        uint64_t tm = polarity ? (all & ~m) : m;
        uint64_t dm = polarity ? m : (all & ~m);
        Statevector sv = plus;
        apply_t_pattern(sv, tm, dm);
        if (sv.fidelity(magic) > 1.0 - 1e-12) {
          Bipartition b;
          b.t_mask = tm;
          b.tdg_mask = dm;
          return b;
        }
      }
    }
    throw std::runtime_error("no transversal-T bipartition found; code construction broken");
  }();
  return bp;
}

}  // namespace cswitch::codes
