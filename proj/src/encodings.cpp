#include "cswitch/encodings.hpp"

#include "cswitch/codes.hpp"

namespace cswitch {

namespace {

struct CnotStep {
  uint32_t c, t;
};

Circuit build_prep(uint32_t n, const std::vector<uint32_t>& plus_seeds,
                   const std::vector<CnotStep>& cnots) {
  Circuit c(n);
  std::vector<bool> is_plus(n, false);
  for (uint32_t q : plus_seeds) is_plus[q] = true;
  for (uint32_t q = 0; q < n; ++q) {
    if (is_plus[q]) c.prep_plus(q); else c.prep0(q);
    c.set_role(q, QubitRole::Data);
  }
  for (const auto& s : cnots) c.cnot(s.c, s.t);
  return c;
}

PauliString zmask(uint32_t n, std::initializer_list<uint32_t> qs) {
  uint64_t m = 0;
  for (uint32_t q : qs) m |= uint64_t(1) << q;
  return PauliString::z_mask(n, m);
}
PauliString xmask(uint32_t n, std::initializer_list<uint32_t> qs) {
  uint64_t m = 0;
  for (uint32_t q : qs) m |= uint64_t(1) << q;
  return PauliString::x_mask(n, m);
}

// Conjugates a preparation circuit by transversal Hadamard: prep bases swap
// and every CNOT reverses. Used for exact dual (|0> <-> |+>) constructions
// on the self-dual Steane code.
Circuit dualize(const Circuit& c) {
  Circuit d(c.n_qubits);
  d.roles = c.roles;
  for (const auto& l : c.locs) {
    switch (l.kind) {
      case LocKind::Prep0: d.prep_plus(l.q0); break;
      case LocKind::PrepPlus: d.prep0(l.q0); break;
      case LocKind::CNOT: d.cnot(l.q1, l.q0); break;
      default: throw std::logic_error("dualize: preparation circuits only");
    }
  }
  return d;
}

}  // namespace

EncodingCircuit encoding_steane(EncodedState s) {
  // |0>: X-plaquette fanout (pivots 0, 4, 6), verification Z0 Z2 Z5.
  Circuit zero = build_prep(7, {0, 4, 6},
                            {{0, 1}, {0, 2}, {0, 3},
                             {4, 1}, {4, 2}, {4, 5},
                             {6, 2}, {6, 3}, {6, 5}});
  EncodingCircuit e;
  if (s == EncodedState::Zero) {
    e.unitary = zero;
    e.verifications = {zmask(7, {0, 2, 5})};
  } else {
    e.unitary = dualize(zero);
    e.verifications = {xmask(7, {0, 2, 5})};
  }
  return e;
}

EncodingCircuit encoding_tetra(EncodedState s) {
  EncodingCircuit e;
  if (s == EncodedState::Zero) {
    // 22 CNOTs. Shared chains: qubit 1 fans the RY face into both the
    // yellow-cell row and the red row; qubit 13 fans {5,6,11} into the
    // blue and green rows. Orders keep every propagated X class either
    // weight <= 3 (correctable) or visible to the Z2 Z5 Z14 verification.
    e.unitary = build_prep(
        15, {1, 0, 10, 14},
        {
            {1, 8}, {1, 9}, {1, 11}, {1, 12},          // yellow bulk part
            {0, 1},                                     // red row joins
            {1, 2}, {1, 4}, {1, 5},                     // shared RY chain
            {0, 3}, {0, 6}, {0, 7},                     // red side part
            {10, 2}, {10, 3}, {10, 9}, {10, 13},        // blue row
            {14, 13},                                   // green joins 13
            {13, 5}, {13, 6}, {13, 11},                 // shared BG chain
            {14, 4}, {14, 7}, {14, 12},                 // green rest
        });
    e.verifications = {zmask(15, {2, 5, 14})};
  } else {
    // 25 CNOTs, five rows (four cells and the side logical X).
    e.unitary = build_prep(
        15, {10, 12, 14, 8, 0},
        {
            {10, 13}, {10, 2}, {10, 3}, {10, 9},        // blue row
            {12, 13},                                   // green joins 13
            {13, 5}, {13, 6}, {13, 11},                 // shared BG chain
            {8, 9}, {8, 11}, {8, 1},                    // yellow bulk part
            {0, 1},                                     // red row joins
            {1, 2}, {1, 4}, {1, 5},                     // shared RY chain
            {14, 10}, {14, 13}, {14, 0},                // logical-X row
            {12, 14}, {12, 4}, {12, 7},                 // green rest
            {0, 3}, {0, 6}, {0, 7},                     // shared side chain
            {8, 12},                                    // yellow rest
        });
    e.verifications = {xmask(15, {1, 3, 5, 7, 9, 12, 13})};
  }
  return e;
}

EncodingCircuit encoding_morphed(EncodedState s) {
  EncodingCircuit e;
  if (s == EncodedState::Zero) {
    // 11 CNOTs; qubit 2 fans into both the red and blue cell rows.
    e.unitary = build_prep(10, {7, 9, 8},
                           {
                               {7, 0}, {7, 1}, {7, 2},      // red cell
                               {9, 5}, {9, 6}, {9, 2},      // blue cell
                               {2, 3},                      // shared
                               {8, 1}, {8, 2}, {8, 4}, {8, 5},  // green cell
                           });
    e.verifications = {zmask(10, {0, 1, 5, 9})};
  } else {
    // 14 CNOTs, no verification (every propagated Z error is detectable
    // on the code afterwards).
    e.unitary = build_prep(10, {7, 9, 8, 3},
                           {
                               {7, 4}, {7, 5}, {7, 6},          // X-logical row
                               {9, 0}, {9, 1}, {9, 4},          // row {0,1,4,9}
                               {8, 1}, {8, 2}, {8, 4}, {8, 5},  // green cell
                               {3, 2}, {3, 5}, {3, 6}, {3, 9},  // blue cell
                           });
  }
  return e;
}

EncodingCircuit encoding_morphed_plus_compact() {
  // 13 CNOTs; the only dangerous propagated X class is the {2,3} pair from
  // the red-cell row, caught by the protocol's Z2 Z5 Z7 detection round.
  EncodingCircuit e;
  e.unitary = build_prep(10, {7, 9, 8, 2},
                         {
                             {7, 4}, {7, 5}, {7, 6},          // X-logical row
                             {9, 0}, {9, 1}, {9, 4},          // row {0,1,4,9}
                             {8, 0}, {8, 3}, {8, 6},          // row {0,3,6,8}
                             {2, 7}, {2, 0}, {2, 1}, {2, 3},  // red cell row
                         });
  return e;
}

EncodingCircuit encoding_bulk() {
  // Yellow-cell resource state: 12 CNOTs, then two weight-4 X
  // verifications. The CNOT graph avoids every data pair whose ZZ fault
  // escapes both verification operators.
  EncodingCircuit e;
  Circuit c(15);
  const uint32_t plus[] = {4, 1, 9, 8};
  const uint32_t zerov[] = {5, 2, 11, 12};
  for (uint32_t q : plus) { c.prep_plus(q); c.set_role(q, QubitRole::Data); }
  for (uint32_t q : zerov) { c.prep0(q); c.set_role(q, QubitRole::Data); }
  const CnotStep steps[] = {{4, 5}, {4, 11}, {4, 12},
                            {1, 2}, {1, 11}, {1, 12},
                            {9, 1}, {9, 5}, {9, 12},
                            {8, 1}, {8, 2}, {8, 9}};
  for (const auto& s : steps) c.cnot(s.c, s.t);
  e.unitary = c;
  e.verifications = {xmask(15, {1, 4, 8, 12}), xmask(15, {1, 2, 4, 5})};
  return e;
}

Circuit child_encoder() {
  // Ordered fanout of the logical-X rows then the cell row; Z duals land in
  // the child Z-stabilizer group automatically.
  Circuit c(8);
  for (uint32_t q : {3u, 5u, 6u, 7u}) c.prep0(q);
  c.prep_plus(4);
  const CnotStep steps[] = {
      {0, 3}, {0, 5}, {0, 6},                          // X1 = X0 X3 X5 X6
      {1, 3}, {1, 5}, {1, 7},                          // X2 = X1 X3 X5 X7
      {2, 5}, {2, 6}, {2, 7},                          // X3 = X2 X5 X6 X7
      {4, 0}, {4, 1}, {4, 2}, {4, 3}, {4, 5}, {4, 6}, {4, 7},  // SX row
  };
  for (const auto& s : steps) c.cnot(s.c, s.t);
  return c;
}

}  // namespace cswitch
