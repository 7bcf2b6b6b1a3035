#include "cswitch/tableau.hpp"

#include <stdexcept>

namespace cswitch {

Tableau::Tableau(uint32_t n) : n_(n) {
  if (n > 64) throw std::invalid_argument("tableau supports n <= 64");
  destab_.reserve(n);
  stab_.reserve(n);
  for (uint32_t q = 0; q < n; ++q) {
    destab_.push_back(PauliString::single(n, q, 'X'));
    stab_.push_back(PauliString::single(n, q, 'Z'));
  }
}

void Tableau::conj_all(const CliffordGate& g) {
  for (auto& r : destab_) r = conjugate(g, r);
  for (auto& r : stab_) r = conjugate(g, r);
}

void Tableau::h(uint32_t q) { conj_all(CliffordGate::h(q)); }
void Tableau::s(uint32_t q) { conj_all(CliffordGate::s(q)); }
void Tableau::sdg(uint32_t q) { conj_all(CliffordGate::sdg(q)); }
void Tableau::x(uint32_t q) { conj_all(CliffordGate::x(q)); }
void Tableau::y(uint32_t q) { conj_all(CliffordGate::y(q)); }
void Tableau::z(uint32_t q) { conj_all(CliffordGate::z(q)); }
void Tableau::cnot(uint32_t c, uint32_t t) { conj_all(CliffordGate::cnot(c, t)); }

void Tableau::apply_pauli(const PauliString& p) {
  // Conjugation by a Pauli only flips signs of anticommuting rows.
  for (auto& r : destab_) {
    if (!commutes(r, p)) r.phase = (r.phase + 2) & 3;
  }
  for (auto& r : stab_) {
    if (!commutes(r, p)) r.phase = (r.phase + 2) & 3;
  }
}

int Tableau::measure_pauli(const PauliString& p, Rng& rng, int forced) {
  if (p.n != n_) throw std::invalid_argument("Pauli size mismatch");
  // Random case: some stabilizer anticommutes with p.
  std::optional<uint32_t> pivot;
  for (uint32_t i = 0; i < n_; ++i) {
    if (!commutes(stab_[i], p)) { pivot = i; break; }
  }
  if (pivot) {
    int outcome = forced != 0 ? (forced > 0 ? +1 : -1) : (rng.next_bool() ? -1 : +1);
    PauliString sp = stab_[*pivot];
    for (uint32_t i = 0; i < n_; ++i) {
      if (i != *pivot && !commutes(stab_[i], p)) stab_[i] = multiply(stab_[i], sp);
      if (!commutes(destab_[i], p)) destab_[i] = multiply(destab_[i], sp);
    }
    destab_[*pivot] = sp;
    PauliString new_stab = p;
    if (outcome < 0) new_stab.phase = (new_stab.phase + 2) & 3;
    stab_[*pivot] = new_stab;
    return outcome;
  }
  // Deterministic: p = +- product of stabilizers selected by destabilizer
  // anticommutation.
  PauliString prod = PauliString::identity(n_);
  for (uint32_t i = 0; i < n_; ++i) {
    if (!commutes(destab_[i], p)) prod = multiply(prod, stab_[i]);
  }
  if (prod.x != p.x || prod.z != p.z) throw std::logic_error("tableau inconsistency in deterministic measurement");
  uint32_t rel = (prod.phase + 4u - p.phase) & 3u;
  int outcome;
  if (rel == 0) outcome = +1;
  else if (rel == 2) outcome = -1;
  else throw std::logic_error("non-hermitian phase relation in measurement");
  if (forced != 0 && forced != outcome) throw std::runtime_error("forced measurement on zero-probability branch");
  return outcome;
}

int Tableau::measure_z(uint32_t q, Rng& rng, int forced) {
  // forced: -1 = random, 0/1 = post-select that bit. Bit b <-> eigenvalue
  // (-1)^b of Z.
  int f = forced < 0 ? 0 : (forced == 0 ? +1 : -1);
  int eig = measure_pauli(PauliString::single(n_, q, 'Z'), rng, f);
  return eig > 0 ? 0 : 1;
}

int Tableau::measure_x(uint32_t q, Rng& rng, int forced) {
  int f = forced < 0 ? 0 : (forced == 0 ? +1 : -1);
  int eig = measure_pauli(PauliString::single(n_, q, 'X'), rng, f);
  return eig > 0 ? 0 : 1;
}

void Tableau::reset_to_zero(uint32_t q, Rng& rng) {
  if (measure_z(q, rng)) x(q);
}

int Tableau::expectation(const PauliString& p) const {
  if (p.n != n_) throw std::invalid_argument("Pauli size mismatch");
  for (uint32_t i = 0; i < n_; ++i) {
    if (!commutes(stab_[i], p)) return 0;
  }
  PauliString prod = PauliString::identity(n_);
  for (uint32_t i = 0; i < n_; ++i) {
    if (!commutes(destab_[i], p)) prod = multiply(prod, stab_[i]);
  }
  if (prod.x != p.x || prod.z != p.z) throw std::logic_error("tableau inconsistency in expectation");
  uint32_t rel = (prod.phase + 4u - p.phase) & 3u;
  if (rel == 0) return +1;
  if (rel == 2) return -1;
  throw std::logic_error("non-hermitian phase relation in expectation");
}

}  // namespace cswitch
