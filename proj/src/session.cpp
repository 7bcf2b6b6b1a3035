#include "cswitch/session.hpp"

#include <stdexcept>

namespace cswitch {

EngineSession::EngineSession(uint32_t n, Backend backend, const NoiseModel& model,
                             uint64_t root_seed, uint64_t shot_index)
    : n_(n),
      backend_(backend),
      model_(model),
      fault_rng_(Rng::for_shot(root_seed, shot_index, 0)),
      measure_rng_(Rng::for_shot(root_seed, shot_index, 1)) {
  if (backend_ == Backend::Tableau) tab_ = std::make_unique<Tableau>(n);
  else sv_ = std::make_unique<Statevector>(n);
}

EngineSession EngineSession::recorder(uint32_t n, Backend backend, uint64_t seed) {
  EngineSession s(n, backend, NoiseModel::zero(), seed, 0);
  s.recording_ = true;
  return s;
}

void EngineSession::force_single_fault(const Fault& f) {
  forced_ = f;
  model_ = NoiseModel::zero();
}

void EngineSession::note_location(LocKind kind, uint32_t q0, uint32_t q1) {
  if (recording_) trace_.push_back({kind, q0, q1, -1});
  ++loc_counter_;
}

std::optional<PauliString> EngineSession::sample_gate_fault(LocKind kind, uint32_t q0, uint32_t q1) {
  uint32_t here = loc_counter_ - 1;  // called right after note_location
  if (forced_ && forced_->location == here && !forced_->measurement_flip) {
    return forced_->op;
  }
  double r = model_.rate_for(kind);
  if (r > 0.0 && fault_rng_.next_double() < r) {
    switch (kind) {
      case LocKind::CNOT: return sample_pauli2(n_, q0, q1, fault_rng_);
      case LocKind::Prep0: return PauliString::single(n_, q0, 'X');
      case LocKind::PrepPlus: return PauliString::single(n_, q0, 'Z');
      default: return sample_pauli1(n_, q0, fault_rng_);
    }
  }
  return std::nullopt;
}

bool EngineSession::sample_flip(LocKind kind) {
  uint32_t here = loc_counter_ - 1;
  if (forced_ && forced_->location == here && forced_->measurement_flip) return true;
  double r = model_.rate_for(kind);
  return r > 0.0 && fault_rng_.next_double() < r;
}

void EngineSession::apply_fault(const PauliString& p) {
  if (tab_) tab_->apply_pauli(p);
  else sv_->apply_pauli(p);
}

void EngineSession::prep0(uint32_t q) {
  note_location(LocKind::Prep0, q);
  if (tab_) tab_->reset_to_zero(q, measure_rng_);
  else sv_->reset_to_zero(q, measure_rng_);
  if (auto f = sample_gate_fault(LocKind::Prep0, q, 0)) apply_fault(*f);
}

void EngineSession::prep_plus(uint32_t q) {
  note_location(LocKind::PrepPlus, q);
  if (tab_) {
    tab_->reset_to_zero(q, measure_rng_);
    tab_->h(q);
  } else {
    sv_->reset_to_zero(q, measure_rng_);
    sv_->h(q);
  }
  if (auto f = sample_gate_fault(LocKind::PrepPlus, q, 0)) apply_fault(*f);
}

int EngineSession::measure_z(uint32_t q) {
  note_location(LocKind::MeasureZ, q);
  int bit = tab_ ? tab_->measure_z(q, measure_rng_) : sv_->measure_z(q, measure_rng_);
  if (sample_flip(LocKind::MeasureZ)) bit ^= 1;
  return bit;
}

int EngineSession::measure_x(uint32_t q) {
  note_location(LocKind::MeasureX, q);
  int bit = tab_ ? tab_->measure_x(q, measure_rng_) : sv_->measure_x(q, measure_rng_);
  if (sample_flip(LocKind::MeasureX)) bit ^= 1;
  return bit;
}

#define CSWITCH_GATE(NAME, KIND)                                  \
  void EngineSession::NAME(uint32_t q) {                          \
    note_location(LocKind::KIND, q);                              \
    if (tab_) tab_->NAME(q); else sv_->NAME(q);                   \
    if (auto f = sample_gate_fault(LocKind::KIND, q, 0)) apply_fault(*f); \
  }

CSWITCH_GATE(h, H)
CSWITCH_GATE(s, S)
CSWITCH_GATE(sdg, Sdg)
#undef CSWITCH_GATE

void EngineSession::t(uint32_t q) {
  note_location(LocKind::T, q);
  if (tab_) throw std::runtime_error("backend mismatch: T gate on tableau backend");
  sv_->t(q);
  if (auto f = sample_gate_fault(LocKind::T, q, 0)) apply_fault(*f);
}

void EngineSession::tdg(uint32_t q) {
  note_location(LocKind::Tdg, q);
  if (tab_) throw std::runtime_error("backend mismatch: Tdg gate on tableau backend");
  sv_->tdg(q);
  if (auto f = sample_gate_fault(LocKind::Tdg, q, 0)) apply_fault(*f);
}

void EngineSession::cnot(uint32_t c, uint32_t t) {
  note_location(LocKind::CNOT, c, t);
  if (tab_) tab_->cnot(c, t); else sv_->cnot(c, t);
  if (auto f = sample_gate_fault(LocKind::CNOT, c, t)) apply_fault(*f);
}

void EngineSession::play(const Circuit& c, std::vector<int>* bits) {
  if (c.n_qubits > n_) throw std::invalid_argument("fragment larger than session register");
  for (const auto& l : c.locs) {
    switch (l.kind) {
      case LocKind::Prep0: prep0(l.q0); break;
      case LocKind::PrepPlus: prep_plus(l.q0); break;
      case LocKind::MeasureZ: { int b = measure_z(l.q0); if (bits) bits->push_back(b); break; }
      case LocKind::MeasureX: { int b = measure_x(l.q0); if (bits) bits->push_back(b); break; }
      case LocKind::H: h(l.q0); break;
      case LocKind::S: s(l.q0); break;
      case LocKind::Sdg: sdg(l.q0); break;
      case LocKind::T: t(l.q0); break;
      case LocKind::Tdg: tdg(l.q0); break;
      case LocKind::CNOT: cnot(l.q0, l.q1); break;
      case LocKind::Idle: break;
    }
  }
}

void EngineSession::apply_pauli_exact(const PauliString& p) {
  if (tab_) tab_->apply_pauli(p);
  else sv_->apply_pauli(p);
}

int EngineSession::measure_pauli_exact(const PauliString& p) {
  return tab_ ? tab_->measure_pauli(p, measure_rng_) : sv_->measure_pauli(p, measure_rng_);
}

void EngineSession::reset_exact(uint32_t q) {
  if (tab_) tab_->reset_to_zero(q, measure_rng_);
  else sv_->reset_to_zero(q, measure_rng_);
}

double EngineSession::expectation_exact(const PauliString& p) const {
  return tab_ ? static_cast<double>(tab_->expectation(p)) : sv_->expectation(p);
}

double EngineSession::fidelity_exact(const Statevector& target) const {
  if (!sv_) throw std::runtime_error("fidelity requires the statevector backend");
  return sv_->fidelity(target);
}

}  // namespace cswitch
