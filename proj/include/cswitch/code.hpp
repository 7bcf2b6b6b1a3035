#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cswitch/pauli.hpp"

namespace cswitch {

// One CSS stabilizer code: generators split by type, plus chosen logical
// representatives and free-form metadata (color labels and the like).
struct CodeDefinition {
  std::string name;
  uint32_t n = 0;
  uint32_t k = 0;
  std::vector<PauliString> x_stabilizers;
  std::vector<PauliString> z_stabilizers;
  std::vector<PauliString> logical_x;
  std::vector<PauliString> logical_z;
  std::map<std::string, std::string> metadata;

  std::vector<uint64_t> x_stab_masks() const;
  std::vector<uint64_t> z_stab_masks() const;
};

struct CodeReport {
  uint32_t n = 0, k = 0, dx = 0, dz = 0;
};

// Validates structure (CSS purity, commutation, independence, logical
// pairing) and computes dx/dz by exhaustive coset enumeration (n <= 16).
// Throws std::runtime_error naming the violated invariant.
CodeReport verify_code(const CodeDefinition& code);

// Minimum-weight lookup decoder with deterministic lexicographic
// tie-breaking (smallest sorted support list among minimum-weight cosets).
class LookupDecoder {
 public:
  explicit LookupDecoder(const CodeDefinition& code);

  // Syndrome bit i = 1 iff the error anticommutes with generator i.
  uint64_t syndrome_of_x(uint64_t x_error_mask) const;  // vs z_stabilizers
  uint64_t syndrome_of_z(uint64_t z_error_mask) const;  // vs x_stabilizers

  // Minimum-weight error consistent with the syndrome.
  uint64_t decode_x(uint64_t syndrome) const;
  uint64_t decode_z(uint64_t syndrome) const;

  size_t num_z_generators() const { return z_masks_.size(); }
  size_t num_x_generators() const { return x_masks_.size(); }

 private:
  std::vector<uint64_t> x_masks_, z_masks_;
  std::vector<uint64_t> x_table_;  // indexed by Z-generator syndrome
  std::vector<uint64_t> z_table_;  // indexed by X-generator syndrome
};

// Plain-text stabilizer file (sections X / Z / LX / LZ, one operator per
// line in "X0 X1 ..." form).
std::string export_code(const CodeDefinition& code);
CodeDefinition import_code(const std::string& text);

}  // namespace cswitch
