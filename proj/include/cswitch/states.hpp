#pragma once

#include <vector>

#include "cswitch/code.hpp"
#include "cswitch/statevector.hpp"
#include "cswitch/tableau.hpp"

namespace cswitch {

enum class LogicalLabel { Zero, One, Plus, Magic };

// Ideal encoded states built by projector application (independent of any
// encoding circuit). `layout` maps code qubit -> register qubit; register
// qubits outside the image stay |0>.
Statevector ideal_codestate(const CodeDefinition& code, LogicalLabel label,
                            const std::vector<uint32_t>& layout, uint32_t total_qubits);

// Identity layout helper.
std::vector<uint32_t> identity_layout(uint32_t n);

}  // namespace cswitch
