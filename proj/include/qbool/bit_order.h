// Copyright 2026 The qbool Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QBOOL_BIT_ORDER_H
#define QBOOL_BIT_ORDER_H

#include <cstdint>

namespace qbool {

// Qubit 0 (and variable 0) is the most significant bit of a basis index.
// A basis index over n_data + n_anc qubits is (data << n_anc) | ancilla.
// Every module goes through these helpers; do not shift by hand.

inline uint64_t qubit_bit(uint32_t qubit, uint32_t num_qubits) {
    return uint64_t{1} << (num_qubits - 1 - qubit);
}

inline bool qubit_is_set(uint64_t index, uint32_t qubit, uint32_t num_qubits) {
    return (index & qubit_bit(qubit, num_qubits)) != 0;
}

inline uint64_t basis_index(uint64_t data, uint64_t ancilla, uint32_t num_ancillae) {
    return (data << num_ancillae) | ancilla;
}

inline uint64_t data_part(uint64_t index, uint32_t num_ancillae) {
    return index >> num_ancillae;
}

inline uint64_t ancilla_part(uint64_t index, uint32_t num_ancillae) {
    return index & ((uint64_t{1} << num_ancillae) - 1);
}

}  // namespace qbool

#endif
