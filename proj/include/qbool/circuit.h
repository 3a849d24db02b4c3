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

#ifndef QBOOL_CIRCUIT_H
#define QBOOL_CIRCUIT_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qbool {

enum class GateKind : uint8_t { X, Z, H, CNOT, MCX, MCZ };

const char *gate_kind_name(GateKind kind);

/// One primitive gate. Controls are sorted and never contain the target.
/// MCZ is symmetric in its qubits; it is stored with the largest qubit as the
/// target so that equal gates compare equal.
struct Gate {
    GateKind kind = GateKind::X;
    std::vector<uint32_t> controls;
    uint32_t target = 0;

    static Gate x(uint32_t target);
    static Gate z(uint32_t target);
    static Gate h(uint32_t target);
    static Gate cnot(uint32_t control, uint32_t target);
    static Gate mcx(std::vector<uint32_t> controls, uint32_t target);
    static Gate mcz(std::vector<uint32_t> qubits);

    /// controls plus target, ascending.
    std::vector<uint32_t> qubits() const;
    /// X, CNOT and MCX: a NOT on the target conditioned on all controls.
    bool is_x_type() const {
        return kind == GateKind::X || kind == GateKind::CNOT || kind == GateKind::MCX;
    }

    bool operator==(const Gate &other) const = default;
};

/// Gate list over n_data data qubits [0, n_data) followed by n_anc ancillae.
class Circuit {
   public:
    Circuit() = default;
    Circuit(uint32_t n_data, uint32_t n_anc) : n_data_(n_data), n_anc_(n_anc) {
    }

    uint32_t n_data() const {
        return n_data_;
    }
    uint32_t n_anc() const {
        return n_anc_;
    }
    uint32_t num_qubits() const {
        return n_data_ + n_anc_;
    }
    /// Qubit index of the k-th ancilla, k in [1, n_anc].
    uint32_t ancilla(uint32_t k) const;
    bool is_ancilla(uint32_t qubit) const {
        return qubit >= n_data_ && qubit < num_qubits();
    }

    const std::vector<Gate> &gates() const {
        return gates_;
    }
    size_t size() const {
        return gates_.size();
    }
    bool empty() const {
        return gates_.empty();
    }

    /// Throws InputError if the gate touches a qubit outside the layout.
    void append(Gate gate);
    void append(std::span<const Gate> gates);

    bool operator==(const Circuit &other) const = default;

   private:
    uint32_t n_data_ = 0;
    uint32_t n_anc_ = 0;
    std::vector<Gate> gates_;
};

/// a followed by b. Throws InputError if the qubit layouts differ.
Circuit concat(const Circuit &a, const Circuit &b);
/// Gates in reverse order. Every supported gate is self-inverse, so this is
/// the inverse circuit.
Circuit reversed(const Circuit &c);

/// Depth charged per gate kind.
struct CostModel {
    uint32_t x = 1;
    uint32_t z = 1;
    uint32_t h = 1;
    uint32_t cnot = 1;
    /// MCX with k controls costs 2k-1 instead of 1.
    bool decomposed_mcx = false;
    /// Fixed MCZ cost C. When unset an MCZ costs 1 + (number of qubits it acts on).
    std::optional<uint32_t> mcz_constant;

    /// Every gate costs 1.
    static CostModel unit();
    /// Unit costs except MCZ, which is charged 1 + arity.
    static CostModel standard() {
        return {};
    }

    uint32_t cost(const Gate &gate) const;
    /// Throws InputError if any cost is zero.
    void validate() const;
    std::string describe() const;
};

/// ASAP layering in gate order: each gate starts when the last gate on any of
/// its qubits has finished and occupies them for its cost. Returns the
/// largest finishing time.
uint64_t depth(const Circuit &circuit, const CostModel &model = CostModel::standard());
uint64_t depth(std::span<const Gate> gates, uint32_t num_qubits, const CostModel &model = CostModel::standard());

/// Text form: header "qubits <n_data> <n_anc>", then one gate per line:
///   X 3 / Z 3 / H 3 / CNOT 0->5 / MCX 0,1->5 / MCZ 5,6,7
std::string to_text(const Circuit &circuit);
Circuit parse_circuit_text(std::string_view text);
std::string gate_str(const Gate &gate);

}  // namespace qbool

#endif
