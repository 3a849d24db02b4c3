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

#include "qbool/statevec.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>

#include "qbool/bit_order.h"
#include "qbool/error.h"

namespace qbool {

namespace {

// Spreads the bits of `compact` over the positions left free by `fixed_bits`
// (which must be ascending bit positions).
inline uint64_t deposit(uint64_t compact, std::span<const uint32_t> fixed_bits) {
    for (uint32_t p : fixed_bits) {
        uint64_t low = compact & ((uint64_t{1} << p) - 1);
        compact = ((compact >> p) << (p + 1)) | low;
    }
    return compact;
}

// Calls f(index) for every basis index where each bit in `set_bits` is 1 and
// each bit in `clear_bits` is 0.
template <typename F>
void for_each_index(uint32_t num_qubits, uint64_t set_bits, uint64_t clear_bits, F &&f) {
    uint64_t fixed = set_bits | clear_bits;
    std::vector<uint32_t> positions;
    for (uint64_t m = fixed; m; m &= m - 1) {
        positions.push_back(static_cast<uint32_t>(std::countr_zero(m)));
    }
    uint64_t count = uint64_t{1} << (num_qubits - positions.size());
    for (uint64_t k = 0; k < count; k++) {
        f(deposit(k, positions) | set_bits);
    }
}

}  // namespace

StateVector::StateVector(uint32_t n_data, uint32_t n_anc, uint32_t max_qubits) : n_data_(n_data), n_anc_(n_anc) {
    if (n_data + n_anc > max_qubits) {
        throw ResourceError("simulating " + std::to_string(n_data + n_anc) + " qubits exceeds the limit of " +
                            std::to_string(max_qubits));
    }
    amps_.assign(uint64_t{1} << (n_data + n_anc), Amplitude{0, 0});
    amps_[0] = 1;
}

StateVector StateVector::uniform(uint32_t n_data, uint32_t n_anc, uint32_t max_qubits) {
    StateVector state(n_data, n_anc, max_qubits);
    state.amps_[0] = 0;
    double a = std::pow(2.0, -0.5 * n_data);
    for (uint64_t x = 0; x < (uint64_t{1} << n_data); x++) {
        state.amps_[basis_index(x, 0, n_anc)] = a;
    }
    return state;
}

StateVector StateVector::basis(uint32_t n_data, uint32_t n_anc, uint64_t index) {
    StateVector state(n_data, n_anc);
    if (index >= state.amps_.size()) {
        throw InputError("basis index out of range");
    }
    state.amps_[0] = 0;
    state.amps_[index] = 1;
    return state;
}

void StateVector::apply(const Gate &gate) {
    uint32_t n = num_qubits();
    if (gate.target >= n || std::any_of(gate.controls.begin(), gate.controls.end(), [&](uint32_t c) {
            return c >= n;
        })) {
        throw InputError("gate " + gate_str(gate) + " is outside a " + std::to_string(n) + "-qubit state");
    }
    uint64_t control_mask = 0;
    for (uint32_t c : gate.controls) {
        control_mask |= qubit_bit(c, n);
    }
    uint64_t target_bit = qubit_bit(gate.target, n);

    switch (gate.kind) {
        case GateKind::X:
        case GateKind::CNOT:
        case GateKind::MCX:
            for_each_index(n, control_mask, target_bit, [&](uint64_t i) {
                std::swap(amps_[i], amps_[i | target_bit]);
            });
            break;
        case GateKind::Z:
        case GateKind::MCZ:
            for_each_index(n, control_mask | target_bit, 0, [&](uint64_t i) {
                amps_[i] = -amps_[i];
            });
            break;
        case GateKind::H: {
            const double s = 1.0 / std::sqrt(2.0);
            for_each_index(n, 0, target_bit, [&](uint64_t i) {
                Amplitude a0 = amps_[i];
                Amplitude a1 = amps_[i | target_bit];
                amps_[i] = s * (a0 + a1);
                amps_[i | target_bit] = s * (a0 - a1);
            });
            break;
        }
    }
}

void StateVector::apply(const Circuit &circuit) {
    if (circuit.num_qubits() != num_qubits()) {
        throw InputError("circuit and state have different qubit counts");
    }
    for (const auto &g : circuit.gates()) {
        apply(g);
    }
}

double StateVector::norm_squared() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

std::vector<double> StateVector::data_probabilities() const {
    std::vector<double> probs(uint64_t{1} << n_data_, 0.0);
    for (uint64_t i = 0; i < amps_.size(); i++) {
        probs[data_part(i, n_anc_)] += std::norm(amps_[i]);
    }
    return probs;
}

double StateVector::dirty_ancilla_mass() const {
    double total = 0;
    for (uint64_t i = 0; i < amps_.size(); i++) {
        if (ancilla_part(i, n_anc_) != 0) {
            total += std::norm(amps_[i]);
        }
    }
    return total;
}

void StateVector::write_binary(const std::filesystem::path &path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw InputError("cannot write " + path.string());
    }
    static_assert(std::endian::native == std::endian::little, "state dumps assume a little-endian host");
    uint64_t count = num_qubits();
    out.write(reinterpret_cast<const char *>(&count), sizeof(count));
    for (const auto &a : amps_) {
        double parts[2] = {a.real(), a.imag()};
        out.write(reinterpret_cast<const char *>(parts), sizeof(parts));
    }
}

StateVector StateVector::read_binary(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open " + path.string());
    }
    uint64_t count = 0;
    in.read(reinterpret_cast<char *>(&count), sizeof(count));
    if (!in || count > kMaxSimulatedQubits) {
        throw InputError(path.string() + ": bad qubit count");
    }
    // The dump does not record the data/ancilla split; everything reads back as data.
    StateVector state(static_cast<uint32_t>(count), 0);
    for (auto &a : state.amps_) {
        double parts[2];
        in.read(reinterpret_cast<char *>(parts), sizeof(parts));
        a = {parts[0], parts[1]};
    }
    if (!in) {
        throw InputError(path.string() + ": truncated state dump");
    }
    return state;
}

Histogram measure_data(const StateVector &state, uint64_t shots, Rng &rng) {
    if (shots == 0) {
        throw InputError("need at least one shot");
    }
    std::vector<double> cdf = state.data_probabilities();
    for (size_t k = 1; k < cdf.size(); k++) {
        cdf[k] += cdf[k - 1];
    }
    double total = cdf.back();
    Histogram histogram;
    for (uint64_t s = 0; s < shots; s++) {
        double u = rng.uniform01() * total;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        uint64_t outcome = std::min<uint64_t>(it - cdf.begin(), cdf.size() - 1);
        histogram[outcome]++;
    }
    return histogram;
}

Histogram measure_data(const StateVector &state, uint64_t shots, uint64_t seed) {
    Rng rng(seed);
    return measure_data(state, shots, rng);
}

double solution_probability(const StateVector &state, std::span<const uint64_t> solutions) {
    double total = 0;
    uint64_t anc_states = uint64_t{1} << state.n_anc();
    for (uint64_t x : solutions) {
        if (x >> state.n_data()) {
            throw InputError("solution index " + std::to_string(x) + " is outside the data register");
        }
        for (uint64_t a = 0; a < anc_states; a++) {
            total += std::norm(state[basis_index(x, a, state.n_anc())]);
        }
    }
    return total;
}

}  // namespace qbool
