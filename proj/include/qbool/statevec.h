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

#ifndef QBOOL_STATEVEC_H
#define QBOOL_STATEVEC_H

#include <complex>
#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <vector>

#include "qbool/circuit.h"
#include "qbool/rng.h"

namespace qbool {

using Amplitude = std::complex<double>;
/// Measured data-register value -> number of shots that produced it.
using Histogram = std::map<uint64_t, uint64_t>;

/// Default ceiling on simulated qubits (2^26 amplitudes is 1 GiB).
inline constexpr uint32_t kMaxSimulatedQubits = 26;

/// Dense state vector over n_data + n_anc qubits; see bit_order.h for the
/// index convention.
class StateVector {
   public:
    /// |0...0>. Throws ResourceError above max_qubits.
    StateVector(uint32_t n_data, uint32_t n_anc, uint32_t max_qubits = kMaxSimulatedQubits);

    /// H on every data qubit, ancillae left at |0>.
    static StateVector uniform(uint32_t n_data, uint32_t n_anc, uint32_t max_qubits = kMaxSimulatedQubits);
    static StateVector basis(uint32_t n_data, uint32_t n_anc, uint64_t index);

    uint32_t n_data() const {
        return n_data_;
    }
    uint32_t n_anc() const {
        return n_anc_;
    }
    uint32_t num_qubits() const {
        return n_data_ + n_anc_;
    }
    std::span<const Amplitude> amplitudes() const {
        return amps_;
    }
    std::span<Amplitude> amplitudes() {
        return amps_;
    }
    Amplitude operator[](uint64_t index) const {
        return amps_[index];
    }

    /// Throws InputError for qubits outside the register.
    void apply(const Gate &gate);
    void apply(const Circuit &circuit);

    double norm_squared() const;
    /// Marginal probability of each data value (summed over ancillae).
    std::vector<double> data_probabilities() const;
    /// Probability mass sitting on nonzero ancilla configurations.
    double dirty_ancilla_mass() const;

    /// Debug dump: little-endian u64 qubit count, then (re, im) doubles.
    void write_binary(const std::filesystem::path &path) const;
    static StateVector read_binary(const std::filesystem::path &path);

   private:
    uint32_t n_data_;
    uint32_t n_anc_;
    std::vector<Amplitude> amps_;
};

inline StateVector init_uniform(uint32_t n_data, uint32_t n_anc) {
    return StateVector::uniform(n_data, n_anc);
}

/// `shots` i.i.d. samples of the data register.
Histogram measure_data(const StateVector &state, uint64_t shots, Rng &rng);
Histogram measure_data(const StateVector &state, uint64_t shots, uint64_t seed);

/// Total marginal probability of the given data values.
double solution_probability(const StateVector &state, std::span<const uint64_t> solutions);

}  // namespace qbool

#endif
