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

#ifndef QBOOL_COMPRESS_H
#define QBOOL_COMPRESS_H

#include <cstddef>
#include <span>
#include <vector>

#include "qbool/circuit.h"

namespace qbool {

/// Half-open gate-index range [begin, end) of mutually commuting gates.
struct CommutableSegment {
    size_t begin = 0;
    size_t end = 0;

    size_t size() const {
        return end - begin;
    }
    bool operator==(const CommutableSegment &other) const = default;
};

/// Whether a gate may sit inside a commutable segment: an X-type gate whose
/// target is an ancilla and whose controls are all data qubits. Such gates
/// only read data qubits and only write ancillae, so any two of them commute.
bool is_commutable_gate(const Gate &gate, uint32_t n_data);

/// Maximal runs of commutable gates. Everything between runs (H, Z, MCZ, and
/// MCX gates reading ancillae) is passed through untouched.
std::vector<CommutableSegment> segment(const Circuit &circuit);

/// Order used before cancellation: controls (lexicographic), target, kind.
bool canonical_less(const Gate &a, const Gate &b);

/// Sorts a segment canonically and removes adjacent identical pairs until
/// none remain. Every gate here is self-inverse, so each distinct gate
/// survives iff it occurred an odd number of times.
std::vector<Gate> cancel_pairs(std::vector<Gate> gates);

/// Greedy layering: sweep the remaining gates in order, taking each one whose
/// qubits are disjoint from those already taken in this sweep; repeat until
/// empty. Returns the gates layer by layer.
std::vector<Gate> relayer(std::span<const Gate> gates);

/// Segment, cancel and relayer every commutable run, leaving boundaries in
/// place. A run keeps its pre-layering order if layering would make the
/// whole circuit deeper, so the result is never deeper than the input under
/// `model`.
Circuit compress(const Circuit &circuit, const CostModel &model = CostModel::unit());

}  // namespace qbool

#endif
