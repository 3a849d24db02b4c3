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

#ifndef QBOOL_ORACLE_H
#define QBOOL_ORACLE_H

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "qbool/anf.h"
#include "qbool/circuit.h"

namespace qbool {

/// Ancillae are numbered 1..m in the constructions below; ancilla k lives on
/// qubit n_data + k - 1.

/// Gates that XOR (f(x) + 1) into `target`: one CNOT/MCX per monomial (X for
/// the constant term) and a trailing X. From |0> the target ends in |1>
/// exactly when f(x) = 0. The zero polynomial yields a lone X.
std::vector<Gate> function_controlled_gates(const AnfPoly &f, uint32_t n_data, uint32_t n_anc, uint32_t target);

/// Equations handed out in system order. Popping an exhausted queue returns
/// nullopt, which stands for the trivial equation 0 = 0.
class EquationQueue {
   public:
    explicit EquationQueue(std::vector<AnfPoly> equations) : pending_(equations.begin(), equations.end()) {
    }
    std::optional<AnfPoly> pop();
    bool empty() const {
        return pending_.empty();
    }
    size_t remaining() const {
        return pending_.size();
    }
    size_t popped() const {
        return popped_;
    }

   private:
    std::deque<AnfPoly> pending_;
    size_t popped_ = 0;
};

/// Counters filled in while building; used to check the closed forms.
struct OracleStats {
    /// Real equations taken from the queue.
    size_t equations_consumed = 0;
    /// Function-controlled blocks emitted, counting uncompute copies and
    /// blocks for padded (trivial) equations.
    size_t blocks = 0;
};

/// W-cycle block U(level, m): leaves ancilla m XORed with "all equations
/// behind this block hold" and every other ancilla restored. level > m is
/// treated as level m. If the queue is already empty the block reduces to an
/// X on ancilla m, so it reads as satisfied.
std::vector<Gate> ucircuit(uint32_t level, uint32_t m, EquationQueue &queue, uint32_t n_data, uint32_t n_anc,
                           OracleStats *stats = nullptr);

/// |x>|0> -> -|x>|0> when f(x) = 0, else unchanged. One ancilla.
Circuit single_equation_oracle(const AnfPoly &f, uint32_t n);

/// One ancilla per equation, MCZ across them, then uncompute. Slots beyond R
/// are padded with an X so the MCZ still sees |1>. Throws CapacityError if
/// m < R.
Circuit vanilla_stack_oracle(const BqeSystem &system, uint32_t m, OracleStats *stats = nullptr);

/// Level-`level` recursive oracle on m ancillae; level 1 is the stack
/// construction. Throws CapacityError (with the minimal m) if the system has
/// more than capacity_F(level, m) equations.
Circuit build_oracle(uint32_t level, uint32_t m, const BqeSystem &system, OracleStats *stats = nullptr);

/// All equations multiplied into one polynomial, then a single-equation oracle.
/// Exponentially many terms in general; kept for comparison only.
Circuit product_oracle(const BqeSystem &system);

enum class OracleStyle { Product, Stack, Recursive };

struct OracleSpec {
    OracleStyle style = OracleStyle::Recursive;
    uint32_t level = 2;
    /// Ancilla count; 0 picks the smallest m that fits the system.
    uint32_t m = 0;
};

Circuit compile_oracle(const BqeSystem &system, const OracleSpec &spec, OracleStats *stats = nullptr);
/// Ancillae `spec` will use for `num_equations` equations.
uint32_t resolve_ancillae(const OracleSpec &spec, size_t num_equations);

/// Equations a U(level, m) block can hold.
uint64_t capacity_N(uint32_t level, uint32_t m);
/// Equations a level-`level` oracle on m ancillae can hold.
uint64_t capacity_F(uint32_t level, uint32_t m);
/// Function-controlled blocks inside U(level, m).
uint64_t depth_K(uint32_t level, uint32_t m);
/// Function-controlled blocks inside a level-`level` oracle on m ancillae.
uint64_t depth_G(uint32_t level, uint32_t m);
/// Smallest m with capacity_F(level, m) >= num_equations.
uint32_t minimal_ancillae(uint32_t level, uint64_t num_equations);

}  // namespace qbool

#endif
