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

#ifndef QBOOL_GROVER_H
#define QBOOL_GROVER_H

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "qbool/anf.h"
#include "qbool/circuit.h"
#include "qbool/oracle.h"
#include "qbool/statevec.h"

namespace qbool {

/// theta with cos(theta/2) = sqrt((N-M)/N), i.e. 2 asin(sqrt(M/N)).
double rotation_angle(uint64_t N, uint64_t M);
/// round(arccos(sqrt(M/N)) / theta). Throws InputError unless 1 <= M < N.
uint64_t vanilla_iteration_count(uint64_t N, uint64_t M);
/// sin^2((2k+1) theta / 2): solution probability after k plain iterations.
double vanilla_solution_probability(uint64_t N, uint64_t M, uint64_t k);

/// Inversion about the mean on the data register: c_i -> 2<c> - c_i, applied
/// to the ancilla-zero block. Throws ContractError if more than 1e-8 of the
/// probability sits on nonzero ancillae.
void apply_diffusion(StateVector &state);
/// The same reflection as gates (H, X, MCZ, X, H on the data register plus an
/// X Z X Z phase fix on qubit 0), for depth accounting and circuit-only runs.
Circuit diffusion_circuit(uint32_t n_data, uint32_t n_anc);

enum class SplitStrategy { Cyclic, Random };

/// Which equations feed the oracle of each iteration.
struct SplitPlan {
    SplitStrategy strategy = SplitStrategy::Cyclic;
    /// Cyclic: iteration i uses groups[i mod groups.size()].
    std::vector<std::vector<size_t>> groups;
    /// Random: equations drawn per iteration, uniformly without replacement.
    size_t per_iteration = 0;
    uint64_t seed = 0;

    /// One group with every equation: plain Grover.
    static SplitPlan single(size_t num_equations);
    /// s groups, equation i in group i mod s.
    static SplitPlan round_robin(size_t num_equations, size_t s);
    static SplitPlan cyclic(std::vector<std::vector<size_t>> groups);
    static SplitPlan random(size_t per_iteration, uint64_t seed);

    /// Throws InputError if cyclic groups miss an equation or reference one
    /// that does not exist, or if a random draw is larger than the system.
    void validate(size_t num_equations) const;
    /// Largest group the plan can produce.
    size_t max_group_size(size_t num_equations) const;
};

struct RunOptions {
    OracleSpec oracle;
    bool compress_oracles = true;
    /// Apply the diffusion as gates instead of the exact linear map.
    bool circuit_diffusion = false;
    /// Cost model for the depth figures in IterationRecord.
    CostModel cost = CostModel::standard();
    uint32_t max_qubits = kMaxSimulatedQubits;
};

struct IterationRecord {
    /// Equation indices (into the system) used by this iteration's oracle.
    std::vector<size_t> group;
    uint32_t ancillae = 0;
    uint64_t oracle_depth = 0;
    uint64_t compressed_depth = 0;
    /// Solution probability after this iteration.
    double probability = 0;
};

struct RunResult {
    /// trace[k] is the probability of measuring a true solution after k
    /// iterations; trace[0] is the uniform start.
    std::vector<double> trace;
    std::vector<IterationRecord> iterations;
    Histogram histogram;
    std::vector<uint64_t> solutions;
    uint32_t ancillae = 0;
};

/// Called after every iteration with (iteration number from 1, state).
using IterationObserver = std::function<void(size_t, const StateVector &)>;

/// Prepare the uniform state, apply K iterations W O_i with O_i built from
/// the plan's group for iteration i, then sample `shots` measurements. The
/// measurement stream is seeded from `seed`, the group draws from plan.seed.
RunResult run_randomized(const BqeSystem &system, const SplitPlan &plan, uint64_t K, uint64_t shots, uint64_t seed,
                         const RunOptions &options = {}, const IterationObserver &observer = nullptr);
/// run_randomized with a single group holding every equation.
RunResult run_vanilla(const BqeSystem &system, uint64_t K, uint64_t shots, uint64_t seed,
                      const RunOptions &options = {}, const IterationObserver &observer = nullptr);

/// Assumed solution count of an r-equation group: M 2^(n-r) clamped to [M, 2^n].
uint64_t estimate_mtilde(uint64_t M, uint32_t n, uint64_t r);

/// Expected-amplitude model: one amplitude shared by the M solutions, one by
/// the N-M others, with every group assumed to have Mtilde solutions.
struct TwoLevelModel {
    uint64_t N = 0;
    uint64_t M = 0;
    uint64_t Mtilde = 0;

    /// Throws InputError unless 0 < M < N and M <= Mtilde <= N.
    void validate() const;
    /// Expected diagonal entry on non-solutions: (N + M - 2 Mtilde) / (N - M).
    double mean_nonsolution_sign() const;
};

/// (W O)^K applied to (1, 1)/sqrt(N) in the reduced basis.
std::array<double, 2> model_evolve(const TwoLevelModel &model, uint64_t K);
/// M * (first component)^2.
double model_solution_probability(const TwoLevelModel &model, uint64_t K);

/// 1 - (1 - p)^J.
double success_probability(double p, uint64_t J);

struct JKChoice {
    uint64_t J = 0;
    uint64_t K = 0;
    /// Single-shot model probability at K.
    double p = 0;
    /// 1 - (1 - p)^J.
    double P = 0;
};

/// Exhaustive search over J in [J_min, J_max], K in [1, K_max] for the
/// smallest J*K with p(K) > 1 - eps^(1/J). Ties go to smaller K, then smaller
/// J. Throws InfeasibleError (with the best P reached at J_max) if nothing
/// qualifies.
JKChoice optimize_jk(const TwoLevelModel &model, double eps, uint64_t J_max, uint64_t K_max, uint64_t J_min = 1);

}  // namespace qbool

#endif
