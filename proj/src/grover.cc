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

#include "qbool/grover.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "qbool/bit_order.h"
#include "qbool/compress.h"
#include "qbool/error.h"

namespace qbool {

namespace {

void check_counts(uint64_t N, uint64_t M) {
    if (M == 0 || M >= N) {
        throw InputError("need 1 <= M < N (got N=" + std::to_string(N) + ", M=" + std::to_string(M) + ")");
    }
}

}  // namespace

double rotation_angle(uint64_t N, uint64_t M) {
    check_counts(N, M);
    return 2.0 * std::asin(std::sqrt(static_cast<double>(M) / static_cast<double>(N)));
}

uint64_t vanilla_iteration_count(uint64_t N, uint64_t M) {
    double theta = rotation_angle(N, M);
    double ratio = std::acos(std::sqrt(static_cast<double>(M) / static_cast<double>(N))) / theta;
    return static_cast<uint64_t>(std::llround(ratio));
}

double vanilla_solution_probability(uint64_t N, uint64_t M, uint64_t k) {
    double s = std::sin((2.0 * static_cast<double>(k) + 1.0) * rotation_angle(N, M) / 2.0);
    return s * s;
}

void apply_diffusion(StateVector &state) {
    double dirty = state.dirty_ancilla_mass();
    if (dirty > 1e-8) {
        throw ContractError("diffusion needs clean ancillae, found mass " + std::to_string(dirty) +
                            " on nonzero ancilla states");
    }
    uint32_t n_anc = state.n_anc();
    uint64_t size = uint64_t{1} << state.n_data();
    auto amps = state.amplitudes();
    Amplitude sum = 0;
    for (uint64_t x = 0; x < size; x++) {
        sum += amps[basis_index(x, 0, n_anc)];
    }
    Amplitude twice_mean = 2.0 * sum / static_cast<double>(size);
    for (uint64_t x = 0; x < size; x++) {
        Amplitude &c = amps[basis_index(x, 0, n_anc)];
        c = twice_mean - c;
    }
}

Circuit diffusion_circuit(uint32_t n_data, uint32_t n_anc) {
    if (n_data == 0) {
        throw InputError("diffusion needs at least one data qubit");
    }
    Circuit c(n_data, n_anc);
    std::vector<uint32_t> data;
    for (uint32_t q = 0; q < n_data; q++) {
        data.push_back(q);
    }
    for (uint32_t q : data) {
        c.append(Gate::h(q));
    }
    for (uint32_t q : data) {
        c.append(Gate::x(q));
    }
    c.append(Gate::mcz(data));
    for (uint32_t q : data) {
        c.append(Gate::x(q));
    }
    for (uint32_t q : data) {
        c.append(Gate::h(q));
    }
    // The gates above give I - 2|psi><psi|; (Z X)^2 = -I restores the sign.
    c.append(Gate::x(0));
    c.append(Gate::z(0));
    c.append(Gate::x(0));
    c.append(Gate::z(0));
    return c;
}

SplitPlan SplitPlan::single(size_t num_equations) {
    return round_robin(num_equations, 1);
}

SplitPlan SplitPlan::round_robin(size_t num_equations, size_t s) {
    if (s == 0 || s > std::max<size_t>(num_equations, 1)) {
        throw InputError("group count must be between 1 and the number of equations");
    }
    SplitPlan plan;
    plan.strategy = SplitStrategy::Cyclic;
    plan.groups.resize(s);
    for (size_t i = 0; i < num_equations; i++) {
        plan.groups[i % s].push_back(i);
    }
    return plan;
}

SplitPlan SplitPlan::cyclic(std::vector<std::vector<size_t>> groups) {
    SplitPlan plan;
    plan.strategy = SplitStrategy::Cyclic;
    plan.groups = std::move(groups);
    for (auto &g : plan.groups) {
        std::sort(g.begin(), g.end());
        g.erase(std::unique(g.begin(), g.end()), g.end());
    }
    return plan;
}

SplitPlan SplitPlan::random(size_t per_iteration, uint64_t seed) {
    SplitPlan plan;
    plan.strategy = SplitStrategy::Random;
    plan.per_iteration = per_iteration;
    plan.seed = seed;
    return plan;
}

void SplitPlan::validate(size_t num_equations) const {
    if (strategy == SplitStrategy::Random) {
        if (per_iteration == 0 || per_iteration > num_equations) {
            throw InputError("random plan draws " + std::to_string(per_iteration) + " of " +
                             std::to_string(num_equations) + " equations");
        }
        return;
    }
    if (groups.empty()) {
        throw InputError("cyclic plan has no groups");
    }
    std::vector<bool> covered(num_equations, false);
    for (const auto &g : groups) {
        for (size_t i : g) {
            if (i >= num_equations) {
                throw InputError("plan references equation " + std::to_string(i) + " of " +
                                 std::to_string(num_equations));
            }
            covered[i] = true;
        }
    }
    if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
        throw InputError("cyclic groups must cover every equation");
    }
}

size_t SplitPlan::max_group_size(size_t num_equations) const {
    if (strategy == SplitStrategy::Random) {
        return std::min(per_iteration, num_equations);
    }
    size_t result = 0;
    for (const auto &g : groups) {
        result = std::max(result, g.size());
    }
    return result;
}

namespace {

struct PreparedOracle {
    Circuit circuit;
    uint32_t ancillae = 0;
    uint64_t depth = 0;
    uint64_t compressed_depth = 0;
};

Circuit widen(const Circuit &c, uint32_t n_anc) {
    Circuit wide(c.n_data(), n_anc);
    wide.append(c.gates());
    return wide;
}

}  // namespace

RunResult run_randomized(const BqeSystem &system, const SplitPlan &plan, uint64_t K, uint64_t shots, uint64_t seed,
                         const RunOptions &options, const IterationObserver &observer) {
    system.validate();
    size_t R = system.equations.size();
    plan.validate(R);

    RunResult result;
    result.solutions = brute_force_solve(system);
    result.ancillae = resolve_ancillae(options.oracle, plan.max_group_size(R));

    std::map<std::vector<size_t>, PreparedOracle> cache;
    auto prepare = [&](const std::vector<size_t> &group) -> const PreparedOracle & {
        auto it = cache.find(group);
        if (it != cache.end()) {
            return it->second;
        }
        BqeSystem sub = system.subsystem(group);
        PreparedOracle p;
        Circuit oracle = compile_oracle(sub, options.oracle);
        p.ancillae = oracle.n_anc();
        p.depth = depth(oracle, options.cost);
        if (options.compress_oracles) {
            oracle = compress(oracle, options.cost);
        }
        p.compressed_depth = depth(oracle, options.cost);
        result.ancillae = std::max(result.ancillae, p.ancillae);
        p.circuit = std::move(oracle);
        return cache.emplace(group, std::move(p)).first->second;
    };

    // Build the oracles up front so the register width is known.
    Rng plan_rng(plan.seed);
    std::vector<std::vector<size_t>> schedule;
    schedule.reserve(K);
    for (uint64_t i = 0; i < K; i++) {
        std::vector<size_t> group;
        if (plan.strategy == SplitStrategy::Cyclic) {
            group = plan.groups[i % plan.groups.size()];
        } else {
            for (uint64_t e : plan_rng.sample_without_replacement(R, plan.per_iteration)) {
                group.push_back(static_cast<size_t>(e));
            }
            std::sort(group.begin(), group.end());
        }
        prepare(group);
        schedule.push_back(std::move(group));
    }

    uint32_t n_anc = result.ancillae;
    if (system.n + n_anc > options.max_qubits) {
        throw ResourceError("simulation needs " + std::to_string(system.n + n_anc) + " qubits, limit is " +
                            std::to_string(options.max_qubits));
    }
    StateVector state = StateVector::uniform(system.n, n_anc, options.max_qubits);
    Circuit diffusion = options.circuit_diffusion ? diffusion_circuit(system.n, n_anc) : Circuit();
    result.trace.push_back(solution_probability(state, result.solutions));

    for (uint64_t i = 0; i < K; i++) {
        const PreparedOracle &oracle = cache.at(schedule[i]);
        state.apply(oracle.ancillae == n_anc ? oracle.circuit : widen(oracle.circuit, n_anc));
        if (options.circuit_diffusion) {
            state.apply(diffusion);
        } else {
            apply_diffusion(state);
        }
        double p = solution_probability(state, result.solutions);
        result.trace.push_back(p);
        result.iterations.push_back({schedule[i], oracle.ancillae, oracle.depth, oracle.compressed_depth, p});
        if (observer) {
            observer(static_cast<size_t>(i + 1), state);
        }
    }

    if (shots > 0) {
        result.histogram = measure_data(state, shots, seed);
    }
    return result;
}

RunResult run_vanilla(const BqeSystem &system, uint64_t K, uint64_t shots, uint64_t seed, const RunOptions &options,
                      const IterationObserver &observer) {
    return run_randomized(system, SplitPlan::single(system.equations.size()), K, shots, seed, options, observer);
}

uint64_t estimate_mtilde(uint64_t M, uint32_t n, uint64_t r) {
    if (r == 0) {
        throw InputError("a group needs at least one equation");
    }
    uint64_t N = uint64_t{1} << n;
    if (r >= n) {
        return std::min(M, N);
    }
    uint64_t scale = uint64_t{1} << (n - r);
    // Saturate instead of overflowing; the clamp to N follows anyway.
    uint64_t estimate = M > N / scale ? N : M * scale;
    return std::clamp(estimate, M, N);
}

void TwoLevelModel::validate() const {
    if (M == 0 || M >= N || Mtilde < M || Mtilde > N) {
        throw InputError("two-level model needs 0 < M < N and M <= Mtilde <= N");
    }
}

double TwoLevelModel::mean_nonsolution_sign() const {
    double n = static_cast<double>(N);
    double m = static_cast<double>(M);
    double mt = static_cast<double>(Mtilde);
    return (n + m - 2.0 * mt) / (n - m);
}

std::array<double, 2> model_evolve(const TwoLevelModel &model, uint64_t K) {
    model.validate();
    double n = static_cast<double>(model.N);
    double m = static_cast<double>(model.M);
    double d = model.mean_nonsolution_sign();
    double a = 1.0 / std::sqrt(n);
    double b = a;
    for (uint64_t k = 0; k < K; k++) {
        double oa = -a;
        double ob = d * b;
        double twice_mean = 2.0 * (m * oa + (n - m) * ob) / n;
        a = twice_mean - oa;
        b = twice_mean - ob;
    }
    return {a, b};
}

double model_solution_probability(const TwoLevelModel &model, uint64_t K) {
    double a = model_evolve(model, K)[0];
    return static_cast<double>(model.M) * a * a;
}

double success_probability(double p, uint64_t J) {
    if (p < 0 || p > 1) {
        throw InputError("probability must lie in [0, 1]");
    }
    return 1.0 - std::pow(1.0 - p, static_cast<double>(J));
}

JKChoice optimize_jk(const TwoLevelModel &model, double eps, uint64_t J_max, uint64_t K_max, uint64_t J_min) {
    model.validate();
    if (!(eps > 0 && eps < 1)) {
        throw InputError("failure budget eps must lie in (0, 1)");
    }
    if (J_min < 1 || J_max < J_min || K_max < 1) {
        throw InputError("search bounds must satisfy 1 <= J_min <= J_max and K_max >= 1");
    }
    auto meets = [&](double p, uint64_t J) {
        return p > 1.0 - std::pow(eps, 1.0 / static_cast<double>(J));
    };

    double n = static_cast<double>(model.N);
    double m = static_cast<double>(model.M);
    double d = model.mean_nonsolution_sign();
    double a = 1.0 / std::sqrt(n);
    double b = a;

    JKChoice best;
    double best_P = 0;
    for (uint64_t K = 1; K <= K_max; K++) {
        double oa = -a;
        double ob = d * b;
        double twice_mean = 2.0 * (m * oa + (n - m) * ob) / n;
        a = twice_mean - oa;
        b = twice_mean - ob;
        double p = std::min(1.0, m * a * a);
        best_P = std::max(best_P, success_probability(p, J_max));
        if (p <= 0) {
            continue;
        }
        uint64_t J = J_min;
        if (!meets(p, J)) {
            double estimate = std::floor(std::log(eps) / std::log1p(-p)) + 1.0;
            if (estimate > static_cast<double>(J_max) + 1) {
                continue;
            }
            J = std::max<uint64_t>(J_min, static_cast<uint64_t>(estimate));
            while (J > J_min && meets(p, J - 1)) {
                J--;
            }
            while (J <= J_max && !meets(p, J)) {
                J++;
            }
            if (J > J_max) {
                continue;
            }
        }
        if (best.K == 0 || J * K < best.J * best.K) {
            best = {J, K, p, success_probability(p, J)};
        }
        if (best.K != 0 && K * J_min >= best.J * best.K) {
            break;
        }
    }
    if (best.K == 0) {
        throw InfeasibleError("no (J, K) within J <= " + std::to_string(J_max) + ", K <= " + std::to_string(K_max) +
                                  " reaches success probability " + std::to_string(1 - eps),
                              best_P);
    }
    return best;
}

}  // namespace qbool
