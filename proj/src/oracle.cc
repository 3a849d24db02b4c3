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

#include "qbool/oracle.h"

#include "qbool/error.h"

namespace qbool {

std::vector<Gate> function_controlled_gates(const AnfPoly &f, uint32_t n_data, uint32_t n_anc, uint32_t target) {
    if (target < n_data || target >= n_data + n_anc) {
        throw InputError("function-controlled target " + std::to_string(target) + " is not an ancilla");
    }
    if (f.num_vars_used() > n_data) {
        throw InputError("equation uses a variable outside the data register");
    }
    std::vector<Gate> gates;
    gates.reserve(f.num_terms() + 1);
    for (const auto &term : f.terms()) {
        if (term.is_constant()) {
            gates.push_back(Gate::x(target));
        } else if (term.size() == 1) {
            gates.push_back(Gate::cnot(term.vars()[0], target));
        } else {
            gates.push_back(Gate::mcx(term.vars(), target));
        }
    }
    gates.push_back(Gate::x(target));
    return gates;
}

std::optional<AnfPoly> EquationQueue::pop() {
    if (pending_.empty()) {
        return std::nullopt;
    }
    AnfPoly f = std::move(pending_.front());
    pending_.pop_front();
    popped_++;
    return f;
}

namespace {

struct Builder {
    EquationQueue &queue;
    uint32_t n_data;
    uint32_t n_anc;
    OracleStats *stats;

    uint32_t ancilla(uint32_t k) const {
        return n_data + k - 1;
    }

    std::vector<Gate> block(uint32_t k) {
        std::optional<AnfPoly> f = queue.pop();
        if (stats) {
            stats->blocks++;
            stats->equations_consumed += f.has_value();
        }
        return function_controlled_gates(f.value_or(AnfPoly::zero()), n_data, n_anc, ancilla(k));
    }

    void reuse(const std::vector<Gate> &gates, std::vector<Gate> &out, size_t blocks_inside) {
        out.insert(out.end(), gates.begin(), gates.end());
        if (stats) {
            stats->blocks += blocks_inside;
        }
    }

    Gate and_into(uint32_t m) const {
        std::vector<uint32_t> controls;
        for (uint32_t j = 1; j < m; j++) {
            controls.push_back(ancilla(j));
        }
        return Gate::mcx(std::move(controls), ancilla(m));
    }

    std::vector<Gate> u(uint32_t level, uint32_t m) {
        if (level > m) {
            level = m;
        }
        if (queue.empty()) {
            return {Gate::x(ancilla(m))};
        }
        if (level == 0 || m == 1) {
            return block(m);
        }
        std::vector<Gate> out;
        std::vector<std::vector<Gate>> parts(m);
        std::vector<size_t> part_blocks(m, 0);
        for (uint32_t j = m - 1; j >= 1; j--) {
            size_t before = stats ? stats->blocks : 0;
            parts[j] = level == 1 ? block(j) : u(level - 1, j);
            part_blocks[j] = stats ? stats->blocks - before : 0;
            out.insert(out.end(), parts[j].begin(), parts[j].end());
        }
        out.push_back(and_into(m));
        for (uint32_t j = 1; j < m; j++) {
            reuse(parts[j], out, part_blocks[j]);
        }
        return out;
    }
};

void check_level_and_m(uint32_t level, uint32_t m) {
    if (level < 1 || m < 1) {
        throw InputError("oracle level and ancilla count must both be >= 1");
    }
    if (m > 62) {
        throw InputError("at most 62 ancillae are supported");
    }
}

}  // namespace

std::vector<Gate> ucircuit(uint32_t level, uint32_t m, EquationQueue &queue, uint32_t n_data, uint32_t n_anc,
                           OracleStats *stats) {
    if (m < 1 || m > n_anc) {
        throw InputError("U block needs 1 <= m <= number of ancillae");
    }
    Builder builder{queue, n_data, n_anc, stats};
    return builder.u(level, m);
}

Circuit single_equation_oracle(const AnfPoly &f, uint32_t n) {
    Circuit circuit(n, 1);
    auto gates = function_controlled_gates(f, n, 1, circuit.ancilla(1));
    circuit.append(gates);
    circuit.append(Gate::z(circuit.ancilla(1)));
    circuit.append(std::vector<Gate>(gates.rbegin(), gates.rend()));
    return circuit;
}

Circuit vanilla_stack_oracle(const BqeSystem &system, uint32_t m, OracleStats *stats) {
    size_t r = system.equations.size();
    if (m < 1 || m < r) {
        throw CapacityError("stack oracle for " + std::to_string(r) + " equations needs " + std::to_string(r) +
                                " ancillae, got " + std::to_string(m),
                            std::max<size_t>(r, 1));
    }
    system.validate();
    Circuit circuit(system.n, m);
    std::vector<Gate> forward;
    std::vector<uint32_t> ancillae;
    for (uint32_t k = 1; k <= m; k++) {
        const AnfPoly &f = k <= r ? system.equations[k - 1] : AnfPoly::zero();
        auto gates = function_controlled_gates(f, system.n, m, circuit.ancilla(k));
        forward.insert(forward.end(), gates.begin(), gates.end());
        ancillae.push_back(circuit.ancilla(k));
    }
    circuit.append(forward);
    circuit.append(Gate::mcz(ancillae));
    circuit.append(std::vector<Gate>(forward.rbegin(), forward.rend()));
    if (stats) {
        stats->equations_consumed += r;
        stats->blocks += 2 * m;
    }
    return circuit;
}

Circuit build_oracle(uint32_t level, uint32_t m, const BqeSystem &system, OracleStats *stats) {
    check_level_and_m(level, m);
    size_t r = system.equations.size();
    if (r > capacity_F(level, m)) {
        uint32_t needed = minimal_ancillae(level, r);
        throw CapacityError("level " + std::to_string(level) + " with m=" + std::to_string(m) + " holds at most " +
                                std::to_string(capacity_F(level, m)) + " equations, the system has " +
                                std::to_string(r) + "; needs m >= " + std::to_string(needed),
                            needed);
    }
    if (level == 1) {
        return vanilla_stack_oracle(system, m, stats);
    }
    system.validate();

    Circuit circuit(system.n, m);
    EquationQueue queue(system.equations);
    Builder builder{queue, system.n, m, stats};
    std::vector<std::vector<Gate>> parts(m + 1);
    std::vector<size_t> part_blocks(m + 1, 0);
    for (uint32_t j = m; j >= 1; j--) {
        size_t before = stats ? stats->blocks : 0;
        parts[j] = builder.u(level - 1, j);
        part_blocks[j] = stats ? stats->blocks - before : 0;
        circuit.append(parts[j]);
    }
    std::vector<uint32_t> ancillae;
    for (uint32_t k = 1; k <= m; k++) {
        ancillae.push_back(circuit.ancilla(k));
    }
    circuit.append(Gate::mcz(ancillae));
    for (uint32_t j = 1; j <= m; j++) {
        circuit.append(parts[j]);
        if (stats) {
            stats->blocks += part_blocks[j];
        }
    }
    return circuit;
}

Circuit product_oracle(const BqeSystem &system) {
    system.validate();
    return single_equation_oracle(product_reduce(system), system.n);
}

uint32_t resolve_ancillae(const OracleSpec &spec, size_t num_equations) {
    switch (spec.style) {
        case OracleStyle::Product:
            return 1;
        case OracleStyle::Stack:
            return spec.m ? spec.m : static_cast<uint32_t>(std::max<size_t>(num_equations, 1));
        case OracleStyle::Recursive:
            return spec.m ? spec.m : minimal_ancillae(spec.level, num_equations);
    }
    return spec.m;
}

Circuit compile_oracle(const BqeSystem &system, const OracleSpec &spec, OracleStats *stats) {
    uint32_t m = resolve_ancillae(spec, system.equations.size());
    switch (spec.style) {
        case OracleStyle::Product:
            return product_oracle(system);
        case OracleStyle::Stack:
            return vanilla_stack_oracle(system, m, stats);
        case OracleStyle::Recursive:
            return build_oracle(spec.level, m, system, stats);
    }
    throw InputError("unknown oracle style");
}

namespace {

uint64_t binomial(uint64_t n, uint64_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    uint64_t result = 1;
    for (uint64_t i = 1; i <= k; i++) {
        result = result * (n - k + i) / i;
    }
    return result;
}

uint64_t pow_u64(uint64_t base, uint64_t exp) {
    uint64_t result = 1;
    while (exp--) {
        result *= base;
    }
    return result;
}

// Blocks of a level-`level` structure whose binomials run over `width`
// ancillae: sum_{j=1}^{level} C(width, j-1) 2^(j-1) + sum_{j=0}^{level} C(width, j) 2^j.
uint64_t block_sum(uint32_t level, uint32_t width) {
    uint64_t total = 0;
    for (uint32_t j = 1; j <= level; j++) {
        total += binomial(width, j - 1) * pow_u64(2, j - 1);
    }
    for (uint32_t j = 0; j <= level; j++) {
        total += binomial(width, j) * pow_u64(2, j);
    }
    return total;
}

}  // namespace

uint64_t capacity_N(uint32_t level, uint32_t m) {
    check_level_and_m(level, m);
    if (m == 1) {
        return 1;
    }
    if (level >= m - 1) {
        return uint64_t{1} << (m - 2);
    }
    uint64_t total = 0;
    for (uint32_t j = 0; j <= level; j++) {
        total += binomial(m - 2, j);
    }
    return total;
}

uint64_t capacity_F(uint32_t level, uint32_t m) {
    check_level_and_m(level, m);
    if (level >= m - 1) {
        return uint64_t{1} << (m - 1);
    }
    uint64_t total = 0;
    for (uint32_t j = 0; j <= level; j++) {
        total += binomial(m - 1, j);
    }
    return total;
}

uint64_t depth_K(uint32_t level, uint32_t m) {
    check_level_and_m(level, m);
    if (m == 1) {
        return 1;
    }
    if (level >= m - 1) {
        return 2 * pow_u64(3, m - 2);
    }
    return block_sum(level, m - 2);
}

uint64_t depth_G(uint32_t level, uint32_t m) {
    check_level_and_m(level, m);
    // The oracle on m ancillae has the block count of U(level, m + 1), so the
    // saturated branch starts at level >= m.
    if (level >= m) {
        return 2 * pow_u64(3, m - 1);
    }
    return block_sum(level, m - 1);
}

uint32_t minimal_ancillae(uint32_t level, uint64_t num_equations) {
    if (level < 1) {
        throw InputError("oracle level must be >= 1");
    }
    for (uint32_t m = 1; m <= 62; m++) {
        if (capacity_F(level, m) >= num_equations) {
            return m;
        }
    }
    throw CapacityError("no ancilla count up to 62 holds " + std::to_string(num_equations) + " equations", 63);
}

}  // namespace qbool
