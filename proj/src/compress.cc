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

#include "qbool/compress.h"

#include <algorithm>
#include <map>

namespace qbool {

bool is_commutable_gate(const Gate &gate, uint32_t n_data) {
    if (!gate.is_x_type() || gate.target < n_data) {
        return false;
    }
    return std::all_of(gate.controls.begin(), gate.controls.end(), [&](uint32_t c) {
        return c < n_data;
    });
}

std::vector<CommutableSegment> segment(const Circuit &circuit) {
    std::vector<CommutableSegment> result;
    const auto &gates = circuit.gates();
    size_t k = 0;
    while (k < gates.size()) {
        if (!is_commutable_gate(gates[k], circuit.n_data())) {
            k++;
            continue;
        }
        size_t begin = k;
        while (k < gates.size() && is_commutable_gate(gates[k], circuit.n_data())) {
            k++;
        }
        result.push_back({begin, k});
    }
    return result;
}

bool canonical_less(const Gate &a, const Gate &b) {
    if (a.controls != b.controls) {
        return a.controls < b.controls;
    }
    if (a.target != b.target) {
        return a.target < b.target;
    }
    return a.kind < b.kind;
}

std::vector<Gate> cancel_pairs(std::vector<Gate> gates) {
    std::stable_sort(gates.begin(), gates.end(), canonical_less);
    // A stack pass removes adjacent equal pairs, including pairs that only
    // become adjacent after an inner pair is removed.
    std::vector<Gate> kept;
    kept.reserve(gates.size());
    for (auto &g : gates) {
        if (!kept.empty() && kept.back() == g) {
            kept.pop_back();
        } else {
            kept.push_back(std::move(g));
        }
    }
    return kept;
}

std::vector<Gate> relayer(std::span<const Gate> gates) {
    std::vector<Gate> out;
    out.reserve(gates.size());
    std::vector<const Gate *> remaining;
    remaining.reserve(gates.size());
    for (const auto &g : gates) {
        remaining.push_back(&g);
    }
    std::vector<uint32_t> occupied;
    while (!remaining.empty()) {
        occupied.clear();
        std::vector<const Gate *> deferred;
        for (const Gate *g : remaining) {
            auto qubits = g->qubits();
            bool clash = std::any_of(qubits.begin(), qubits.end(), [&](uint32_t q) {
                return std::find(occupied.begin(), occupied.end(), q) != occupied.end();
            });
            if (clash) {
                deferred.push_back(g);
            } else {
                occupied.insert(occupied.end(), qubits.begin(), qubits.end());
                out.push_back(*g);
            }
        }
        remaining = std::move(deferred);
    }
    return out;
}

namespace {

// Surviving gates of a segment in their original relative order; used when
// layering would not help.
std::vector<Gate> survivors_in_order(std::span<const Gate> original, const std::vector<Gate> &survivors) {
    std::map<Gate, size_t, decltype(&canonical_less)> wanted(&canonical_less);
    for (const auto &g : survivors) {
        wanted[g]++;
    }
    std::vector<Gate> result;
    result.reserve(survivors.size());
    for (const auto &g : original) {
        auto it = wanted.find(g);
        if (it != wanted.end() && it->second > 0) {
            it->second--;
            result.push_back(g);
        }
    }
    return result;
}

}  // namespace

Circuit compress(const Circuit &circuit, const CostModel &model) {
    const auto &gates = circuit.gates();
    auto segments = segment(circuit);

    struct Candidate {
        std::vector<Gate> layered;
        std::vector<Gate> in_order;
    };
    std::vector<Candidate> candidates;
    candidates.reserve(segments.size());
    for (const auto &s : segments) {
        std::span<const Gate> run(gates.data() + s.begin, s.size());
        auto survivors = cancel_pairs(std::vector<Gate>(run.begin(), run.end()));
        Candidate c;
        c.layered = relayer(survivors);
        c.in_order = survivors_in_order(run, survivors);
        candidates.push_back(std::move(c));
    }

    auto assemble = [&](const std::vector<bool> &use_layered) {
        Circuit out(circuit.n_data(), circuit.n_anc());
        size_t k = 0;
        for (size_t s = 0; s < segments.size(); s++) {
            for (; k < segments[s].begin; k++) {
                out.append(gates[k]);
            }
            out.append(use_layered[s] ? candidates[s].layered : candidates[s].in_order);
            k = segments[s].end;
        }
        for (; k < gates.size(); k++) {
            out.append(gates[k]);
        }
        return out;
    };

    // Decide run by run, left to right, keeping whichever choice gives the
    // shallower circuit so far.
    std::vector<bool> use_layered(segments.size(), true);
    std::vector<uint64_t> busy_until(circuit.num_qubits(), 0);
    auto advance = [&](std::vector<uint64_t> &busy, std::span<const Gate> run) {
        uint64_t finish_max = 0;
        for (const auto &g : run) {
            uint64_t start = busy[g.target];
            for (uint32_t c : g.controls) {
                start = std::max(start, busy[c]);
            }
            uint64_t finish = start + model.cost(g);
            busy[g.target] = finish;
            for (uint32_t c : g.controls) {
                busy[c] = finish;
            }
            finish_max = std::max(finish_max, finish);
        }
        return finish_max;
    };
    size_t k = 0;
    for (size_t s = 0; s < segments.size(); s++) {
        advance(busy_until, std::span<const Gate>(gates.data() + k, segments[s].begin - k));
        auto with_layers = busy_until;
        auto with_order = busy_until;
        advance(with_layers, candidates[s].layered);
        advance(with_order, candidates[s].in_order);
        uint64_t layered_depth = *std::max_element(with_layers.begin(), with_layers.end());
        uint64_t order_depth = *std::max_element(with_order.begin(), with_order.end());
        use_layered[s] = layered_depth <= order_depth;
        busy_until = use_layered[s] ? with_layers : with_order;
        k = segments[s].end;
    }

    Circuit out = assemble(use_layered);
    if (depth(out, model) > depth(circuit, model)) {
        // Prefix-greedy choices can still lose to the original schedule on the
        // tail; fall back to cancellation only, which never adds depth.
        out = assemble(std::vector<bool>(segments.size(), false));
    }
    return out;
}

}  // namespace qbool
