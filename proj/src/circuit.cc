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

#include "qbool/circuit.h"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "qbool/error.h"

namespace qbool {

const char *gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::X:
            return "X";
        case GateKind::Z:
            return "Z";
        case GateKind::H:
            return "H";
        case GateKind::CNOT:
            return "CNOT";
        case GateKind::MCX:
            return "MCX";
        case GateKind::MCZ:
            return "MCZ";
    }
    return "?";
}

namespace {

void check_controls(std::vector<uint32_t> &controls, uint32_t target) {
    std::sort(controls.begin(), controls.end());
    if (std::adjacent_find(controls.begin(), controls.end()) != controls.end()) {
        throw InputError("gate has a repeated control qubit");
    }
    if (std::binary_search(controls.begin(), controls.end(), target)) {
        throw InputError("gate target is also a control");
    }
}

}  // namespace

Gate Gate::x(uint32_t target) {
    return {GateKind::X, {}, target};
}

Gate Gate::z(uint32_t target) {
    return {GateKind::Z, {}, target};
}

Gate Gate::h(uint32_t target) {
    return {GateKind::H, {}, target};
}

Gate Gate::cnot(uint32_t control, uint32_t target) {
    std::vector<uint32_t> controls{control};
    check_controls(controls, target);
    return {GateKind::CNOT, std::move(controls), target};
}

Gate Gate::mcx(std::vector<uint32_t> controls, uint32_t target) {
    if (controls.empty()) {
        throw InputError("MCX needs at least one control");
    }
    check_controls(controls, target);
    return {GateKind::MCX, std::move(controls), target};
}

Gate Gate::mcz(std::vector<uint32_t> qubits) {
    if (qubits.empty()) {
        throw InputError("MCZ needs at least one qubit");
    }
    std::sort(qubits.begin(), qubits.end());
    if (std::adjacent_find(qubits.begin(), qubits.end()) != qubits.end()) {
        throw InputError("MCZ has a repeated qubit");
    }
    uint32_t target = qubits.back();
    qubits.pop_back();
    return {GateKind::MCZ, std::move(qubits), target};
}

std::vector<uint32_t> Gate::qubits() const {
    std::vector<uint32_t> result = controls;
    result.insert(std::upper_bound(result.begin(), result.end(), target), target);
    return result;
}

uint32_t Circuit::ancilla(uint32_t k) const {
    if (k < 1 || k > n_anc_) {
        throw InputError("ancilla " + std::to_string(k) + " out of range [1, " + std::to_string(n_anc_) + "]");
    }
    return n_data_ + k - 1;
}

void Circuit::append(Gate gate) {
    uint32_t n = num_qubits();
    bool in_range = gate.target < n;
    for (uint32_t c : gate.controls) {
        in_range = in_range && c < n;
    }
    if (!in_range) {
        throw InputError("gate " + gate_str(gate) + " is outside a " + std::to_string(n) + "-qubit circuit");
    }
    gates_.push_back(std::move(gate));
}

void Circuit::append(std::span<const Gate> gates) {
    for (const auto &g : gates) {
        append(g);
    }
}

Circuit concat(const Circuit &a, const Circuit &b) {
    if (a.n_data() != b.n_data() || a.n_anc() != b.n_anc()) {
        throw InputError("cannot concatenate circuits with different qubit layouts");
    }
    Circuit result = a;
    result.append(b.gates());
    return result;
}

Circuit reversed(const Circuit &c) {
    Circuit result(c.n_data(), c.n_anc());
    for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
        result.append(*it);
    }
    return result;
}

CostModel CostModel::unit() {
    CostModel model;
    model.mcz_constant = 1;
    return model;
}

uint32_t CostModel::cost(const Gate &gate) const {
    switch (gate.kind) {
        case GateKind::X:
            return x;
        case GateKind::Z:
            return z;
        case GateKind::H:
            return h;
        case GateKind::CNOT:
            return cnot;
        case GateKind::MCX:
            return decomposed_mcx ? static_cast<uint32_t>(2 * gate.controls.size() - 1) : 1;
        case GateKind::MCZ:
            return mcz_constant ? *mcz_constant : static_cast<uint32_t>(1 + gate.controls.size() + 1);
    }
    return 1;
}

void CostModel::validate() const {
    if (x == 0 || z == 0 || h == 0 || cnot == 0 || (mcz_constant && *mcz_constant == 0)) {
        throw InputError("gate costs must be at least 1");
    }
}

std::string CostModel::describe() const {
    std::ostringstream out;
    out << "X=" << x << " Z=" << z << " H=" << h << " CNOT=" << cnot
        << " MCX=" << (decomposed_mcx ? "2k-1" : "1") << " MCZ=";
    if (mcz_constant) {
        out << *mcz_constant;
    } else {
        out << "1+arity";
    }
    return out.str();
}

uint64_t depth(std::span<const Gate> gates, uint32_t num_qubits, const CostModel &model) {
    std::vector<uint64_t> busy_until(num_qubits, 0);
    uint64_t result = 0;
    for (const auto &g : gates) {
        uint64_t start = busy_until[g.target];
        for (uint32_t c : g.controls) {
            start = std::max(start, busy_until[c]);
        }
        uint64_t finish = start + model.cost(g);
        busy_until[g.target] = finish;
        for (uint32_t c : g.controls) {
            busy_until[c] = finish;
        }
        result = std::max(result, finish);
    }
    return result;
}

uint64_t depth(const Circuit &circuit, const CostModel &model) {
    return depth(circuit.gates(), circuit.num_qubits(), model);
}

std::string gate_str(const Gate &gate) {
    std::ostringstream out;
    out << gate_kind_name(gate.kind) << ' ';
    auto join = [&](const std::vector<uint32_t> &qs) {
        for (size_t k = 0; k < qs.size(); k++) {
            out << (k ? "," : "") << qs[k];
        }
    };
    if (gate.kind == GateKind::MCZ) {
        join(gate.qubits());
    } else if (gate.controls.empty()) {
        out << gate.target;
    } else {
        join(gate.controls);
        out << "->" << gate.target;
    }
    return out.str();
}

std::string to_text(const Circuit &circuit) {
    std::ostringstream out;
    out << "qubits " << circuit.n_data() << ' ' << circuit.n_anc() << '\n';
    for (const auto &g : circuit.gates()) {
        out << gate_str(g) << '\n';
    }
    return out.str();
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

uint32_t parse_index(std::string_view s, size_t line_no) {
    s = trim(s);
    uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw InputError("line " + std::to_string(line_no) + ": bad qubit index '" + std::string(s) + "'");
    }
    return value;
}

std::vector<uint32_t> parse_list(std::string_view s, size_t line_no) {
    std::vector<uint32_t> result;
    s = trim(s);
    if (s.empty()) {
        return result;
    }
    while (true) {
        size_t comma = s.find(',');
        result.push_back(parse_index(s.substr(0, comma), line_no));
        if (comma == std::string_view::npos) {
            break;
        }
        s.remove_prefix(comma + 1);
    }
    return result;
}

}  // namespace

Circuit parse_circuit_text(std::string_view text) {
    std::optional<Circuit> circuit;
    size_t line_no = 0;
    while (!text.empty()) {
        size_t eol = text.find('\n');
        std::string_view line = trim(text.substr(0, eol));
        text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
        line_no++;
        if (line.empty() || line.front() == '#') {
            continue;
        }
        size_t space = line.find(' ');
        std::string_view head = line.substr(0, space);
        std::string_view rest = space == std::string_view::npos ? std::string_view{} : trim(line.substr(space + 1));

        if (!circuit) {
            if (head != "qubits") {
                throw InputError("line " + std::to_string(line_no) + ": expected 'qubits <n_data> <n_anc>' header");
            }
            size_t sep = rest.find(' ');
            if (sep == std::string_view::npos) {
                throw InputError("line " + std::to_string(line_no) + ": header needs two counts");
            }
            circuit.emplace(parse_index(rest.substr(0, sep), line_no), parse_index(rest.substr(sep + 1), line_no));
            continue;
        }

        std::vector<uint32_t> controls;
        std::optional<uint32_t> target;
        size_t arrow = rest.find("->");
        if (head == "MCZ") {
            controls = parse_list(rest, line_no);
        } else if (arrow != std::string_view::npos) {
            controls = parse_list(rest.substr(0, arrow), line_no);
            target = parse_index(rest.substr(arrow + 2), line_no);
        } else {
            target = parse_index(rest, line_no);
        }

        Gate gate;
        if (head == "X" || head == "Z" || head == "H") {
            if (!controls.empty()) {
                throw InputError("line " + std::to_string(line_no) + ": " + std::string(head) + " takes no controls");
            }
            gate = head == "X" ? Gate::x(*target) : head == "Z" ? Gate::z(*target) : Gate::h(*target);
        } else if (head == "CNOT") {
            if (controls.size() != 1) {
                throw InputError("line " + std::to_string(line_no) + ": CNOT takes exactly one control");
            }
            gate = Gate::cnot(controls[0], *target);
        } else if (head == "MCX") {
            gate = Gate::mcx(controls, *target);
        } else if (head == "MCZ") {
            gate = Gate::mcz(controls);
        } else {
            throw InputError("line " + std::to_string(line_no) + ": unknown gate '" + std::string(head) + "'");
        }
        circuit->append(std::move(gate));
    }
    if (!circuit) {
        throw InputError("circuit text has no 'qubits' header");
    }
    return *circuit;
}

}  // namespace qbool
