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

#include "qbool/anf.h"

#include <algorithm>
#include <sstream>

#include "qbool/error.h"

namespace qbool {

Term::Term(std::vector<uint32_t> vars) : vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

Term Term::operator*(const Term &other) const {
    std::vector<uint32_t> merged;
    merged.reserve(vars_.size() + other.vars_.size());
    std::set_union(vars_.begin(), vars_.end(), other.vars_.begin(), other.vars_.end(), std::back_inserter(merged));
    Term result;
    result.vars_ = std::move(merged);
    return result;
}

bool Term::operator<(const Term &other) const {
    if (vars_.size() != other.vars_.size()) {
        return vars_.size() < other.vars_.size();
    }
    return vars_ < other.vars_;
}

AnfPoly::AnfPoly(std::initializer_list<Term> terms) {
    for (const auto &t : terms) {
        toggle(t);
    }
}

AnfPoly::AnfPoly(const std::vector<Term> &terms) {
    for (const auto &t : terms) {
        toggle(t);
    }
}

void AnfPoly::toggle(const Term &term) {
    auto [it, inserted] = terms_.insert(term);
    if (!inserted) {
        terms_.erase(it);
    }
}

size_t AnfPoly::degree() const {
    // The set is ordered by size first.
    return terms_.empty() ? 0 : terms_.rbegin()->size();
}

uint32_t AnfPoly::num_vars_used() const {
    uint32_t result = 0;
    for (const auto &t : terms_) {
        if (!t.is_constant()) {
            result = std::max(result, t.vars().back() + 1);
        }
    }
    return result;
}

AnfPoly AnfPoly::operator^(const AnfPoly &other) const {
    AnfPoly result = *this;
    for (const auto &t : other.terms_) {
        result.toggle(t);
    }
    return result;
}

AnfPoly AnfPoly::operator*(const AnfPoly &other) const {
    AnfPoly result;
    for (const auto &a : terms_) {
        for (const auto &b : other.terms_) {
            result.toggle(a * b);
        }
    }
    return result;
}

std::string AnfPoly::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first_term = true;
    for (const auto &t : terms_) {
        if (!first_term) {
            out << " + ";
        }
        first_term = false;
        if (t.is_constant()) {
            out << "1";
            continue;
        }
        for (size_t k = 0; k < t.size(); k++) {
            out << (k ? "*x" : "x") << t.vars()[k];
        }
    }
    return out.str();
}

bool eval(const AnfPoly &poly, std::span<const uint8_t> x) {
    bool acc = false;
    for (const auto &t : poly.terms()) {
        bool product = true;
        for (uint32_t v : t.vars()) {
            if (v >= x.size()) {
                throw InputError("variable x" + std::to_string(v) + " is outside an assignment of length " +
                                 std::to_string(x.size()));
            }
            product = product && x[v] != 0;
        }
        acc ^= product;
    }
    return acc;
}

std::vector<uint8_t> assignment_bits(uint64_t x, uint32_t n) {
    std::vector<uint8_t> bits(n);
    for (uint32_t i = 0; i < n; i++) {
        bits[i] = (x >> (n - 1 - i)) & 1;
    }
    return bits;
}

uint64_t assignment_index(std::span<const uint8_t> bits) {
    uint64_t x = 0;
    for (uint8_t b : bits) {
        x = (x << 1) | (b ? 1 : 0);
    }
    return x;
}

PackedPoly::PackedPoly(const AnfPoly &poly, uint32_t n) {
    masks_.reserve(poly.num_terms());
    for (const auto &t : poly.terms()) {
        uint64_t mask = 0;
        for (uint32_t v : t.vars()) {
            if (v >= n) {
                throw InputError("variable x" + std::to_string(v) + " is out of range for n=" + std::to_string(n));
            }
            mask |= uint64_t{1} << (n - 1 - v);
        }
        masks_.push_back(mask);
    }
}

void BqeSystem::validate() const {
    if (n > 63) {
        throw InputError("at most 63 variables are supported");
    }
    for (size_t k = 0; k < equations.size(); k++) {
        if (equations[k].num_vars_used() > n) {
            throw InputError("equation " + std::to_string(k) + " uses a variable index >= n=" + std::to_string(n));
        }
    }
}

BqeSystem BqeSystem::subsystem(std::span<const size_t> indices) const {
    BqeSystem result{n, {}};
    result.equations.reserve(indices.size());
    for (size_t i : indices) {
        if (i >= equations.size()) {
            throw InputError("equation index " + std::to_string(i) + " out of range");
        }
        result.equations.push_back(equations[i]);
    }
    return result;
}

AnfPoly product_reduce(const BqeSystem &system) {
    if (system.equations.empty()) {
        throw InputError("product_reduce needs at least one equation");
    }
    AnfPoly product = AnfPoly::one();
    for (const auto &f : system.equations) {
        product = product * (f ^ AnfPoly::one());
    }
    return product ^ AnfPoly::one();
}

namespace {

std::vector<PackedPoly> pack_all(const BqeSystem &system) {
    std::vector<PackedPoly> packed;
    packed.reserve(system.equations.size());
    for (const auto &f : system.equations) {
        packed.emplace_back(f, system.n);
    }
    return packed;
}

void check_brute_force_width(uint32_t n) {
    if (n > kBruteForceMaxVars) {
        throw ResourceError("brute force over n=" + std::to_string(n) + " exceeds the limit of " +
                            std::to_string(kBruteForceMaxVars) + " variables");
    }
}

}  // namespace

bool satisfies(const BqeSystem &system, uint64_t x) {
    for (const auto &f : system.equations) {
        if (PackedPoly(f, system.n).eval(x)) {
            return false;
        }
    }
    return true;
}

std::vector<uint64_t> brute_force_solve(const BqeSystem &system) {
    check_brute_force_width(system.n);
    system.validate();
    auto packed = pack_all(system);
    std::vector<uint64_t> result;
    uint64_t num_inputs = uint64_t{1} << system.n;
    for (uint64_t x = 0; x < num_inputs; x++) {
        bool ok = true;
        for (const auto &p : packed) {
            if (p.eval(x)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            result.push_back(x);
        }
    }
    return result;
}

uint64_t count_solutions(const BqeSystem &system) {
    return brute_force_solve(system).size();
}

AnfPoly random_bqe(uint32_t n, Rng &rng) {
    if (n < 2) {
        throw InputError("random_bqe needs n >= 2");
    }
    // Monomial pool: n linear terms followed by the n(n-1)/2 pairs.
    std::vector<Term> pool;
    pool.reserve(n * (n + 1) / 2);
    for (uint32_t i = 0; i < n; i++) {
        pool.push_back(Term{i});
    }
    for (uint32_t i = 0; i < n; i++) {
        for (uint32_t j = i + 1; j < n; j++) {
            pool.push_back(Term{i, j});
        }
    }
    double mean = n * (n + 1) / 4.0;
    uint64_t count = std::clamp<uint64_t>(rng.poisson(mean), 1, pool.size());
    AnfPoly poly;
    for (uint64_t k : rng.sample_without_replacement(pool.size(), count)) {
        poly.toggle(pool[k]);
    }
    return poly;
}

AnfPoly random_bqe(uint32_t n, uint64_t seed) {
    Rng rng(seed);
    return random_bqe(n, rng);
}

namespace {

// Marks the assignments that still satisfy every equation added so far.
void filter_solutions(std::vector<uint8_t> &alive, const AnfPoly &f, uint32_t n, uint64_t &count) {
    PackedPoly p(f, n);
    for (uint64_t x = 0; x < alive.size(); x++) {
        if (alive[x] && p.eval(x)) {
            alive[x] = 0;
            count--;
        }
    }
}

}  // namespace

BqeSystem generate_system(uint32_t n, uint64_t lo, uint64_t hi, uint64_t seed, GenerationOptions options) {
    check_brute_force_width(n);
    if (n < 2) {
        throw InputError("generate_system needs n >= 2");
    }
    uint64_t num_inputs = uint64_t{1} << n;
    if (lo > hi || hi > num_inputs) {
        throw InputError("solution range must satisfy 0 <= lo <= hi <= 2^n");
    }
    size_t max_steps = 8 * n + 64;
    for (size_t attempt = 0; attempt < options.max_attempts; attempt++) {
        Rng rng(derive_seed(seed, attempt));
        BqeSystem system{n, {}};
        std::vector<uint8_t> alive(num_inputs, 1);
        uint64_t count = num_inputs;

        auto add_equation = [&]() {
            system.equations.push_back(random_bqe(n, rng));
            filter_solutions(alive, system.equations.back(), n, count);
        };
        auto drop_newest = [&]() {
            system.equations.pop_back();
            std::fill(alive.begin(), alive.end(), 1);
            count = num_inputs;
            for (const auto &f : system.equations) {
                filter_solutions(alive, f, n, count);
            }
        };

        add_equation();
        for (size_t step = 0; step < max_steps; step++) {
            if (lo <= count && count <= hi) {
                return system;
            }
            if (count > hi) {
                add_equation();
            } else {
                drop_newest();
                add_equation();
            }
        }
        if (lo <= count && count <= hi) {
            return system;
        }
    }
    throw GenerationError("could not generate a system with n=" + std::to_string(n) + " and " + std::to_string(lo) +
                              ".." + std::to_string(hi) + " solutions after " +
                              std::to_string(options.max_attempts) + " attempts",
                          options.max_attempts);
}

}  // namespace qbool
