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

#ifndef QBOOL_ANF_H
#define QBOOL_ANF_H

#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "qbool/rng.h"

namespace qbool {

/// A monomial over F2: the AND of the listed variables. The empty product is
/// the constant 1. Indices are kept strictly increasing.
class Term {
   public:
    Term() = default;
    /// Sorts and deduplicates; x*x = x so repeated variables collapse.
    explicit Term(std::vector<uint32_t> vars);
    Term(std::initializer_list<uint32_t> vars) : Term(std::vector<uint32_t>(vars)) {
    }

    const std::vector<uint32_t> &vars() const {
        return vars_;
    }
    size_t size() const {
        return vars_.size();
    }
    bool is_constant() const {
        return vars_.empty();
    }
    /// AND of two monomials.
    Term operator*(const Term &other) const;

    /// Canonical order: by size, then lexicographic indices.
    bool operator<(const Term &other) const;
    bool operator==(const Term &other) const {
        return vars_ == other.vars_;
    }

   private:
    std::vector<uint32_t> vars_;
};

/// Boolean polynomial in algebraic normal form (XOR of monomials).
class AnfPoly {
   public:
    AnfPoly() = default;
    /// Builds by XOR-accumulation, so repeated terms cancel pairwise.
    AnfPoly(std::initializer_list<Term> terms);
    explicit AnfPoly(const std::vector<Term> &terms);

    static AnfPoly zero() {
        return {};
    }
    static AnfPoly one() {
        return AnfPoly{Term{}};
    }

    /// XOR a single monomial in; removes it if already present.
    void toggle(const Term &term);

    const std::set<Term> &terms() const {
        return terms_;
    }
    bool is_zero() const {
        return terms_.empty();
    }
    size_t num_terms() const {
        return terms_.size();
    }
    size_t degree() const;
    /// One past the largest variable index used (0 for constants).
    uint32_t num_vars_used() const;

    AnfPoly operator^(const AnfPoly &other) const;
    AnfPoly operator*(const AnfPoly &other) const;
    bool operator==(const AnfPoly &other) const {
        return terms_ == other.terms_;
    }

    /// Human-readable form with 0-based variable names, e.g. "x0 + x0*x1".
    std::string str() const;

   private:
    std::set<Term> terms_;
};

inline AnfPoly anf_xor(const AnfPoly &a, const AnfPoly &b) {
    return a ^ b;
}
inline AnfPoly anf_and(const AnfPoly &a, const AnfPoly &b) {
    return a * b;
}

/// Evaluates at x, where x[i] is variable i. Throws InputError if a term
/// references a variable beyond x.
bool eval(const AnfPoly &poly, std::span<const uint8_t> x);

/// Unpacks an integer assignment (variable 0 is the most significant of n bits).
std::vector<uint8_t> assignment_bits(uint64_t x, uint32_t n);
uint64_t assignment_index(std::span<const uint8_t> bits);

/// Monomials as bitmasks over the packed assignment encoding, for tight loops.
class PackedPoly {
   public:
    PackedPoly(const AnfPoly &poly, uint32_t n);
    bool eval(uint64_t x) const {
        bool acc = false;
        for (uint64_t mask : masks_) {
            acc ^= (x & mask) == mask;
        }
        return acc;
    }

   private:
    std::vector<uint64_t> masks_;
};

/// n variables and an ordered list of equations f_i(x) = 0.
struct BqeSystem {
    uint32_t n = 0;
    std::vector<AnfPoly> equations;

    /// Throws InputError if any term references a variable >= n.
    void validate() const;
    /// A system with only the equations at the given indices, in that order.
    BqeSystem subsystem(std::span<const size_t> indices) const;
    bool operator==(const BqeSystem &other) const = default;
};

/// Largest n accepted by the exhaustive solver.
inline constexpr uint32_t kBruteForceMaxVars = 30;

/// f = (f_1 + 1)(f_2 + 1)...(f_R + 1) + 1, which vanishes exactly on the
/// common zeros of the system.
AnfPoly product_reduce(const BqeSystem &system);

/// True iff every equation evaluates to 0 at the packed assignment x.
bool satisfies(const BqeSystem &system, uint64_t x);

/// All packed assignments satisfying every equation, ascending.
std::vector<uint64_t> brute_force_solve(const BqeSystem &system);
uint64_t count_solutions(const BqeSystem &system);

/// Random quadratic equation: Poisson(n(n+1)/4) distinct monomials drawn from
/// the n linear and n(n-1)/2 quadratic ones. The count is clamped to
/// [1, n(n+1)/2]; no constant term is ever emitted.
AnfPoly random_bqe(uint32_t n, Rng &rng);
AnfPoly random_bqe(uint32_t n, uint64_t seed);

struct GenerationOptions {
    size_t max_attempts = 64;
};

/// Random BQE system whose solution count lies in [lo, hi]. Adds equations
/// while there are too many solutions and drops the newest while there are
/// too few. Throws GenerationError after max_attempts reseeded attempts.
BqeSystem generate_system(uint32_t n, uint64_t lo, uint64_t hi, uint64_t seed, GenerationOptions options = {});

}  // namespace qbool

#endif
