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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qbool/anf.h"
#include "qbool/error.h"
#include "qbool/system_io.h"
#include "reference.h"

using namespace qbool;

namespace {

std::vector<uint8_t> bytes(std::initializer_list<int> bits) {
    return std::vector<uint8_t>(bits.begin(), bits.end());
}

}  // namespace

TEST(anf, term_is_sorted_and_deduplicated) {
    Term t({3, 1, 3, 0});
    EXPECT_EQ(t.vars(), (std::vector<uint32_t>{0, 1, 3}));
    EXPECT_TRUE(Term().is_constant());
    EXPECT_EQ((Term{0, 2} * Term{2, 5}).vars(), (std::vector<uint32_t>{0, 2, 5}));
}

TEST(anf, eval_examples) {
    AnfPoly p{Term{0}, Term{0, 1}};
    EXPECT_FALSE(eval(p, bytes({1, 1})));
    EXPECT_TRUE(eval(p, bytes({1, 0})));
    EXPECT_FALSE(eval(AnfPoly::zero(), bytes({1, 0, 1})));
    EXPECT_TRUE(eval(AnfPoly::one(), bytes({})));
    EXPECT_THROW(eval(AnfPoly{Term{4}}, bytes({1, 1})), InputError);
}

TEST(anf, duplicate_terms_cancel) {
    AnfPoly p{Term{0}, Term{1}, Term{0}};
    EXPECT_EQ(p, AnfPoly{Term{1}});
    p.toggle(Term{1});
    EXPECT_TRUE(p.is_zero());
    EXPECT_EQ(p.degree(), 0u);
}

TEST(anf, xor_examples) {
    AnfPoly a{Term{0}, Term{0, 1}};
    EXPECT_TRUE((a ^ a).is_zero());
    EXPECT_EQ(AnfPoly{Term{0}} ^ AnfPoly{Term{1}}, (AnfPoly{Term{0}, Term{1}}));
    EXPECT_EQ(anf_xor(a, AnfPoly{Term{0}}), AnfPoly{Term({0, 1})});
}

TEST(anf, and_examples) {
    AnfPoly a{Term{0}, Term{1, 2}, Term{}};
    EXPECT_EQ(a * AnfPoly::one(), a);
    EXPECT_TRUE((a * AnfPoly::zero()).is_zero());
    EXPECT_EQ(AnfPoly{Term{0}} * AnfPoly{Term{0}}, AnfPoly{Term{0}});
    // (x0 + x1)(x0 + x1) = x0 + x1, the cross terms cancel.
    AnfPoly s{Term{0}, Term{1}};
    EXPECT_EQ(anf_and(s, s), s);
}

TEST(anf, ring_laws_hold_pointwise) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; trial++) {
        uint32_t n = 1 + trial % 6;
        AnfPoly a = ref::random_poly(n, 3, rng);
        AnfPoly b = ref::random_poly(n, 3, rng);
        AnfPoly c = ref::random_poly(n, 3, rng);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a ^ b, b ^ a);
        EXPECT_EQ(a * (b ^ c), (a * b) ^ (a * c));
        EXPECT_EQ(a * a, a);
        for (uint64_t x = 0; x < (uint64_t{1} << n); x++) {
            auto bits = ref::bits_msb(x, n);
            int va = ref::naive_eval(a, bits);
            int vb = ref::naive_eval(b, bits);
            EXPECT_EQ(ref::naive_eval(a ^ b, bits), va ^ vb);
            EXPECT_EQ(ref::naive_eval(a * b, bits), va & vb);
            auto packed = assignment_bits(x, n);
            EXPECT_EQ(eval(a, packed), va != 0);
            EXPECT_EQ(PackedPoly(a, n).eval(x), va != 0);
        }
    }
}

TEST(anf, assignment_bits_put_variable_zero_first) {
    EXPECT_EQ(assignment_bits(0b100, 3), bytes({1, 0, 0}));
    EXPECT_EQ(assignment_index(bytes({0, 1, 1})), 3u);
    for (uint64_t x = 0; x < 64; x++) {
        EXPECT_EQ(assignment_index(assignment_bits(x, 6)), x);
    }
}

TEST(anf, product_reduce_worked_example) {
    // x1 + x1x2, x3x4, x1x4, x2 + x3 + x4 with 1-based names shifted to 0-based.
    BqeSystem s{4,
                {AnfPoly{Term{0}, Term{0, 1}}, AnfPoly{Term{2, 3}}, AnfPoly{Term{0, 3}},
                 AnfPoly{Term{1}, Term{2}, Term{3}}}};
    AnfPoly expected{Term{0, 1, 2}, Term{0, 2, 3}, Term{1, 2, 3}, Term{0, 1}, Term{0, 2}, Term{0, 3},
                     Term{2, 3},    Term{0},       Term{1},       Term{2},    Term{3}};
    EXPECT_EQ(product_reduce(s), expected);
}

TEST(anf, product_reduce_single_and_empty) {
    AnfPoly f{Term{0}, Term{1, 2}};
    EXPECT_EQ(product_reduce(BqeSystem{3, {f}}), f);
    EXPECT_THROW(product_reduce(BqeSystem{3, {}}), InputError);
}

TEST(anf, product_reduce_matches_conjunction) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; trial++) {
        uint32_t n = 1 + trial % 6;
        BqeSystem s = ref::random_system(n, 1 + trial % 5, rng);
        AnfPoly f = product_reduce(s);
        for (uint64_t x = 0; x < (uint64_t{1} << n); x++) {
            EXPECT_EQ(ref::naive_eval(f, ref::bits_msb(x, n)) == 0, ref::system_indicator(s, x) == 1);
        }
    }
}

TEST(anf, brute_force_examples) {
    BqeSystem counter{2, {AnfPoly{Term{0}, Term{}}, AnfPoly{Term{1}, Term{}}}};
    EXPECT_EQ(brute_force_solve(counter), (std::vector<uint64_t>{3}));
    EXPECT_EQ(brute_force_solve(BqeSystem{3, {}}).size(), 8u);
    EXPECT_TRUE(brute_force_solve(BqeSystem{3, {AnfPoly{Term{0}}, AnfPoly::one()}}).empty());
    EXPECT_THROW(brute_force_solve(BqeSystem{31, {AnfPoly{Term{0}}}}), ResourceError);
}

TEST(anf, brute_force_agrees_with_reference) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; trial++) {
        uint32_t n = 1 + trial % 8;
        BqeSystem s = ref::random_system(n, 1 + trial % 4, rng);
        std::vector<uint64_t> expected;
        for (uint64_t x = 0; x < (uint64_t{1} << n); x++) {
            if (ref::system_indicator(s, x)) {
                expected.push_back(x);
            }
        }
        EXPECT_EQ(brute_force_solve(s), expected);
        EXPECT_EQ(count_solutions(s), expected.size());
    }
}

TEST(anf, random_bqe_is_seeded_and_quadratic) {
    EXPECT_EQ(random_bqe(6, 99), random_bqe(6, 99));
    for (uint64_t seed = 0; seed < 200; seed++) {
        AnfPoly p = random_bqe(4, seed);
        EXPECT_GE(p.num_terms(), 1u);
        EXPECT_LE(p.num_terms(), 10u);
        for (const auto &t : p.terms()) {
            EXPECT_TRUE(t.size() == 1 || t.size() == 2);
            EXPECT_LT(t.vars().back(), 4u);
        }
    }
}

TEST(anf, random_bqe_term_count_mean) {
    Rng rng(2024);
    double total = 0;
    const int samples = 1000;
    for (int i = 0; i < samples; i++) {
        total += static_cast<double>(random_bqe(10, rng).num_terms());
    }
    double mean = total / samples;
    // Poisson mean 27.5; the standard error of the sample mean is sqrt(27.5 / 1000).
    EXPECT_NEAR(mean, 27.5, 3 * std::sqrt(27.5 / samples));
}

TEST(anf, generate_system_hits_target) {
    for (uint64_t seed = 0; seed < 5; seed++) {
        BqeSystem s = generate_system(8, 1, 1, seed);
        EXPECT_EQ(count_solutions(s), 1u);
        for (const auto &f : s.equations) {
            EXPECT_LE(f.degree(), 2u);
        }
    }
    BqeSystem three = generate_system(8, 3, 3, 5);
    EXPECT_EQ(count_solutions(three), 3u);
    BqeSystem any = generate_system(6, 0, 64, 1);
    EXPECT_EQ(any.equations.size(), 1u);
    EXPECT_EQ(generate_system(8, 1, 1, 42), generate_system(8, 1, 1, 42));
}

TEST(anf, generate_system_reports_failure) {
    // No quadratic system without constants excludes x = 0, so [0, 0] is unreachable.
    try {
        generate_system(4, 0, 0, 3, GenerationOptions{4});
        FAIL() << "expected GenerationError";
    } catch (const GenerationError &e) {
        EXPECT_EQ(e.attempts, 4u);
    }
}

TEST(anf, subsystem_keeps_order) {
    BqeSystem s{3, {AnfPoly{Term{0}}, AnfPoly{Term{1}}, AnfPoly{Term{2}}}};
    std::vector<size_t> idx{2, 0};
    BqeSystem sub = s.subsystem(idx);
    EXPECT_EQ(sub.equations, (std::vector<AnfPoly>{AnfPoly{Term{2}}, AnfPoly{Term{0}}}));
    EXPECT_THROW(BqeSystem({2, {AnfPoly{Term{2}}}}).validate(), InputError);
}

TEST(anf, json_round_trip) {
    std::mt19937_64 rng(5);
    BqeSystem s = ref::random_system(5, 4, rng);
    s.equations.push_back(AnfPoly::one());
    nlohmann::json j = system_to_json(s);
    EXPECT_EQ(system_from_json(j), s);
    EXPECT_EQ(system_from_json(nlohmann::json::parse(R"({"n": 2, "equations": [[[0], []]]})")),
              (BqeSystem{2, {AnfPoly{Term{0}, Term{}}}}));
    EXPECT_THROW(system_from_json(nlohmann::json::parse(R"({"n": 2, "equations": [[[5]]]})")), InputError);
    EXPECT_THROW(system_from_json(nlohmann::json::parse(R"({"equations": []})")), InputError);
}
