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
#include <filesystem>
#include <random>

#include "qbool/bit_order.h"
#include "qbool/error.h"
#include "qbool/statevec.h"
#include "reference.h"

using namespace qbool;

namespace {

std::vector<Gate> all_gates(uint32_t n) {
    std::vector<Gate> out;
    for (uint32_t t = 0; t < n; t++) {
        out.push_back(Gate::x(t));
        out.push_back(Gate::z(t));
        out.push_back(Gate::h(t));
        for (uint32_t c = 0; c < n; c++) {
            if (c != t) {
                out.push_back(Gate::cnot(c, t));
            }
        }
    }
    for (uint64_t mask = 1; mask < (uint64_t{1} << n); mask++) {
        std::vector<uint32_t> qs;
        for (uint32_t q = 0; q < n; q++) {
            if (mask >> q & 1) {
                qs.push_back(q);
            }
        }
        out.push_back(Gate::mcz(qs));
        if (qs.size() >= 2) {
            uint32_t t = qs.back();
            qs.pop_back();
            out.push_back(Gate::mcx(qs, t));
            std::vector<uint32_t> rev(qs);
            rev.push_back(t);
            uint32_t t2 = rev.front();
            rev.erase(rev.begin());
            out.push_back(Gate::mcx(rev, t2));
        }
    }
    return out;
}

StateVector random_state(uint32_t n, std::mt19937_64 &rng) {
    StateVector s(n, 0);
    std::normal_distribution<double> g;
    double norm = 0;
    for (auto &a : s.amplitudes()) {
        a = {g(rng), g(rng)};
        norm += std::norm(a);
    }
    for (auto &a : s.amplitudes()) {
        a /= std::sqrt(norm);
    }
    return s;
}

}  // namespace

TEST(statevec, bit_order_helpers) {
    EXPECT_EQ(qubit_bit(0, 3), 4u);
    EXPECT_EQ(qubit_bit(2, 3), 1u);
    EXPECT_EQ(basis_index(0b10, 0b01, 2), 0b1001u);
    EXPECT_EQ(data_part(0b1001, 2), 0b10u);
    EXPECT_EQ(ancilla_part(0b1001, 2), 0b01u);
}

TEST(statevec, init_uniform) {
    StateVector one = init_uniform(1, 0);
    EXPECT_NEAR(one[0].real(), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(one[1].real(), 1 / std::sqrt(2.0), 1e-15);
    StateVector s = init_uniform(2, 1);
    for (uint64_t i = 0; i < 8; i++) {
        EXPECT_NEAR(std::abs(s[i]), (i % 2 == 0) ? 0.5 : 0.0, 1e-15);
    }
    for (uint32_t n = 0; n < 8; n++) {
        EXPECT_NEAR(init_uniform(n, 2).norm_squared(), 1.0, 1e-12);
    }
    EXPECT_THROW(StateVector(20, 10), ResourceError);
    EXPECT_THROW(StateVector(4, 2, 5), ResourceError);
}

TEST(statevec, gates_match_explicit_matrices) {
    std::mt19937_64 rng(1);
    for (uint32_t n = 1; n <= 4; n++) {
        for (const Gate &g : all_gates(n)) {
            ref::Matrix u = ref::gate_matrix(g, n);
            StateVector s = random_state(n, rng);
            std::vector<ref::Complex> v(s.amplitudes().begin(), s.amplitudes().end());
            std::vector<ref::Complex> expected = ref::matvec(u, v);
            s.apply(g);
            for (uint64_t i = 0; i < expected.size(); i++) {
                ASSERT_NEAR(std::abs(s[i] - expected[i]), 0.0, 1e-12) << gate_str(g) << " n=" << n;
            }
        }
    }
}

TEST(statevec, toy_trace) {
    StateVector s(3, 0);
    auto expect_basis = [&](uint64_t index, double sign) {
        for (uint64_t i = 0; i < 8; i++) {
            EXPECT_NEAR(s[i].real(), i == index ? sign : 0.0, 1e-15);
        }
    };
    s.apply(Gate::x(0));
    expect_basis(0b100, 1);
    s.apply(Gate::cnot(0, 2));
    expect_basis(0b101, 1);
    s.apply(Gate::mcx({0, 1}, 2));
    expect_basis(0b101, 1);
    s.apply(Gate::z(0));
    expect_basis(0b101, -1);
    s.apply(Gate::mcz({0, 1, 2}));
    expect_basis(0b101, -1);
}

TEST(statevec, gates_are_involutions) {
    std::mt19937_64 rng(2);
    for (const Gate &g : all_gates(4)) {
        StateVector s = random_state(4, rng);
        StateVector before = s;
        s.apply(g);
        s.apply(g);
        for (uint64_t i = 0; i < 16; i++) {
            EXPECT_NEAR(std::abs(s[i] - before[i]), 0.0, 1e-12);
        }
    }
}

TEST(statevec, mcz_flips_only_all_ones) {
    for (uint64_t x = 0; x < 16; x++) {
        StateVector s = StateVector::basis(4, 0, x);
        s.apply(Gate::mcz({0, 1, 2, 3}));
        EXPECT_NEAR(s[x].real(), x == 15 ? -1.0 : 1.0, 1e-15);
    }
}

TEST(statevec, permutation_gates_map_basis_to_basis) {
    std::mt19937_64 rng(3);
    for (const Gate &g : all_gates(4)) {
        if (g.kind == GateKind::H) {
            continue;
        }
        for (uint64_t x = 0; x < 16; x++) {
            StateVector s = StateVector::basis(4, 0, x);
            s.apply(g);
            int nonzero = 0;
            for (uint64_t i = 0; i < 16; i++) {
                if (std::abs(s[i]) > 1e-12) {
                    nonzero++;
                    EXPECT_NEAR(std::abs(s[i]), 1.0, 1e-12);
                }
            }
            EXPECT_EQ(nonzero, 1);
        }
    }
}

TEST(statevec, norm_preserved_on_random_circuits) {
    std::mt19937_64 rng(4);
    auto gates = all_gates(6);
    StateVector s = random_state(6, rng);
    for (int i = 0; i < 2000; i++) {
        s.apply(gates[rng() % gates.size()]);
    }
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
    Circuit empty(6, 0);
    StateVector before = s;
    s.apply(empty);
    EXPECT_EQ(std::vector<Amplitude>(s.amplitudes().begin(), s.amplitudes().end()),
              std::vector<Amplitude>(before.amplitudes().begin(), before.amplitudes().end()));
}

TEST(statevec, apply_rejects_out_of_range) {
    StateVector s(2, 1);
    EXPECT_THROW(s.apply(Gate::x(3)), InputError);
    EXPECT_THROW(s.apply(Circuit(2, 2)), InputError);
}

TEST(statevec, measure_point_mass) {
    StateVector s = StateVector::basis(3, 2, basis_index(5, 0, 2));
    Histogram h = measure_data(s, 100, 1);
    EXPECT_EQ(h, (Histogram{{5, 100}}));
    EXPECT_THROW(measure_data(s, 0, 1), InputError);
}

TEST(statevec, measure_frequencies_within_binomial_band) {
    StateVector s = init_uniform(2, 1);
    const uint64_t shots = 100000;
    Histogram h = measure_data(s, shots, 77);
    double sigma = std::sqrt(shots * 0.25 * 0.75);
    for (uint64_t x = 0; x < 4; x++) {
        EXPECT_NEAR(static_cast<double>(h[x]), shots * 0.25, 5 * sigma);
    }
    EXPECT_EQ(measure_data(s, 1000, 5), measure_data(s, 1000, 5));
    EXPECT_NE(measure_data(s, 1000, 5), measure_data(s, 1000, 6));
}

TEST(statevec, marginal_sums_over_ancillae) {
    StateVector s(1, 1);
    s.apply(Gate::h(0));
    s.apply(Gate::h(1));
    auto p = s.data_probabilities();
    EXPECT_NEAR(p[0], 0.5, 1e-15);
    EXPECT_NEAR(p[1], 0.5, 1e-15);
    EXPECT_NEAR(s.dirty_ancilla_mass(), 0.5, 1e-15);
}

TEST(statevec, solution_probability) {
    StateVector s = init_uniform(4, 1);
    std::vector<uint64_t> sols{1, 7, 12};
    EXPECT_NEAR(solution_probability(s, sols), 3.0 / 16, 1e-15);
    s.apply(Gate::z(0));
    s.apply(Gate::mcz({1, 2}));
    EXPECT_NEAR(solution_probability(s, sols), 3.0 / 16, 1e-15);
    std::vector<uint64_t> bad{16};
    EXPECT_THROW(solution_probability(s, bad), InputError);
}

TEST(statevec, binary_dump_round_trip) {
    std::mt19937_64 rng(8);
    StateVector s = random_state(5, rng);
    auto path = std::filesystem::temp_directory_path() / "qbool_state_test.bin";
    s.write_binary(path);
    EXPECT_EQ(std::filesystem::file_size(path), 8u + 32u * 16u);
    StateVector back = StateVector::read_binary(path);
    EXPECT_EQ(back.num_qubits(), 5u);
    for (uint64_t i = 0; i < 32; i++) {
        EXPECT_EQ(back[i], s[i]);
    }
    std::filesystem::remove(path);
}
