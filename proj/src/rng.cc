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

#include "qbool/rng.h"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qbool {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

double Rng::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

uint64_t Rng::below(uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("Rng::below requires a positive bound");
    }
    // Rejection sampling on the top of the range keeps the draw unbiased.
    uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
    while (true) {
        uint64_t v = engine_();
        if (v < limit) {
            return v % bound;
        }
    }
}

uint64_t Rng::poisson(double mean) {
    if (!(mean >= 0)) {
        throw std::invalid_argument("Poisson mean must be non-negative");
    }
    double u = uniform01();
    double p = std::exp(-mean);
    double cdf = p;
    uint64_t k = 0;
    while (u > cdf && p > 0) {
        k++;
        p *= mean / static_cast<double>(k);
        cdf += p;
    }
    return k;
}

std::vector<uint64_t> Rng::sample_without_replacement(uint64_t population, uint64_t k) {
    if (k > population) {
        throw std::invalid_argument("cannot sample more items than the population holds");
    }
    std::vector<uint64_t> pool(population);
    std::iota(pool.begin(), pool.end(), uint64_t{0});
    for (uint64_t i = 0; i < k; i++) {
        uint64_t j = i + below(population - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

uint64_t derive_seed(uint64_t master, uint64_t index) {
    return splitmix64(splitmix64(master) ^ (index * 0xD1B54A32D192ED03ULL + 1));
}

}  // namespace qbool
