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

#ifndef QBOOL_RNG_H
#define QBOOL_RNG_H

#include <cstdint>
#include <random>
#include <vector>

namespace qbool {

/// Seeded random stream with platform-independent derived distributions.
///
/// std::mt19937_64's output sequence is fixed by the standard, but the std
/// distributions are not, so bounded integers, doubles and Poisson draws are
/// derived here by hand. Everything downstream that must reproduce
/// byte-for-byte draws through this class.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {
    }

    uint64_t next_u64() {
        return engine_();
    }
    /// Uniform in [0, 1) with 53 bits of precision.
    double uniform01();
    /// Uniform in [0, bound). bound must be positive.
    uint64_t below(uint64_t bound);
    /// Poisson(mean) by sequential CDF inversion.
    uint64_t poisson(double mean);
    /// k distinct values from [0, population), in draw order.
    std::vector<uint64_t> sample_without_replacement(uint64_t population, uint64_t k);

   private:
    std::mt19937_64 engine_;
};

/// Seed for independent task `index` under `master` (splitmix64 mixing).
uint64_t derive_seed(uint64_t master, uint64_t index);

}  // namespace qbool

#endif
