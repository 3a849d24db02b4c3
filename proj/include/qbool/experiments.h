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

#ifndef QBOOL_EXPERIMENTS_H
#define QBOOL_EXPERIMENTS_H

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qbool/anf.h"
#include "qbool/circuit.h"
#include "qbool/grover.h"
#include "qbool/oracle.h"

namespace qbool {

enum class OutputFormat { Csv, Json };

/// Rows of scalar cells plus the config that produced them.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<nlohmann::json>> rows;
    nlohmann::json config = nlohmann::json::object();
    /// Aggregates; emitted as a trailing comment in CSV.
    nlohmann::json summary;
};

/// CSV: "# config: {...}" line, header, rows, optional "# summary: {...}".
/// JSON: {"config", "columns", "rows" (as objects), "summary"}.
std::string render(const Table &table, OutputFormat format);

/// capacity_F(level, m) for 1 <= level <= lmax, 1 <= m <= mmax; one row per level.
Table capacity_table(uint32_t lmax, uint32_t mmax);

struct GenConfig {
    uint32_t n = 8;
    uint64_t lo = 1;
    uint64_t hi = 1;
    size_t count = 15;
    uint64_t seed = 0;
};
/// Writes system_000.json, ... into `dir` (system i seeded with
/// derive_seed(seed, i)) and returns the manifest. A system that cannot be
/// generated gets a "failed" row instead of a file. Throws ResourceError if
/// n is too wide to brute-force.
Table generate_corpus(const GenConfig &config, const std::filesystem::path &dir);

struct CompileConfig {
    OracleSpec oracle;
    bool compress = false;
    CostModel cost = CostModel::standard();
};
struct CompiledOracle {
    Circuit original;
    Circuit compressed;
    uint64_t depth = 0;
    uint64_t compressed_depth = 0;
    /// 1 - compressed_depth / depth.
    double reduction = 0;
};
CompiledOracle compile_system(const BqeSystem &system, const CompileConfig &config);
/// One row per input; the summary holds the mean reduction and its sample
/// standard deviation.
Table compile_report(const std::vector<std::filesystem::path> &inputs, const CompileConfig &config,
                     const std::optional<std::filesystem::path> &circuit_dir);

struct SolveConfig {
    OracleSpec oracle;
    SplitStrategy strategy = SplitStrategy::Random;
    /// Random: r = round(R / split_factor) equations per iteration.
    double split_factor = 1.5;
    /// Cyclic: number of round-robin groups.
    size_t groups = 1;
    double nominal_rate = 0.8;
    uint64_t shots = 256;
    uint64_t seed = 0;
    /// Solution count used for K selection; brute force when absent.
    std::optional<uint64_t> assume_m;
    /// Iteration count override; optimize_jk with J = shots when absent.
    std::optional<uint64_t> iterations;
    bool compress = true;
    CostModel cost = CostModel::standard();
};

struct SolveRecord {
    SplitPlan plan;
    uint64_t N = 0;
    uint64_t M = 0;
    uint64_t Mtilde = 0;
    uint64_t r = 0;
    uint64_t K = 0;
    /// Model probability at K and 1 - (1 - p)^shots.
    double model_p = 0;
    double model_P = 0;
    bool feasible = true;
    RunResult run;
    /// Measured values in descending shot count, each checked against the system.
    std::vector<std::pair<uint64_t, bool>> candidates;
    bool success = false;
};

/// Equations per iteration for a plan built from `config`.
uint64_t equations_per_iteration(const SolveConfig &config, size_t R);
SplitPlan make_plan(const SolveConfig &config, size_t R);
/// Picks K with optimize_jk (J fixed to shots); falls back to the model's
/// best K when no K reaches the nominal rate.
SolveRecord solve_system(const BqeSystem &system, const SolveConfig &config);
nlohmann::json solve_record_json(const BqeSystem &system, const SolveConfig &config, const SolveRecord &record);
/// Per-iteration trace as a table.
Table solve_trace_table(const SolveConfig &config, const SolveRecord &record);

struct SweepConfig {
    uint32_t n = 12;
    std::vector<double> factors = {1.0, 1.25, 1.5, 1.75, 2.0};
    size_t samples = 15;
    uint64_t seed = 0;
    double nominal_rate = 0.999;
    uint64_t max_shots = 1024;
    uint32_t level = 2;
    CostModel cost = CostModel::standard();
};
struct SweepPoint {
    size_t system = 0;
    double factor = 0;
    uint64_t r = 0;
    uint64_t J = 0;
    uint64_t K = 0;
    uint64_t total_depth = 0;
    /// total_depth over the largest total_depth of the same system.
    double relative_depth = 0;
};
struct LinearFit {
    double slope = 0;
    double intercept = 0;
    /// Half width of the 95% confidence interval on the slope.
    double slope_ci = 0;
};
LinearFit fit_line(const std::vector<double> &x, const std::vector<double> &y);
/// Total depth is the sum of compressed oracle depths over the K sampled
/// iterations plus K diffusion circuits. Throws InputError if a factor
/// leaves fewer than two equations per iteration.
std::vector<SweepPoint> sweep_split(const SweepConfig &config);
Table sweep_table(const SweepConfig &config, const std::vector<SweepPoint> &points);

struct HeatmapConfig {
    std::vector<uint32_t> n_values = {6, 8, 10};
    uint64_t lo = 1;
    uint64_t hi = 1;
    std::vector<uint64_t> shots = {1, 4, 16, 64, 256};
    double nominal_rate = 0.8;
    double split_factor = 1.5;
    uint32_t level = 2;
    size_t samples = 15;
    uint64_t seed = 0;
};
struct HeatmapCell {
    uint32_t n = 0;
    uint64_t M = 0;
    uint64_t shots = 0;
    uint64_t successes = 0;
    uint64_t runs = 0;
};
std::vector<HeatmapCell> success_heatmap(const HeatmapConfig &config);
Table heatmap_table(const HeatmapConfig &config, const std::vector<HeatmapCell> &cells);

nlohmann::json oracle_spec_json(const OracleSpec &spec);
const char *oracle_style_name(OracleStyle style);
OracleStyle parse_oracle_style(const std::string &name);

}  // namespace qbool

#endif
