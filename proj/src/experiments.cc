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

#include "qbool/experiments.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "qbool/compress.h"
#include "qbool/error.h"
#include "qbool/rng.h"
#include "qbool/system_io.h"

namespace qbool {

namespace {

std::string csv_cell(const nlohmann::json &v) {
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_null()) {
        return "";
    }
    return v.dump();
}

nlohmann::json cost_json(const CostModel &cost) {
    return cost.describe();
}

/// Smallest J*K reaching `rate` with J in [J_min, J_max]; otherwise the K
/// with the highest model probability at J_max.
struct KChoice {
    JKChoice jk;
    bool feasible = true;
};

KChoice choose_k(const TwoLevelModel &model, double rate, uint64_t J_min, uint64_t J_max, uint64_t K_max) {
    KChoice out;
    try {
        out.jk = optimize_jk(model, 1.0 - rate, J_max, K_max, J_min);
        return out;
    } catch (const InfeasibleError &) {
    }
    out.feasible = false;
    out.jk.J = J_max;
    for (uint64_t K = 1; K <= K_max; K++) {
        double p = std::min(1.0, model_solution_probability(model, K));
        if (out.jk.K == 0 || p > out.jk.p) {
            out.jk.K = K;
            out.jk.p = p;
        }
    }
    out.jk.P = success_probability(out.jk.p, J_max);
    return out;
}

uint64_t default_k_max(uint64_t N, uint64_t M) {
    if (M >= N) {
        return 1;
    }
    return 8 * vanilla_iteration_count(N, M) + 8;
}

uint64_t mtilde_for(uint64_t M, uint32_t n, uint64_t r, size_t R) {
    return r >= R ? M : estimate_mtilde(M, n, r);
}

double mean(const std::vector<double> &v) {
    double s = 0;
    for (double x : v) {
        s += x;
    }
    return v.empty() ? 0 : s / static_cast<double>(v.size());
}

double sample_stddev(const std::vector<double> &v) {
    if (v.size() < 2) {
        return 0;
    }
    double mu = mean(v);
    double s = 0;
    for (double x : v) {
        s += (x - mu) * (x - mu);
    }
    return std::sqrt(s / static_cast<double>(v.size() - 1));
}

}  // namespace

const char *oracle_style_name(OracleStyle style) {
    switch (style) {
        case OracleStyle::Product:
            return "product";
        case OracleStyle::Stack:
            return "stack";
        case OracleStyle::Recursive:
            return "recursive";
    }
    return "?";
}

OracleStyle parse_oracle_style(const std::string &name) {
    if (name == "product") {
        return OracleStyle::Product;
    }
    if (name == "stack") {
        return OracleStyle::Stack;
    }
    if (name == "recursive") {
        return OracleStyle::Recursive;
    }
    throw InputError("unknown oracle style '" + name + "' (expected product, stack or recursive)");
}

nlohmann::json oracle_spec_json(const OracleSpec &spec) {
    return {{"style", oracle_style_name(spec.style)}, {"level", spec.level}, {"m", spec.m}};
}

std::string render(const Table &table, OutputFormat format) {
    if (format == OutputFormat::Json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto &row : table.rows) {
            nlohmann::json obj = nlohmann::json::object();
            for (size_t c = 0; c < table.columns.size(); c++) {
                obj[table.columns[c]] = row[c];
            }
            rows.push_back(std::move(obj));
        }
        nlohmann::json doc = {{"config", table.config}, {"columns", table.columns}, {"rows", rows}};
        if (!table.summary.is_null()) {
            doc["summary"] = table.summary;
        }
        return dump_json(doc);
    }
    std::ostringstream out;
    out << "# config: " << table.config.dump() << "\n";
    for (size_t c = 0; c < table.columns.size(); c++) {
        out << (c ? "," : "") << table.columns[c];
    }
    out << "\n";
    for (const auto &row : table.rows) {
        for (size_t c = 0; c < row.size(); c++) {
            out << (c ? "," : "") << csv_cell(row[c]);
        }
        out << "\n";
    }
    if (!table.summary.is_null()) {
        out << "# summary: " << table.summary.dump() << "\n";
    }
    return out.str();
}

Table capacity_table(uint32_t lmax, uint32_t mmax) {
    if (lmax == 0 || mmax == 0 || mmax > 62) {
        throw InputError("capacity grid needs lmax >= 1 and 1 <= mmax <= 62");
    }
    Table t;
    t.config = {{"command", "capacity"}, {"lmax", lmax}, {"mmax", mmax}};
    t.columns.push_back("level");
    for (uint32_t m = 1; m <= mmax; m++) {
        t.columns.push_back("m" + std::to_string(m));
    }
    for (uint32_t level = 1; level <= lmax; level++) {
        std::vector<nlohmann::json> row = {level};
        for (uint32_t m = 1; m <= mmax; m++) {
            row.push_back(capacity_F(level, m));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table generate_corpus(const GenConfig &config, const std::filesystem::path &dir) {
    if (config.n > kBruteForceMaxVars) {
        throw ResourceError("n = " + std::to_string(config.n) + " exceeds the brute-force limit of " +
                            std::to_string(kBruteForceMaxVars));
    }
    Table t;
    t.config = {{"command", "gen"}, {"n", config.n},         {"lo", config.lo},
                {"hi", config.hi},  {"count", config.count}, {"seed", config.seed}};
    t.columns = {"file", "status", "seed", "equations", "solutions", "attempts"};
    for (size_t i = 0; i < config.count; i++) {
        char name[32];
        std::snprintf(name, sizeof(name), "system_%03zu.json", i);
        uint64_t seed = derive_seed(config.seed, i);
        try {
            BqeSystem system = generate_system(config.n, config.lo, config.hi, seed);
            std::vector<uint64_t> solutions = brute_force_solve(system);
            nlohmann::json j = system_to_json(system);
            j["meta"] = {{"seed", seed},
                         {"index", i},
                         {"master_seed", config.seed},
                         {"solutions", solutions},
                         {"range", {config.lo, config.hi}}};
            write_text_file(dir / name, dump_json(j));
            t.rows.push_back({name, "ok", seed, system.equations.size(), solutions.size(), nullptr});
        } catch (const GenerationError &e) {
            t.rows.push_back({name, "failed", seed, nullptr, nullptr, e.attempts});
        }
    }
    return t;
}

CompiledOracle compile_system(const BqeSystem &system, const CompileConfig &config) {
    CompiledOracle out;
    out.original = compile_oracle(system, config.oracle);
    out.depth = depth(out.original, config.cost);
    out.compressed = config.compress ? compress(out.original, config.cost) : out.original;
    out.compressed_depth = depth(out.compressed, config.cost);
    out.reduction =
        out.depth == 0 ? 0.0 : 1.0 - static_cast<double>(out.compressed_depth) / static_cast<double>(out.depth);
    return out;
}

Table compile_report(const std::vector<std::filesystem::path> &inputs, const CompileConfig &config,
                     const std::optional<std::filesystem::path> &circuit_dir) {
    Table t;
    std::vector<std::string> names;
    for (const auto &p : inputs) {
        names.push_back(p.filename().string());
    }
    t.config = {{"command", "compile"},
                {"oracle", oracle_spec_json(config.oracle)},
                {"compress", config.compress},
                {"cost_model", cost_json(config.cost)},
                {"inputs", names}};
    t.columns = {"file", "n", "equations", "ancillae", "gates", "depth", "compressed_gates", "compressed_depth",
                 "reduction"};
    std::vector<double> reductions;
    for (const auto &path : inputs) {
        BqeSystem system = read_system_file(path);
        CompiledOracle c = compile_system(system, config);
        reductions.push_back(c.reduction);
        t.rows.push_back({path.filename().string(), system.n, system.equations.size(), c.original.n_anc(),
                          c.original.gates().size(), c.depth, c.compressed.gates().size(), c.compressed_depth,
                          c.reduction});
        if (circuit_dir) {
            std::string stem = path.stem().string();
            write_text_file(*circuit_dir / (stem + ".circ"), to_text(c.original));
            if (config.compress) {
                write_text_file(*circuit_dir / (stem + ".compressed.circ"), to_text(c.compressed));
            }
        }
    }
    t.summary = {{"samples", reductions.size()},
                 {"mean_reduction", mean(reductions)},
                 {"stddev_reduction", sample_stddev(reductions)}};
    return t;
}

uint64_t equations_per_iteration(const SolveConfig &config, size_t R) {
    if (config.strategy == SplitStrategy::Random) {
        if (!(config.split_factor >= 1.0)) {
            throw InputError("split factor must be at least 1");
        }
        auto r = static_cast<uint64_t>(std::llround(static_cast<double>(R) / config.split_factor));
        return std::clamp<uint64_t>(r, 1, R);
    }
    if (config.groups == 0 || config.groups > R) {
        throw InputError("group count must lie in [1, " + std::to_string(R) + "]");
    }
    return (R + config.groups - 1) / config.groups;
}

SplitPlan make_plan(const SolveConfig &config, size_t R) {
    uint64_t r = equations_per_iteration(config, R);
    if (config.strategy == SplitStrategy::Random) {
        return SplitPlan::random(r, derive_seed(config.seed, 1));
    }
    return SplitPlan::round_robin(R, config.groups);
}

SolveRecord solve_system(const BqeSystem &system, const SolveConfig &config) {
    system.validate();
    if (!(config.nominal_rate > 0 && config.nominal_rate < 1)) {
        throw InputError("nominal success rate must lie in (0, 1)");
    }
    if (config.shots == 0) {
        throw InputError("need at least one shot");
    }
    size_t R = system.equations.size();
    SolveRecord rec;
    rec.plan = make_plan(config, R);
    rec.r = equations_per_iteration(config, R);
    rec.N = uint64_t{1} << system.n;
    rec.M = config.assume_m ? *config.assume_m : count_solutions(system);
    if (rec.M == 0 || rec.M >= rec.N) {
        throw InputError("K selection needs 1 <= M < 2^n (M = " + std::to_string(rec.M) + ")");
    }
    rec.Mtilde = mtilde_for(rec.M, system.n, rec.r, R);
    TwoLevelModel model{rec.N, rec.M, rec.Mtilde};
    if (config.iterations) {
        rec.K = *config.iterations;
        rec.model_p = std::min(1.0, model_solution_probability(model, rec.K));
        rec.model_P = success_probability(rec.model_p, config.shots);
        rec.feasible = rec.model_P >= config.nominal_rate;
    } else {
        KChoice c = choose_k(model, config.nominal_rate, config.shots, config.shots, default_k_max(rec.N, rec.M));
        rec.K = c.jk.K;
        rec.model_p = c.jk.p;
        rec.model_P = c.jk.P;
        rec.feasible = c.feasible;
    }

    RunOptions options;
    options.oracle = config.oracle;
    options.compress_oracles = config.compress;
    options.cost = config.cost;
    rec.run = run_randomized(system, rec.plan, rec.K, config.shots, derive_seed(config.seed, 2), options);

    std::vector<std::pair<uint64_t, uint64_t>> by_count(rec.run.histogram.begin(), rec.run.histogram.end());
    std::stable_sort(by_count.begin(), by_count.end(), [](const auto &a, const auto &b) {
        return a.second > b.second;
    });
    for (const auto &[x, count] : by_count) {
        bool ok = satisfies(system, x);
        rec.candidates.emplace_back(x, ok);
        rec.success = rec.success || ok;
    }
    return rec;
}

nlohmann::json solve_record_json(const BqeSystem &system, const SolveConfig &config, const SolveRecord &record) {
    nlohmann::json plan = {{"strategy", config.strategy == SplitStrategy::Random ? "random" : "cyclic"},
                           {"equations_per_iteration", record.r}};
    if (config.strategy == SplitStrategy::Random) {
        plan["split_factor"] = config.split_factor;
        plan["seed"] = record.plan.seed;
    } else {
        plan["groups"] = record.plan.groups;
    }
    nlohmann::json params = {{"n", system.n},
                             {"equations", system.equations.size()},
                             {"oracle", oracle_spec_json(config.oracle)},
                             {"ancillae", record.run.ancillae},
                             {"plan", plan},
                             {"N", record.N},
                             {"M", record.M},
                             {"M_assumed", config.assume_m.has_value()},
                             {"Mtilde", record.Mtilde},
                             {"K", record.K},
                             {"J", config.shots},
                             {"epsilon", 1.0 - config.nominal_rate},
                             {"nominal_rate", config.nominal_rate},
                             {"compress", config.compress},
                             {"cost_model", cost_json(config.cost)},
                             {"seeds",
                              {{"master", config.seed},
                               {"plan", record.plan.seed},
                               {"measurement", derive_seed(config.seed, 2)}}}};
    nlohmann::json iterations = nlohmann::json::array();
    for (size_t i = 0; i < record.run.iterations.size(); i++) {
        const auto &it = record.run.iterations[i];
        iterations.push_back({{"iteration", i + 1},
                              {"group", it.group},
                              {"ancillae", it.ancillae},
                              {"oracle_depth", it.oracle_depth},
                              {"compressed_depth", it.compressed_depth},
                              {"probability", it.probability}});
    }
    nlohmann::json histogram = nlohmann::json::object();
    for (const auto &[x, count] : record.run.histogram) {
        histogram[std::to_string(x)] = count;
    }
    nlohmann::json candidates = nlohmann::json::array();
    for (const auto &[x, ok] : record.candidates) {
        candidates.push_back({{"value", x}, {"satisfies", ok}});
    }
    return {{"command", "solve"},
            {"params", params},
            {"model", {{"p", record.model_p}, {"P", record.model_P}, {"feasible", record.feasible}}},
            {"trace", record.run.trace},
            {"iterations", iterations},
            {"histogram", histogram},
            {"solutions", record.run.solutions},
            {"candidates", candidates},
            {"success", record.success}};
}

Table solve_trace_table(const SolveConfig &config, const SolveRecord &record) {
    Table t;
    t.config = {{"command", "solve"},
                {"oracle", oracle_spec_json(config.oracle)},
                {"seed", config.seed},
                {"shots", config.shots},
                {"K", record.K}};
    t.columns = {"iteration", "group_size", "ancillae", "oracle_depth", "compressed_depth", "probability"};
    t.rows.push_back({0, nullptr, nullptr, nullptr, nullptr, record.run.trace[0]});
    for (size_t i = 0; i < record.run.iterations.size(); i++) {
        const auto &it = record.run.iterations[i];
        t.rows.push_back(
            {i + 1, it.group.size(), it.ancillae, it.oracle_depth, it.compressed_depth, it.probability});
    }
    t.summary = {{"success", record.success}, {"model_P", record.model_P}};
    return t;
}

LinearFit fit_line(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw InputError("a line fit needs at least two paired points");
    }
    double mx = mean(x);
    double my = mean(y);
    double sxx = 0;
    double sxy = 0;
    for (size_t i = 0; i < x.size(); i++) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0) {
        throw InputError("a line fit needs at least two distinct x values");
    }
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    if (x.size() > 2) {
        double sse = 0;
        for (size_t i = 0; i < x.size(); i++) {
            double e = y[i] - fit.intercept - fit.slope * x[i];
            sse += e * e;
        }
        double se = std::sqrt(sse / static_cast<double>(x.size() - 2) / sxx);
        // Normal quantile; the corpora here have dozens of points.
        fit.slope_ci = 1.959963984540054 * se;
    }
    return fit;
}

std::vector<SweepPoint> sweep_split(const SweepConfig &config) {
    if (config.factors.empty() || config.samples == 0) {
        throw InputError("sweep needs at least one factor and one sample");
    }
    double eps = 1.0 - config.nominal_rate;
    std::vector<SweepPoint> points;
    for (size_t s = 0; s < config.samples; s++) {
        uint64_t system_seed = derive_seed(config.seed, s);
        BqeSystem system = generate_system(config.n, 1, 1, system_seed);
        size_t R = system.equations.size();
        uint64_t N = uint64_t{1} << system.n;
        uint64_t M = count_solutions(system);
        OracleSpec spec{OracleStyle::Recursive, config.level, 0};

        std::vector<SweepPoint> mine;
        for (size_t fi = 0; fi < config.factors.size(); fi++) {
            double f = config.factors[fi];
            if (!(f >= 1.0)) {
                throw InputError("split factors must be at least 1");
            }
            auto r = static_cast<uint64_t>(std::llround(static_cast<double>(R) / f));
            if (r < 2) {
                throw InputError("split factor " + std::to_string(f) + " leaves " + std::to_string(r) +
                                 " equation(s) per iteration; use a smaller factor");
            }
            r = std::min<uint64_t>(r, R);
            TwoLevelModel model{N, M, mtilde_for(M, system.n, r, R)};
            KChoice c = choose_k(model, 1.0 - eps, 1, config.max_shots, default_k_max(N, M));

            SplitPlan plan = r == R ? SplitPlan::single(R) : SplitPlan::random(r, derive_seed(system_seed, fi + 1));
            uint32_t m = resolve_ancillae(spec, r);
            std::map<std::vector<size_t>, uint64_t> cache;
            Rng plan_rng(plan.seed);
            uint64_t total = c.jk.K * depth(diffusion_circuit(system.n, m), config.cost);
            for (uint64_t k = 0; k < c.jk.K; k++) {
                std::vector<size_t> group;
                if (plan.strategy == SplitStrategy::Cyclic) {
                    group = plan.groups[0];
                } else {
                    for (uint64_t e : plan_rng.sample_without_replacement(R, r)) {
                        group.push_back(static_cast<size_t>(e));
                    }
                    std::sort(group.begin(), group.end());
                }
                auto it = cache.find(group);
                if (it == cache.end()) {
                    Circuit oracle = compress(compile_oracle(system.subsystem(group), spec), config.cost);
                    it = cache.emplace(group, depth(oracle, config.cost)).first;
                }
                total += it->second;
            }
            mine.push_back({s, f, r, c.jk.J, c.jk.K, total, 0.0});
        }
        uint64_t longest = 0;
        for (const auto &p : mine) {
            longest = std::max(longest, p.total_depth);
        }
        for (auto &p : mine) {
            p.relative_depth = longest == 0 ? 0.0 : static_cast<double>(p.total_depth) / static_cast<double>(longest);
            points.push_back(p);
        }
    }
    return points;
}

Table sweep_table(const SweepConfig &config, const std::vector<SweepPoint> &points) {
    Table t;
    t.config = {{"command", "sweep-split"}, {"n", config.n},
                {"factors", config.factors}, {"samples", config.samples},
                {"seed", config.seed},       {"nominal_rate", config.nominal_rate},
                {"max_shots", config.max_shots}, {"level", config.level},
                {"cost_model", cost_json(config.cost)}};
    t.columns = {"system", "factor", "equations_per_iteration", "J", "K", "total_depth", "relative_depth"};
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto &p : points) {
        t.rows.push_back({p.system, p.factor, p.r, p.J, p.K, p.total_depth, p.relative_depth});
        xs.push_back(p.factor);
        ys.push_back(p.relative_depth);
    }
    try {
        LinearFit fit = fit_line(xs, ys);
        t.summary = {{"slope", fit.slope}, {"intercept", fit.intercept}, {"slope_ci95", fit.slope_ci}};
    } catch (const InputError &) {
        t.summary = {{"slope", nullptr}};
    }
    return t;
}

std::vector<HeatmapCell> success_heatmap(const HeatmapConfig &config) {
    if (config.shots.empty() || config.n_values.empty() || config.samples == 0) {
        throw InputError("heatmap needs n values, shot counts and at least one sample");
    }
    std::vector<HeatmapCell> cells;
    for (uint32_t n : config.n_values) {
        std::map<std::pair<uint64_t, uint64_t>, HeatmapCell> by_key;
        uint64_t n_seed = derive_seed(config.seed, n);
        for (size_t s = 0; s < config.samples; s++) {
            uint64_t system_seed = derive_seed(n_seed, s);
            BqeSystem system = generate_system(n, config.lo, config.hi, system_seed);
            uint64_t M = count_solutions(system);
            for (size_t si = 0; si < config.shots.size(); si++) {
                SolveConfig sc;
                sc.oracle = {OracleStyle::Recursive, config.level, 0};
                sc.strategy = SplitStrategy::Random;
                sc.split_factor = config.split_factor;
                sc.nominal_rate = config.nominal_rate;
                sc.shots = config.shots[si];
                sc.seed = derive_seed(system_seed, si + 1);
                SolveRecord rec = solve_system(system, sc);
                HeatmapCell &cell = by_key[{M, config.shots[si]}];
                cell.n = n;
                cell.M = M;
                cell.shots = config.shots[si];
                cell.runs++;
                cell.successes += rec.success ? 1 : 0;
            }
        }
        for (const auto &[key, cell] : by_key) {
            cells.push_back(cell);
        }
    }
    return cells;
}

Table heatmap_table(const HeatmapConfig &config, const std::vector<HeatmapCell> &cells) {
    Table t;
    t.config = {{"command", "success-heatmap"}, {"n", config.n_values},
                {"lo", config.lo},              {"hi", config.hi},
                {"shots", config.shots},        {"nominal_rate", config.nominal_rate},
                {"split_factor", config.split_factor}, {"level", config.level},
                {"samples", config.samples},    {"seed", config.seed}};
    t.columns = {"n", "M", "shots", "successes", "runs", "rate"};
    uint64_t successes = 0;
    uint64_t runs = 0;
    for (const auto &c : cells) {
        t.rows.push_back({c.n, c.M, c.shots, c.successes, c.runs,
                          static_cast<double>(c.successes) / static_cast<double>(c.runs)});
        successes += c.successes;
        runs += c.runs;
    }
    t.summary = {{"successes", successes},
                 {"runs", runs},
                 {"rate", runs == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(runs)}};
    return t;
}

}  // namespace qbool
