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

#include "qbool/cli.h"

#include <chrono>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "qbool/compress.h"
#include "qbool/error.h"
#include "qbool/experiments.h"
#include "qbool/system_io.h"

namespace qbool {

namespace {

struct GlobalOptions {
    uint64_t seed = 0;
    std::string out;
    std::string format;
    bool timing = false;
};

struct CostOptions {
    std::string name = "standard";
    uint32_t mcz_cost = 0;
    bool decomposed_mcx = false;

    CostModel build() const {
        CostModel model = name == "unit" ? CostModel::unit() : CostModel::standard();
        if (mcz_cost) {
            model.mcz_constant = mcz_cost;
        }
        model.decomposed_mcx = decomposed_mcx;
        model.validate();
        return model;
    }
};

struct OracleOptions {
    std::string style = "recursive";
    uint32_t level = 2;
    uint32_t m = 0;

    OracleSpec build() const {
        if (level == 0) {
            throw InputError("level must be at least 1");
        }
        return {parse_oracle_style(style), level, m};
    }
};

void add_cost_options(CLI::App *cmd, CostOptions &cost) {
    cmd->add_option("--cost", cost.name, "Depth cost model")->check(CLI::IsMember({"standard", "unit"}));
    cmd->add_option("--mcz-cost", cost.mcz_cost, "Fixed MCZ cost (default 1 + arity, or 1 under --cost unit)");
    cmd->add_flag("--decomposed-mcx", cost.decomposed_mcx, "Charge 2k-1 for an MCX with k controls");
}

void add_oracle_options(CLI::App *cmd, OracleOptions &oracle) {
    cmd->add_option("--style", oracle.style, "Oracle construction")
        ->check(CLI::IsMember({"product", "stack", "recursive"}));
    cmd->add_option("--level", oracle.level, "Recursion level of the recursive oracle");
    cmd->add_option("--m", oracle.m, "Ancilla count (0 = smallest that fits)");
}

OutputFormat pick_format(const GlobalOptions &g, OutputFormat fallback) {
    if (g.format.empty()) {
        return fallback;
    }
    return g.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
}

void emit(const GlobalOptions &g, const std::string &text, std::ostream &out) {
    if (g.out.empty()) {
        out << text;
    } else {
        write_text_file(g.out, text);
    }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Grover search over boolean quadratic systems"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--seed", g.seed, "Master seed");
    app.add_option("--out", g.out, "Output file (a directory for gen)");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--timing", g.timing, "Record wall time (makes output non-reproducible)");

    uint32_t lmax = 10;
    uint32_t mmax = 10;
    auto *capacity = app.add_subcommand("capacity", "Equation capacity grid of the recursive oracle");
    capacity->add_option("--lmax", lmax, "Largest level");
    capacity->add_option("--mmax", mmax, "Largest ancilla count");

    GenConfig gen_config;
    std::vector<uint64_t> gen_range;
    auto *gen = app.add_subcommand("gen", "Generate random systems with a bounded solution count");
    gen->add_option("--n", gen_config.n, "Variables");
    gen->add_option("--solutions", gen_range, "Solution count range LO HI")->expected(2);
    gen->add_option("--count", gen_config.count, "Number of systems");

    std::vector<std::string> compile_inputs;
    OracleOptions compile_oracle_opts;
    CostOptions compile_cost;
    bool compile_compress = false;
    std::string emit_dir;
    auto *compile = app.add_subcommand("compile", "Build oracles and report depths");
    compile->add_option("systems", compile_inputs, "System JSON files")->required()->check(CLI::ExistingFile);
    add_oracle_options(compile, compile_oracle_opts);
    add_cost_options(compile, compile_cost);
    compile->add_flag("--compress", compile_compress, "Run the compression pass");
    compile->add_option("--emit-circuits", emit_dir, "Directory for circuit text files");

    std::string compress_input;
    CostOptions compress_cost;
    compress_cost.name = "unit";
    auto *compress_cmd = app.add_subcommand("compress", "Compress a circuit text file");
    bool compress_report = false;
    auto *compress_in = compress_cmd->add_option("circuit", compress_input, "Circuit text file")->check(CLI::ExistingFile);
    compress_cmd->add_option("--in", compress_input, "Circuit text file")->check(CLI::ExistingFile)->excludes(compress_in);
    compress_cmd->add_flag("--report", compress_report, "Print the depth report to stdout instead of stderr");
    add_cost_options(compress_cmd, compress_cost);

    std::string solve_input;
    OracleOptions solve_oracle_opts;
    CostOptions solve_cost;
    SolveConfig solve_config;
    std::string plan_name = "random";
    uint64_t assume_m = 0;
    uint64_t iterations = 0;
    bool no_compress = false;
    auto *solve = app.add_subcommand("solve", "Run randomized Grover search on one system");
    solve->add_option("system", solve_input, "System JSON file")->required()->check(CLI::ExistingFile);
    add_oracle_options(solve, solve_oracle_opts);
    add_cost_options(solve, solve_cost);
    solve->add_option("--plan", plan_name, "Equation split strategy")->check(CLI::IsMember({"random", "cyclic"}));
    solve->add_option("--split-factor", solve_config.split_factor, "Random plan: R / equations per iteration");
    solve->add_option("--groups", solve_config.groups, "Cyclic plan: number of round-robin groups");
    solve->add_option("--nominal-rate", solve_config.nominal_rate, "Target success probability");
    solve->add_option("--shots", solve_config.shots, "Measurements (J)");
    solve->add_option("--assume-m", assume_m, "Solution count for K selection instead of brute force");
    solve->add_option("--iterations", iterations, "Fixed K instead of the optimizer's choice");
    solve->add_flag("--no-compress", no_compress, "Skip oracle compression");

    SweepConfig sweep_config;
    CostOptions sweep_cost;
    auto *sweep = app.add_subcommand("sweep-split", "Relative total depth against split factor");
    sweep->add_option("--n", sweep_config.n, "Variables");
    sweep->add_option("--factors", sweep_config.factors, "Split factors");
    sweep->add_option("--samples", sweep_config.samples, "Systems in the corpus");
    sweep->add_option("--nominal-rate", sweep_config.nominal_rate, "Target success probability");
    sweep->add_option("--max-shots", sweep_config.max_shots, "Largest J considered");
    sweep->add_option("--level", sweep_config.level, "Oracle recursion level");
    add_cost_options(sweep, sweep_cost);

    HeatmapConfig heat_config;
    std::vector<uint64_t> heat_range;
    auto *heat = app.add_subcommand("success-heatmap", "Observed success rate per (n, M, shots)");
    heat->add_option("--n", heat_config.n_values, "Variable counts");
    heat->add_option("--solutions", heat_range, "Solution count range LO HI")->expected(2);
    heat->add_option("--shots", heat_config.shots, "Shot counts");
    heat->add_option("--nominal-rate", heat_config.nominal_rate, "Target success probability");
    heat->add_option("--split-factor", heat_config.split_factor, "R / equations per iteration");
    heat->add_option("--level", heat_config.level, "Oracle recursion level");
    heat->add_option("--samples", heat_config.samples, "Systems per n");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    auto start = std::chrono::steady_clock::now();
    try {
        if (*capacity) {
            Table t = capacity_table(lmax, mmax);
            if (g.timing) {
                t.summary = {{"wall_time_s", seconds_since(start)}};
            }
            emit(g, render(t, pick_format(g, OutputFormat::Csv)), out);
        } else if (*gen) {
            if (!gen_range.empty()) {
                gen_config.lo = gen_range[0];
                gen_config.hi = gen_range[1];
            }
            gen_config.seed = g.seed;
            std::filesystem::path dir = g.out.empty() ? "systems" : g.out;
            Table t = generate_corpus(gen_config, dir);
            if (g.timing) {
                t.summary = {{"wall_time_s", seconds_since(start)}};
            }
            OutputFormat f = pick_format(g, OutputFormat::Csv);
            write_text_file(dir / (f == OutputFormat::Json ? "manifest.json" : "manifest.csv"), render(t, f));
            size_t failed = 0;
            for (const auto &row : t.rows) {
                if (row[1] == "failed") {
                    err << "generation failed for " << row[0].get<std::string>() << "\n";
                    failed++;
                }
            }
            return failed ? 1 : 0;
        } else if (*compile) {
            CompileConfig c{compile_oracle_opts.build(), compile_compress, compile_cost.build()};
            std::vector<std::filesystem::path> inputs(compile_inputs.begin(), compile_inputs.end());
            std::optional<std::filesystem::path> dir;
            if (!emit_dir.empty()) {
                dir = emit_dir;
            }
            Table t = compile_report(inputs, c, dir);
            if (g.timing) {
                t.summary["wall_time_s"] = seconds_since(start);
            }
            emit(g, render(t, pick_format(g, OutputFormat::Csv)), out);
        } else if (*compress_cmd) {
            if (compress_input.empty()) {
                throw InputError("compress needs a circuit file (positional or --in)");
            }
            CostModel cost = compress_cost.build();
            Circuit original = parse_circuit_text(read_text_file(compress_input));
            Circuit result = compress(original, cost);
            emit(g, to_text(result), out);
            uint64_t before = depth(original, cost);
            uint64_t after = depth(result, cost);
            double ratio = before == 0 ? 1.0 : static_cast<double>(after) / static_cast<double>(before);
            (compress_report ? out : err) << "depth " << before << " -> " << after << " ratio " << ratio << " ("
                                          << cost.describe() << ")\n";
        } else if (*solve) {
            BqeSystem system = read_system_file(solve_input);
            solve_config.oracle = solve_oracle_opts.build();
            solve_config.cost = solve_cost.build();
            solve_config.strategy = plan_name == "cyclic" ? SplitStrategy::Cyclic : SplitStrategy::Random;
            solve_config.seed = g.seed;
            solve_config.compress = !no_compress;
            if (solve->count("--assume-m")) {
                solve_config.assume_m = assume_m;
            }
            if (solve->count("--iterations")) {
                solve_config.iterations = iterations;
            }
            SolveRecord rec = solve_system(system, solve_config);
            OutputFormat f = pick_format(g, OutputFormat::Json);
            if (f == OutputFormat::Json) {
                nlohmann::json j = solve_record_json(system, solve_config, rec);
                if (g.timing) {
                    j["wall_time_s"] = seconds_since(start);
                }
                emit(g, dump_json(j), out);
            } else {
                Table t = solve_trace_table(solve_config, rec);
                if (g.timing) {
                    t.summary["wall_time_s"] = seconds_since(start);
                }
                emit(g, render(t, f), out);
            }
        } else if (*sweep) {
            sweep_config.seed = g.seed;
            sweep_config.cost = sweep_cost.build();
            std::vector<SweepPoint> points = sweep_split(sweep_config);
            Table t = sweep_table(sweep_config, points);
            if (g.timing) {
                t.summary["wall_time_s"] = seconds_since(start);
            }
            emit(g, render(t, pick_format(g, OutputFormat::Csv)), out);
        } else if (*heat) {
            if (!heat_range.empty()) {
                heat_config.lo = heat_range[0];
                heat_config.hi = heat_range[1];
            }
            heat_config.seed = g.seed;
            std::vector<HeatmapCell> cells = success_heatmap(heat_config);
            Table t = heatmap_table(heat_config, cells);
            if (g.timing) {
                t.summary["wall_time_s"] = seconds_since(start);
            }
            emit(g, render(t, pick_format(g, OutputFormat::Csv)), out);
        }
    } catch (const ResourceError &e) {
        err << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const CapacityError &e) {
        err << "error: " << e.what() << " (minimal ancillae: " << e.required_ancillae << ")\n";
        return 2;
    } catch (const InputError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int run_cli(int argc, const char *const *argv) {
    return run_cli(argc, argv, std::cout, std::cerr);
}

}  // namespace qbool
