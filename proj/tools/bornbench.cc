// Copyright 2026 The Bornbench Authors
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

#include <iostream>

#include "CLI11.hpp"

#include "bornbench/bench.h"

using namespace bornbench;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Benchmark harness for data-driven quantum circuit learning on bars-and-stripes."};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    std::string config_path;
    std::string output_dir;
    std::optional<std::uint64_t> seed;
    bool force = false;
    bool json = false;
    bool quiet = false;
    auto *train = app.add_subcommand("train", "Train one configuration into a run directory.");
    train->add_option("-c,--config", config_path, "Config file (key = value lines)")->required();
    train->add_option("-o,--output", output_dir, "Run directory (default: output_dir from config, else runs/<label>)");
    train->add_option("--seed", seed, "Override the config seed");
    train->add_flag("--force", force, "Overwrite an existing run directory");
    train->add_flag("--json", json, "Also write metrics.jsonl");
    train->add_flag("-q,--quiet", quiet, "No per-step progress");

    std::string run_dir;
    std::string noise_path;
    std::string deploy_out;
    auto *deploy = app.add_subcommand("deploy", "Evaluate a trained trajectory under a noise profile.");
    deploy->add_option("dir", run_dir, "Run directory")->required();
    deploy->add_option("--noise", noise_path, "Noise profile")->required();
    deploy->add_option("-o,--output", deploy_out, "CSV path (default: <dir>/deploy.csv)");

    std::uint64_t warm_step = 0;
    std::uint64_t warm_steps = 10;
    std::size_t warm_threads = 1;
    auto *warm = app.add_subcommand("warmstart", "Resume a run from a checkpoint under noise.");
    warm->add_option("dir", run_dir, "Run directory")->required();
    warm->add_option("--step", warm_step, "Checkpoint step S")->required();
    warm->add_option("--noise", noise_path, "Noise profile")->required();
    warm->add_option("--steps", warm_steps, "Additional training steps")->capture_default_str();
    warm->add_option("-o,--output", output_dir, "Output directory (default: <dir>/warmstart_SSSS)");
    warm->add_option("-t,--threads", warm_threads, "Gradient worker threads")->capture_default_str();
    warm->add_flag("--force", force, "Overwrite an existing output directory");

    int d_c = 0;
    std::string graph_spec;
    std::string edges;
    std::size_t rows = 2;
    std::size_t cols = 2;
    auto *embed = app.add_subcommand("embed", "Embed an entangling layer into a coupling graph.");
    auto *dc_option = embed->add_option("--dc", d_c, "Entangler preset")->check(CLI::IsMember({0, 2, 3, 4}));
    embed->add_option("--graph", graph_spec, "plaquette4, ladder2xK, or an edge-list file")->required();
    auto *edges_option = embed->add_option("--edges", edges, "Explicit layer, e.g. 0-1,0-2,0-3");
    embed->add_option("--rows", rows, "Image rows")->capture_default_str();
    embed->add_option("--cols", cols, "Image columns")->capture_default_str();
    dc_option->excludes(edges_option);

    std::size_t jobs = 1;
    auto *sweep = app.add_subcommand("sweep", "Run every configuration of a sweep file.");
    sweep->add_option("-c,--config", config_path, "Sweep file")->required();
    sweep->add_option("-o,--output", output_dir, "Sweep directory (default: sweep)");
    sweep->add_option("-j,--jobs", jobs, "Concurrent runs")->capture_default_str();
    sweep->add_flag("--force", force, "Overwrite an existing sweep directory");

    auto *bas = app.add_subcommand("bas", "List the bars-and-stripes images of a shape.");
    bas->add_option("--rows", rows, "Image rows")->capture_default_str();
    bas->add_option("--cols", cols, "Image columns")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*train) {
            auto config = load_run_config(config_path);
            if (seed) {
                config.training.seed = *seed;
            }
            TrainOptions options{output_dir, force, json, quiet ? nullptr : &std::cerr};
            auto outcome = run_training(config, options);
            std::cout << outcome.dir.string() << "\n";
        } else if (*deploy) {
            auto rows_out = run_deploy(run_dir, load_noise(noise_path), deploy_out);
            std::cout << deploy_csv(rows_out);
        } else if (*warm) {
            auto report = run_warmstart(run_dir, warm_step, load_noise(noise_path), warm_steps, output_dir, force,
                                        warm_threads);
            std::cout << format_warmstart(report);
        } else if (*embed) {
            if (dc_option->count() == 0 && edges_option->count() == 0) {
                std::cerr << "embed: pass --dc or --edges\n";
                return kExitUsage;
            }
            auto report = run_embed(d_c, CouplingGraph::from_preset_or_file(graph_spec), edges, {rows, cols});
            std::cout << format_embed(report);
        } else if (*sweep) {
            auto results = run_sweep(config_path, output_dir, jobs, force);
            std::cout << sweep_table(results);
            std::size_t failed = 0;
            for (const auto &r : results) {
                if (!r.ok) {
                    std::cerr << "row " << r.row << " failed: " << r.error << "\n";
                    failed++;
                }
            }
            if (failed > 0) {
                return kExitRuntime;
            }
        } else if (*bas) {
            std::cout << format_bas({rows, cols});
        }
    } catch (const ConfigError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return 0;
}
