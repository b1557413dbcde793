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

#ifndef BORNBENCH_BENCH_H
#define BORNBENCH_BENCH_H

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bornbench/config.h"
#include "bornbench/coupling_graph.h"
#include "bornbench/trainer.h"

namespace bornbench {

struct TrainOptions {
    /// Overrides the config's output_dir when non-empty.
    std::string output_dir;
    bool force = false;
    /// Also write metrics.jsonl.
    bool json = false;
    /// Progress lines, one per row; may be null.
    std::ostream *log = nullptr;
};

struct TrainOutcome {
    std::filesystem::path dir;
    RunRecord record;
    std::string digest;
};

/// Trains one config into a fresh run directory: config.txt (with digest and
/// tool version), metrics.csv, theta.csv, checkpoints/, theta_final.txt, and
/// deploy.csv when the config names a deploy profile.
TrainOutcome run_training(const RunConfig &config, const TrainOptions &options);

/// A run directory read back from disk.
struct LoadedRun {
    RunConfig config;
    std::filesystem::path dir;
    std::vector<std::pair<std::uint64_t, std::vector<double>>> trajectory;
};

LoadedRun load_run(const std::filesystem::path &dir);

struct DeployRow {
    std::uint64_t step = 0;
    KlSummary noiseless;
    KlSummary noisy;
};

/// Re-evaluates mean KL at every recorded step, noiseless and under `noise`,
/// and writes deploy.csv into the run directory (or `out_csv`).
std::vector<DeployRow> run_deploy(const std::filesystem::path &run_dir, const NoiseModel &noise,
                                  const std::string &out_csv = {});

std::string deploy_csv(const std::vector<DeployRow> &rows);

struct WarmstartReport {
    std::uint64_t start_step = 0;
    KlSummary initial;
    KlSummary final;
    KlSummary minimum;
    std::uint64_t minimum_step = 0;
    std::filesystem::path dir;
};

/// Resumes a run from its checkpoint at `start_step` under `noise` for
/// `extra_steps` more steps, writing a run directory plus report.csv.
WarmstartReport run_warmstart(const std::filesystem::path &run_dir, std::uint64_t start_step,
                              const NoiseModel &noise, std::uint64_t extra_steps, const std::string &output_dir,
                              bool force, std::size_t threads = 1);

std::string warmstart_csv(const WarmstartReport &report);
std::string format_warmstart(const WarmstartReport &report);

struct EmbedEdge {
    Edge edge;
    /// The pixels are nearest neighbours in the image.
    bool local = false;
};

struct EmbedLayerReport {
    std::size_t layer = 0;
    std::vector<EmbedEdge> edges;
    std::optional<Embedding> embedding;
};

struct EmbedReport {
    std::string graph;
    std::vector<EmbedLayerReport> layers;
    /// Distinct unordered pixel pairs connected anywhere in the circuit.
    std::size_t local_connections = 0;
    std::size_t nonlocal_connections = 0;

    bool embeddable() const;
};

/// Every distinct entangling layer of the d_C preset (or the explicit edge
/// list) checked against the graph. d_C = 3 derives its tree from the BAS
/// target of `shape`.
EmbedReport run_embed(int d_c, const CouplingGraph &graph, const std::string &edges = {},
                      ImageShape shape = {});

std::string format_embed(const EmbedReport &report);

/// One line of a sweep, fully resolved.
struct SweepRun {
    std::size_t row = 0;
    RunConfig config;
    /// Relative paths in the overrides resolve against this directory.
    std::string base_dir;
    /// The key=value overrides that produced this row, in file order.
    std::vector<std::pair<std::string, std::string>> overrides;
};

/// Sweep file lines:
///   set k=v ...            change the base config for later lines
///   run k=v ...            one run
///   grid k=a,b k2=c,d ...  cartesian product, last key varying fastest
/// Rows that do not set `seed` get the base seed plus their row index.
std::vector<SweepRun> parse_sweep(std::string_view text, const std::string &base_dir);

struct SweepResult {
    std::size_t row = 0;
    std::string label;
    std::uint64_t seed = 0;
    int d_C = 0;
    std::size_t L = 0;
    std::uint64_t n_shots_train = 0;
    std::string digest;
    bool ok = false;
    double min_kl_mean = 0;
    double min_kl_std = 0;
    std::uint64_t min_kl_step = 0;
    std::string dir;
    std::string error;
};

/// Runs every row (up to `jobs` at a time), each into `output_dir/row_NNN`.
/// Failures are recorded per row. Writes summary.csv and table.txt.
std::vector<SweepResult> run_sweep(const std::string &sweep_path, const std::string &output_dir, std::size_t jobs,
                                   bool force);

std::string sweep_csv(const std::vector<SweepResult> &results);
/// Min mean KL laid out with rows (L, n_shots) and columns d_C.
std::string sweep_table(const std::vector<SweepResult> &results);

/// BAS images of a shape as bitstrings and pixel grids.
std::string format_bas(const ImageShape &shape);

}  // namespace bornbench

#endif
