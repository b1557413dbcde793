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

#include "bornbench/bench.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <fmt/format.h>

#include "bornbench/chow_liu.h"
#include "bornbench/executor.h"
#include "bornbench/run_io.h"

namespace fs = std::filesystem;

namespace bornbench {

namespace {

void prepare_output_dir(const fs::path &dir, bool force) {
    if (fs::exists(dir)) {
        if (!fs::is_directory(dir)) {
            throw ConfigError(fmt::format("output path `{}` exists and is not a directory", dir.string()));
        }
        if (!fs::is_empty(dir)) {
            if (!force) {
                throw ConfigError(
                    fmt::format("output directory `{}` already exists; pass --force to overwrite", dir.string()));
            }
            fs::remove_all(dir);
        }
    }
    fs::create_directories(dir / "checkpoints");
}

void write_config_echo(const fs::path &dir, const RunConfig &config, const std::string &digest) {
    const auto &training = config.training;
    std::string text = "# bornbench run configuration\n";
    text += canonical_training_text(training, "noise.txt");
    text += "label = " + config.label + "\n";
    text += "threads = " + std::to_string(config.threads) + "\n";
    if (!config.deploy_noise.empty()) {
        write_text_file((dir / "deploy_noise.txt").string(), to_profile_text(load_noise(config.deploy_noise)));
        text += "deploy_noise = deploy_noise.txt\n";
    }
    text += "digest = " + digest + "\n";
    text += "tool_version = " + std::string(kToolVersion) + "\n";
    if (training.noise) {
        write_text_file((dir / "noise.txt").string(), to_profile_text(*training.noise));
    }
    write_text_file((dir / "config.txt").string(), text);
}

std::ofstream open_output(const fs::path &path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    return out;
}

/// Trains `setup` into an already prepared directory.
RunRecord execute_run(const TrainingSetup &setup, const RunConfig &config, const fs::path &dir,
                      const std::optional<Checkpoint> &resume, bool json, std::ostream *log) {
    write_config_echo(dir, config, setup.digest);
    auto csv = open_output(dir / "metrics.csv");
    csv << metrics_csv_header(setup.target) << "\n";
    std::optional<std::ofstream> jsonl;
    if (json) {
        jsonl.emplace(open_output(dir / "metrics.jsonl"));
    }
    std::size_t num_states = setup.target.support().size();
    auto on_row = [&](const MetricRecord &record) {
        csv << metrics_csv_row(record, num_states) << "\n";
        csv.flush();
        if (jsonl) {
            *jsonl << metrics_json_line(record, setup.target) << "\n";
            jsonl->flush();
        }
        if (log) {
            *log << fmt::format("step {:>4}  loss {:<12}  kl {}\n", record.step, format_double(record.loss),
                                format_double(record.kl_mean));
        }
    };
    auto on_checkpoint = [&](const Checkpoint &checkpoint) {
        save_checkpoint(checkpoint, (dir / "checkpoints" / checkpoint_file_name(checkpoint.step)).string());
    };
    auto record = train(setup, resume, config.threads, on_row, on_checkpoint);

    write_text_file((dir / "theta.csv").string(), theta_csv(record));
    std::string final_theta;
    if (!record.thetas.empty()) {
        for (double t : record.thetas.back()) {
            final_theta += format_double(t) + "\n";
        }
    }
    write_text_file((dir / "theta_final.txt").string(), final_theta);
    return record;
}

KlOptions kl_options(const TrainingConfig &config) {
    return {config.kl_repeats, config.kl_shots, config.kl_floor_scale};
}

std::string csv_field(const std::string &text) {
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') {
            out += '"';
        }
        out += c == '\n' ? ' ' : c;
    }
    return out + "\"";
}

std::pair<std::string, std::string> split_assignment(const std::string &token, std::size_t line_no) {
    auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw ConfigError(fmt::format("sweep line {}: expected key=value, got `{}`", line_no, token));
    }
    return {token.substr(0, eq), token.substr(eq + 1)};
}

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(text);
    while (std::getline(in, cell, sep)) {
        out.push_back(cell);
    }
    if (!text.empty() && text.back() == sep) {
        out.emplace_back();
    }
    return out;
}

}  // namespace

TrainOutcome run_training(const RunConfig &config, const TrainOptions &options) {
    fs::path dir = !options.output_dir.empty()  ? fs::path(options.output_dir)
                   : !config.output_dir.empty() ? fs::path(config.output_dir)
                                                : fs::path("runs") / config.label;
    auto setup = TrainingSetup::from_config(config.training);
    prepare_output_dir(dir, options.force);
    auto record = execute_run(setup, config, dir, std::nullopt, options.json, options.log);
    if (!config.deploy_noise.empty()) {
        run_deploy(dir, load_noise(config.deploy_noise));
    }
    return {dir, std::move(record), setup.digest};
}

LoadedRun load_run(const fs::path &dir) {
    fs::path config_path = dir / "config.txt";
    fs::path theta_path = dir / "theta.csv";
    if (!fs::exists(config_path)) {
        throw ConfigError(fmt::format("`{}` is not a run directory (no config.txt)", dir.string()));
    }
    if (!fs::exists(theta_path)) {
        throw ConfigError(fmt::format("run directory `{}` has no parameter trajectory (theta.csv)", dir.string()));
    }
    LoadedRun run;
    run.config = load_run_config(config_path.string());
    run.dir = dir;
    run.trajectory = parse_theta_csv(read_text_file(theta_path.string()));
    return run;
}

std::vector<DeployRow> run_deploy(const fs::path &run_dir, const NoiseModel &noise, const std::string &out_csv) {
    noise.validate();
    auto run = load_run(run_dir);
    TrainingConfig clean = run.config.training;
    clean.noise.reset();
    auto setup = TrainingSetup::from_config(clean);
    auto options = kl_options(clean);

    std::vector<DeployRow> rows(run.trajectory.size());
    std::size_t threads = std::max<std::size_t>(1, run.config.threads);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < rows.size(); k = next++) {
            const auto &[step, theta] = run.trajectory[k];
            if (theta.size() != setup.circuit.parameter_count) {
                throw ConfigError(fmt::format("trajectory row for step {} has the wrong parameter count", step));
            }
            auto model = output_distribution(setup.circuit, theta);
            auto noisy = evolve_noisy(setup.circuit, theta, noise);
            rows[k].step = step;
            rows[k].noiseless = mean_kl(setup.target, model, options, {clean.seed, StreamPurpose::deploy_clean, step});
            rows[k].noisy = mean_kl(setup.target, noisy, options, {clean.seed, StreamPurpose::deploy_noisy, step});
        }
    };
    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; t++) {
            pool.emplace_back([&, t] {
                try {
                    worker();
                } catch (...) {
                    errors[t] = std::current_exception();
                    next = rows.size();
                }
            });
        }
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }

    fs::path out = out_csv.empty() ? run_dir / "deploy.csv" : fs::path(out_csv);
    write_text_file(out.string(), deploy_csv(rows));
    return rows;
}

std::string deploy_csv(const std::vector<DeployRow> &rows) {
    std::string out = "step,kl_mean_noiseless,kl_std_noiseless,kl_mean_noisy,kl_std_noisy,smoothing_flag\n";
    for (const auto &row : rows) {
        out += fmt::format("{},{},{},{},{},{}\n", row.step, format_double(row.noiseless.mean),
                           format_double(row.noiseless.std), format_double(row.noisy.mean),
                           format_double(row.noisy.std), (row.noiseless.smoothed || row.noisy.smoothed) ? 1 : 0);
    }
    return out;
}

WarmstartReport run_warmstart(const fs::path &run_dir, std::uint64_t start_step, const NoiseModel &noise,
                              std::uint64_t extra_steps, const std::string &output_dir, bool force,
                              std::size_t threads) {
    noise.validate();
    auto run = load_run(run_dir);
    fs::path checkpoint_path = run_dir / "checkpoints" / checkpoint_file_name(start_step);
    if (!fs::exists(checkpoint_path)) {
        throw ConfigError(fmt::format("no checkpoint at step {} in `{}`", start_step, run_dir.string()));
    }
    auto checkpoint = load_checkpoint(checkpoint_path.string());
    if (checkpoint.config_digest != config_digest(run.config.training)) {
        throw ConfigError(fmt::format("checkpoint `{}` was written by a different configuration",
                                      checkpoint_path.string()));
    }

    RunConfig config = run.config;
    config.training.noise = noise;
    config.training.n_steps = start_step + extra_steps;
    config.label = fmt::format("{}_warmstart_{}", run.config.label, start_step);
    config.deploy_noise.clear();
    config.threads = threads;
    auto setup = TrainingSetup::from_config(config.training);

    fs::path dir = output_dir.empty() ? run_dir / fmt::format("warmstart_{:04}", start_step) : fs::path(output_dir);
    prepare_output_dir(dir, force);
    auto record = execute_run(setup, config, dir, checkpoint, false, nullptr);

    WarmstartReport report;
    report.start_step = start_step;
    report.dir = dir;
    bool have_min = false;
    bool have_initial = false;
    for (const auto &row : record.rows) {
        if (std::isnan(row.kl_mean)) {
            continue;
        }
        KlSummary summary{row.kl_mean, row.kl_std, row.smoothing};
        if (!have_initial) {
            report.initial = summary;
            have_initial = true;
        }
        report.final = summary;
        if (!have_min || row.kl_mean < report.minimum.mean) {
            report.minimum = summary;
            report.minimum_step = row.step;
            have_min = true;
        }
    }
    write_text_file((dir / "report.csv").string(), warmstart_csv(report));
    return report;
}

std::string warmstart_csv(const WarmstartReport &r) {
    return fmt::format("S,kl_i_mean,kl_i_std,kl_f_mean,kl_f_std,kl_min_mean,kl_min_std\n{},{},{},{},{},{},{}\n",
                       r.start_step, format_double(r.initial.mean), format_double(r.initial.std),
                       format_double(r.final.mean), format_double(r.final.std), format_double(r.minimum.mean),
                       format_double(r.minimum.std));
}

std::string format_warmstart(const WarmstartReport &r) {
    auto cell = [](const KlSummary &s) { return fmt::format("{:.2f} +- {:.2f}", s.mean, s.std); };
    return fmt::format("{:>5}  {:>16}  {:>16}  {:>16}\n{:>5}  {:>16}  {:>16}  {:>16}\n", "S", "<KL>_i", "<KL>_f",
                       "min <KL>", r.start_step, cell(r.initial), cell(r.final), cell(r.minimum));
}

bool EmbedReport::embeddable() const {
    return std::all_of(layers.begin(), layers.end(), [](const auto &l) { return l.embedding.has_value(); });
}

EmbedReport run_embed(int d_c, const CouplingGraph &graph, const std::string &edges, ImageShape shape) {
    std::vector<EntanglerLayer> layers;
    if (!edges.empty()) {
        layers.push_back(schedule_edges(parse_edge_list(edges)));
    } else if (d_c == 2 || d_c == 4) {
        if (shape.num_pixels() != 4) {
            throw ConfigError("the d_C = 2 and d_C = 4 layouts are defined for 2x2 images only; pass --edges");
        }
        if (d_c == 2) {
            layers = {entangler_dc2(0), entangler_dc2(1)};
        } else {
            layers = {entangler_dc4()};
        }
    } else if (d_c == 3) {
        layers.push_back(chow_liu_layer(bas_target_distribution(shape), 0).layer);
    } else if (d_c != 0) {
        throw ConfigError(fmt::format("d_C must be 0, 2, 3 or 4, got {}", d_c));
    }

    EmbedReport report;
    report.graph = graph.name();
    std::set<std::pair<std::size_t, std::size_t>> local;
    std::set<std::pair<std::size_t, std::size_t>> nonlocal;
    for (std::size_t i = 0; i < layers.size(); i++) {
        EmbedLayerReport entry;
        entry.layer = i;
        for (const auto &e : layers[i].edges()) {
            if (e.control >= shape.num_pixels() || e.target >= shape.num_pixels()) {
                throw ConfigError(fmt::format("edge {}-{} is outside the {}x{} image", e.control, e.target,
                                              shape.rows, shape.cols));
            }
            bool is_local = shape.adjacent(e.control, e.target);
            entry.edges.push_back({e, is_local});
            auto pair = std::minmax(e.control, e.target);
            (is_local ? local : nonlocal).insert({pair.first, pair.second});
        }
        entry.embedding = embed_layer(layers[i], graph, shape.num_pixels());
        report.layers.push_back(std::move(entry));
    }
    report.local_connections = local.size();
    report.nonlocal_connections = nonlocal.size();
    return report;
}

std::string format_embed(const EmbedReport &report) {
    std::string out = "graph " + report.graph + "\n";
    for (const auto &layer : report.layers) {
        out += fmt::format("layer {}:", layer.layer);
        for (const auto &e : layer.edges) {
            out += fmt::format(" {}-{} ({})", e.edge.control, e.edge.target, e.local ? "local" : "non-local");
        }
        out += "\n";
        if (layer.embedding) {
            out += "  mapping:";
            for (std::size_t q = 0; q < layer.embedding->size(); q++) {
                out += fmt::format(" {}->{}", q, (*layer.embedding)[q]);
            }
            out += "\n";
        } else {
            out += "  NOT-EMBEDDABLE\n";
        }
    }
    out += fmt::format("connections: {} local, {} non-local\n", report.local_connections,
                       report.nonlocal_connections);
    out += report.embeddable() ? "EMBEDDABLE\n" : "NOT-EMBEDDABLE\n";
    return out;
}

std::vector<SweepRun> parse_sweep(std::string_view text, const std::string &base_dir) {
    RunConfig base;
    std::vector<SweepRun> runs;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;

    auto add_run = [&](std::vector<std::pair<std::string, std::string>> overrides) {
        SweepRun run;
        run.row = runs.size();
        run.config = base;
        bool has_seed = false;
        for (const auto &[k, v] : overrides) {
            has_seed = has_seed || k == "seed";
        }
        if (!has_seed) {
            overrides.emplace_back("seed", std::to_string(base.training.seed + run.row));
        }
        run.overrides = std::move(overrides);
        runs.push_back(std::move(run));
    };

    while (std::getline(in, line)) {
        line_no++;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream words(line);
        std::string verb;
        if (!(words >> verb)) {
            continue;
        }
        std::vector<std::pair<std::string, std::string>> assignments;
        for (std::string token; words >> token;) {
            assignments.push_back(split_assignment(token, line_no));
        }
        if (verb == "set") {
            for (const auto &[k, v] : assignments) {
                try {
                    apply_override(base, k, v, base_dir);
                } catch (const ConfigError &e) {
                    throw ConfigError(fmt::format("sweep line {}: {}", line_no, e.what()));
                }
            }
        } else if (verb == "run") {
            add_run(assignments);
        } else if (verb == "grid") {
            std::vector<std::vector<std::string>> values;
            for (const auto &[k, v] : assignments) {
                values.push_back(split(v, ','));
            }
            std::vector<std::size_t> pos(assignments.size(), 0);
            while (true) {
                std::vector<std::pair<std::string, std::string>> combo;
                for (std::size_t i = 0; i < assignments.size(); i++) {
                    combo.emplace_back(assignments[i].first, values[i][pos[i]]);
                }
                add_run(combo);
                std::size_t i = assignments.size();
                while (i > 0) {
                    i--;
                    if (++pos[i] < values[i].size()) {
                        break;
                    }
                    pos[i] = 0;
                    if (i == 0) {
                        i = assignments.size() + 1;
                        break;
                    }
                }
                if (assignments.empty() || i > assignments.size()) {
                    break;
                }
            }
        } else {
            throw ConfigError(fmt::format("sweep line {}: unknown directive `{}`", line_no, verb));
        }
    }
    for (auto &run : runs) {
        run.base_dir = base_dir;
    }
    return runs;
}

std::vector<SweepResult> run_sweep(const std::string &sweep_path, const std::string &output_dir, std::size_t jobs,
                                   bool force) {
    std::string base_dir = fs::path(sweep_path).parent_path().string();
    auto runs = parse_sweep(read_text_file(sweep_path), base_dir);
    fs::path out = output_dir.empty() ? fs::path("sweep") : fs::path(output_dir);
    if (fs::exists(out) && !fs::is_empty(out)) {
        if (!force) {
            throw ConfigError(fmt::format("output directory `{}` already exists; pass --force to overwrite",
                                          out.string()));
        }
        fs::remove_all(out);
    }
    fs::create_directories(out);

    std::vector<SweepResult> results(runs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < runs.size(); k = next++) {
            auto &result = results[k];
            result.row = runs[k].row;
            result.dir = (out / fmt::format("row_{:03}", runs[k].row)).string();
            for (const auto &[key, value] : runs[k].overrides) {
                if (key == "seed") {
                    result.seed = std::strtoull(value.c_str(), nullptr, 10);
                }
            }
            try {
                RunConfig config = runs[k].config;
                for (const auto &[key, value] : runs[k].overrides) {
                    apply_override(config, key, value, runs[k].base_dir);
                }
                config.training.validate();
                result.label = config.label;
                result.seed = config.training.seed;
                result.d_C = config.training.d_C;
                result.L = config.training.L;
                result.n_shots_train = config.training.n_shots_train;
                TrainOptions options;
                options.output_dir = result.dir;
                options.force = true;
                auto outcome = run_training(config, options);
                result.digest = outcome.digest;
                bool found = false;
                for (const auto &row : outcome.record.rows) {
                    if (!std::isnan(row.kl_mean) && (!found || row.kl_mean < result.min_kl_mean)) {
                        result.min_kl_mean = row.kl_mean;
                        result.min_kl_std = row.kl_std;
                        result.min_kl_step = row.step;
                        found = true;
                    }
                }
                result.ok = found;
                if (!found) {
                    result.error = "no KL measurements";
                }
            } catch (const std::exception &e) {
                result.ok = false;
                result.error = e.what();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < std::max<std::size_t>(1, jobs); t++) {
            pool.emplace_back(worker);
        }
    }
    write_text_file((out / "summary.csv").string(), sweep_csv(results));
    write_text_file((out / "table.txt").string(), sweep_table(results));
    return results;
}

std::string sweep_csv(const std::vector<SweepResult> &results) {
    std::string out =
        "row,label,seed,d_C,L,n_shots_train,digest,status,min_kl_mean,min_kl_std,min_kl_step,run_dir,error\n";
    for (const auto &r : results) {
        out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{}\n", r.row, csv_field(r.label), r.seed, r.d_C, r.L,
                           r.n_shots_train, r.digest, r.ok ? "ok" : "failed",
                           r.ok ? format_double(r.min_kl_mean) : "nan", r.ok ? format_double(r.min_kl_std) : "nan",
                           r.min_kl_step, csv_field(r.dir), csv_field(r.error));
    }
    return out;
}

std::string sweep_table(const std::vector<SweepResult> &results) {
    std::set<int> columns;
    std::map<std::pair<std::size_t, std::uint64_t>, std::map<int, std::vector<std::string>>> cells;
    for (const auto &r : results) {
        if (r.label.empty()) {
            // Failed before its config was resolved.
            continue;
        }
        columns.insert(r.d_C);
        cells[{r.L, r.n_shots_train}][r.d_C].push_back(
            r.ok ? fmt::format("{:.2f} +- {:.2f}", r.min_kl_mean, r.min_kl_std) : std::string("failed"));
    }
    std::string out = fmt::format("{:>3} {:>8}", "L", "n_shots");
    for (int c : columns) {
        out += fmt::format("  {:>14}", fmt::format("d_C={}", c));
    }
    out += "\n";
    for (const auto &[key, row] : cells) {
        out += fmt::format("{:>3} {:>8}", key.first, key.second);
        for (int c : columns) {
            auto it = row.find(c);
            std::string text;
            if (it != row.end()) {
                for (const auto &v : it->second) {
                    text += (text.empty() ? "" : " / ") + v;
                }
            }
            out += fmt::format("  {:>14}", text.empty() ? "-" : text);
        }
        out += "\n";
    }
    return out;
}

std::string format_bas(const ImageShape &shape) {
    auto states = enumerate_bas(shape);
    std::size_t n = shape.num_pixels();
    std::string out = fmt::format("BAS({},{}): {} images\n", shape.rows, shape.cols, states.size());
    for (BasisIndex x : states) {
        out += to_bitstring(x, n) + "\n";
        for (std::size_t r = 0; r < shape.rows; r++) {
            out += "  ";
            for (std::size_t c = 0; c < shape.cols; c++) {
                out += qubit_value(x, n, shape.pixel(r, c)) ? '#' : '.';
            }
            out += "\n";
        }
    }
    return out;
}

}  // namespace bornbench
