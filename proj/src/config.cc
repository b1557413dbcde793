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

#include "bornbench/config.h"

#include <filesystem>
#include <functional>
#include <vector>

#include <fmt/format.h>

#include "bornbench/circuit.h"

namespace bornbench {

namespace {

std::string resolve_path(const std::string &base_dir, const std::string &path) {
    std::filesystem::path p(path);
    if (p.is_absolute() || base_dir.empty()) {
        return p.string();
    }
    return (std::filesystem::path(base_dir) / p).string();
}

GradientMode parse_gradient_mode(std::string_view text) {
    if (text == "sampled") {
        return GradientMode::sampled;
    }
    if (text == "exact") {
        return GradientMode::exact;
    }
    throw ConfigError(fmt::format("key `gradient_mode`: expected `sampled` or `exact`, got `{}`", text));
}

std::string_view to_string(GradientMode m) {
    return m == GradientMode::sampled ? "sampled" : "exact";
}

struct TrainingField {
    std::string_view key;
    std::function<void(TrainingConfig &, const std::string &)> set;
    std::function<std::string(const TrainingConfig &)> get;
};

template <typename T>
TrainingField uint_field(std::string_view key, T TrainingConfig::*member) {
    return {
        key,
        [key, member](TrainingConfig &c, const std::string &v) { c.*member = static_cast<T>(parse_uint(key, v)); },
        [member](const TrainingConfig &c) { return std::to_string(c.*member); },
    };
}

TrainingField double_field(std::string_view key, double TrainingConfig::*member) {
    return {
        key,
        [key, member](TrainingConfig &c, const std::string &v) { c.*member = parse_double(key, v); },
        [member](const TrainingConfig &c) { return format_double(c.*member); },
    };
}

const std::vector<TrainingField> &training_fields() {
    static const std::vector<TrainingField> fields = {
        uint_field("rows", &TrainingConfig::rows),
        uint_field("cols", &TrainingConfig::cols),
        {"d_C", [](TrainingConfig &c, const std::string &v) { c.d_C = static_cast<int>(parse_int("d_C", v)); },
         [](const TrainingConfig &c) { return std::to_string(c.d_C); }},
        uint_field("L", &TrainingConfig::L),
        {"entangler_edges", [](TrainingConfig &c, const std::string &v) { c.entangler_edges = v; },
         [](const TrainingConfig &c) { return c.entangler_edges; }},
        uint_field("chow_liu_root", &TrainingConfig::chow_liu_root),
        uint_field("n_shots_train", &TrainingConfig::n_shots_train),
        uint_field("n_steps", &TrainingConfig::n_steps),
        double_field("alpha", &TrainingConfig::alpha),
        double_field("beta1", &TrainingConfig::beta1),
        double_field("beta2", &TrainingConfig::beta2),
        double_field("epsilon", &TrainingConfig::epsilon),
        double_field("sigma", &TrainingConfig::sigma),
        {"sigma_mode",
         [](TrainingConfig &c, const std::string &v) {
             try {
                 c.sigma_mode = parse_bandwidth_mode(v);
             } catch (const std::invalid_argument &ex) {
                 throw ConfigError(std::string("key `sigma_mode`: ") + ex.what());
             }
         },
         [](const TrainingConfig &c) { return std::string(to_string(c.sigma_mode)); }},
        {"kernel_distance",
         [](TrainingConfig &c, const std::string &v) {
             try {
                 c.kernel_distance = parse_kernel_distance(v);
             } catch (const std::invalid_argument &ex) {
                 throw ConfigError(std::string("key `kernel_distance`: ") + ex.what());
             }
         },
         [](const TrainingConfig &c) { return std::string(to_string(c.kernel_distance)); }},
        {"gradient_mode", [](TrainingConfig &c, const std::string &v) { c.gradient_mode = parse_gradient_mode(v); },
         [](const TrainingConfig &c) { return std::string(to_string(c.gradient_mode)); }},
        uint_field("seed", &TrainingConfig::seed),
        uint_field("kl_shots", &TrainingConfig::kl_shots),
        uint_field("kl_repeats", &TrainingConfig::kl_repeats),
        double_field("kl_floor_scale", &TrainingConfig::kl_floor_scale),
        uint_field("f1_shots", &TrainingConfig::f1_shots),
        uint_field("qbas_every", &TrainingConfig::qbas_every),
        uint_field("qbas_histograms", &TrainingConfig::qbas_histograms),
        uint_field("qbas_shots", &TrainingConfig::qbas_shots),
        uint_field("qbas_samples", &TrainingConfig::qbas_samples),
        uint_field("qbas_resamples", &TrainingConfig::qbas_resamples),
        uint_field("metric_every", &TrainingConfig::metric_every),
        uint_field("checkpoint_every", &TrainingConfig::checkpoint_every),
    };
    return fields;
}

}  // namespace

void TrainingConfig::validate() const {
    auto fail = [](std::string_view key, std::string_view why) {
        throw ConfigError(fmt::format("key `{}`: {}", key, why));
    };
    if (rows == 0) fail("rows", "must be positive");
    if (cols == 0) fail("cols", "must be positive");
    if (rows * cols > kMaxStateVectorQubits) fail("rows", "image has more pixels than the simulator supports");
    if (d_C != 0 && d_C != 2 && d_C != 3 && d_C != 4) fail("d_C", "must be one of 0, 2, 3, 4");
    if ((d_C == 0) != (L == 0)) fail("L", "L = 0 exactly when d_C = 0");
    if (!entangler_edges.empty()) {
        try {
            parse_edge_list(entangler_edges);
        } catch (const std::invalid_argument &ex) {
            fail("entangler_edges", ex.what());
        }
    }
    if (chow_liu_root >= rows * cols) fail("chow_liu_root", "must name a pixel");
    if (gradient_mode == GradientMode::sampled && n_shots_train < 2) fail("n_shots_train", "must be at least 2");
    if (n_shots_train == 0) fail("n_shots_train", "must be positive");
    if (!(alpha > 0)) fail("alpha", "must be positive");
    if (!(beta1 >= 0 && beta1 < 1)) fail("beta1", "must be in [0, 1)");
    if (!(beta2 >= 0 && beta2 < 1)) fail("beta2", "must be in [0, 1)");
    if (!(epsilon >= 0)) fail("epsilon", "must be nonnegative");
    if (!(sigma > 0)) fail("sigma", "must be positive");
    if (kl_shots == 0) fail("kl_shots", "must be positive");
    if (kl_repeats < 2) fail("kl_repeats", "must be at least 2");
    if (!(kl_floor_scale >= 0)) fail("kl_floor_scale", "must be nonnegative");
    if (f1_shots == 0) fail("f1_shots", "must be positive");
    if (qbas_histograms == 0) fail("qbas_histograms", "must be positive");
    if (qbas_shots == 0) fail("qbas_shots", "must be positive");
    if (qbas_samples == 0) fail("qbas_samples", "must be positive");
    if (qbas_resamples == 0) fail("qbas_resamples", "must be positive");
    if (metric_every == 0) fail("metric_every", "must be positive");
    if (checkpoint_every == 0) fail("checkpoint_every", "must be positive");
    if (noise) noise->validate();
}

void apply_override(RunConfig &config, const std::string &key, const std::string &value, const std::string &base_dir) {
    for (const auto &field : training_fields()) {
        if (field.key == key) {
            field.set(config.training, value);
            return;
        }
    }
    if (key == "noise") {
        if (value.empty()) {
            config.training.noise.reset();
        } else {
            config.training.noise = load_noise(resolve_path(base_dir, value));
        }
    } else if (key == "label") {
        config.label = value;
    } else if (key == "output_dir") {
        config.output_dir = value.empty() ? value : resolve_path(base_dir, value);
    } else if (key == "threads") {
        config.threads = static_cast<std::size_t>(parse_uint(key, value));
    } else if (key == "deploy_noise") {
        config.deploy_noise = value.empty() ? value : resolve_path(base_dir, value);
    } else if (key == "digest" || key == "tool_version") {
        // Metadata written into run directories.
    } else {
        throw ConfigError(fmt::format("unknown config key `{}`", key));
    }
}

RunConfig parse_run_config(const std::map<std::string, std::string> &kv, const std::string &base_dir) {
    RunConfig config;
    for (const auto &[key, value] : kv) {
        apply_override(config, key, value, base_dir);
    }
    config.training.validate();
    return config;
}

RunConfig load_run_config(const std::string &path) {
    auto kv = parse_key_values(read_text_file(path), path);
    return parse_run_config(kv, std::filesystem::path(path).parent_path().string());
}

std::string canonical_training_text(const TrainingConfig &config, const std::string &noise_ref) {
    std::map<std::string, std::string> entries;
    for (const auto &field : training_fields()) {
        entries[std::string(field.key)] = field.get(config);
    }
    if (config.noise) {
        entries["noise"] = noise_ref;
    }
    std::string out;
    for (const auto &[k, v] : entries) {
        out += k + " = " + v + "\n";
    }
    return out;
}

std::string config_digest(const TrainingConfig &config) {
    std::string text = canonical_training_text(config, "<inline>");
    if (config.noise) {
        text += "[noise]\n" + to_profile_text(*config.noise);
    }
    return fnv1a_hex(text);
}

}  // namespace bornbench
