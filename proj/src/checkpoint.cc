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

#include "bornbench/checkpoint.h"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "bornbench/kv.h"

namespace bornbench {

namespace {

std::string join_doubles(const std::vector<double> &values) {
    std::string out;
    for (double v : values) {
        if (!out.empty()) {
            out += ' ';
        }
        out += format_double(v);
    }
    return out;
}

std::vector<double> split_doubles(std::string_view key, const std::string &text) {
    std::vector<double> out;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        out.push_back(parse_double(key, token));
    }
    return out;
}

}  // namespace

std::string serialize_checkpoint(const Checkpoint &c) {
    std::string out;
    out += fmt::format("format = {}\n", kCheckpointFormat);
    out += fmt::format("step = {}\n", c.step);
    out += fmt::format("seed = {}\n", c.seed);
    out += fmt::format("config_digest = {}\n", c.config_digest);
    out += fmt::format("adam_step = {}\n", c.adam.step);
    out += "theta = " + join_doubles(c.theta) + "\n";
    out += "adam_m = " + join_doubles(c.adam.m) + "\n";
    out += "adam_v = " + join_doubles(c.adam.v) + "\n";
    return out;
}

Checkpoint parse_checkpoint(std::string_view text, std::string_view source) {
    auto kv = parse_key_values(text, source);
    auto need = [&](const char *key) -> const std::string & {
        auto it = kv.find(key);
        if (it == kv.end()) {
            throw ConfigError(fmt::format("{}: missing key `{}`", source, key));
        }
        return it->second;
    };
    if (need("format") != kCheckpointFormat) {
        throw ConfigError(fmt::format("{}: unsupported checkpoint format `{}`", source, need("format")));
    }
    if (kv.size() != 8) {
        throw ConfigError(fmt::format("{}: unexpected keys in checkpoint", source));
    }
    Checkpoint c;
    c.step = parse_uint("step", need("step"));
    c.seed = parse_uint("seed", need("seed"));
    c.config_digest = need("config_digest");
    c.adam.step = parse_uint("adam_step", need("adam_step"));
    c.theta = split_doubles("theta", need("theta"));
    c.adam.m = split_doubles("adam_m", need("adam_m"));
    c.adam.v = split_doubles("adam_v", need("adam_v"));
    if (c.adam.m.size() != c.theta.size() || c.adam.v.size() != c.theta.size()) {
        throw ConfigError(fmt::format("{}: theta and Adam moment lengths differ", source));
    }
    return c;
}

void save_checkpoint(const Checkpoint &checkpoint, const std::string &path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write checkpoint " + path);
    }
    out << serialize_checkpoint(checkpoint);
}

Checkpoint load_checkpoint(const std::string &path) {
    return parse_checkpoint(read_text_file(path), path);
}

std::string checkpoint_file_name(std::uint64_t step) {
    return fmt::format("step_{:04}.ckpt", step);
}

}  // namespace bornbench
