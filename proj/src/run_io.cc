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

#include "bornbench/run_io.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "bornbench/kv.h"

namespace bornbench {

std::string metrics_csv_header(const TargetDistribution &target) {
    std::string out = "step,loss,kl_mean,kl_std";
    for (BasisIndex x : target.support()) {
        out += ",f1_" + to_bitstring(x, target.num_bits());
    }
    out += ",qbas_mean,qbas_var,smoothing_flag";
    return out;
}

std::string metrics_csv_row(const MetricRecord &r, std::size_t num_states) {
    std::string out = std::to_string(r.step);
    for (double v : {r.loss, r.kl_mean, r.kl_std}) {
        out += "," + format_double(v);
    }
    for (std::size_t k = 0; k < num_states; k++) {
        out += "," + (k < r.f1.size() ? format_double(r.f1[k]) : std::string("nan"));
    }
    out += "," + format_double(r.qbas_mean);
    out += "," + format_double(r.qbas_var);
    out += r.smoothing ? ",1" : ",0";
    return out;
}

std::string metrics_json_line(const MetricRecord &r, const TargetDistribution &target) {
    auto num = [](double v) -> nlohmann::json {
        if (std::isnan(v)) {
            return nullptr;
        }
        return v;
    };
    nlohmann::ordered_json j;
    j["step"] = r.step;
    j["loss"] = num(r.loss);
    j["kl_mean"] = num(r.kl_mean);
    j["kl_std"] = num(r.kl_std);
    nlohmann::ordered_json f1 = nlohmann::ordered_json::object();
    for (std::size_t k = 0; k < r.f1.size() && k < target.support().size(); k++) {
        f1[to_bitstring(target.support()[k], target.num_bits())] = r.f1[k];
    }
    j["f1"] = f1;
    j["qbas_mean"] = num(r.qbas_mean);
    j["qbas_var"] = num(r.qbas_var);
    j["smoothing_flag"] = r.smoothing;
    return j.dump();
}

std::string theta_csv(const RunRecord &run) {
    std::string out = "step";
    std::size_t width = run.thetas.empty() ? 0 : run.thetas.front().size();
    for (std::size_t i = 0; i < width; i++) {
        out += ",theta_" + std::to_string(i);
    }
    out += "\n";
    for (std::size_t k = 0; k < run.rows.size(); k++) {
        out += std::to_string(run.rows[k].step);
        for (double t : run.thetas[k]) {
            out += "," + format_double(t);
        }
        out += "\n";
    }
    return out;
}

std::vector<std::pair<std::uint64_t, std::vector<double>>> parse_theta_csv(std::string_view text) {
    std::vector<std::pair<std::uint64_t, std::vector<double>>> out;
    std::istringstream in{std::string(text)};
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        if (header) {
            header = false;
            if (!line.starts_with("step")) {
                throw ConfigError("theta trajectory is missing its header row");
            }
            continue;
        }
        std::istringstream fields(line);
        std::string cell;
        std::getline(fields, cell, ',');
        std::pair<std::uint64_t, std::vector<double>> row{parse_uint("step", cell), {}};
        while (std::getline(fields, cell, ',')) {
            row.second.push_back(parse_double("theta", cell));
        }
        out.push_back(std::move(row));
    }
    return out;
}

void write_text_file(const std::string &path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << contents;
}

}  // namespace bornbench
