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

#include "bornbench/noise.h"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "bornbench/kv.h"

namespace bornbench {

namespace {

const Mat2 kPaulis[4] = {
    {Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(1, 0)},
    {Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0)},
    {Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0)},
    {Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0)},
};

void check_probability(std::string_view name, double value) {
    if (!(value >= 0 && value <= 1)) {
        throw ConfigError(fmt::format("`{}` must be in [0, 1], got {}", name, value));
    }
}

void check_confusion(std::string_view name, const Confusion &m) {
    for (double v : m) {
        check_probability(name, v);
    }
    for (std::size_t row = 0; row < 2; row++) {
        double sum = m[row * 2] + m[row * 2 + 1];
        if (std::abs(sum - 1) > 1e-12) {
            throw ConfigError(fmt::format("`{}`: confusion row {} sums to {}, not 1", name, row, sum));
        }
    }
}

}  // namespace

Confusion symmetric_flip(double flip) {
    return {1 - flip, flip, flip, 1 - flip};
}

std::vector<Mat2> KrausSet::as_mat2() const {
    if (num_targets != 1) {
        throw std::logic_error("Kraus set is not single-qubit");
    }
    std::vector<Mat2> out;
    for (const auto &op : ops) {
        Mat2 m;
        std::copy(op.begin(), op.end(), m.begin());
        out.push_back(m);
    }
    return out;
}

std::vector<Mat4> KrausSet::as_mat4() const {
    if (num_targets != 2) {
        throw std::logic_error("Kraus set is not two-qubit");
    }
    std::vector<Mat4> out;
    for (const auto &op : ops) {
        Mat4 m;
        std::copy(op.begin(), op.end(), m.begin());
        out.push_back(m);
    }
    return out;
}

double KrausSet::completeness_error() const {
    std::size_t d = dim();
    std::vector<Complex> sum(d * d, Complex(0, 0));
    for (const auto &k : ops) {
        for (std::size_t r = 0; r < d; r++) {
            for (std::size_t c = 0; c < d; c++) {
                for (std::size_t j = 0; j < d; j++) {
                    sum[r * d + c] += std::conj(k[j * d + r]) * k[j * d + c];
                }
            }
        }
    }
    double worst = 0;
    for (std::size_t r = 0; r < d; r++) {
        for (std::size_t c = 0; c < d; c++) {
            worst = std::max(worst, std::abs(sum[r * d + c] - Complex(r == c ? 1.0 : 0.0, 0)));
        }
    }
    return worst;
}

KrausSet depolarizing_kraus(double p, std::size_t num_targets) {
    check_probability("p", p);
    if (num_targets != 1 && num_targets != 2) {
        throw std::invalid_argument("depolarizing channel supports 1 or 2 targets");
    }
    KrausSet out;
    out.num_targets = num_targets;
    double d2 = num_targets == 1 ? 4.0 : 16.0;
    double identity_weight = std::sqrt(1 - p * (d2 - 1) / d2);
    double pauli_weight = std::sqrt(p / d2);

    if (num_targets == 1) {
        for (std::size_t a = 0; a < 4; a++) {
            double w = a == 0 ? identity_weight : pauli_weight;
            std::vector<Complex> op(4);
            for (std::size_t k = 0; k < 4; k++) {
                op[k] = w * kPaulis[a][k];
            }
            out.ops.push_back(std::move(op));
        }
    } else {
        for (std::size_t a = 0; a < 4; a++) {
            for (std::size_t b = 0; b < 4; b++) {
                double w = (a == 0 && b == 0) ? identity_weight : pauli_weight;
                Mat4 m = kron(kPaulis[a], kPaulis[b]);
                std::vector<Complex> op(16);
                for (std::size_t k = 0; k < 16; k++) {
                    op[k] = w * m[k];
                }
                out.ops.push_back(std::move(op));
            }
        }
    }
    return out;
}

KrausSet amplitude_damping_kraus(double gamma) {
    check_probability("t_damp", gamma);
    KrausSet out;
    out.num_targets = 1;
    out.ops.push_back({1, 0, 0, std::sqrt(1 - gamma)});
    out.ops.push_back({0, std::sqrt(gamma), 0, 0});
    return out;
}

void NoiseModel::validate() const {
    check_probability("p1", p1);
    check_probability("p2", p2);
    check_confusion("readout_flip_all", readout_default);
    for (const auto &[q, m] : readout_overrides) {
        check_confusion(fmt::format("readout_flip_q{}", q), m);
    }
    if (t_damp) {
        check_probability("t_damp", *t_damp);
    }
}

bool NoiseModel::is_noiseless() const {
    if (p1 != 0 || p2 != 0 || (t_damp && *t_damp != 0) || readout_default != kIdentityConfusion) {
        return false;
    }
    for (const auto &[q, m] : readout_overrides) {
        if (m != kIdentityConfusion) {
            return false;
        }
    }
    return true;
}

Confusion NoiseModel::readout_for(std::size_t qubit) const {
    auto it = readout_overrides.find(qubit);
    return it == readout_overrides.end() ? readout_default : it->second;
}

std::vector<Confusion> NoiseModel::readout_matrices(std::size_t num_qubits) const {
    std::vector<Confusion> out;
    for (std::size_t q = 0; q < num_qubits; q++) {
        out.push_back(readout_for(q));
    }
    return out;
}

ProbabilityVector apply_readout(const ProbabilityVector &probs, std::span<const Confusion> readout) {
    std::size_t n = probs.num_qubits();
    if (readout.size() != n) {
        throw std::invalid_argument("need one confusion matrix per qubit");
    }
    for (std::size_t q = 0; q < n; q++) {
        check_confusion(fmt::format("readout[{}]", q), readout[q]);
    }
    std::vector<double> current(probs.values().begin(), probs.values().end());
    for (std::size_t q = 0; q < n; q++) {
        const Confusion &m = readout[q];
        if (m == kIdentityConfusion) {
            continue;
        }
        std::uint64_t mask = qubit_mask(n, q);
        for (std::uint64_t i = 0; i < current.size(); i++) {
            if (i & mask) {
                continue;
            }
            double t0 = current[i];
            double t1 = current[i | mask];
            current[i] = t0 * m[0] + t1 * m[2];
            current[i | mask] = t0 * m[1] + t1 * m[3];
        }
    }
    return ProbabilityVector(n, std::move(current));
}

NoiseModel parse_noise(std::string_view text, std::string_view source) {
    NoiseModel model;
    for (const auto &[key, value] : parse_key_values(text, source)) {
        if (key == "p1") {
            model.p1 = parse_double(key, value);
            check_probability(key, model.p1);
        } else if (key == "p2") {
            model.p2 = parse_double(key, value);
            check_probability(key, model.p2);
        } else if (key == "t_damp") {
            model.t_damp = parse_double(key, value);
            check_probability(key, *model.t_damp);
        } else if (key == "readout_flip_all") {
            double flip = parse_double(key, value);
            check_probability(key, flip);
            model.readout_default = symmetric_flip(flip);
        } else if (key.starts_with("readout_flip_q")) {
            auto qubit = parse_uint(key, std::string_view(key).substr(std::string_view("readout_flip_q").size()));
            double flip = parse_double(key, value);
            check_probability(key, flip);
            model.readout_overrides[qubit] = symmetric_flip(flip);
        } else {
            throw ConfigError(fmt::format("{}: unknown noise key `{}`", source, key));
        }
    }
    model.validate();
    return model;
}

NoiseModel load_noise(const std::string &path) {
    return parse_noise(read_text_file(path), path);
}

std::string to_profile_text(const NoiseModel &model) {
    std::string out;
    out += "p1 = " + format_double(model.p1) + "\n";
    out += "p2 = " + format_double(model.p2) + "\n";
    out += "readout_flip_all = " + format_double(model.readout_default[1]) + "\n";
    for (const auto &[q, m] : model.readout_overrides) {
        out += fmt::format("readout_flip_q{} = {}\n", q, format_double(m[1]));
    }
    if (model.t_damp) {
        out += "t_damp = " + format_double(*model.t_damp) + "\n";
    }
    return out;
}

}  // namespace bornbench
