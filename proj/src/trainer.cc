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

#include "bornbench/trainer.h"

#include <numbers>

#include "bornbench/chow_liu.h"
#include "bornbench/executor.h"
#include "bornbench/mmd.h"
#include "bornbench/rng.h"

namespace bornbench {

namespace {

CircuitSpec circuit_for(const TrainingConfig &config, const TargetDistribution &target) {
    AnsatzOptions options;
    options.num_qubits = config.rows * config.cols;
    options.d_c = config.d_C;
    options.num_layers = config.L;
    options.chow_liu_source = &target;
    options.chow_liu_root = config.chow_liu_root;
    if (!config.entangler_edges.empty()) {
        options.edge_override = parse_edge_list(config.entangler_edges);
    }
    return build_circuit(options);
}

}  // namespace

TrainingSetup TrainingSetup::from_config(const TrainingConfig &config) {
    config.validate();
    ImageShape shape{config.rows, config.cols};
    auto target = bas_target_distribution(shape);
    auto circuit = circuit_for(config, target);
    KernelSpec kernel_spec{config.sigma, config.kernel_distance, config.sigma_mode};
    bool degenerate = false;
    if (config.d_C == 3 && config.entangler_edges.empty()) {
        degenerate = chow_liu_layer(target, config.chow_liu_root).degenerate;
    }
    return TrainingSetup{
        config,
        shape,
        target,
        std::move(circuit),
        KernelMatrix(shape.num_pixels(), kernel_spec),
        config_digest(config),
        degenerate,
    };
}

std::vector<double> random_theta(std::size_t num_params, std::uint64_t seed) {
    auto rng = make_stream({seed, StreamPurpose::init, 0, 0, 0});
    std::vector<double> theta(num_params);
    for (double &t : theta) {
        t = 2 * std::numbers::pi * uniform_unit(rng);
    }
    return theta;
}

MetricRecord evaluate_metrics(const TrainingSetup &setup, std::span<const double> theta, std::uint64_t step,
                              bool with_qbas, const NoiseModel *noise, std::uint64_t seed) {
    const auto &cfg = setup.config;
    auto model = output_distribution(setup.circuit, theta, noise);

    MetricRecord record;
    record.step = step;
    KlOptions kl_options{cfg.kl_repeats, cfg.kl_shots, cfg.kl_floor_scale};
    auto kl = mean_kl(setup.target, model, kl_options, {seed, StreamPurpose::kl, step, 0, 0});
    record.kl_mean = kl.mean;
    record.kl_std = kl.std;
    record.smoothing = kl.smoothed;

    auto f1_rng = make_stream({seed, StreamPurpose::f1, step, 0, 0});
    auto f1_hist = sample_histogram(model, cfg.f1_shots, f1_rng);
    for (const auto &entry : f1_per_state(setup.target, f1_hist)) {
        record.f1.push_back(entry.f1);
    }

    if (with_qbas) {
        QbasOptions qbas_options{cfg.qbas_histograms, cfg.qbas_shots, cfg.qbas_samples, cfg.qbas_resamples};
        auto qbas = qbas_protocol(model, setup.target.support(), qbas_options, {seed, StreamPurpose::qbas, step, 0, 0});
        record.qbas_mean = qbas.mean;
        record.qbas_var = qbas.variance;
        record.qbas_fallback = qbas.unweighted_fallback;
    }
    return record;
}

RunRecord train(const TrainingSetup &setup, const std::optional<Checkpoint> &resume, std::size_t threads,
                const std::function<void(const MetricRecord &)> &on_row,
                const std::function<void(const Checkpoint &)> &on_checkpoint) {
    const auto &cfg = setup.config;
    std::size_t num_params = setup.circuit.parameter_count;

    std::vector<double> theta;
    AdamState adam;
    std::uint64_t start = 0;
    if (resume) {
        if (resume->theta.size() != num_params) {
            throw std::invalid_argument("checkpoint parameter count does not match the circuit");
        }
        if (resume->step > cfg.n_steps) {
            throw std::invalid_argument("checkpoint step is beyond the configured number of steps");
        }
        theta = resume->theta;
        adam = resume->adam;
        start = resume->step;
    } else {
        theta = random_theta(num_params, cfg.seed);
        adam = AdamState::zeros(num_params);
    }
    AdamParams adam_params{cfg.alpha, cfg.beta1, cfg.beta2, cfg.epsilon};

    RunRecord run;
    for (std::uint64_t step = start; step <= cfg.n_steps; step++) {
        bool last = step == cfg.n_steps;
        GradientOptions grad_options;
        grad_options.mode = cfg.gradient_mode;
        grad_options.num_shots = cfg.n_shots_train;
        grad_options.seed = cfg.seed;
        grad_options.step = step;
        grad_options.threads = threads;
        grad_options.noise = setup.noise();

        MetricRecord record;
        std::optional<GradientResult> grad;
        if (!last) {
            grad = mmd_gradient(setup.circuit, theta, setup.target, setup.kernel, grad_options);
        }
        if (step % cfg.metric_every == 0 || last) {
            bool with_qbas = cfg.qbas_every > 0 && (step % cfg.qbas_every == 0 || last);
            record = evaluate_metrics(setup, theta, step, with_qbas, setup.noise(), cfg.seed);
        }
        record.step = step;
        if (grad) {
            record.loss = grad->loss;
        } else {
            // Same stream the unshifted gradient histogram would use.
            auto model = output_distribution(setup.circuit, theta, setup.noise());
            if (cfg.gradient_mode == GradientMode::exact) {
                record.loss = mmd_loss_exact(model, setup.target, setup.kernel);
            } else {
                auto rng = make_stream({cfg.seed, StreamPurpose::gradient, step, num_params, 2});
                record.loss = mmd_loss_sampled(sample_histogram(model, cfg.n_shots_train, rng), setup.target,
                                               setup.kernel);
            }
        }

        if (step % cfg.checkpoint_every == 0 || last) {
            run.checkpoints.push_back({step, cfg.seed, setup.digest, theta, adam});
            if (on_checkpoint) {
                on_checkpoint(run.checkpoints.back());
            }
        }
        run.rows.push_back(record);
        run.thetas.push_back(theta);
        if (on_row) {
            on_row(record);
        }
        if (grad) {
            adam_step(adam, grad->gradient, theta, adam_params);
        }
    }
    return run;
}

}  // namespace bornbench
