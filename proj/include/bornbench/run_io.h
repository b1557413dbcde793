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

#ifndef BORNBENCH_RUN_IO_H
#define BORNBENCH_RUN_IO_H

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bornbench/bas.h"
#include "bornbench/trainer.h"

namespace bornbench {

/// `step,loss,kl_mean,kl_std,f1_<bits>...,qbas_mean,qbas_var,smoothing_flag`
/// with one f1 column per BAS state in ascending order.
std::string metrics_csv_header(const TargetDistribution &target);
std::string metrics_csv_row(const MetricRecord &record, std::size_t num_states);
/// Same record as one JSON object (no trailing newline). Unmeasured values are null.
std::string metrics_json_line(const MetricRecord &record, const TargetDistribution &target);

/// `step,theta_0,...` rows.
std::string theta_csv(const RunRecord &run);
std::vector<std::pair<std::uint64_t, std::vector<double>>> parse_theta_csv(std::string_view text);

void write_text_file(const std::string &path, std::string_view contents);

}  // namespace bornbench

#endif
