// Copyright 2026 The qndsim Authors
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

#ifndef QNDSIM_SWEEP_HPP_
#define QNDSIM_SWEEP_HPP_

#include <string>
#include <vector>

#include "qndsim/cache.hpp"
#include "qndsim/system.hpp"
#include "qndsim/text.hpp"

namespace qndsim {

enum class OutputFormat { csv, json };

// A batch of metric evaluations over (N, tau, channel) combinations at fixed
// (alpha, n_c, n_d).  Rows come out in canonical lexicographic order
// regardless of input order or thread count, so a fixed request always
// produces identical bytes.
struct SweepRequest {
  std::vector<int> atom_counts = {10};
  double alpha = 10.0;
  int n_c = 100;
  int n_d = 0;
  TauGrid tau;
  std::vector<ChannelSpec> channels = {ChannelSpec::none()};
  std::vector<std::string> metrics;  // names from registered_metrics()
  double theta_bell = 0.37;          // used by the "chsh" metric
  int threads = 0;                   // 0 -> hardware concurrency
  std::string cache_dir;             // empty -> caching disabled

  void validate() const;
};

struct SweepRow {
  int atoms = 0;
  double alpha = 0.0;
  int n_c = 0;
  int n_d = 0;
  double tau = 0.0;
  ChannelSpec channel;
  double theta_bell = 0.0;
  std::string metric;
  double value = 0.0;
  double outcome_weight = 0.0;
  // "ok", or the reason no value exists ("impossible-outcome", "undefined").
  std::string status = "ok";
};

struct SweepResult {
  std::vector<SweepRow> rows;
};

// Scalar metrics available to sweeps, sorted.
const std::vector<std::string>& registered_metrics();

SweepResult run_sweep(const SweepRequest& req);

std::string render_rows(const SweepResult& result, OutputFormat format);

// Renders and writes with LF endings regardless of platform.
void write_sweep(const SweepResult& result, OutputFormat format,
                 const std::string& path);

}  // namespace qndsim

#endif  // QNDSIM_SWEEP_HPP_
