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

#ifndef QNDSIM_QND_STATE_HPP_
#define QNDSIM_QND_STATE_HPP_

#include <Eigen/Dense>

#include "qndsim/log_weight.hpp"
#include "qndsim/system.hpp"

namespace qndsim {

// Normalized joint atomic state over Fock labels (k1, k2), stored with
// joint index k1*(N+1) + k2.
struct PureAtomicState {
  Eigen::VectorXcd amplitudes;
  int atoms = 0;
  // Natural log of the unnormalized squared norm of the raw amplitude
  // table; exp(log_norm) / 4^N is the Born probability of the outcome.
  double log_norm = 0.0;

  int dim() const { return atoms + 1; }
  Eigen::Index index(int k1, int k2) const {
    return static_cast<Eigen::Index>(k1) * dim() + k2;
  }
  double norm_weight() const { return std::exp(log_norm); }
};

// Amplitude weight attached to the Fock-label difference after counting
// (n_c, n_d) photons:
//
//   C(chi) = alpha^{n_c+n_d} e^{-alpha^2/2} cos^{n_c}(chi) sin^{n_d}(chi)
//            / sqrt(n_c! n_d!)
//
// returned in log form with the sign tracked separately.
using CFunctionValue = LogWeight;
CFunctionValue c_function(const SystemConfig& cfg, double chi);

// Conditional atomic state after the photon counts: amplitude at (k1, k2)
// proportional to sqrt(C(N,k1) C(N,k2)) * C[(k1-k2) tau], renormalized.
// Throws ImpossibleOutcome when every amplitude vanishes.
PureAtomicState conditional_state(const SystemConfig& cfg);

// Born probability of detecting the counts (n_c, n_d); zero for impossible
// outcomes instead of throwing.
double outcome_probability(const SystemConfig& cfg);

// Gaussian shape approximation of |C(chi)| for n_c + n_d > 0:
//   exp(-( |chi| - arccos((n_c-n_d)/(n_c+n_d))/2 )^2 / (2 sigma^2)),
//   sigma = 1/sqrt(n_c+n_d).
double gaussian_c_approx(int n_c, int n_d, double chi);

// Short-time limit of the conditional state for n_c >> n_d: diagonal
// amplitudes proportional to exp(-(2/N)(k - N/2)^2) on |k>|k>, normalized.
PureAtomicState short_time_approx_state(int atoms);

}  // namespace qndsim

#endif  // QNDSIM_QND_STATE_HPP_
