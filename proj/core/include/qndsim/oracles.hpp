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

#ifndef QNDSIM_ORACLES_HPP_
#define QNDSIM_ORACLES_HPP_

#include <string>

#include <Eigen/Dense>

#include "qndsim/channels.hpp"
#include "qndsim/system.hpp"

namespace qndsim {

// Independent verification paths.  Everything here recomputes states from
// first principles on truncated Fock spaces with explicit matrices; nothing
// shares the closed-form assembly code it is meant to check.

// Closed-form light-atom state before photon detection, as a vector on
// atoms (x) mode_c (x) mode_d with per-mode photon cutoff:
//   2^{-N} sum_{k1,k2} sqrt(C(N,k1)C(N,k2)) |k1,k2>
//     |alpha cos((k1-k2)tau)>_c |-i alpha sin((k1-k2)tau)>_d
Eigen::VectorXcd preprojection_state(const SystemConfig& cfg,
                                     int photon_cutoff);

// Drives the full interferometer numerically: splits |alpha>|0> on a 50:50
// coupler, applies the diagonal interaction phase
// exp(-i tau/2 (S1^z - S2^z)(n_1 - n_2)), recombines, and compares against
// preprojection_state().  Returns the max elementwise deviation.  Requires
// the Poisson tail beyond the cutoff to be below 1e-12 (TailMassError
// otherwise).
double mz_evolution_oracle(int atoms, double alpha, double tau,
                           int photon_cutoff);

// Applies the optical channel with explicit truncated Kraus matrices to the
// pre-projection state, projects on <n_c|<n_d|, renormalizes.  Truncation is
// declared converged only if raising either cutoff by 2 moves no element by
// more than 1e-10 (TailMassError otherwise).  Supported kinds:
// phase_diffusion and loss_gain.
AtomicDensityMatrix brute_force_channel_oracle(const SystemConfig& cfg,
                                               const ChannelSpec& channel,
                                               int photon_cutoff,
                                               int kraus_cutoff);

// Pure-loss reference (gain 0) built from coherent-amplitude attenuation:
// amplitudes scale by eta = e^{-gamma tau} (loss probability 1 - eta^2)
// with the standard off-diagonal coherent overlap factor.
AtomicDensityMatrix pure_loss_attenuation_reference(const SystemConfig& cfg,
                                                    double gamma_tilde);

// max |sum_{m,n <= cutoff} M^dag M - 1| over matrix elements restricted to
// number states <= subspace_max.
double phase_diffusion_completeness_defect(double kappa_t, int cutoff,
                                           int subspace_max);
double loss_gain_completeness_defect(double gamma, double gain, double t,
                                     int cutoff, int subspace_max);

// ---------------------------------------------------------------------------
// Aggregated self-check used by the CLI

enum class OracleLevel { fast, full };

struct OracleReport {
  bool passed = false;
  double max_discrepancy = 0.0;
  std::string text;  // one line per check
};

// Runs the oracle comparisons, Kraus completeness sums and the
// Laguerre/double-sum cross-check.  `corrupt_t2` perturbs the loss/gain T2
// coefficient in the closed form under test; the report must then fail
// (negative control for the oracle's sensitivity).
OracleReport run_oracle_check(OracleLevel level, bool corrupt_t2 = false);

}  // namespace qndsim

#endif  // QNDSIM_ORACLES_HPP_
