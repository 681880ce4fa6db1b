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

#ifndef QNDSIM_SYSTEM_HPP_
#define QNDSIM_SYSTEM_HPP_

#include <string>

#include <Eigen/Dense>

namespace qndsim {

// Parameters of one measurement instance: two ensembles of `atoms` two-level
// atoms each, probed by coherent light of real amplitude `alpha`, with
// detector counts (n_c, n_d) post-selected after a dimensionless interaction
// time `tau` (interaction rate scaled to 1).
struct SystemConfig {
  int atoms = 1;       // N, atoms per ensemble
  double alpha = 0.0;  // coherent amplitude, real and non-negative
  int n_c = 0;         // photons counted in the bright port
  int n_d = 0;         // photons counted in the dark port
  double tau = 0.0;    // dimensionless interaction time

  int dim() const { return atoms + 1; }
  Eigen::Index joint_dim() const {
    return static_cast<Eigen::Index>(dim()) * dim();
  }
  Eigen::Index joint_index(int k1, int k2) const {
    return static_cast<Eigen::Index>(k1) * dim() + k2;
  }

  // Throws InvalidParameter when any field is out of domain.
  void validate() const;
};

// Which decoherence channel acts during the interaction, with its
// dimensionless rate(s) (rate / interaction rate).  Only the rates relevant
// to `kind` are read.
struct ChannelSpec {
  enum class Kind { none, phase_diffusion, loss_gain, dephasing };

  Kind kind = Kind::none;
  double kappa_tilde = 0.0;  // optical phase diffusion rate
  double gamma_tilde = 0.0;  // photon loss rate
  double g_tilde = 0.0;      // photon gain rate
  double Gamma_tilde = 0.0;  // atomic dephasing rate

  static ChannelSpec none() { return {}; }
  static ChannelSpec phase_diffusion(double kappa) {
    ChannelSpec s;
    s.kind = Kind::phase_diffusion;
    s.kappa_tilde = kappa;
    return s;
  }
  static ChannelSpec loss_gain(double gamma, double gain) {
    ChannelSpec s;
    s.kind = Kind::loss_gain;
    s.gamma_tilde = gamma;
    s.g_tilde = gain;
    return s;
  }
  static ChannelSpec dephasing(double Gamma) {
    ChannelSpec s;
    s.kind = Kind::dephasing;
    s.Gamma_tilde = Gamma;
    return s;
  }

  void validate() const;

  // Short lowercase tag used in file columns: none|phase|lossgain|dephase.
  std::string kind_label() const;
};

}  // namespace qndsim

#endif  // QNDSIM_SYSTEM_HPP_
