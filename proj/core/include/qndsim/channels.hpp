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

#ifndef QNDSIM_CHANNELS_HPP_
#define QNDSIM_CHANNELS_HPP_

#include <Eigen/Dense>

#include "qndsim/qnd_state.hpp"
#include "qndsim/system.hpp"

namespace qndsim {

// Conditional two-ensemble atomic density matrix, dimension (N+1)^2 with
// joint index k1*(N+1) + k2, normalized to unit trace.  `outcome_weight` is
// the Born probability of the post-selected counts (the trace before
// renormalization).
struct AtomicDensityMatrix {
  Eigen::MatrixXcd matrix;
  int atoms = 0;
  double outcome_weight = 0.0;

  int dim() const { return atoms + 1; }
  Eigen::Index joint_dim() const { return matrix.rows(); }
  Eigen::Index index(int k1, int k2) const {
    return static_cast<Eigen::Index>(k1) * dim() + k2;
  }
};

// rho = |psi><psi| with the state's Born probability as outcome_weight.
AtomicDensityMatrix density_from_pure(const PureAtomicState& psi);

// ---------------------------------------------------------------------------
// Closed-form channel coefficients

struct PhaseDiffusionCoefficients {
  double z = 1.0;  // 1 / (kappa t + 1)
  double u = 0.0;  // kappa t / (kappa t + 1)
};
PhaseDiffusionCoefficients phase_diffusion_coefficients(double kappa_t);

// T1, T2, T3 of the loss/gain Kraus family:
//   T1 = (1 - e^{-2(gamma-g)t}) / (gamma - g e^{-2(gamma-g)t})
//   T2 = (gamma-g) e^{-(gamma-g)t} / (gamma - g e^{-2(gamma-g)t})
//   T3 = (gamma-g) / (gamma - g e^{-2(gamma-g)t}) = 1 - g T1
// Evaluated through s = (1 - e^{-2x})/(2x), x = (gamma-g)t, which keeps the
// gamma -> g limit finite; below |x| = 1e-6 the quadratic series for s is
// used, giving T1 -> 2t/(1+2gt).
struct LossGainCoefficients {
  double t1 = 0.0;
  double t2 = 1.0;
  double t3 = 1.0;
};
LossGainCoefficients loss_gain_coefficients(double gamma, double gain,
                                            double t);

// ---------------------------------------------------------------------------
// Single-mode Kraus operators on a truncated Fock space {|0>..|cutoff>}

// M_{m,n} = sqrt((kt)^{m+n} / ((kt+1)^{m+n+1} m! n!))
//           c^dag^m (1/(1+kt))^{c^dag c} c^n
Eigen::MatrixXd phase_diffusion_kraus(int m, int n, double kappa_t,
                                      int cutoff);

// M_{p,q} = sqrt(gamma^p g^q T1^{p+q} T3 / (p! q! T2^{2q}))
//           T2^{c^dag c} c^dag^q c^p
Eigen::MatrixXd loss_gain_kraus(int p, int q, double gamma, double gain,
                                double t, int cutoff);

// ---------------------------------------------------------------------------
// Conditional density matrices with decoherence (closed forms)

// Optical phase diffusion at dimensionless rate kappa_tilde acting for the
// interaction time tau.  kappa_tilde = 0 reduces to the pure conditional
// state.  Throws ImpossibleOutcome when the outcome weight vanishes.
AtomicDensityMatrix apply_phase_diffusion(const SystemConfig& cfg,
                                          double kappa_tilde);

// Same matrix assembled through the explicit finite double sum instead of
// the Laguerre recurrence.  O(n_c * n_d) slower per element; kept as an
// independent cross-check of the recurrence path.
AtomicDensityMatrix apply_phase_diffusion_reference(const SystemConfig& cfg,
                                                    double kappa_tilde);

// Photon loss (gamma_tilde) and incoherent gain (g_tilde).
AtomicDensityMatrix apply_loss_gain(const SystemConfig& cfg,
                                    double gamma_tilde, double g_tilde);

// Loss/gain closed form with externally supplied coefficients.  Lets the
// oracle self-check corrupt T2 as a negative control.
AtomicDensityMatrix apply_loss_gain_with_coefficients(
    const SystemConfig& cfg, double gamma_tilde, double g_tilde,
    const LossGainCoefficients& coeffs);

// Collective-spin dephasing of both ensembles at rate Gamma_tilde:
// rho[(k1,k2),(k1',k2')] = psi psi^* exp(-2 Gamma tau [(k1-k1')^2 +
// (k2-k2')^2]).
AtomicDensityMatrix apply_dephasing(const SystemConfig& cfg,
                                    double Gamma_tilde);

// Dispatch on the channel kind (none -> pure state outer product).
AtomicDensityMatrix apply_channel(const SystemConfig& cfg,
                                  const ChannelSpec& channel);

// ---------------------------------------------------------------------------
// State validity

struct StateValidity {
  double hermiticity_defect = 0.0;  // max |rho - rho^dag|
  double trace_defect = 0.0;        // |tr(rho) - 1|
  double min_eigenvalue = 0.0;
};
StateValidity check_state_validity(const AtomicDensityMatrix& rho);

}  // namespace qndsim

#endif  // QNDSIM_CHANNELS_HPP_
