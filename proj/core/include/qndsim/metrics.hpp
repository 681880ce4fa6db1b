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

#ifndef QNDSIM_METRICS_HPP_
#define QNDSIM_METRICS_HPP_

#include <functional>
#include <string>

#include <Eigen/Dense>

#include "qndsim/channels.hpp"
#include "qndsim/spin_ops.hpp"

namespace qndsim {

// Tr[rho (A (x) B)] with A acting on ensemble 1 and B on ensemble 2.
// Throws InvalidParameter on dimension mismatch.
double expect(const AtomicDensityMatrix& rho, const Observable& a,
              const Observable& b);
// Single-ensemble expectations (identity on the other factor).
double expect_site1(const AtomicDensityMatrix& rho, const Observable& a);
double expect_site2(const AtomicDensityMatrix& rho, const Observable& b);

enum class ComboSign { plus, minus };

// Var(S^a_1 +/- S^a_2).
double variance_of_combo(const AtomicDensityMatrix& rho, Axis axis,
                         ComboSign sign);

// Joint number-basis probabilities p_l(k1, k2) in basis l in {x, y, z}:
// the diagonal of rho after rotating each ensemble into the requested
// eigenbasis.  Non-negative up to rounding, sums to 1.
Eigen::MatrixXd probability_distribution(const AtomicDensityMatrix& rho,
                                         Axis basis);

Eigen::MatrixXcd partial_transpose_second(const Eigen::MatrixXcd& rho,
                                          int atoms);

struct LogNegativity {
  double value = 0.0;       // log2 of the trace norm of rho^{T_2}
  double normalized = 0.0;  // value / log2(N+1)
};
LogNegativity log_negativity(const AtomicDensityMatrix& rho);

// Spin squeezing relative to the mean collective spin S = S_1 + S_2.
// The minimum perpendicular variance is found in closed form from the 2x2
// covariance matrix of two orthonormal perpendicular components.  Both
// normalizations are reported:
//   xi_literal  = 2 (Delta S_perp^2)_min / |<S>|
//   xi_standard = 2N (Delta S_perp^2)_min / <S>^2   (1 on the separable
//                                                    baseline; 2N atoms)
// Throws UndefinedDirection when |<S>| vanishes.
struct WinelandResult {
  double xi_literal = 0.0;
  double xi_standard = 0.0;
  double mean_spin_norm = 0.0;
};
WinelandResult wineland(const AtomicDensityMatrix& rho);

struct CriterionResult {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool violated = false;  // entanglement/steering/nonlocality detected
};

// [Var(S1x - S2x) + Var(S1y + S2y) + Var(S1z - S2z)] / 4N; < 1 entangled.
CriterionResult hofmann_takeuchi(const AtomicDensityMatrix& rho);

// Var(S1y + S2y) Var(S1z - S2z) / <S1x>^2; < 1 steerable (1 -> 2).
// Throws UndefinedDirection when <S1x> = 0.
CriterionResult epr_steering(const AtomicDensityMatrix& rho);

// Hermitian operator with every eigenvalue replaced by its sign;
// sgn(0) := +1 by convention (only reachable for even N).
struct SignObservable {
  std::string label;
  Eigen::MatrixXcd matrix;
};
SignObservable sign_operator(const Observable& a);

// Two-setting two-outcome correlator
//   | <M1a M2a> + <M1a M2b> - <M1b M2a> + <M1b M2b> |
// with M1a = sgn(S^z), M1b = sgn(S^z cos t + S^y sin t) on ensemble 1 and
// M2a/b = sgn(S^z cos(t/2) +/- S^y sin(t/2)) on ensemble 2; local hidden
// variable bound 2.
double chsh(const AtomicDensityMatrix& rho, double theta_b);

// Seed angle for the correlator optimization, empirical in N.
double empirical_chsh_angle(int atoms);

struct ChshSearchParams {
  int tau_points = 48;     // coarse grid over (0, pi]
  int theta_points = 24;   // coarse grid over (0, pi/2]
  int refine_rounds = 3;   // alternate golden-section rounds
  int golden_iterations = 28;
};

struct ChshOptimum {
  double tau = 0.0;
  double theta_b = 0.0;
  double value = 0.0;
};

// Deterministic maximization of chsh over (tau, theta_b): coarse grid with
// the empirical angle added as a candidate column, then golden-section
// refinement alternating between the two coordinates.  `state_at_tau` must
// be a pure function of tau.
ChshOptimum optimal_chsh(
    const std::function<AtomicDensityMatrix(double)>& state_at_tau, int atoms,
    const ChshSearchParams& params = {});

double purity(const AtomicDensityMatrix& rho);  // Tr(rho^2)

}  // namespace qndsim

#endif  // QNDSIM_METRICS_HPP_
