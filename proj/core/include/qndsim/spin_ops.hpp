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

#ifndef QNDSIM_SPIN_OPS_HPP_
#define QNDSIM_SPIN_OPS_HPP_

#include <string>

#include <Eigen/Dense>

namespace qndsim {

enum class Axis { x, y, z };

// A labeled Hermitian operator on the symmetric (N+1)-dimensional sector of
// one ensemble, or on the joint two-ensemble space.
struct Observable {
  std::string label;
  Eigen::MatrixXcd matrix;

  Eigen::Index dim() const { return matrix.rows(); }
};

// Collective spin operator for N two-level bosons in the number basis |k>,
// k = number of atoms in the upper mode:
//
//   S^z |k> = (2k - N) |k>
//   S^x |k> = sqrt((k+1)(N-k)) |k+1> + sqrt(k(N-k+1)) |k-1>
//   S^y |k> = -i sqrt((k+1)(N-k)) |k+1> + i sqrt(k(N-k+1)) |k-1>
//
// satisfying [S^a, S^b] = 2i eps_abc S^c.
Observable build_spin_operator(Axis axis, int atoms);

// Single-ensemble spin coherent state: amplitude at k is
// sqrt(C(N,k)) cos^k(theta/2) sin^{N-k}(theta/2) e^{i(N-k)phi}.
// Requires 0 <= theta <= pi and -pi <= phi <= pi.
Eigen::VectorXcd spin_coherent_state(double theta, double phi, int atoms);

// Unitary R(theta) on the (N+1)-dimensional sector, axis x or y, with the
// sign convention fixed by
//
//   R_y(theta) S^z R_y(theta)^dag = cos(theta) S^z - sin(theta) S^x.
//
// Concretely R_y(theta) = exp(+i S^y theta / 2); the x-axis variant obtains
// from R_x[k][k'] = i^{k'-k} R_y[k][k'].  Columns of R_y(theta)^dag at
// theta = pi/2 are the S^x eigenbasis kets expressed in the z basis.
Eigen::MatrixXcd rotation_matrix(Axis axis, double theta, int atoms);

}  // namespace qndsim

#endif  // QNDSIM_SPIN_OPS_HPP_
