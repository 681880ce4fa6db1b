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

#include "qndsim/spin_ops.hpp"

#include <cmath>
#include <complex>

#include "qndsim/errors.hpp"

namespace qndsim {

namespace {

using std::complex;
constexpr complex<double> kI{0.0, 1.0};

void require_atoms(int atoms) {
  if (atoms < 1) throw InvalidParameter("need at least one atom per ensemble");
}

// <k| exp(-i S^y theta/2) |k'> for the (N+1)-dimensional sector:
// sum over n of
//   (-1)^n cos^{k-k'+N-2n}(t) sin^{2n+k'-k}(t)
//   * sqrt(k'!(N-k')!k!(N-k)!) / [(k-n)!(N-k'-n)! n! (k'-k+n)!],  t = theta/2.
// Factorials are small here (N <= a few hundred); evaluated through lgamma
// with the sign handled separately.
Eigen::MatrixXd wigner_y_lowering(double theta, int atoms) {
  const int n_dim = atoms + 1;
  const double t = theta / 2.0;
  const double c = std::cos(t);
  const double s = std::sin(t);
  Eigen::MatrixXd out(n_dim, n_dim);
  auto lf = [](int v) { return std::lgamma(v + 1.0); };
  for (int k = 0; k < n_dim; ++k) {
    for (int kp = 0; kp < n_dim; ++kp) {
      const double log_norm = 0.5 * (lf(kp) + lf(atoms - kp) + lf(k) +
                                     lf(atoms - k));
      const int n_lo = std::max(0, k - kp);
      const int n_hi = std::min(k, atoms - kp);
      double sum = 0.0;
      for (int n = n_lo; n <= n_hi; ++n) {
        const int pc = k - kp + atoms - 2 * n;  // cos power
        const int ps = 2 * n + kp - k;          // sin power
        double mag = std::exp(log_norm - lf(k - n) - lf(atoms - kp - n) -
                              lf(n) - lf(kp - k + n));
        double term = mag * std::pow(c, pc) * std::pow(s, ps);
        sum += (n % 2 == 0) ? term : -term;
      }
      out(k, kp) = sum;
    }
  }
  return out;
}

}  // namespace

Observable build_spin_operator(Axis axis, int atoms) {
  require_atoms(atoms);
  const int n_dim = atoms + 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n_dim, n_dim);
  switch (axis) {
    case Axis::z:
      for (int k = 0; k < n_dim; ++k) m(k, k) = 2.0 * k - atoms;
      return {"S^z", std::move(m)};
    case Axis::x:
      for (int k = 0; k + 1 < n_dim; ++k) {
        const double up = std::sqrt(double(k + 1) * (atoms - k));
        m(k + 1, k) = up;  // raising part
        m(k, k + 1) = up;  // lowering part, sqrt((k+1)(N-k)) from column k+1
      }
      return {"S^x", std::move(m)};
    case Axis::y:
      for (int k = 0; k + 1 < n_dim; ++k) {
        const double up = std::sqrt(double(k + 1) * (atoms - k));
        m(k + 1, k) = -kI * up;
        m(k, k + 1) = kI * up;
      }
      return {"S^y", std::move(m)};
  }
  throw InvalidParameter("unknown axis");
}

Eigen::VectorXcd spin_coherent_state(double theta, double phi, int atoms) {
  require_atoms(atoms);
  constexpr double kPi = 3.14159265358979323846;
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw InvalidParameter("spin_coherent_state: need 0 <= theta <= pi");
  }
  if (!(phi >= -kPi && phi <= kPi)) {
    throw InvalidParameter("spin_coherent_state: need -pi <= phi <= pi");
  }
  const int n_dim = atoms + 1;
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  Eigen::VectorXcd v(n_dim);
  for (int k = 0; k < n_dim; ++k) {
    const double binom = std::exp(0.5 * (std::lgamma(atoms + 1.0) -
                                         std::lgamma(k + 1.0) -
                                         std::lgamma(atoms - k + 1.0)));
    const double mag = binom * std::pow(c, k) * std::pow(s, atoms - k);
    v(k) = mag * std::exp(kI * (double(atoms - k) * phi));
  }
  v.normalize();
  return v;
}

Eigen::MatrixXcd rotation_matrix(Axis axis, double theta, int atoms) {
  require_atoms(atoms);
  if (axis == Axis::z) {
    throw InvalidParameter(
        "rotation_matrix: z rotations are diagonal phases; compose inline");
  }
  // exp(+i S^y theta/2) is the transpose of the lowering-convention matrix.
  Eigen::MatrixXd ry = wigner_y_lowering(theta, atoms).transpose();
  if (axis == Axis::y) return ry.cast<complex<double>>();
  // exp(+i S^x theta/2)[k][k'] = i^{k'-k} exp(+i S^y theta/2)[k][k'].
  const int n_dim = atoms + 1;
  Eigen::MatrixXcd rx(n_dim, n_dim);
  for (int k = 0; k < n_dim; ++k) {
    for (int kp = 0; kp < n_dim; ++kp) {
      const int e = ((kp - k) % 4 + 4) % 4;
      static const complex<double> kIpow[4] = {{1, 0}, {0, 1}, {-1, 0},
                                               {0, -1}};
      rx(k, kp) = kIpow[e] * ry(k, kp);
    }
  }
  return rx;
}

}  // namespace qndsim
