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

#include "qndsim/metrics.hpp"

#include <array>
#include <cmath>
#include <map>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include "qndsim/errors.hpp"

namespace qndsim {

namespace {

using std::complex;
constexpr complex<double> kI{0.0, 1.0};

void require_same_dim(const AtomicDensityMatrix& rho, const Observable& a,
                      const Observable& b) {
  if (a.dim() != rho.dim() || b.dim() != rho.dim() ||
      rho.matrix.rows() != rho.joint_dim() ||
      rho.matrix.rows() != rho.matrix.cols()) {
    throw InvalidParameter("expect: operator/state dimension mismatch");
  }
}

// Tr[rho K] without forming the product matrix.
double trace_with(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& k) {
  return rho.transpose().cwiseProduct(k).sum().real();
}

Observable identity_like(const AtomicDensityMatrix& rho) {
  return {"1", Eigen::MatrixXcd::Identity(rho.dim(), rho.dim())};
}

// Mean and variance helpers for T = A (x) 1 + 1 (x) B with A, B single-site.
struct SiteCombo {
  Eigen::MatrixXcd a;  // site 1
  Eigen::MatrixXcd b;  // site 2
};

double combo_mean(const AtomicDensityMatrix& rho, const SiteCombo& t) {
  const Eigen::Index d = t.a.rows();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  return trace_with(rho.matrix, Eigen::kroneckerProduct(t.a, id).eval()) +
         trace_with(rho.matrix, Eigen::kroneckerProduct(id, t.b).eval());
}

// <T^2> expanded as A^2 (x) 1 + 1 (x) B^2 + 2 A (x) B, avoiding the
// joint-dimension matrix product.
double combo_second_moment(const AtomicDensityMatrix& rho,
                           const SiteCombo& t) {
  const Eigen::Index d = t.a.rows();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  const Eigen::MatrixXcd a2 = t.a * t.a;
  const Eigen::MatrixXcd b2 = t.b * t.b;
  return trace_with(rho.matrix, Eigen::kroneckerProduct(a2, id).eval()) +
         trace_with(rho.matrix, Eigen::kroneckerProduct(id, b2).eval()) +
         2.0 * trace_with(rho.matrix,
                          Eigen::kroneckerProduct(t.a, t.b).eval());
}

double combo_variance(const AtomicDensityMatrix& rho, const SiteCombo& t) {
  const double mean = combo_mean(rho, t);
  return combo_second_moment(rho, t) - mean * mean;
}

// Symmetrized covariance of two sum combos.
double combo_covariance(const AtomicDensityMatrix& rho, const SiteCombo& s,
                        const SiteCombo& t) {
  const Eigen::Index d = s.a.rows();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  const Eigen::MatrixXcd sym_a = 0.5 * (s.a * t.a + t.a * s.a);
  const Eigen::MatrixXcd sym_b = 0.5 * (s.b * t.b + t.b * s.b);
  double st =
      trace_with(rho.matrix, Eigen::kroneckerProduct(sym_a, id).eval()) +
      trace_with(rho.matrix, Eigen::kroneckerProduct(id, sym_b).eval()) +
      trace_with(rho.matrix, Eigen::kroneckerProduct(s.a, t.b).eval()) +
      trace_with(rho.matrix, Eigen::kroneckerProduct(t.a, s.b).eval());
  return st - combo_mean(rho, s) * combo_mean(rho, t);
}

Eigen::MatrixXcd spin_matrix(Axis axis, int atoms) {
  return build_spin_operator(axis, atoms).matrix;
}

}  // namespace

double expect(const AtomicDensityMatrix& rho, const Observable& a,
              const Observable& b) {
  require_same_dim(rho, a, b);
  return trace_with(rho.matrix,
                    Eigen::kroneckerProduct(a.matrix, b.matrix).eval());
}

double expect_site1(const AtomicDensityMatrix& rho, const Observable& a) {
  return expect(rho, a, identity_like(rho));
}

double expect_site2(const AtomicDensityMatrix& rho, const Observable& b) {
  return expect(rho, identity_like(rho), b);
}

double variance_of_combo(const AtomicDensityMatrix& rho, Axis axis,
                         ComboSign sign) {
  const Eigen::MatrixXcd s = spin_matrix(axis, rho.atoms);
  const double f = sign == ComboSign::plus ? 1.0 : -1.0;
  return combo_variance(rho, {s, f * s});
}

Eigen::MatrixXd probability_distribution(const AtomicDensityMatrix& rho,
                                         Axis basis) {
  const int n = rho.atoms;
  const int n_dim = n + 1;
  Eigen::MatrixXcd site;
  switch (basis) {
    case Axis::z:
      site = Eigen::MatrixXcd::Identity(n_dim, n_dim);
      break;
    case Axis::x:
      site = rotation_matrix(Axis::y, M_PI / 2.0, n);
      break;
    case Axis::y: {
      // exp(+i S^y pi/4) exp(+i S^z pi/4); the z factor is a diagonal phase.
      Eigen::MatrixXcd rot = rotation_matrix(Axis::y, M_PI / 2.0, n);
      Eigen::VectorXcd zphase(n_dim);
      for (int k = 0; k < n_dim; ++k) {
        zphase(k) = std::exp(kI * (M_PI / 4.0 * (2.0 * k - n)));
      }
      site = rot * zphase.asDiagonal();
      break;
    }
  }
  const Eigen::MatrixXcd u = Eigen::kroneckerProduct(site, site).eval();
  const Eigen::MatrixXcd transformed = u * rho.matrix * u.adjoint();
  Eigen::MatrixXd p(n_dim, n_dim);
  for (int k1 = 0; k1 < n_dim; ++k1) {
    for (int k2 = 0; k2 < n_dim; ++k2) {
      p(k1, k2) = transformed(rho.index(k1, k2), rho.index(k1, k2)).real();
    }
  }
  return p;
}

Eigen::MatrixXcd partial_transpose_second(const Eigen::MatrixXcd& rho,
                                          int atoms) {
  const int n_dim = atoms + 1;
  if (rho.rows() != static_cast<Eigen::Index>(n_dim) * n_dim ||
      rho.rows() != rho.cols()) {
    throw InvalidParameter("partial_transpose_second: dimension mismatch");
  }
  Eigen::MatrixXcd out(rho.rows(), rho.cols());
  for (int k1 = 0; k1 < n_dim; ++k1) {
    for (int k2 = 0; k2 < n_dim; ++k2) {
      for (int k1p = 0; k1p < n_dim; ++k1p) {
        for (int k2p = 0; k2p < n_dim; ++k2p) {
          out(k1 * n_dim + k2, k1p * n_dim + k2p) =
              rho(k1 * n_dim + k2p, k1p * n_dim + k2);
        }
      }
    }
  }
  return out;
}

LogNegativity log_negativity(const AtomicDensityMatrix& rho) {
  const double herm_defect =
      (rho.matrix - rho.matrix.adjoint()).cwiseAbs().maxCoeff();
  if (herm_defect > 1e-8) {
    throw InvalidState("log_negativity: input is not Hermitian");
  }
  Eigen::MatrixXcd pt = partial_transpose_second(rho.matrix, rho.atoms);
  pt = 0.5 * (pt + pt.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(pt,
                                                     Eigen::EigenvaluesOnly);
  const double trace_norm = es.eigenvalues().cwiseAbs().sum();
  LogNegativity out;
  out.value = std::max(0.0, std::log2(trace_norm));
  out.normalized = out.value / std::log2(rho.atoms + 1.0);
  return out;
}

WinelandResult wineland(const AtomicDensityMatrix& rho) {
  const int n = rho.atoms;
  const std::array<Eigen::MatrixXcd, 3> spin = {spin_matrix(Axis::x, n),
                                                spin_matrix(Axis::y, n),
                                                spin_matrix(Axis::z, n)};
  Eigen::Vector3d mean;
  for (int a = 0; a < 3; ++a) {
    mean(a) = combo_mean(rho, {spin[a], spin[a]});
  }
  const double norm = mean.norm();
  if (norm < 1e-9) {
    throw UndefinedDirection("wineland: mean collective spin vanishes");
  }
  const Eigen::Vector3d dir = mean / norm;

  // Orthonormal pair perpendicular to the mean spin, seeded from the
  // least-aligned coordinate axis for determinism.
  int seed_axis = 0;
  for (int a = 1; a < 3; ++a) {
    if (std::abs(dir(a)) < std::abs(dir(seed_axis))) seed_axis = a;
  }
  Eigen::Vector3d seed = Eigen::Vector3d::Zero();
  seed(seed_axis) = 1.0;
  const Eigen::Vector3d e1 = (seed - seed.dot(dir) * dir).normalized();
  const Eigen::Vector3d e2 = dir.cross(e1);

  auto project = [&](const Eigen::Vector3d& e) {
    Eigen::MatrixXcd p = e(0) * spin[0] + e(1) * spin[1] + e(2) * spin[2];
    return SiteCombo{p, p};
  };
  const SiteCombo p1 = project(e1);
  const SiteCombo p2 = project(e2);

  const double va = combo_variance(rho, p1);
  const double vb = combo_variance(rho, p2);
  const double cab = combo_covariance(rho, p1, p2);
  // Smaller eigenvalue of the 2x2 covariance matrix = the minimum variance
  // over directions in the perpendicular plane.
  const double min_var =
      0.5 * (va + vb) - std::sqrt(0.25 * (va - vb) * (va - vb) + cab * cab);

  WinelandResult out;
  out.mean_spin_norm = norm;
  out.xi_literal = 2.0 * min_var / norm;
  out.xi_standard = 2.0 * n * min_var / (norm * norm);
  return out;
}

CriterionResult hofmann_takeuchi(const AtomicDensityMatrix& rho) {
  const double total = variance_of_combo(rho, Axis::x, ComboSign::minus) +
                       variance_of_combo(rho, Axis::y, ComboSign::plus) +
                       variance_of_combo(rho, Axis::z, ComboSign::minus);
  const double value = total / (4.0 * rho.atoms);
  return {"hofmann_takeuchi", value, 1.0, value < 1.0};
}

CriterionResult epr_steering(const AtomicDensityMatrix& rho) {
  const double sx1 =
      expect_site1(rho, build_spin_operator(Axis::x, rho.atoms));
  if (std::abs(sx1) < 1e-12) {
    throw UndefinedDirection("epr_steering: <S1^x> vanishes");
  }
  const double value = variance_of_combo(rho, Axis::y, ComboSign::plus) *
                       variance_of_combo(rho, Axis::z, ComboSign::minus) /
                       (sx1 * sx1);
  return {"epr_steering", value, 1.0, value < 1.0};
}

SignObservable sign_operator(const Observable& a) {
  const double herm_defect =
      (a.matrix - a.matrix.adjoint()).cwiseAbs().maxCoeff();
  if (herm_defect > 1e-12) {
    throw InvalidParameter("sign_operator: input is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a.matrix);
  Eigen::VectorXd signs(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < signs.size(); ++i) {
    signs(i) = es.eigenvalues()(i) >= 0.0 ? 1.0 : -1.0;  // sgn(0) := +1
  }
  SignObservable out;
  out.label = "sgn(" + a.label + ")";
  out.matrix = es.eigenvectors() *
               signs.cast<complex<double>>().asDiagonal() *
               es.eigenvectors().adjoint();
  return out;
}

double chsh(const AtomicDensityMatrix& rho, double theta_b) {
  const int n = rho.atoms;
  const Eigen::MatrixXcd sz = spin_matrix(Axis::z, n);
  const Eigen::MatrixXcd sy = spin_matrix(Axis::y, n);
  const double half = theta_b / 2.0;

  auto sgn_of = [&](const Eigen::MatrixXcd& m, const char* label) {
    return sign_operator({label, m});
  };
  const SignObservable m1a = sgn_of(sz, "S^z_1");
  const SignObservable m1b = sgn_of(
      std::cos(theta_b) * sz + std::sin(theta_b) * sy, "S^z_1 rot");
  const SignObservable m2a =
      sgn_of(std::cos(half) * sz + std::sin(half) * sy, "S^z_2 rot+");
  const SignObservable m2b =
      sgn_of(std::cos(half) * sz - std::sin(half) * sy, "S^z_2 rot-");

  auto corr = [&](const SignObservable& a, const SignObservable& b) {
    return trace_with(rho.matrix,
                      Eigen::kroneckerProduct(a.matrix, b.matrix).eval());
  };
  return std::abs(corr(m1a, m2a) + corr(m1a, m2b) - corr(m1b, m2a) +
                  corr(m1b, m2b));
}

double empirical_chsh_angle(int atoms) {
  const double n = atoms;
  return (3.2 / n + 1.7 / (n * n)) / (1.0 + 2.1 / n);
}

namespace {

// Golden-section maximization on [lo, hi]; assumes a unimodal-enough slice
// and returns the best point probed.
template <typename F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, int iters) {
  const double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  return f1 > f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

}  // namespace

ChshOptimum optimal_chsh(
    const std::function<AtomicDensityMatrix(double)>& state_at_tau, int atoms,
    const ChshSearchParams& params) {
  if (atoms < 1) throw InvalidParameter("optimal_chsh: atoms >= 1");
  std::map<double, AtomicDensityMatrix> states;
  auto state = [&](double tau) -> const AtomicDensityMatrix& {
    auto it = states.find(tau);
    if (it == states.end()) {
      it = states.emplace(tau, state_at_tau(tau)).first;
    }
    return it->second;
  };
  auto value = [&](double tau, double theta) {
    return chsh(state(tau), theta);
  };

  const double pi = M_PI;
  ChshOptimum best;
  auto consider = [&](double tau, double theta) {
    const double v = value(tau, theta);
    if (v > best.value) best = {tau, theta, v};
    return v;
  };

  std::vector<double> thetas;
  for (int j = 1; j <= params.theta_points; ++j) {
    thetas.push_back(pi / 2.0 * j / params.theta_points);
  }
  thetas.push_back(empirical_chsh_angle(atoms));

  for (int i = 1; i <= params.tau_points; ++i) {
    const double tau = pi * i / params.tau_points;
    for (double theta : thetas) consider(tau, theta);
  }

  const double dtau = pi / params.tau_points;
  const double dtheta = pi / 2.0 / params.theta_points;
  for (int round = 0; round < params.refine_rounds; ++round) {
    {
      const double lo = std::max(1e-6, best.tau - dtau);
      const double hi = std::min(pi, best.tau + dtau);
      auto [tau, v] = golden_max(
          [&](double t) { return consider(t, best.theta_b); }, lo, hi,
          params.golden_iterations);
      (void)tau;
      (void)v;
    }
    {
      const double lo = std::max(1e-6, best.theta_b - dtheta);
      const double hi = std::min(pi / 2.0, best.theta_b + dtheta);
      auto [theta, v] = golden_max(
          [&](double t) { return consider(best.tau, t); }, lo, hi,
          params.golden_iterations);
      (void)theta;
      (void)v;
    }
  }
  return best;
}

double purity(const AtomicDensityMatrix& rho) {
  // Tr(rho^2) = squared Frobenius norm for Hermitian rho.
  return rho.matrix.squaredNorm();
}

}  // namespace qndsim
