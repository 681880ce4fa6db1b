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

#include "qndsim/channels.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include <Eigen/Eigenvalues>

#include "qndsim/errors.hpp"
#include "qndsim/log_weight.hpp"
#include "qndsim/special.hpp"

namespace qndsim {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct LogTerm {
  double log_mag = kNegInf;
  double sign = 0.0;
};

// Assembles the (N+1)^2-dimensional conditional matrix from a kernel over
// Fock-label differences: the closed forms of both optical channels depend
// on (k1,k2,k1',k2') only through delta = k1-k2 and delta' = k1'-k2', so the
// expensive factors are evaluated once per (delta, delta') pair.  The
// binomial square roots and the 4^{-N} prefactor are attached here, the
// trace becomes the outcome weight, and the matrix is renormalized.  Only
// the upper triangle is computed; the mirror fills the rest.
AtomicDensityMatrix assemble_from_kernel(
    const SystemConfig& cfg,
    const std::function<LogTerm(double chi, double chi_p, double delta_chi)>&
        kernel) {
  const int n = cfg.atoms;
  const int n_dim = cfg.dim();
  const int n_delta = 2 * n + 1;

  std::vector<LogTerm> kern(static_cast<size_t>(n_delta) * n_delta);
  for (int d1 = -n; d1 <= n; ++d1) {
    for (int d2 = -n; d2 <= n; ++d2) {
      kern[(d1 + n) * n_delta + (d2 + n)] =
          kernel(d1 * cfg.tau, d2 * cfg.tau, (d1 - d2) * cfg.tau);
    }
  }

  std::vector<double> half_lb(n_dim);
  for (int k = 0; k < n_dim; ++k) {
    half_lb[k] = 0.5 * log_binomial(n, k).log_mag;
  }
  const double log_quarter_pow = -n * std::log(4.0);

  const Eigen::Index dim = cfg.joint_dim();
  Eigen::MatrixXd log_mag(dim, dim);
  Eigen::MatrixXd sign(dim, dim);

  double max_diag_log = kNegInf;
  for (Eigen::Index i = 0; i < dim; ++i) {
    const int k1 = static_cast<int>(i) / n_dim;
    const int k2 = static_cast<int>(i) % n_dim;
    for (Eigen::Index j = i; j < dim; ++j) {
      const int k1p = static_cast<int>(j) / n_dim;
      const int k2p = static_cast<int>(j) % n_dim;
      const LogTerm& t =
          kern[(k1 - k2 + n) * n_delta + (k1p - k2p + n)];
      if (t.sign == 0.0) {
        log_mag(i, j) = kNegInf;
        sign(i, j) = 0.0;
      } else {
        log_mag(i, j) = t.log_mag + half_lb[k1] + half_lb[k2] +
                        half_lb[k1p] + half_lb[k2p] + log_quarter_pow;
        sign(i, j) = t.sign;
      }
      if (i == j && sign(i, j) != 0.0) {
        max_diag_log = std::max(max_diag_log, log_mag(i, i));
      }
    }
  }
  if (max_diag_log == kNegInf) {
    throw ImpossibleOutcome("channel: the requested counts have zero weight");
  }

  double trace_rel = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (sign(i, i) != 0.0) {
      trace_rel += sign(i, i) * std::exp(log_mag(i, i) - max_diag_log);
    }
  }
  if (!(trace_rel > 0.0)) {
    throw ImpossibleOutcome("channel: non-positive outcome weight");
  }
  const double log_weight = max_diag_log + std::log(trace_rel);

  AtomicDensityMatrix rho;
  rho.atoms = n;
  rho.outcome_weight = std::exp(log_weight);
  rho.matrix.resize(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = i; j < dim; ++j) {
      const double v = sign(i, j) == 0.0
                           ? 0.0
                           : sign(i, j) * std::exp(log_mag(i, j) - log_weight);
      rho.matrix(i, j) = v;
      rho.matrix(j, i) = v;  // closed forms are real symmetric
    }
  }
  return rho;
}

double sgn(double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

LogTerm combine_factors(double f_c, double f_d, double log_pref) {
  if (f_c == 0.0 || f_d == 0.0) return {};
  return {std::log(std::abs(f_c)) + std::log(std::abs(f_d)) + log_pref,
          sgn(f_c) * sgn(f_d)};
}

// Inner finite sum of the optical closed forms, one mode:
//   sum_{m=0}^{n} u^m y^{n-m} n! / (m! ((n-m)!)^2)
// Equal to scaled_laguerre(n, u, y); kept as the slow reference route.
double mode_sum_reference(int n, double u, double y) {
  double total = 0.0;
  for (int m = 0; m <= n; ++m) {
    if (u == 0.0 && m > 0) break;
    if (y == 0.0 && n - m > 0) continue;
    double log_mag = std::lgamma(n + 1.0) - std::lgamma(m + 1.0) -
                     2.0 * std::lgamma(n - m + 1.0);
    if (m > 0) log_mag += m * std::log(u);
    double sign = 1.0;
    if (n - m > 0) {
      log_mag += (n - m) * std::log(std::abs(y));
      if (y < 0 && ((n - m) % 2) != 0) sign = -1.0;
    }
    total += sign * std::exp(log_mag);
  }
  return total;
}

}  // namespace

AtomicDensityMatrix density_from_pure(const PureAtomicState& psi) {
  AtomicDensityMatrix rho;
  rho.atoms = psi.atoms;
  rho.matrix = psi.amplitudes * psi.amplitudes.adjoint();
  rho.outcome_weight = std::exp(psi.log_norm - psi.atoms * std::log(4.0));
  return rho;
}

PhaseDiffusionCoefficients phase_diffusion_coefficients(double kappa_t) {
  if (!(kappa_t >= 0.0)) {
    throw InvalidParameter("phase_diffusion_coefficients: need kappa*t >= 0");
  }
  return {1.0 / (kappa_t + 1.0), kappa_t / (kappa_t + 1.0)};
}

LossGainCoefficients loss_gain_coefficients(double gamma, double gain,
                                            double t) {
  if (!(gamma >= 0.0) || !(gain >= 0.0) || !(t >= 0.0)) {
    throw InvalidParameter("loss_gain_coefficients: rates and t must be >= 0");
  }
  const double x = (gamma - gain) * t;
  // s = (1 - e^{-2x}) / (2x); series below the degeneracy threshold.
  double s;
  if (std::abs(x) < 1e-6) {
    s = 1.0 - x + (2.0 / 3.0) * x * x;
  } else {
    s = -std::expm1(-2.0 * x) / (2.0 * x);
  }
  if (!std::isfinite(s)) {
    // Saturated gain limit: T1 -> 1/g, coherences fully destroyed.
    return {1.0 / gain, 0.0, 0.0};
  }
  const double denom = 1.0 + 2.0 * gain * t * s;
  return {2.0 * t * s / denom, std::exp(-x) / denom, 1.0 / denom};
}

Eigen::MatrixXd phase_diffusion_kraus(int m, int n, double kappa_t,
                                      int cutoff) {
  if (m < 0 || n < 0 || cutoff < 0) {
    throw InvalidParameter("phase_diffusion_kraus: bad indices");
  }
  if (!(kappa_t >= 0.0)) {
    throw InvalidParameter("phase_diffusion_kraus: need kappa*t >= 0");
  }
  const int dim = cutoff + 1;
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim, dim);
  if (kappa_t == 0.0 && m + n > 0) return out;

  const double log_z = -std::log1p(kappa_t);
  double log_pref = 0.5 * ((m + n + 1) * log_z - std::lgamma(m + 1.0) -
                           std::lgamma(n + 1.0));
  if (m + n > 0) log_pref += 0.5 * (m + n) * std::log(kappa_t);

  for (int f = n; f < dim; ++f) {
    const int out_row = f - n + m;
    if (out_row >= dim) continue;
    // c^n, then (1/(1+kt))^{c^dag c}, then c^dag^m.
    const double log_val = log_pref +
                           0.5 * (std::lgamma(f + 1.0) -
                                  std::lgamma(f - n + 1.0)) +
                           (f - n) * log_z +
                           0.5 * (std::lgamma(out_row + 1.0) -
                                  std::lgamma(f - n + 1.0));
    out(out_row, f) = std::exp(log_val);
  }
  return out;
}

Eigen::MatrixXd loss_gain_kraus(int p, int q, double gamma, double gain,
                                double t, int cutoff) {
  if (p < 0 || q < 0 || cutoff < 0) {
    throw InvalidParameter("loss_gain_kraus: bad indices");
  }
  const LossGainCoefficients cf = loss_gain_coefficients(gamma, gain, t);
  const int dim = cutoff + 1;
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim, dim);
  if ((gamma == 0.0 && p > 0) || (gain == 0.0 && q > 0)) return out;
  if (cf.t1 == 0.0 && p + q > 0) return out;

  double log_pref = 0.5 * (std::log(cf.t3) - std::lgamma(p + 1.0) -
                           std::lgamma(q + 1.0) -
                           2.0 * q * std::log(cf.t2));
  if (p > 0) log_pref += 0.5 * p * std::log(gamma);
  if (q > 0) log_pref += 0.5 * q * std::log(gain);
  if (p + q > 0) log_pref += 0.5 * (p + q) * std::log(cf.t1);

  const double log_t2 = std::log(cf.t2);
  for (int f = p; f < dim; ++f) {
    const int out_row = f - p + q;
    if (out_row >= dim) continue;
    // c^p, then c^dag^q, then T2^{c^dag c}.
    const double log_val = log_pref +
                           0.5 * (std::lgamma(f + 1.0) -
                                  std::lgamma(f - p + 1.0)) +
                           0.5 * (std::lgamma(out_row + 1.0) -
                                  std::lgamma(f - p + 1.0)) +
                           out_row * log_t2;
    out(out_row, f) = std::exp(log_val);
  }
  return out;
}

AtomicDensityMatrix apply_phase_diffusion(const SystemConfig& cfg,
                                          double kappa_tilde) {
  cfg.validate();
  if (!(kappa_tilde >= 0.0)) {
    throw InvalidParameter("apply_phase_diffusion: need kappa >= 0");
  }
  if (kappa_tilde == 0.0) return density_from_pure(conditional_state(cfg));

  const PhaseDiffusionCoefficients cf =
      phase_diffusion_coefficients(kappa_tilde * cfg.tau);
  const double a2 = cfg.alpha * cfg.alpha;
  const double zz = cf.z * cf.z;
  const double log_z2 = 2.0 * std::log(cf.z);

  return assemble_from_kernel(
      cfg, [&](double chi, double chi_p, double delta) {
        const double y_c = zz * a2 * std::cos(chi) * std::cos(chi_p);
        const double y_d = zz * a2 * std::sin(chi) * std::sin(chi_p);
        const double f_c = scaled_laguerre(cfg.n_c, cf.u, y_c);
        const double f_d = scaled_laguerre(cfg.n_d, cf.u, y_d);
        const double log_pref =
            -a2 * (1.0 - cf.u * std::cos(delta)) + log_z2;
        return combine_factors(f_c, f_d, log_pref);
      });
}

AtomicDensityMatrix apply_phase_diffusion_reference(const SystemConfig& cfg,
                                                    double kappa_tilde) {
  cfg.validate();
  if (!(kappa_tilde >= 0.0)) {
    throw InvalidParameter("apply_phase_diffusion_reference: kappa >= 0");
  }
  const PhaseDiffusionCoefficients cf =
      phase_diffusion_coefficients(kappa_tilde * cfg.tau);
  const double a2 = cfg.alpha * cfg.alpha;
  const double zz = cf.z * cf.z;
  const double log_z2 = 2.0 * std::log(cf.z);

  return assemble_from_kernel(
      cfg, [&](double chi, double chi_p, double delta) {
        const double y_c = zz * a2 * std::cos(chi) * std::cos(chi_p);
        const double y_d = zz * a2 * std::sin(chi) * std::sin(chi_p);
        const double f_c = mode_sum_reference(cfg.n_c, cf.u, y_c);
        const double f_d = mode_sum_reference(cfg.n_d, cf.u, y_d);
        const double log_pref =
            -a2 * (1.0 - cf.u * std::cos(delta)) + log_z2;
        return combine_factors(f_c, f_d, log_pref);
      });
}

AtomicDensityMatrix apply_loss_gain_with_coefficients(
    const SystemConfig& cfg, double gamma_tilde, double g_tilde,
    const LossGainCoefficients& cf) {
  cfg.validate();
  const double a2 = cfg.alpha * cfg.alpha;
  const double b = g_tilde * cf.t1;       // gain weight in the mode sums
  const double r1 = gamma_tilde * cf.t1;  // loss weight in the overlap factor
  const double t2_sq = cf.t2 * cf.t2;
  const double log_t3_sq = 2.0 * std::log(cf.t3);

  return assemble_from_kernel(
      cfg, [&](double chi, double chi_p, double delta) {
        const double w_c = t2_sq * a2 * std::cos(chi) * std::cos(chi_p);
        const double w_d = t2_sq * a2 * std::sin(chi) * std::sin(chi_p);
        const double f_c = scaled_laguerre(cfg.n_c, b, w_c);
        const double f_d = scaled_laguerre(cfg.n_d, b, w_d);
        const double log_pref =
            -a2 * (1.0 - r1 * std::cos(delta)) + log_t3_sq;
        return combine_factors(f_c, f_d, log_pref);
      });
}

AtomicDensityMatrix apply_loss_gain(const SystemConfig& cfg,
                                    double gamma_tilde, double g_tilde) {
  if (!(gamma_tilde >= 0.0) || !(g_tilde >= 0.0)) {
    throw InvalidParameter("apply_loss_gain: need non-negative rates");
  }
  const LossGainCoefficients cf =
      loss_gain_coefficients(gamma_tilde, g_tilde, cfg.tau);
  if (cf.t3 == 0.0) {
    throw ImpossibleOutcome("apply_loss_gain: channel saturated by gain");
  }
  return apply_loss_gain_with_coefficients(cfg, gamma_tilde, g_tilde, cf);
}

AtomicDensityMatrix apply_dephasing(const SystemConfig& cfg,
                                    double Gamma_tilde) {
  cfg.validate();
  if (!(Gamma_tilde >= 0.0)) {
    throw InvalidParameter("apply_dephasing: need Gamma >= 0");
  }
  const PureAtomicState psi = conditional_state(cfg);
  const int n_dim = cfg.dim();
  const Eigen::Index dim = cfg.joint_dim();

  AtomicDensityMatrix rho;
  rho.atoms = cfg.atoms;
  rho.outcome_weight = std::exp(psi.log_norm - cfg.atoms * std::log(4.0));
  rho.matrix.resize(dim, dim);
  const double scale = 2.0 * Gamma_tilde * cfg.tau;
  for (Eigen::Index i = 0; i < dim; ++i) {
    const int k1 = static_cast<int>(i) / n_dim;
    const int k2 = static_cast<int>(i) % n_dim;
    for (Eigen::Index j = 0; j < dim; ++j) {
      const int k1p = static_cast<int>(j) / n_dim;
      const int k2p = static_cast<int>(j) % n_dim;
      const double d1 = k1 - k1p;
      const double d2 = k2 - k2p;
      rho.matrix(i, j) = psi.amplitudes(i) * std::conj(psi.amplitudes(j)) *
                         std::exp(-scale * (d1 * d1 + d2 * d2));
    }
  }
  return rho;
}

AtomicDensityMatrix apply_channel(const SystemConfig& cfg,
                                  const ChannelSpec& channel) {
  channel.validate();
  switch (channel.kind) {
    case ChannelSpec::Kind::none:
      return density_from_pure(conditional_state(cfg));
    case ChannelSpec::Kind::phase_diffusion:
      return apply_phase_diffusion(cfg, channel.kappa_tilde);
    case ChannelSpec::Kind::loss_gain:
      return apply_loss_gain(cfg, channel.gamma_tilde, channel.g_tilde);
    case ChannelSpec::Kind::dephasing:
      return apply_dephasing(cfg, channel.Gamma_tilde);
  }
  throw InvalidParameter("apply_channel: unknown channel kind");
}

StateValidity check_state_validity(const AtomicDensityMatrix& rho) {
  StateValidity v;
  v.hermiticity_defect =
      (rho.matrix - rho.matrix.adjoint()).cwiseAbs().maxCoeff();
  v.trace_defect = std::abs(rho.matrix.trace().real() - 1.0) +
                   std::abs(rho.matrix.trace().imag());
  Eigen::MatrixXcd herm = 0.5 * (rho.matrix + rho.matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm,
                                                     Eigen::EigenvaluesOnly);
  v.min_eigenvalue = es.eigenvalues().minCoeff();
  return v;
}

}  // namespace qndsim
