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

#include "qndsim/oracles.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "qndsim/errors.hpp"
#include "qndsim/log_weight.hpp"
#include "qndsim/qnd_state.hpp"
#include "qndsim/special.hpp"
#include "qndsim/spin_ops.hpp"

namespace qndsim {

namespace {

using std::complex;
constexpr complex<double> kI{0.0, 1.0};

// |beta> on a truncated Fock space, amplitudes e^{-|b|^2/2} b^n / sqrt(n!)
// built by the stable forward product.
Eigen::VectorXcd coherent_vector(complex<double> beta, int cutoff) {
  Eigen::VectorXcd v(cutoff + 1);
  v(0) = std::exp(-std::norm(beta) / 2.0);
  for (int n = 0; n < cutoff; ++n) {
    v(n + 1) = v(n) * beta / std::sqrt(n + 1.0);
  }
  return v;
}

// Two-mode coupler exp(theta (a1^dag a2 - a2^dag a1)) on the truncated
// space, built by exponentiating the explicit generator.  Total photon
// number is conserved, so every block that fits inside the cutoff is exact.
Eigen::MatrixXcd beamsplitter_unitary(double theta, int cutoff) {
  const int dim = cutoff + 1;
  const int pdim = dim * dim;
  Eigen::MatrixXcd gen = Eigen::MatrixXcd::Zero(pdim, pdim);
  auto idx = [dim](int m1, int m2) { return m1 * dim + m2; };
  for (int m1 = 0; m1 < dim; ++m1) {
    for (int m2 = 0; m2 < dim; ++m2) {
      // a1^dag a2 |m1, m2> = sqrt((m1+1) m2) |m1+1, m2-1>
      if (m1 + 1 < dim && m2 - 1 >= 0) {
        const double amp = std::sqrt(double(m1 + 1) * m2);
        gen(idx(m1 + 1, m2 - 1), idx(m1, m2)) += theta * amp;
      }
      // -a2^dag a1 |m1, m2> = -sqrt(m1 (m2+1)) |m1-1, m2+1>
      if (m1 - 1 >= 0 && m2 + 1 < dim) {
        const double amp = std::sqrt(double(m1) * (m2 + 1));
        gen(idx(m1 - 1, m2 + 1), idx(m1, m2)) -= theta * amp;
      }
    }
  }
  return gen.exp();
}

double half_log_binom(int n, int k) {
  return 0.5 * log_binomial(n, k).log_mag;
}

struct OracleInstance {
  Eigen::MatrixXcd matrix;
  double weight = 0.0;
};

// One evaluation of the Kraus-sum oracle at fixed cutoffs.  The photonic
// part of the pre-projection state depends on the labels only through
// delta = k1 - k2, so the double Kraus sum collapses to scalar kernels
// K(delta, delta') = sum_{m,n} <n|M|coh(delta)> <n|M|coh(delta')>^*
// evaluated with the explicit truncated Kraus matrices.
OracleInstance oracle_once(const SystemConfig& cfg, const ChannelSpec& ch,
                           int photon_cutoff, int kraus_cutoff) {
  const int n = cfg.atoms;
  const int n_delta = 2 * n + 1;
  const int pdim = photon_cutoff + 1;
  if (cfg.n_c > photon_cutoff || cfg.n_d > photon_cutoff) {
    throw InvalidParameter("oracle: counts exceed the photon cutoff");
  }

  // Coherent columns per label difference, both modes.
  Eigen::MatrixXcd coh_c(pdim, n_delta), coh_d(pdim, n_delta);
  for (int d = -n; d <= n; ++d) {
    const double chi = d * cfg.tau;
    coh_c.col(d + n) = coherent_vector(cfg.alpha * std::cos(chi),
                                       photon_cutoff);
    coh_d.col(d + n) = coherent_vector(-kI * cfg.alpha * std::sin(chi),
                                       photon_cutoff);
  }

  Eigen::MatrixXcd kernel_c = Eigen::MatrixXcd::Zero(n_delta, n_delta);
  Eigen::MatrixXcd kernel_d = Eigen::MatrixXcd::Zero(n_delta, n_delta);
  for (int a = 0; a <= kraus_cutoff; ++a) {
    for (int b = 0; b <= kraus_cutoff; ++b) {
      Eigen::MatrixXd m;
      switch (ch.kind) {
        case ChannelSpec::Kind::phase_diffusion:
          m = phase_diffusion_kraus(a, b, ch.kappa_tilde * cfg.tau,
                                    photon_cutoff);
          break;
        case ChannelSpec::Kind::loss_gain:
          m = loss_gain_kraus(a, b, ch.gamma_tilde, ch.g_tilde, cfg.tau,
                              photon_cutoff);
          break;
        default:
          throw InvalidParameter(
              "oracle: only the optical channels have Kraus sums");
      }
      if ((m.array() == 0.0).all()) continue;
      const Eigen::RowVectorXcd pc = m.row(cfg.n_c) * coh_c;
      const Eigen::RowVectorXcd pd = m.row(cfg.n_d) * coh_d;
      kernel_c += pc.transpose() * pc.conjugate();
      kernel_d += pd.transpose() * pd.conjugate();
    }
  }

  std::vector<double> w(static_cast<size_t>(n + 1));
  for (int k = 0; k <= n; ++k) w[k] = half_log_binom(n, k);
  const double log_half_pow = -n * std::log(2.0);

  const Eigen::Index dim = cfg.joint_dim();
  Eigen::MatrixXcd rho(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const int k1 = static_cast<int>(i) / (n + 1);
    const int k2 = static_cast<int>(i) % (n + 1);
    const double wi = std::exp(w[k1] + w[k2] + log_half_pow);
    for (Eigen::Index j = 0; j < dim; ++j) {
      const int k1p = static_cast<int>(j) / (n + 1);
      const int k2p = static_cast<int>(j) % (n + 1);
      const double wj = std::exp(w[k1p] + w[k2p] + log_half_pow);
      const int di = k1 - k2 + n;
      const int dj = k1p - k2p + n;
      rho(i, j) = wi * wj * kernel_c(di, dj) * kernel_d(di, dj);
    }
  }

  OracleInstance out;
  out.weight = rho.trace().real();
  if (!(out.weight > 0.0)) {
    throw ImpossibleOutcome("oracle: zero weight for the requested counts");
  }
  out.matrix = rho / out.weight;
  return out;
}

double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

Eigen::VectorXcd preprojection_state(const SystemConfig& cfg,
                                     int photon_cutoff) {
  cfg.validate();
  const int n = cfg.atoms;
  const int pdim = photon_cutoff + 1;
  const Eigen::Index adim = cfg.joint_dim();
  const Eigen::Index total = adim * pdim * pdim;
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(total);
  for (int k1 = 0; k1 <= n; ++k1) {
    for (int k2 = 0; k2 <= n; ++k2) {
      const double chi = (k1 - k2) * cfg.tau;
      const double w = std::exp(half_log_binom(n, k1) +
                                half_log_binom(n, k2) - n * std::log(2.0));
      const Eigen::VectorXcd cc =
          coherent_vector(cfg.alpha * std::cos(chi), photon_cutoff);
      const Eigen::VectorXcd cd =
          coherent_vector(-kI * cfg.alpha * std::sin(chi), photon_cutoff);
      const Eigen::Index base = cfg.joint_index(k1, k2) * pdim * pdim;
      for (int mc = 0; mc < pdim; ++mc) {
        for (int md = 0; md < pdim; ++md) {
          psi(base + mc * pdim + md) += w * cc(mc) * cd(md);
        }
      }
    }
  }
  return psi;
}

double mz_evolution_oracle(int atoms, double alpha, double tau,
                           int photon_cutoff) {
  SystemConfig cfg;
  cfg.atoms = atoms;
  cfg.alpha = alpha;
  cfg.tau = tau;
  cfg.validate();
  const double tail = poisson_tail(alpha * alpha, photon_cutoff);
  if (tail > 1e-12) {
    throw TailMassError("mz_evolution_oracle: photon cutoff leaves mass " +
                        std::to_string(tail));
  }

  const int n = atoms;
  const int pdim = photon_cutoff + 1;
  const int pdim2 = pdim * pdim;
  const Eigen::Index adim = cfg.joint_dim();

  // Atoms polarized along x on both ensembles.
  const Eigen::VectorXcd single = spin_coherent_state(M_PI / 2.0, 0.0, n);
  Eigen::VectorXcd atom_vec(adim);
  for (int k1 = 0; k1 <= n; ++k1) {
    for (int k2 = 0; k2 <= n; ++k2) {
      atom_vec(cfg.joint_index(k1, k2)) = single(k1) * single(k2);
    }
  }

  // Photons: |alpha> in arm 1, vacuum in arm 2, as an atom x photon matrix.
  const Eigen::VectorXcd in1 = coherent_vector(alpha, photon_cutoff);
  const Eigen::VectorXcd in2 = coherent_vector(0.0, photon_cutoff);
  Eigen::VectorXcd photons(pdim2);
  for (int m1 = 0; m1 < pdim; ++m1) {
    for (int m2 = 0; m2 < pdim; ++m2) {
      photons(m1 * pdim + m2) = in1(m1) * in2(m2);
    }
  }
  Eigen::MatrixXcd state = atom_vec * photons.transpose();  // adim x pdim2

  const Eigen::MatrixXcd split = beamsplitter_unitary(-M_PI / 4.0,
                                                      photon_cutoff);
  const Eigen::MatrixXcd merge = beamsplitter_unitary(M_PI / 4.0,
                                                      photon_cutoff);
  state = state * split.transpose();

  // Diagonal interaction phase exp(-i tau/2 (s1 - s2)(m1 - m2)).
  for (Eigen::Index a = 0; a < adim; ++a) {
    const int k1 = static_cast<int>(a) / (n + 1);
    const int k2 = static_cast<int>(a) % (n + 1);
    const double spin_diff = 2.0 * (k1 - k2);
    for (int m1 = 0; m1 < pdim; ++m1) {
      for (int m2 = 0; m2 < pdim; ++m2) {
        const double phase = -tau / 2.0 * spin_diff * (m1 - m2);
        state(a, m1 * pdim + m2) *= std::exp(kI * phase);
      }
    }
  }

  state = state * merge.transpose();
  // Sign flip on the second output arm fixes the dark-port phase.
  for (Eigen::Index a = 0; a < adim; ++a) {
    for (int m1 = 0; m1 < pdim; ++m1) {
      for (int m2 = 1; m2 < pdim; m2 += 2) {
        state(a, m1 * pdim + m2) = -state(a, m1 * pdim + m2);
      }
    }
  }

  const Eigen::VectorXcd closed = preprojection_state(cfg, photon_cutoff);
  double max_diff = 0.0;
  for (Eigen::Index a = 0; a < adim; ++a) {
    for (int p = 0; p < pdim2; ++p) {
      max_diff = std::max(max_diff,
                          std::abs(state(a, p) - closed(a * pdim2 + p)));
    }
  }
  return max_diff;
}

AtomicDensityMatrix brute_force_channel_oracle(const SystemConfig& cfg,
                                               const ChannelSpec& channel,
                                               int photon_cutoff,
                                               int kraus_cutoff) {
  cfg.validate();
  channel.validate();
  OracleInstance base = oracle_once(cfg, channel, photon_cutoff, kraus_cutoff);
  OracleInstance more_photons =
      oracle_once(cfg, channel, photon_cutoff + 2, kraus_cutoff);
  OracleInstance more_kraus =
      oracle_once(cfg, channel, photon_cutoff, kraus_cutoff + 2);
  const double drift = std::max(max_abs_diff(base.matrix, more_photons.matrix),
                                max_abs_diff(base.matrix, more_kraus.matrix));
  if (drift > 1e-10) {
    throw TailMassError("brute_force_channel_oracle: truncation drift " +
                        std::to_string(drift));
  }
  AtomicDensityMatrix rho;
  rho.atoms = cfg.atoms;
  rho.matrix = std::move(base.matrix);
  rho.outcome_weight = base.weight;
  return rho;
}

AtomicDensityMatrix pure_loss_attenuation_reference(const SystemConfig& cfg,
                                                    double gamma_tilde) {
  cfg.validate();
  if (!(gamma_tilde >= 0.0)) {
    throw InvalidParameter("pure_loss_attenuation_reference: gamma >= 0");
  }
  const int n = cfg.atoms;
  const double a2 = cfg.alpha * cfg.alpha;
  const double eta_sq = std::exp(-2.0 * gamma_tilde * cfg.tau);

  const Eigen::Index dim = cfg.joint_dim();
  Eigen::MatrixXd log_mag(dim, dim);
  Eigen::MatrixXd sign(dim, dim);
  std::vector<double> hlb(static_cast<size_t>(n + 1));
  for (int k = 0; k <= n; ++k) hlb[k] = half_log_binom(n, k);

  auto signed_pow_log = [](double base, int p, double& log_acc,
                           double& sign_acc) {
    if (p == 0) return true;
    if (base == 0.0) return false;
    log_acc += p * std::log(std::abs(base));
    if (base < 0 && (p % 2) != 0) sign_acc = -sign_acc;
    return true;
  };

  for (Eigen::Index i = 0; i < dim; ++i) {
    const int k1 = static_cast<int>(i) / (n + 1);
    const int k2 = static_cast<int>(i) % (n + 1);
    const double chi = (k1 - k2) * cfg.tau;
    for (Eigen::Index j = 0; j < dim; ++j) {
      const int k1p = static_cast<int>(j) / (n + 1);
      const int k2p = static_cast<int>(j) % (n + 1);
      const double chi_p = (k1p - k2p) * cfg.tau;

      double lm = -a2 + (1.0 - eta_sq) * a2 * std::cos(chi - chi_p) +
                  hlb[k1] + hlb[k2] + hlb[k1p] + hlb[k2p] -
                  n * std::log(4.0) - std::lgamma(cfg.n_c + 1.0) -
                  std::lgamma(cfg.n_d + 1.0);
      double sg = 1.0;
      const bool ok_c = signed_pow_log(
          eta_sq * a2 * std::cos(chi) * std::cos(chi_p), cfg.n_c, lm, sg);
      const bool ok_d = signed_pow_log(
          eta_sq * a2 * std::sin(chi) * std::sin(chi_p), cfg.n_d, lm, sg);
      if (!ok_c || !ok_d) {
        log_mag(i, j) = -std::numeric_limits<double>::infinity();
        sign(i, j) = 0.0;
      } else {
        log_mag(i, j) = lm;
        sign(i, j) = sg;
      }
    }
  }

  double max_diag = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (sign(i, i) != 0.0) max_diag = std::max(max_diag, log_mag(i, i));
  }
  if (max_diag == -std::numeric_limits<double>::infinity()) {
    throw ImpossibleOutcome("pure_loss_attenuation_reference: zero weight");
  }
  double trace_rel = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (sign(i, i) != 0.0) trace_rel += std::exp(log_mag(i, i) - max_diag);
  }
  const double log_weight = max_diag + std::log(trace_rel);

  AtomicDensityMatrix rho;
  rho.atoms = n;
  rho.outcome_weight = std::exp(log_weight);
  rho.matrix.resize(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      rho.matrix(i, j) = sign(i, j) == 0.0
                             ? 0.0
                             : sign(i, j) *
                                   std::exp(log_mag(i, j) - log_weight);
    }
  }
  return rho;
}

double phase_diffusion_completeness_defect(double kappa_t, int cutoff,
                                           int subspace_max) {
  const int dim = cutoff + 1;
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(dim, dim);
  for (int m = 0; m <= cutoff; ++m) {
    for (int n = 0; n <= cutoff; ++n) {
      const Eigen::MatrixXd k = phase_diffusion_kraus(m, n, kappa_t, cutoff);
      sum += k.transpose() * k;
    }
  }
  double defect = 0.0;
  for (int i = 0; i <= subspace_max; ++i) {
    for (int j = 0; j <= subspace_max; ++j) {
      defect = std::max(defect,
                        std::abs(sum(i, j) - (i == j ? 1.0 : 0.0)));
    }
  }
  return defect;
}

double loss_gain_completeness_defect(double gamma, double gain, double t,
                                     int cutoff, int subspace_max) {
  const int dim = cutoff + 1;
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(dim, dim);
  for (int p = 0; p <= cutoff; ++p) {
    for (int q = 0; q <= cutoff; ++q) {
      const Eigen::MatrixXd k = loss_gain_kraus(p, q, gamma, gain, t, cutoff);
      sum += k.transpose() * k;
    }
  }
  double defect = 0.0;
  for (int i = 0; i <= subspace_max; ++i) {
    for (int j = 0; j <= subspace_max; ++j) {
      defect = std::max(defect,
                        std::abs(sum(i, j) - (i == j ? 1.0 : 0.0)));
    }
  }
  return defect;
}

namespace {

struct CheckLine {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool ok = false;
};

void run_closed_form_comparisons(OracleLevel level, bool corrupt_t2,
                                 std::vector<CheckLine>& lines) {
  const bool fast = level == OracleLevel::fast;
  SystemConfig cfg;
  cfg.atoms = fast ? 1 : 2;
  cfg.alpha = fast ? 0.5 : 1.0;
  cfg.tau = 0.3;
  const int pc = fast ? 14 : 18;
  const int kc = fast ? 14 : 18;

  std::vector<std::pair<int, int>> outcomes =
      fast ? std::vector<std::pair<int, int>>{{0, 0}, {1, 0}}
           : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {2, 0}, {1, 1}};
  std::vector<double> kappas = fast ? std::vector<double>{0.5}
                                    : std::vector<double>{0.1, 0.5, 2.0};
  std::vector<std::pair<double, double>> lg_rates =
      fast ? std::vector<std::pair<double, double>>{{0.4, 0.1}}
           : std::vector<std::pair<double, double>>{
                 {0.4, 0.1}, {0.4, 0.0}, {0.2, 0.2}};

  for (double kappa : kappas) {
    double worst = 0.0;
    for (auto [nc, nd] : outcomes) {
      cfg.n_c = nc;
      cfg.n_d = nd;
      const AtomicDensityMatrix closed = apply_phase_diffusion(cfg, kappa);
      const AtomicDensityMatrix oracle = brute_force_channel_oracle(
          cfg, ChannelSpec::phase_diffusion(kappa), pc, kc);
      worst = std::max(worst,
                       (closed.matrix - oracle.matrix).cwiseAbs().maxCoeff());
    }
    std::ostringstream name;
    name << "phase-diffusion closed form vs Kraus oracle (kappa=" << kappa
         << ")";
    lines.push_back({name.str(), worst, 1e-8, worst <= 1e-8});
  }

  for (auto [gamma, gain] : lg_rates) {
    double worst = 0.0;
    for (auto [nc, nd] : outcomes) {
      cfg.n_c = nc;
      cfg.n_d = nd;
      LossGainCoefficients cf = loss_gain_coefficients(gamma, gain, cfg.tau);
      if (corrupt_t2) cf.t2 *= 1.0 + 1e-3;
      const AtomicDensityMatrix closed =
          apply_loss_gain_with_coefficients(cfg, gamma, gain, cf);
      const AtomicDensityMatrix oracle = brute_force_channel_oracle(
          cfg, ChannelSpec::loss_gain(gamma, gain), pc, kc);
      worst = std::max(worst,
                       (closed.matrix - oracle.matrix).cwiseAbs().maxCoeff());
    }
    std::ostringstream name;
    name << "loss/gain closed form vs Kraus oracle (gamma=" << gamma
         << ", g=" << gain << ")";
    lines.push_back({name.str(), worst, 1e-8, worst <= 1e-8});
  }

  // Laguerre recurrence vs explicit double sum.
  {
    double worst = 0.0;
    for (double kappa : kappas) {
      for (auto [nc, nd] : outcomes) {
        cfg.n_c = nc;
        cfg.n_d = nd;
        const AtomicDensityMatrix a = apply_phase_diffusion(cfg, kappa);
        const AtomicDensityMatrix b =
            apply_phase_diffusion_reference(cfg, kappa);
        const double scale = a.matrix.cwiseAbs().maxCoeff();
        worst = std::max(
            worst, (a.matrix - b.matrix).cwiseAbs().maxCoeff() / scale);
      }
    }
    lines.push_back({"Laguerre recurrence vs explicit double sum (relative)",
                     worst, 1e-10, worst <= 1e-10});
  }
}

}  // namespace

OracleReport run_oracle_check(OracleLevel level, bool corrupt_t2) {
  std::vector<CheckLine> lines;
  const bool fast = level == OracleLevel::fast;

  {
    const int atoms = fast ? 1 : 2;
    const double alpha = fast ? 0.5 : 1.0;
    const double tau = fast ? 0.4 : 0.7;
    const int cutoff = fast ? 15 : 20;
    const double dev = mz_evolution_oracle(atoms, alpha, tau, cutoff);
    lines.push_back({"interferometer evolution vs closed-form state", dev,
                     1e-10, dev <= 1e-10});
  }
  {
    const int cutoff = fast ? 18 : 25;
    const double defect =
        phase_diffusion_completeness_defect(0.3, cutoff, 8);
    lines.push_back({"phase-diffusion Kraus completeness", defect, 1e-8,
                     defect <= 1e-8});
  }
  {
    const int cutoff = fast ? 18 : 25;
    const double defect =
        loss_gain_completeness_defect(0.4, 0.1, 0.5, cutoff, 8);
    lines.push_back(
        {"loss/gain Kraus completeness", defect, 1e-8, defect <= 1e-8});
  }
  run_closed_form_comparisons(level, corrupt_t2, lines);

  OracleReport report;
  report.passed = true;
  std::ostringstream text;
  for (const CheckLine& line : lines) {
    report.passed = report.passed && line.ok;
    report.max_discrepancy = std::max(report.max_discrepancy, line.value);
    text << (line.ok ? "[PASS] " : "[FAIL] ") << line.name
         << ": max discrepancy " << line.value << " (tolerance "
         << line.tolerance << ")\n";
  }
  report.text = text.str();
  return report;
}

}  // namespace qndsim
