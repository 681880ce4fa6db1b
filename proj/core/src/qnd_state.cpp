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

#include "qndsim/qnd_state.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "qndsim/errors.hpp"
#include "qndsim/log_weight.hpp"

namespace qndsim {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// sign * log-magnitude of cos^{n_c}(chi) sin^{n_d}(chi), zero-safe.
LogWeight trig_power_weight(int n_c, int n_d, double chi) {
  const double c = std::cos(chi);
  const double s = std::sin(chi);
  LogWeight w{0.0, 1.0};
  if (n_c > 0) {
    if (c == 0.0) return LogWeight::zero();
    w.log_mag += n_c * std::log(std::abs(c));
    if (c < 0 && (n_c % 2) != 0) w.sign = -w.sign;
  }
  if (n_d > 0) {
    if (s == 0.0) return LogWeight::zero();
    w.log_mag += n_d * std::log(std::abs(s));
    if (s < 0 && (n_d % 2) != 0) w.sign = -w.sign;
  }
  return w;
}

// Raw (unnormalized) log-amplitudes sqrt(C(N,k1) C(N,k2)) C[(k1-k2) tau]
// plus the log of the squared norm.  Everything stays in log space until
// the caller subtracts the running maximum.
struct RawAmplitudes {
  std::vector<LogWeight> w;  // joint index k1*(N+1)+k2
  double max_log = kNegInf;
  double log_norm = kNegInf;  // ln sum |amp|^2
};

RawAmplitudes raw_amplitudes(const SystemConfig& cfg) {
  cfg.validate();
  const int n_dim = cfg.dim();
  RawAmplitudes out;
  out.w.resize(static_cast<size_t>(n_dim) * n_dim);

  // C-function magnitude depends only on delta = k1 - k2.
  std::vector<LogWeight> cfn(2 * cfg.atoms + 1);
  for (int delta = -cfg.atoms; delta <= cfg.atoms; ++delta) {
    cfn[delta + cfg.atoms] = c_function(cfg, delta * cfg.tau);
  }
  std::vector<double> half_lb(n_dim);
  for (int k = 0; k < n_dim; ++k) {
    half_lb[k] = 0.5 * log_binomial(cfg.atoms, k).log_mag;
  }

  for (int k1 = 0; k1 < n_dim; ++k1) {
    for (int k2 = 0; k2 < n_dim; ++k2) {
      LogWeight v = cfn[k1 - k2 + cfg.atoms];
      if (!v.is_zero()) v.log_mag += half_lb[k1] + half_lb[k2];
      out.w[cfg.joint_index(k1, k2)] = v;
      if (!v.is_zero() && v.log_mag > out.max_log) out.max_log = v.log_mag;
    }
  }
  if (out.max_log == kNegInf) return out;  // all amplitudes vanish

  double norm_rel = 0.0;
  for (const LogWeight& v : out.w) {
    if (!v.is_zero()) norm_rel += std::exp(2.0 * (v.log_mag - out.max_log));
  }
  out.log_norm = 2.0 * out.max_log + std::log(norm_rel);
  return out;
}

}  // namespace

CFunctionValue c_function(const SystemConfig& cfg, double chi) {
  LogWeight trig = trig_power_weight(cfg.n_c, cfg.n_d, chi);
  if (trig.is_zero()) return LogWeight::zero();
  if (cfg.alpha == 0.0 && cfg.n_c + cfg.n_d > 0) return LogWeight::zero();
  // alpha^{n_c+n_d} e^{-alpha^2/2} / sqrt(n_c! n_d!)
  double log_mag = -cfg.alpha * cfg.alpha / 2.0 -
                   0.5 * (std::lgamma(cfg.n_c + 1.0) +
                          std::lgamma(cfg.n_d + 1.0));
  if (cfg.n_c + cfg.n_d > 0) {
    log_mag += (cfg.n_c + cfg.n_d) * std::log(cfg.alpha);
  }
  return {log_mag + trig.log_mag, trig.sign};
}

PureAtomicState conditional_state(const SystemConfig& cfg) {
  RawAmplitudes raw = raw_amplitudes(cfg);
  if (raw.max_log == kNegInf) {
    throw ImpossibleOutcome(
        "conditional_state: the requested counts have zero weight");
  }
  PureAtomicState psi;
  psi.atoms = cfg.atoms;
  psi.log_norm = raw.log_norm;
  psi.amplitudes.resize(cfg.joint_dim());
  const double half_log_norm = raw.log_norm / 2.0;
  for (Eigen::Index i = 0; i < cfg.joint_dim(); ++i) {
    const LogWeight& v = raw.w[i];
    psi.amplitudes(i) =
        v.is_zero() ? 0.0 : v.sign * std::exp(v.log_mag - half_log_norm);
  }
  // One more normalization pass kills the residual rounding of the
  // log-domain route.
  psi.amplitudes.normalize();
  return psi;
}

double outcome_probability(const SystemConfig& cfg) {
  RawAmplitudes raw = raw_amplitudes(cfg);
  if (raw.max_log == kNegInf) return 0.0;
  // Raw amplitudes square-sum to N_weight; the Born probability carries the
  // 2^{-N} pre-projection prefactor squared.
  const double log_p = raw.log_norm - cfg.atoms * std::log(4.0);
  return std::exp(log_p);
}

double gaussian_c_approx(int n_c, int n_d, double chi) {
  if (n_c < 0 || n_d < 0 || n_c + n_d == 0) {
    throw InvalidParameter("gaussian_c_approx: need n_c + n_d > 0");
  }
  const double total = n_c + n_d;
  const double center = 0.5 * std::acos((n_c - n_d) / total);
  const double sigma2 = 1.0 / total;
  const double dev = std::abs(chi) - center;
  return std::exp(-dev * dev / (2.0 * sigma2));
}

PureAtomicState short_time_approx_state(int atoms) {
  if (atoms < 1) throw InvalidParameter("short_time_approx_state: atoms >= 1");
  const int n_dim = atoms + 1;
  PureAtomicState psi;
  psi.atoms = atoms;
  psi.amplitudes = Eigen::VectorXcd::Zero(
      static_cast<Eigen::Index>(n_dim) * n_dim);
  for (int k = 0; k < n_dim; ++k) {
    const double dev = k - atoms / 2.0;
    psi.amplitudes(psi.index(k, k)) = std::exp(-2.0 * dev * dev / atoms);
  }
  const double nrm = psi.amplitudes.norm();
  psi.amplitudes /= nrm;
  psi.log_norm = 2.0 * std::log(nrm);  // norm of the raw diagonal table
  return psi;
}

}  // namespace qndsim
