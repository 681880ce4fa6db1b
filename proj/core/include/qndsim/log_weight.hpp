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

#ifndef QNDSIM_LOG_WEIGHT_HPP_
#define QNDSIM_LOG_WEIGHT_HPP_

#include <cmath>
#include <limits>

namespace qndsim {

// A signed real value stored as sign * exp(log_mag).  Used for amplitude
// weights whose naive evaluation overflows or underflows double precision
// (binomials, alpha^n e^{-|alpha|^2/2}/sqrt(n!) with n ~ 1e4, ...).
struct LogWeight {
  double log_mag = -std::numeric_limits<double>::infinity();
  double sign = 0.0;  // -1, 0 or +1

  static LogWeight zero() { return {}; }

  static LogWeight from_value(double v) {
    if (v == 0.0) return zero();
    return {std::log(std::abs(v)), v > 0 ? 1.0 : -1.0};
  }

  bool is_zero() const { return sign == 0.0; }

  double value() const { return is_zero() ? 0.0 : sign * std::exp(log_mag); }

  LogWeight operator*(const LogWeight& o) const {
    if (is_zero() || o.is_zero()) return zero();
    return {log_mag + o.log_mag, sign * o.sign};
  }
};

// log C(N, k) as a LogWeight (sign +1).  Evaluated in extended precision so
// the magnitude stays accurate to ~1e-13 relative up to N = 1e4.
LogWeight log_binomial(long long n, long long k);

// alpha^n e^{-alpha^2/2} / sqrt(n!) in log form, for real alpha >= 0.
LogWeight log_poisson_amp(double alpha, long long n);

}  // namespace qndsim

#endif  // QNDSIM_LOG_WEIGHT_HPP_
