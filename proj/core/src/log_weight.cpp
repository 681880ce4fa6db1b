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

#include "qndsim/log_weight.hpp"

#include <cmath>

#include "qndsim/errors.hpp"

namespace qndsim {

namespace {

// lgamma in long double; the three-term cancellation in log-binomials stays
// below 1e-13 relative up to n ~ 1e4 this way, which plain double lgamma
// does not guarantee.
long double lgamma_ld(long double x) { return std::lgamma(x); }

}  // namespace

LogWeight log_binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) {
    throw InvalidParameter("log_binomial: need 0 <= k <= n");
  }
  const long double lg = lgamma_ld(static_cast<long double>(n) + 1) -
                         lgamma_ld(static_cast<long double>(k) + 1) -
                         lgamma_ld(static_cast<long double>(n - k) + 1);
  return {static_cast<double>(lg), 1.0};
}

LogWeight log_poisson_amp(double alpha, long long n) {
  if (n < 0) throw InvalidParameter("log_poisson_amp: need n >= 0");
  if (!(alpha >= 0.0)) {
    throw InvalidParameter("log_poisson_amp: need alpha >= 0");
  }
  if (alpha == 0.0) {
    return n == 0 ? LogWeight{0.0, 1.0} : LogWeight::zero();
  }
  const long double a = alpha;
  const long double lg = static_cast<long double>(n) * std::log(a) -
                         a * a / 2 -
                         lgamma_ld(static_cast<long double>(n) + 1) / 2;
  return {static_cast<double>(lg), 1.0};
}

}  // namespace qndsim
