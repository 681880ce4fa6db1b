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

#include "qndsim/special.hpp"

#include <cmath>

#include "qndsim/errors.hpp"

namespace qndsim {

double scaled_laguerre(int n, double b, double y) {
  if (n < 0) throw InvalidParameter("scaled_laguerre: need n >= 0");
  if (!(b >= 0.0)) throw InvalidParameter("scaled_laguerre: need b >= 0");
  if (n == 0) return 1.0;
  double prev = 1.0;      // F_0
  double cur = b + y;     // F_1
  for (int m = 1; m < n; ++m) {
    const double next = ((b * (2 * m + 1) + y) * cur - m * b * b * prev) /
                        (m + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre(int n, double x) { return scaled_laguerre(n, 1.0, -x); }

double poisson_tail(double lambda, int cutoff) {
  if (lambda < 0) throw InvalidParameter("poisson_tail: need lambda >= 0");
  if (lambda == 0.0) return 0.0;
  // Start at the first excluded term and follow the ratio down; stop once
  // terms cannot move the sum.
  const int k0 = cutoff + 1;
  double log_term = k0 * std::log(lambda) - lambda - std::lgamma(k0 + 1.0);
  double term = std::exp(log_term);
  double sum = 0.0;
  for (int k = k0; k < k0 + 100000; ++k) {
    sum += term;
    term *= lambda / (k + 1);
    if (term < sum * 1e-18 + 1e-320) break;
  }
  return sum;
}

}  // namespace qndsim
