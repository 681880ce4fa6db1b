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

#ifndef QNDSIM_SPECIAL_HPP_
#define QNDSIM_SPECIAL_HPP_

namespace qndsim {

// b^n L_n(-y/b) for b >= 0, evaluated with the Laguerre three-term
// recurrence rewritten in the pre-scaled variable so that neither factor is
// formed on its own:
//
//   F_0 = 1,  F_1 = b + y,
//   F_{m+1} = [(b (2m+1) + y) F_m - m b^2 F_{m-1}] / (m + 1).
//
// The limit b -> 0 is y^n/n!, which the recurrence reproduces exactly.
// Equivalently this is (-b)^n U(-n, 1, -y/b)/n! with U the confluent
// hypergeometric function of the second kind.
double scaled_laguerre(int n, double b, double y);

// Plain Laguerre polynomial L_n(x) by the same recurrence (reference use).
double laguerre(int n, double x);

// Probability mass of a Poisson(lambda) variate exceeding `cutoff`.
double poisson_tail(double lambda, int cutoff);

}  // namespace qndsim

#endif  // QNDSIM_SPECIAL_HPP_
