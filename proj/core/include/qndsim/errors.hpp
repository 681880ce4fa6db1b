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

#ifndef QNDSIM_ERRORS_HPP_
#define QNDSIM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace qndsim {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside its documented domain (negative counts, angles out of
// range, mismatched dimensions, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// The requested photon-count post-selection has exactly zero Born weight,
// so no conditional state exists (e.g. tau = 0 with n_d > 0).
class ImpossibleOutcome : public Error {
 public:
  using Error::Error;
};

// A truncated Fock-space computation did not converge at the supplied
// cutoffs; enlarging them is required.
class TailMassError : public Error {
 public:
  using Error::Error;
};

// The mean collective spin vanishes, so "perpendicular to the mean spin"
// is not a defined direction (squeezing/steering quantities).
class UndefinedDirection : public Error {
 public:
  using Error::Error;
};

// A matrix handed to a metric is not a valid state (e.g. non-Hermitian
// beyond tolerance).
class InvalidState : public Error {
 public:
  using Error::Error;
};

}  // namespace qndsim

#endif  // QNDSIM_ERRORS_HPP_
