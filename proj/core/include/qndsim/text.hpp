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

#ifndef QNDSIM_TEXT_HPP_
#define QNDSIM_TEXT_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qndsim {

// Shortest decimal text that round-trips the exact double ('.' decimal
// separator, no locale).  Used everywhere a float reaches a file so that
// identical requests produce identical bytes.
std::string format_double(double v);

std::optional<double> parse_double(std::string_view s);

// "start:stop:count" -> inclusive, evenly spaced, strictly increasing grid.
// A bare number parses as a single-point grid.
struct TauGrid {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  std::vector<double> points() const;
  void validate() const;  // InvalidParameter on bad shape
};
TauGrid parse_tau_grid(std::string_view text);

}  // namespace qndsim

#endif  // QNDSIM_TEXT_HPP_
