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

#include "qndsim/text.hpp"

#include <charconv>
#include <cmath>

#include "qndsim/errors.hpp"

namespace qndsim {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::optional<double> parse_double(std::string_view s) {
  double out = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto res = std::from_chars(first, last, out);
  if (res.ec != std::errc() || res.ptr != last) return std::nullopt;
  return out;
}

std::vector<double> TauGrid::points() const {
  validate();
  std::vector<double> out;
  out.reserve(count);
  if (count == 1) {
    out.push_back(start);
    return out;
  }
  for (int i = 0; i < count; ++i) {
    out.push_back(start + (stop - start) * i / (count - 1));
  }
  return out;
}

void TauGrid::validate() const {
  if (count < 1) throw InvalidParameter("tau grid: need count >= 1");
  if (!std::isfinite(start) || !std::isfinite(stop)) {
    throw InvalidParameter("tau grid: non-finite bounds");
  }
  if (count == 1) return;
  if (!(stop > start)) {
    throw InvalidParameter("tau grid: need stop > start (strictly increasing)");
  }
}

TauGrid parse_tau_grid(std::string_view text) {
  const size_t c1 = text.find(':');
  if (c1 == std::string_view::npos) {
    auto v = parse_double(text);
    if (!v) throw InvalidParameter("tau grid: bad number");
    return {*v, *v, 1};
  }
  const size_t c2 = text.find(':', c1 + 1);
  if (c2 == std::string_view::npos) {
    throw InvalidParameter("tau grid: expected start:stop:count");
  }
  auto start = parse_double(text.substr(0, c1));
  auto stop = parse_double(text.substr(c1 + 1, c2 - c1 - 1));
  auto count_val = parse_double(text.substr(c2 + 1));
  if (!start || !stop || !count_val || *count_val != std::floor(*count_val)) {
    throw InvalidParameter("tau grid: expected start:stop:count");
  }
  TauGrid grid{*start, *stop, static_cast<int>(*count_val)};
  grid.validate();
  return grid;
}

}  // namespace qndsim
