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

#include "qndsim/system.hpp"

#include <cmath>

#include "qndsim/errors.hpp"

namespace qndsim {

void SystemConfig::validate() const {
  if (atoms < 1) throw InvalidParameter("SystemConfig: need atoms >= 1");
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw InvalidParameter("SystemConfig: need finite alpha >= 0");
  }
  if (n_c < 0 || n_d < 0) {
    throw InvalidParameter("SystemConfig: photon counts must be >= 0");
  }
  if (!std::isfinite(tau) || tau < 0.0) {
    throw InvalidParameter("SystemConfig: need finite tau >= 0");
  }
}

void ChannelSpec::validate() const {
  auto check_rate = [](double r, const char* what) {
    if (!std::isfinite(r) || r < 0.0) {
      throw InvalidParameter(std::string("ChannelSpec: bad rate ") + what);
    }
  };
  switch (kind) {
    case Kind::none:
      break;
    case Kind::phase_diffusion:
      check_rate(kappa_tilde, "kappa");
      break;
    case Kind::loss_gain:
      check_rate(gamma_tilde, "gamma");
      check_rate(g_tilde, "gain");
      break;
    case Kind::dephasing:
      check_rate(Gamma_tilde, "Gamma");
      break;
  }
}

std::string ChannelSpec::kind_label() const {
  switch (kind) {
    case Kind::none:
      return "none";
    case Kind::phase_diffusion:
      return "phase";
    case Kind::loss_gain:
      return "lossgain";
    case Kind::dephasing:
      return "dephase";
  }
  return "unknown";
}

}  // namespace qndsim
