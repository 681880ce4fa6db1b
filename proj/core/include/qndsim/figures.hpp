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

#ifndef QNDSIM_FIGURES_HPP_
#define QNDSIM_FIGURES_HPP_

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace qndsim {

// Named dataset presets with bound parameters.  Each preset emits one or
// more plot-ready CSV files plus a JSON manifest recording the preset id,
// every resolved parameter and the code version; re-running from the
// manifest reproduces the data files byte for byte.
//
//   fig2a  entanglement vs time, phase diffusion        (N=10, nc=20,  a=sqrt20)
//   fig2b  entanglement vs time, loss/gain              (N=10, nc=100, a=10)
//   fig3   joint number distributions in 3 bases        (N=10, nc=100, tau=0.1)
//   fig4a  CHSH vs time, phase diffusion                (N=5,  theta=0.37)
//   fig4b  optimized CHSH vs 1/N, phase diffusion
//   fig4c  CHSH vs time, loss/gain                      (N=5,  theta=0.37)
//   fig4d  optimized CHSH vs 1/N, loss/gain
//   fig5   squeezing/correlation criteria, phase diffusion   (N=10)
//   fig6   spin variances and criteria, loss/gain            (N=10)
//   fig7a  squeezing parameter vs time, dephasing            (N=20)
//   fig7b  optimal squeezing time vs 1/N (with linear fit)
//   fig7c  optimal squeezing vs 1/N, dephasing
//   fig8a  CHSH vs time, dephasing                      (N=11, theta=0.251)
//   fig8b  optimized CHSH vs 1/N, dephasing
struct FigurePreset {
  std::string id;
  std::string description;
};

const std::vector<FigurePreset>& figure_presets();
bool is_known_figure(const std::string& id);

struct FigureOutput {
  std::vector<std::filesystem::path> data_files;
  std::filesystem::path manifest;
};

// Runs a preset with its default parameters.  Throws InvalidParameter for an
// unknown id.
FigureOutput run_figure(const std::string& id,
                        const std::filesystem::path& out_dir, int threads = 0);

// Re-runs from a previously written manifest, reusing the recorded
// parameters verbatim.
FigureOutput run_figure_from_manifest(const std::filesystem::path& manifest,
                                      const std::filesystem::path& out_dir,
                                      int threads = 0);

}  // namespace qndsim

#endif  // QNDSIM_FIGURES_HPP_
