// Copyright 2026 The jcring Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "core/config.hpp"

namespace jcring {

/// Artifacts and headline numbers of one experiment run.
struct RunResult {
  std::vector<std::string> files;            ///< paths written, in emit order
  std::map<std::string, double> scalars;     ///< e.g. "fidelity"
  std::vector<std::string> warnings;
};

/// Execute the configured experiment, writing CSV outputs and a JSON run
/// manifest under out_dir. Deterministic for identical configs (manifest
/// timestamp and wall time aside).
RunResult run_experiment(const ExperimentConfig& config, const std::string& out_dir);

const char* version_string();

}  // namespace jcring
