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

// Command-line front end; all functionality goes through the C API.

#include <CLI11.hpp>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "jcring/jcring.h"

namespace {

int status_to_exit_code(jcring_status s) {
  switch (s) {
    case JCRING_OK: return 0;
    case JCRING_ERR_CONFIG:
    case JCRING_ERR_INVALID_ARGUMENT:
    case JCRING_ERR_IO: return 2;
    case JCRING_ERR_NUMERIC: return 3;
    default: return 1;
  }
}

struct ConfigDeleter {
  void operator()(jcring_config* c) const { jcring_config_destroy(c); }
};
struct ResultDeleter {
  void operator()(jcring_result* r) const { jcring_result_destroy(r); }
};

int run_one(const std::string& experiment, const std::string& config_path,
            const std::string& out_dir, const std::vector<std::string>& sets) {
  jcring_config* raw = nullptr;
  jcring_status s = jcring_config_create(experiment.c_str(), &raw);
  if (s != JCRING_OK) {
    std::fprintf(stderr, "error: %s\n", jcring_last_error());
    return status_to_exit_code(s);
  }
  std::unique_ptr<jcring_config, ConfigDeleter> config(raw);

  if (!config_path.empty()) {
    s = jcring_config_load_file(config.get(), config_path.c_str());
    if (s != JCRING_OK) {
      std::fprintf(stderr, "error: %s\n", jcring_last_error());
      return status_to_exit_code(s);
    }
  }
  for (const auto& kv : sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      std::fprintf(stderr, "error: --set expects key=value, got \"%s\"\n", kv.c_str());
      return 2;
    }
    s = jcring_config_set(config.get(), kv.substr(0, eq).c_str(), kv.substr(eq + 1).c_str());
    if (s != JCRING_OK) {
      std::fprintf(stderr, "error: %s\n", jcring_last_error());
      return status_to_exit_code(s);
    }
  }

  jcring_result* raw_result = nullptr;
  s = jcring_run(config.get(), out_dir.c_str(), &raw_result);
  if (s != JCRING_OK) {
    std::fprintf(stderr, "error: %s\n", jcring_last_error());
    return status_to_exit_code(s);
  }
  std::unique_ptr<jcring_result, ResultDeleter> result(raw_result);

  for (long i = 0; i < jcring_result_warning_count(result.get()); ++i)
    std::fprintf(stderr, "warning: %s\n", jcring_result_warning(result.get(), i));

  double value = 0.0;
  if (experiment == "protocol" &&
      jcring_result_scalar(result.get(), "fidelity", &value) == JCRING_OK) {
    std::printf("fidelity = %.6f\n", value);
  } else if (experiment == "adiabatic" &&
             jcring_result_scalar(result.get(), "overlap", &value) == JCRING_OK) {
    std::printf("overlap = %.6f\n", value);
  }
  for (long i = 0; i < jcring_result_file_count(result.get()); ++i)
    std::printf("wrote %s\n", jcring_result_file_path(result.get(), i));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "jcring: four-site resonator-qubit ring simulator.\n"
      "Eigenspectra, two-pulse entangled-pair generation under damping,\n"
      "fidelity sweeps and fabrication-error compensation."};
  app.require_subcommand(1);

  const std::vector<std::string> experiments = {
      "spectrum", "degeneracy", "protocol", "sweep-u", "sweep-eps", "compensation", "adiabatic"};
  const std::vector<std::string> descriptions = {
      "sector-resolved eigenspectrum with symmetry labels",
      "eigenvalue multiplicities of the uncoupled lattice (J=0)",
      "run the two-pulse generation protocol and report fidelity",
      "fidelity versus interaction strength U/J",
      "fidelity versus drive amplitude eps/J",
      "compensating detuning versus fabrication errors",
      "adiabatic switch of the entangled pair into photons"};

  struct Args {
    std::string config_path;
    std::string out_dir = ".";
    std::vector<std::string> sets;
  };
  std::vector<Args> args(experiments.size());

  for (std::size_t i = 0; i < experiments.size(); ++i) {
    auto* sub = app.add_subcommand(experiments[i], descriptions[i]);
    sub->add_option("--config", args[i].config_path, "JSON configuration file")
        ->check(CLI::ExistingFile);
    sub->add_option("--out", args[i].out_dir, "output directory (created if missing)");
    sub->add_option("--set", args[i].sets, "override a config key, key=value (repeatable)");
  }

  CLI11_PARSE(app, argc, argv);

  for (std::size_t i = 0; i < experiments.size(); ++i)
    if (app.got_subcommand(experiments[i]))
      return run_one(experiments[i], args[i].config_path, args[i].out_dir, args[i].sets);
  return 1;
}
