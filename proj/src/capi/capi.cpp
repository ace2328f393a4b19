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

#include "jcring/jcring.h"

#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "core/config.hpp"
#include "core/run.hpp"

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

template <class Fn>
jcring_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return JCRING_OK;
  } catch (const jcring::ConfigError& e) {
    set_error(e.what());
    return JCRING_ERR_CONFIG;
  } catch (const jcring::NumericError& e) {
    set_error(e.what());
    return JCRING_ERR_NUMERIC;
  } catch (const jcring::InvalidArgumentError& e) {
    set_error(e.what());
    return JCRING_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    set_error(e.what());
    return JCRING_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return JCRING_ERR_INTERNAL;
  }
}

}  // namespace

struct jcring_config {
  jcring::ExperimentKind kind;
  // Layered inputs, re-resolved on every run: file contents then overrides.
  std::string file_text;
  std::vector<std::string> overrides;
};

struct jcring_result {
  jcring::RunResult run;
};

extern "C" {

const char* jcring_version(void) { return jcring::version_string(); }

const char* jcring_last_error(void) { return g_last_error.c_str(); }

jcring_status jcring_polariton_energy(double omega0, double delta, double g, int n_excitations,
                                      jcring_branch branch, double* out_energy) {
  return guarded([&] {
    if (!out_energy) throw jcring::InvalidArgumentError("out_energy is null");
    if (branch != JCRING_BRANCH_LOWER && branch != JCRING_BRANCH_UPPER)
      throw jcring::InvalidArgumentError("invalid branch");
    *out_energy = jcring::polariton_energy(
        omega0, delta, g, n_excitations,
        branch == JCRING_BRANCH_LOWER ? jcring::Branch::Lower : jcring::Branch::Upper);
  });
}

jcring_status jcring_effective_kerr_u(double omega0, double delta, double g, double* out_u) {
  return guarded([&] {
    if (!out_u) throw jcring::InvalidArgumentError("out_u is null");
    if (!(g > 0.0)) throw jcring::InvalidArgumentError("g must be > 0");
    *out_u = jcring::effective_kerr_u(omega0, delta, g);
  });
}

jcring_status jcring_compensating_detuning(double g, double delta_g, double delta_omega0,
                                           double* out_delta) {
  return guarded([&] {
    if (!out_delta) throw jcring::InvalidArgumentError("out_delta is null");
    *out_delta = jcring::compensating_detuning(g, delta_g, delta_omega0);
  });
}

jcring_status jcring_tunneling_from_capacitance(double omega0, double c_coupling,
                                                double c_resonator, double* out_j) {
  return guarded([&] {
    if (!out_j) throw jcring::InvalidArgumentError("out_j is null");
    *out_j = jcring::tunneling_from_capacitance(omega0, c_coupling, c_resonator);
  });
}

jcring_status jcring_basis_dimension(int n_sites, int photon_cutoff, int has_qubits,
                                     int global_excitation_cutoff, long* out_dimension) {
  return guarded([&] {
    if (!out_dimension) throw jcring::InvalidArgumentError("out_dimension is null");
    auto basis =
        jcring::build_basis(n_sites, photon_cutoff, has_qubits != 0, global_excitation_cutoff);
    *out_dimension = basis->dimension();
  });
}

jcring_status jcring_config_create(const char* experiment, jcring_config** out_config) {
  return guarded([&] {
    if (!experiment || !out_config)
      throw jcring::InvalidArgumentError("experiment and out_config must be non-null");
    auto kind = jcring::experiment_kind_from_string(experiment);
    *out_config = new jcring_config{kind, "", {}};
  });
}

jcring_status jcring_config_load_file(jcring_config* config, const char* path) {
  return guarded([&] {
    if (!config || !path) throw jcring::InvalidArgumentError("config and path must be non-null");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw jcring::ConfigError(std::string("cannot open config file: ") + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    // Validate now so errors surface at load time.
    jcring::parse_config_text(config->kind, text, {});
    config->file_text = std::move(text);
  });
}

jcring_status jcring_config_set(jcring_config* config, const char* key, const char* value) {
  return guarded([&] {
    if (!config || !key || !value)
      throw jcring::InvalidArgumentError("config, key and value must be non-null");
    std::vector<std::string> trial = config->overrides;
    trial.push_back(std::string(key) + "=" + value);
    jcring::parse_config_text(config->kind, config->file_text, trial);
    config->overrides = std::move(trial);
  });
}

void jcring_config_destroy(jcring_config* config) { delete config; }

jcring_status jcring_run(const jcring_config* config, const char* out_dir,
                         jcring_result** out_result) {
  return guarded([&] {
    if (!config || !out_dir || !out_result)
      throw jcring::InvalidArgumentError("config, out_dir and out_result must be non-null");
    auto cfg = jcring::parse_config_text(config->kind, config->file_text, config->overrides);
    auto result = std::make_unique<jcring_result>();
    result->run = jcring::run_experiment(cfg, out_dir);
    *out_result = result.release();
  });
}

jcring_status jcring_result_scalar(const jcring_result* result, const char* name,
                                   double* out_value) {
  return guarded([&] {
    if (!result || !name || !out_value)
      throw jcring::InvalidArgumentError("result, name and out_value must be non-null");
    auto it = result->run.scalars.find(name);
    if (it == result->run.scalars.end())
      throw jcring::InvalidArgumentError(std::string("no scalar named \"") + name + "\"");
    *out_value = it->second;
  });
}

long jcring_result_file_count(const jcring_result* result) {
  return result ? static_cast<long>(result->run.files.size()) : 0;
}

const char* jcring_result_file_path(const jcring_result* result, long index) {
  if (!result || index < 0 || index >= static_cast<long>(result->run.files.size())) return nullptr;
  return result->run.files[index].c_str();
}

long jcring_result_warning_count(const jcring_result* result) {
  return result ? static_cast<long>(result->run.warnings.size()) : 0;
}

const char* jcring_result_warning(const jcring_result* result, long index) {
  if (!result || index < 0 || index >= static_cast<long>(result->run.warnings.size()))
    return nullptr;
  return result->run.warnings[index].c_str();
}

void jcring_result_destroy(jcring_result* result) { delete result; }

}  // extern "C"
