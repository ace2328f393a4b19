/* Copyright 2026 The jcring Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the jcring simulator: a four-site ring of coupled
 * resonator-qubit cells with a two-pulse entangled-pair pumping protocol.
 *
 * All functions return jcring_status; on failure jcring_last_error() gives
 * a thread-local description. Handles are opaque and must be released with
 * the matching _destroy call. Frequencies cross this boundary in Hz.
 */

#ifndef JCRING_JCRING_H
#define JCRING_JCRING_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum jcring_status {
  JCRING_OK = 0,
  JCRING_ERR_INVALID_ARGUMENT = 1,
  JCRING_ERR_CONFIG = 2,
  JCRING_ERR_NUMERIC = 3,
  JCRING_ERR_IO = 4,
  JCRING_ERR_INTERNAL = 5
} jcring_status;

/* Library version, e.g. "0.1.0". */
const char* jcring_version(void);

/* Message of the most recent failure on this thread ("" when none). */
const char* jcring_last_error(void);

/* ---- closed-form helpers (angular frequencies, rad/s) ---- */

typedef enum jcring_branch { JCRING_BRANCH_LOWER = 0, JCRING_BRANCH_UPPER = 1 } jcring_branch;

/* Polariton ladder energy relative to the cell ground state:
 * E_{n,b}/hbar = n*omega0 + delta/2 +- sqrt(delta^2/4 + n g^2). */
jcring_status jcring_polariton_energy(double omega0, double delta, double g, int n_excitations,
                                      jcring_branch branch, double* out_energy);

/* Effective Kerr strength U = (E_{2-} - 2 E_{1-})/hbar. */
jcring_status jcring_effective_kerr_u(double omega0, double delta, double g, double* out_u);

/* Detuning compensating fabrication errors so that E_{1-}/hbar = omega0 - g. */
jcring_status jcring_compensating_detuning(double g, double delta_g, double delta_omega0,
                                           double* out_delta);

/* Tunneling rate from the capacitive coupling: J = omega0 * C1 / Cr. */
jcring_status jcring_tunneling_from_capacitance(double omega0, double c_coupling,
                                                double c_resonator, double* out_j);

/* Dimension of the truncated product basis. has_qubits is 0/1;
 * global_excitation_cutoff < 0 means unbounded. */
jcring_status jcring_basis_dimension(int n_sites, int photon_cutoff, int has_qubits,
                                     int global_excitation_cutoff, long* out_dimension);

/* ---- configuration and experiment runs ---- */

typedef struct jcring_config jcring_config;
typedef struct jcring_result jcring_result;

/* Create a configuration for one experiment kind: "spectrum", "degeneracy",
 * "protocol", "sweep-u", "sweep-eps", "compensation" or "adiabatic".
 * All parameters start at their defaults. */
jcring_status jcring_config_create(const char* experiment, jcring_config** out_config);

/* Merge a JSON config file into the configuration. Unknown keys and
 * malformed values are rejected. */
jcring_status jcring_config_load_file(jcring_config* config, const char* path);

/* Set one key; the value uses JSON syntax (bare words are strings). */
jcring_status jcring_config_set(jcring_config* config, const char* key, const char* value);

void jcring_config_destroy(jcring_config* config);

/* Run the configured experiment; CSV outputs and a JSON manifest are
 * written under out_dir. */
jcring_status jcring_run(const jcring_config* config, const char* out_dir,
                         jcring_result** out_result);

/* Headline scalar of a run, e.g. "fidelity" (protocol), "overlap"
 * (adiabatic), "n_curves" (sweeps). */
jcring_status jcring_result_scalar(const jcring_result* result, const char* name,
                                   double* out_value);

/* Files written by the run, in emit order. */
long jcring_result_file_count(const jcring_result* result);
const char* jcring_result_file_path(const jcring_result* result, long index);

/* Warnings raised during the run. */
long jcring_result_warning_count(const jcring_result* result);
const char* jcring_result_warning(const jcring_result* result, long index);

void jcring_result_destroy(jcring_result* result);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* JCRING_JCRING_H */
