#ifndef SWDG_H
#define SWDG_H

/* C interface to libswdg: a 1-D semi-linear stochastic wave equation solver.
 *
 * Space discretization: symmetric interior-penalty discontinuous Galerkin.
 * Time stepping: stochastic position Verlet (SVM), stochastic trigonometric
 * (STM), and semi-implicit Euler-Maruyama (SEM). Additive Q-Wiener noise with
 * Q = Lambda^{-s}, sampled by truncated Karhunen-Loeve expansion.
 *
 * All handles are opaque; every function returns a status code. On failure,
 * swdg_last_error() gives a thread-local description.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. The first four match the CLI exit codes. */
typedef enum swdg_status {
  SWDG_OK = 0,
  SWDG_CHECK_FAILED = 1,
  SWDG_CONFIG_ERROR = 2,
  SWDG_CFL_ERROR = 3,
  SWDG_INVALID_ARGUMENT = 4,
  SWDG_RUNTIME_ERROR = 5
} swdg_status;

const char* swdg_last_error(void);

typedef struct swdg_space swdg_space;   /* dG space + stiffness + eigendecomposition */
typedef struct swdg_noise swdg_noise;   /* noise model projected onto a space */
typedef struct swdg_state swdg_state;   /* [displacement, velocity] pair */
typedef struct swdg_config swdg_config; /* experiment configuration */

/* ---- space / discrete operator ---------------------------------------- */

/* Uniform mesh of n_elements on (0,1), polynomial degree >= 1.
 * sigma0 <= 0 selects the default penalty 10*degree^2. Construction fails
 * with SWDG_CHECK_FAILED if the penalty is too small for coercivity. */
swdg_status swdg_space_create(int n_elements, int degree, double sigma0,
                              swdg_space** out);
void swdg_space_free(swdg_space* space);

int swdg_space_ndofs(const swdg_space* space);
double swdg_space_h(const swdg_space* space);
double swdg_space_lambda_max(const swdg_space* space);
double swdg_space_lambda_min(const swdg_space* space);
/* Largest Verlet-stable step scaled by safety in (0,1): safety * 2 / sqrt(lambda_max). */
double swdg_space_max_stable_tau(const swdg_space* space, double safety);

/* ---- noise ------------------------------------------------------------- */

/* Q = Lambda^{-s} with eigenpairs lambda_j = (j pi)^2, psi_j = sqrt(2) sin(j pi x).
 * truncation <= 0 selects the default 4 * ndofs. */
swdg_status swdg_noise_create(const swdg_space* space, double s, int truncation,
                              uint64_t master_seed, swdg_noise** out);
void swdg_noise_free(swdg_noise* noise);

/* Tr(P_h Q P_h) over the truncated expansion. */
double swdg_noise_trace(const swdg_noise* noise);

/* Modal coefficients (length ndofs) of P_h dW over one step of size tau.
 * Deterministic in (master_seed, realization, step). */
swdg_status swdg_noise_sample(const swdg_noise* noise, double tau,
                              uint64_t realization, uint64_t step,
                              double* coeffs);

/* ---- states and stepping ------------------------------------------------ */

typedef enum swdg_scheme {
  SWDG_SVM = 0,
  SWDG_STM = 1,
  SWDG_SEM = 2
} swdg_scheme;

typedef enum swdg_forcing {
  SWDG_F_ZERO = 0,        /* f = 0,       V = 0 */
  SWDG_F_DAMPING = 1,     /* f(u) = -u,   V = u^2/2 */
  SWDG_F_SINE_GORDON = 2  /* f(u) = -sin u, V = 1 - cos u */
} swdg_forcing;

swdg_status swdg_state_create(const swdg_space* space, swdg_state** out);
void swdg_state_free(swdg_state* state);

/* Modal (per-element Legendre) coefficients, each of length ndofs. */
swdg_status swdg_state_set(swdg_state* state, const double* u1, const double* u2);
swdg_status swdg_state_get(const swdg_state* state, double* u1, double* u2);
/* u0 = 0, v0 = P_h sin(pi x): the standard experiment data. */
swdg_status swdg_state_init_sine(swdg_state* state);

/* Advance one step. noise may be NULL for a deterministic step. SVM refuses
 * to step outside the CFL bound unless allow_unstable is nonzero. */
swdg_status swdg_step(swdg_state* state, swdg_scheme scheme, double tau,
                      swdg_forcing forcing, const swdg_noise* noise,
                      uint64_t realization, uint64_t step, int allow_unstable);

/* Discrete energy, modified energy (tau-dependent, requires CFL), and the
 * broken-norm Hamiltonian with the potential matching `forcing`. Any output
 * pointer may be NULL. */
swdg_status swdg_energies(const swdg_state* state, double tau,
                          swdg_forcing forcing, double* discrete,
                          double* modified, double* hamiltonian);

/* ---- configuration and experiment drivers ------------------------------ */

/* Flat key = value text file; '#' starts a comment. See README for keys. */
swdg_status swdg_config_load(const char* path, swdg_config** out);
swdg_status swdg_config_create(swdg_config** out);
swdg_status swdg_config_set(swdg_config* config, const char* key,
                            const char* value);
void swdg_config_free(swdg_config* config);

/* Each driver writes CSV table(s) plus a JSON metadata sidecar under the
 * configured output directory. */
swdg_status swdg_run_simulate(const swdg_config* config);
swdg_status swdg_run_converge(const swdg_config* config, const char* axis);
swdg_status swdg_run_energy(const swdg_config* config);

/* Fast invariant diagnostics; writes one line per item into `report`.
 * Returns SWDG_CHECK_FAILED if any item failed. */
swdg_status swdg_run_check(const swdg_config* config, char* report,
                           size_t report_size);

#ifdef __cplusplus
}
#endif

#endif /* SWDG_H */
