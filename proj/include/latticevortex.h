/* C interface to the lattice vortex solver.
 *
 * All entry points that can fail return an lvx_status and write a
 * human-readable message into the caller-supplied error buffer (truncated
 * to errbuf_len, always NUL-terminated when errbuf_len > 0). Objects
 * returned through out-parameters are owned by the caller and released
 * with the matching *_free function. Passing NULL to a *_free is a no-op.
 * Accessor results (const char*) stay valid until the owning object is
 * freed. Handles are not thread-safe; confine each to one thread.
 */
#ifndef LATTICEVORTEX_H
#define LATTICEVORTEX_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lvx_status {
  LVX_OK = 0,
  LVX_ERR_INVALID_INPUT = 1,  /* malformed config, bad argument */
  LVX_ERR_OUT_OF_DOMAIN = 2,  /* vertex not in the domain asked about */
  LVX_ERR_SOLVER_FAILURE = 3, /* inner linear solve missed its contract */
  LVX_ERR_NON_CONVERGENCE = 4,/* outer iteration ran out of steps */
  LVX_ERR_CONSISTENCY = 5,    /* an invariant the scheme guarantees failed */
  LVX_ERR_DIAGNOSTIC = 6,     /* a diagnostic had too little data */
  LVX_ERR_IO = 7,             /* file read/write failed */
  LVX_ERR_UNKNOWN = 99
} lvx_status;

typedef enum lvx_model {
  LVX_MODEL_CHERN_SIMONS = 0,
  LVX_MODEL_ABELIAN_HIGGS = 1
} lvx_model;

typedef struct lvx_config lvx_config;
typedef struct lvx_run_result lvx_run_result;
typedef struct lvx_verify_result lvx_verify_result;
typedef struct lvx_solution lvx_solution;

const char* lvx_version(void);
const char* lvx_status_name(lvx_status status);

/* Configuration: parse from a JSON string or load from a file. */
lvx_status lvx_config_parse(const char* json_text, lvx_config** out,
                            char* errbuf, size_t errbuf_len);
lvx_status lvx_config_load(const char* path, lvx_config** out,
                           char* errbuf, size_t errbuf_len);
lvx_status lvx_config_set_output_dir(lvx_config* cfg, const char* dir);
void lvx_config_free(lvx_config* cfg);

/* Full pipeline run; writes artifacts into the configured output
 * directory. A run whose pipeline fails still returns LVX_OK here (with a
 * nonzero exit code and an error.json on disk); only setup problems map
 * to an error status. */
lvx_status lvx_run(const lvx_config* cfg, lvx_run_result** out,
                   char* errbuf, size_t errbuf_len);
int lvx_run_exit_code(const lvx_run_result* r);
const char* lvx_run_summary(const lvx_run_result* r);
const char* lvx_run_report_path(const lvx_run_result* r); /* "" on failure */
void lvx_run_result_free(lvx_run_result* r);

/* Property battery (identities, probes, oracle comparisons). Writes no
 * artifacts. */
lvx_status lvx_verify(const lvx_config* cfg, lvx_verify_result** out,
                      char* errbuf, size_t errbuf_len);
int lvx_verify_checks(const lvx_verify_result* r);
int lvx_verify_failures(const lvx_verify_result* r);
const char* lvx_verify_table(const lvx_verify_result* r);
void lvx_verify_result_free(lvx_verify_result* r);

/* One solve on the box of the given half width centred at the origin.
 * `points` is n_vortices rows of `dim` coordinates; `multiplicities` may
 * be NULL (all ones). */
lvx_status lvx_solve_box(lvx_model model, int dim, double lambda,
                         const int64_t* points, const int* multiplicities,
                         size_t n_vortices, int64_t half_width,
                         lvx_solution** out, char* errbuf, size_t errbuf_len);
int lvx_solution_dim(const lvx_solution* s);
size_t lvx_solution_interior_count(const lvx_solution* s);
int lvx_solution_iterations(const lvx_solution* s);
double lvx_solution_residual_sup(const lvx_solution* s);
double lvx_solution_flux_gap(const lvx_solution* s);
/* Value of the solution at a closure vertex (boundary vertices give 0). */
lvx_status lvx_solution_value_at(const lvx_solution* s, const int64_t* coords,
                                 int dim, double* out);
void lvx_solution_free(lvx_solution* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LATTICEVORTEX_H */
