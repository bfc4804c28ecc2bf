/* starnoma — double-reflector NOMA link evaluator.
 *
 * C interface of the shared library: opaque configuration handles plus
 * status codes. Every function returns sn_status; on failure a snapshot of
 * the problem is available from sn_last_error() (thread-local). Output
 * parameters are written only on SN_OK.
 */
#ifndef STARNOMA_H
#define STARNOMA_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SN_API __declspec(dllexport)
#else
#define SN_API __attribute__((visibility("default")))
#endif

typedef enum sn_status {
    SN_OK = 0,
    SN_ERR_INVALID_ARGUMENT = 1, /* null pointer or out-of-range argument */
    SN_ERR_PARSE = 2,            /* configuration text did not parse */
    SN_ERR_CONSTRAINT = 3,       /* configuration violates a model constraint */
    SN_ERR_IO = 4,               /* file could not be read or written */
    SN_ERR_NUMERIC = 5,          /* a numerical routine failed to converge */
    SN_ERR_INTERNAL = 6
} sn_status;

/* Opaque system configuration. */
typedef struct sn_config sn_config;

/* Library semantic version, e.g. "1.0.0". */
SN_API const char* sn_version(void);

/* Message describing this thread's most recent failure ("" if none). The
 * pointer stays valid until the next failing call on the same thread. */
SN_API const char* sn_last_error(void);

/* --- configuration ------------------------------------------------ */

/* Fresh configuration with the bundled default parameter set. */
SN_API sn_status sn_config_create_default(sn_config** out);

/* Parse a config file / text (flat `key = value` lines, `#` comments);
 * unknown keys are errors. Starts from the default parameter set. */
SN_API sn_status sn_config_load(const char* path, sn_config** out);
SN_API sn_status sn_config_parse(const char* text, sn_config** out);

SN_API void sn_config_destroy(sn_config* cfg);

/* Single-key access using the same dotted key names as the file format.
 * sn_config_get writes the value as text (NUL-terminated) into buf. */
SN_API sn_status sn_config_set(sn_config* cfg, const char* key, const char* value);
SN_API sn_status sn_config_get(const sn_config* cfg, const char* key,
                               char* buf, size_t buflen);

/* SN_OK when all model constraints hold; otherwise SN_ERR_CONSTRAINT and
 * sn_last_error() names every violated constraint. */
SN_API sn_status sn_config_validate(const sn_config* cfg);

/* Element split implied by n_total and the split factor. */
SN_API sn_status sn_config_elements(const sn_config* cfg, int32_t* n_cris,
                                    int32_t* n_star);

/* --- fitted magnitude laws ----------------------------------------- */

/* Gamma fit (shape, scale) of a composite channel magnitude. A channel that
 * is structurally zero under the configuration has no fit: *has_fit is set
 * to 0 and shape/scale to 0. */
SN_API sn_status sn_fit_indoor(const sn_config* cfg, double* shape,
                               double* scale, int* has_fit);
SN_API sn_status sn_fit_outdoor(const sn_config* cfg, double* shape,
                                double* scale, int* has_fit);

/* --- closed-form metrics ------------------------------------------- */

SN_API sn_status sn_op_analytical(const sn_config* cfg, double* op_indoor,
                                  double* op_outdoor);

/* exact_second_moment != 0 uses the exact second moment of the fitted law;
 * 0 uses the large-shape (squared-mean) variant. */
SN_API sn_status sn_ec_analytical(const sn_config* cfg,
                                  int exact_second_moment, double* ec_indoor,
                                  double* ec_outdoor);

/* --- Monte-Carlo estimates ------------------------------------------ */

typedef struct sn_empirical {
    double op_indoor, op_outdoor;
    double op_indoor_se, op_outdoor_se;
    double ec_indoor, ec_outdoor;
    double ec_indoor_se, ec_outdoor_se;
    uint64_t trials;
} sn_empirical;

/* Runs `trials` independent realizations; trial i uses engine seed
 * `seed + i`, so results are independent of any batching. */
SN_API sn_status sn_simulate(const sn_config* cfg, uint64_t trials,
                             uint64_t seed, sn_empirical* out);

/* --- sweeps ---------------------------------------------------------- */

/* Evaluates metrics over `values` of `axis` ("eta", "rho_db" or "n_total";
 * values strictly increasing) and writes the CSV to out_path. want_op /
 * want_ec select the emitted metric column blocks. Grid points whose
 * configuration is invalid are quarantined (NaN metrics), not fatal. */
SN_API sn_status sn_sweep_csv(const sn_config* cfg, const char* axis,
                              const double* values, size_t n_values,
                              uint64_t trials, uint64_t seed, int want_op,
                              int want_ec, const char* out_path);

/* --- self-checks ------------------------------------------------------ */

/* Runs the fit self-checks (moment identities, reduced-form agreement, KS
 * distance, sample-mean agreement, rate-approximation direction) against a
 * fresh batch. The pass/fail table is written into buf (NUL-terminated,
 * truncated if needed); *needed receives the full size including the NUL.
 * *all_pass is 1 when every check passed. buf may be NULL to query size. */
SN_API sn_status sn_validate_report(const sn_config* cfg, uint64_t trials,
                                    uint64_t seed, int* all_pass, char* buf,
                                    size_t buflen, size_t* needed);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* STARNOMA_H */
