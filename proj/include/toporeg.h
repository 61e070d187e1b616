/* toporeg - topological structure inference for smooth regression curves.
 *
 * C API for the shared library. All heap objects are opaque handles that
 * must be released with the matching *_free function. Functions that can
 * fail return tr_status; on failure tr_last_error() holds a message for
 * the calling thread.
 */

#ifndef TOPOREG_H
#define TOPOREG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TOPOREG_API __declspec(dllexport)
#else
#define TOPOREG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as CLI exit codes. */
typedef enum tr_status {
  TR_OK = 0,
  TR_ERR_USAGE = 2,    /* invalid option, scenario, or argument */
  TR_ERR_PARSE = 3,    /* malformed CSV or JSON input */
  TR_ERR_PIPELINE = 4  /* estimation, persistence, or I/O failure */
} tr_status;

typedef struct tr_sample tr_sample;   /* (x, y) observations */
typedef struct tr_config tr_config;   /* analysis configuration */
typedef struct tr_diagram tr_diagram; /* persistence diagram */

TOPOREG_API const char* tr_version(void);

/* Message for the most recent failure on this thread; never NULL. */
TOPOREG_API const char* tr_last_error(void);

/* Strings returned through char** out-parameters are heap-allocated and
 * must be released here. */
TOPOREG_API void tr_string_free(char* s);

/* ---- samples ---------------------------------------------------------- */

TOPOREG_API tr_status tr_sample_from_arrays(const double* x, const double* y,
                                            size_t n, tr_sample** out);
TOPOREG_API tr_status tr_sample_from_csv(const char* path, tr_sample** out);
TOPOREG_API tr_status tr_sample_write_csv(const tr_sample* s, const char* path);
TOPOREG_API size_t tr_sample_size(const tr_sample* s);
TOPOREG_API void tr_sample_free(tr_sample* s);

/* Seeded scenario generators: "exp-monotone", "ratio-nonconvex",
 * "bimodal-mixture". noise_sd <= 0 selects the default noise level. */
TOPOREG_API tr_status tr_simulate(const char* scenario, int n, double noise_sd,
                                  uint64_t seed, tr_sample** out);
TOPOREG_API tr_status tr_scenario_metadata_json(const char* scenario, int n,
                                                double noise_sd, uint64_t seed,
                                                char** out_json);

/* ---- configuration ----------------------------------------------------
 * Defaults: gaussian kernel, bandwidth n^(-1/3), epsilon 0.1, 512 grid
 * points, alpha 0.05, modality delta 0.1, seed 0. */

TOPOREG_API tr_status tr_config_new(tr_config** out);
TOPOREG_API void tr_config_free(tr_config* c);
TOPOREG_API tr_status tr_config_set_kernel(tr_config* c, const char* family);
TOPOREG_API tr_status tr_config_set_bandwidth(tr_config* c, double h);
TOPOREG_API tr_status tr_config_set_bandwidth_exponent(tr_config* c, int e);
TOPOREG_API tr_status tr_config_set_epsilon(tr_config* c, double epsilon);
TOPOREG_API tr_status tr_config_set_grid_points(tr_config* c, int count);
TOPOREG_API tr_status tr_config_set_alpha(tr_config* c, double alpha);
TOPOREG_API tr_status tr_config_set_modality_delta(tr_config* c, double delta);
TOPOREG_API tr_status tr_config_set_seed(tr_config* c, uint64_t seed);

/* ---- diagrams ---------------------------------------------------------
 * JSON form: array of {"death": d, "birth": b, "degree": k} with d <= b,
 * sorted by descending persistence. */

TOPOREG_API tr_status tr_diagram_from_json(const char* json, tr_diagram** out);
TOPOREG_API tr_status tr_diagram_from_json_file(const char* path,
                                                tr_diagram** out);
TOPOREG_API tr_status tr_diagram_to_json(const tr_diagram* d, char** out_json);
TOPOREG_API size_t tr_diagram_size(const tr_diagram* d);
TOPOREG_API tr_status tr_diagram_feature(const tr_diagram* d, size_t index,
                                         double* death, double* birth,
                                         int* degree);
TOPOREG_API void tr_diagram_free(tr_diagram* d);

/* ---- analysis ---------------------------------------------------------- */

/* Super-level-set diagram of the estimated derivative via the discrete
 * robust filtration. */
TOPOREG_API tr_status tr_estimate_diagram(const tr_sample* s,
                                          const tr_config* c,
                                          tr_diagram** out);

/* Full pipeline: estimate, filtration, diagram, per-feature significance,
 * structure verdict. structure is "monotonicity", "convexity", or
 * "modality"; modality needs either critical_point or auto_detect != 0.
 * The report is deterministic JSON. */
TOPOREG_API tr_status tr_analyze(const tr_sample* s, const tr_config* c,
                                 const char* structure,
                                 const double* critical_point, int auto_detect,
                                 char** out_report_json);

TOPOREG_API tr_status tr_bottleneck_distance(const tr_diagram* a,
                                             const tr_diagram* b, double* out);

/* Monte Carlo consistency experiment against the analytic truth of a
 * built-in scenario. Honors TOPO_REGRESS_THREADS. */
TOPOREG_API tr_status tr_consistency(const char* scenario, int n, int reps,
                                     double noise_sd, const tr_config* c,
                                     char** out_json);

/* Deterministic barcode rendering. */
TOPOREG_API tr_status tr_barcode_svg(const tr_diagram* d, char** out_svg);

#ifdef __cplusplus
}
#endif

#endif /* TOPOREG_H */
