/* C interface to the gibbsmix engine: canonical partition functions, mixing
 * entropy and isothermal work for few-particle Bose, Fermi and
 * distinguishable gases in a divided one-dimensional infinite well.
 *
 * Every function returns a gibbs_status. On failure a thread-local message is
 * available from gibbs_last_error() until the next call on the same thread.
 * Handles are opaque and owned by the caller once created. */
#ifndef GIBBS_GIBBS_H
#define GIBBS_GIBBS_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(GIBBS_BUILDING_LIBRARY)
#    define GIBBS_API __declspec(dllexport)
#  else
#    define GIBBS_API __declspec(dllimport)
#  endif
#else
#  define GIBBS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gibbs_status {
  GIBBS_OK = 0,
  GIBBS_ERR_INVALID_ARGUMENT = 1,
  GIBBS_ERR_RANGE = 2,
  GIBBS_ERR_MISMATCH = 3,
  GIBBS_ERR_CUTOFF = 4,
  GIBBS_ERR_FIT = 5,
  GIBBS_ERR_IO = 6,
  GIBBS_ERR_INTERNAL = 7
} gibbs_status;

typedef enum gibbs_statistics {
  GIBBS_BOSE = 0,
  GIBBS_FERMI = 1,
  GIBBS_DISTINGUISHABLE = 2
} gibbs_statistics;

typedef enum gibbs_labels {
  GIBBS_WITH_COLORS = 0,
  GIBBS_WITHOUT_COLORS = 1
} gibbs_labels;

typedef enum gibbs_stage { GIBBS_UNMIXED = 0, GIBBS_MIXED = 1 } gibbs_stage;

typedef enum gibbs_well { GIBBS_FULL_WELL = 0, GIBBS_HALF_WELL = 1 } gibbs_well;

typedef struct gibbs_series {
  double value;
  double error_bound;
  int terms_used;
} gibbs_series;

GIBBS_API const char* gibbs_version(void);
GIBBS_API const char* gibbs_last_error(void);
GIBBS_API const char* gibbs_status_name(gibbs_status status);

/* 12 significant digits, fixed for |x| in [1e-3, 1e6], scientific otherwise.
 * Writes at most len bytes including the terminator. */
GIBBS_API gibbs_status gibbs_format_number(double x, char* buffer, size_t len);

/* q = exp(-beta pi^2 / (2 length^2)). */
GIBBS_API gibbs_status gibbs_boltzmann_base(double beta, double length, double* q);
GIBBS_API gibbs_status gibbs_theta3(double q, double tol, gibbs_series* out);
GIBBS_API gibbs_status gibbs_z1(double tau, double tol, gibbs_series* out);
GIBBS_API gibbs_status gibbs_weighted_series(double tau, int power, double tol,
                                             gibbs_series* out);
/* N-particle partition function of one species in one well at full-well nome q.
 * tol is the relative truncation tolerance of each single-particle series. */
GIBBS_API gibbs_status gibbs_zn_ideal(int n, gibbs_statistics stat, gibbs_well well,
                                      double q, double tol, gibbs_series* out);
GIBBS_API gibbs_status gibbs_scenario_partition(int n, gibbs_labels labels,
                                                gibbs_stage stage, gibbs_statistics stat,
                                                double beta, double length,
                                                double* z, double* log_z);

/* Thermodynamic report for one mixing process. */
typedef struct gibbs_report gibbs_report;

typedef enum gibbs_report_field {
  GIBBS_FIELD_BETA = 0,
  GIBBS_FIELD_LENGTH,
  GIBBS_FIELD_Q,
  GIBBS_FIELD_Z_UNMIXED,
  GIBBS_FIELD_Z_UNMIXED_ERR,
  GIBBS_FIELD_Z_MIXED,
  GIBBS_FIELD_Z_MIXED_ERR,
  GIBBS_FIELD_MEAN_ENERGY_UNMIXED,
  GIBBS_FIELD_MEAN_ENERGY_MIXED,
  GIBBS_FIELD_S_UNMIXED,
  GIBBS_FIELD_S_MIXED,
  GIBBS_FIELD_DELTA_S,
  GIBBS_FIELD_DELTA_S_ERR,
  GIBBS_FIELD_WORK,
  GIBBS_FIELD_WORK_ERR,
  GIBBS_FIELD_COUNT
} gibbs_report_field;

GIBBS_API gibbs_status gibbs_report_create(int n, gibbs_labels labels,
                                           gibbs_statistics stat, double beta,
                                           double length, gibbs_report** out);
GIBBS_API gibbs_status gibbs_report_get(const gibbs_report* report,
                                        gibbs_report_field field, double* out);
/* Lower-case key, e.g. "delta_s"; NULL for an unknown field. */
GIBBS_API const char* gibbs_report_field_name(gibbs_report_field field);
GIBBS_API void gibbs_report_destroy(gibbs_report* report);

typedef enum gibbs_sweep_parameter {
  GIBBS_SWEEP_BETA = 0,
  GIBBS_SWEEP_LENGTH = 1
} gibbs_sweep_parameter;

typedef enum gibbs_spacing {
  GIBBS_SPACING_LINEAR = 0,
  GIBBS_SPACING_GEOMETRIC = 1
} gibbs_spacing;

typedef struct gibbs_sweep_request {
  int n_particles;
  gibbs_labels labels;
  gibbs_sweep_parameter swept;
  double fixed; /* value of the parameter that is not swept */
  double start;
  double stop;
  int count;
  gibbs_spacing spacing;
  int threads; /* 0 = hardware concurrency */
} gibbs_sweep_request;

/* Writes the sweep CSV (header + one row per grid point) to path. */
GIBBS_API gibbs_status gibbs_sweep_write_csv(const gibbs_sweep_request* request,
                                             const char* path);
/* Returns the CSV as a malloc'ed string; release with gibbs_string_free. */
GIBBS_API gibbs_status gibbs_sweep_csv(const gibbs_sweep_request* request, char** out);
GIBBS_API void gibbs_string_free(char* text);

/* Exponent of |W| ~ T^slope at fixed length over a geometric grid of
 * temperatures, fitted on the hottest tail_points points. */
GIBBS_API gibbs_status gibbs_work_exponent(int n, gibbs_labels labels,
                                           gibbs_statistics stat, double length,
                                           double t_min, double t_max, int points,
                                           int tail_points, double* slope,
                                           double* r_squared);

/* Verification suite. */
typedef struct gibbs_verification gibbs_verification;

typedef struct gibbs_check {
  const char* name;   /* valid until the verification handle is destroyed */
  int passed;
  double measured;
  double threshold;
  const char* detail;
} gibbs_check;

/* profile: "default" or "quick" (NULL means default). oracle_n_max > 0 forces
 * the brute-force cutoff. */
GIBBS_API gibbs_status gibbs_verify_run(const char* profile, int oracle_n_max,
                                        gibbs_verification** out);
GIBBS_API size_t gibbs_verification_count(const gibbs_verification* v);
GIBBS_API gibbs_status gibbs_verification_get(const gibbs_verification* v, size_t index,
                                              gibbs_check* out);
GIBBS_API int gibbs_verification_all_passed(const gibbs_verification* v);
GIBBS_API void gibbs_verification_destroy(gibbs_verification* v);

#ifdef __cplusplus
}
#endif

#endif /* GIBBS_GIBBS_H */
