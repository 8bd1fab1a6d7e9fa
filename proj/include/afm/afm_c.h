/* C API of the AFM duality library.
 *
 * All functions return afm_status (AFM_OK on success). Objects are opaque
 * handles released with the matching _free function. On failure the
 * thread-local message from afm_last_error() describes the problem. Strings
 * returned through char** are heap-allocated; release them with
 * afm_string_free.
 */
#ifndef AFM_C_H
#define AFM_C_H

#include <stdint.h>

#if defined(_WIN32)
#define AFM_API __declspec(dllexport)
#else
#define AFM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum afm_status {
  AFM_OK = 0,
  AFM_ERR_INVALID = 2,
  AFM_ERR_PARSE = 3,
  AFM_ERR_DOMAIN = 4,
  AFM_ERR_NO_BRACKET = 5,
  AFM_ERR_NO_CONVERGENCE = 6,
  AFM_ERR_NON_MONOTONE = 7,
  AFM_ERR_UNSUPPORTED = 8,
  AFM_ERR_INTERNAL = 9
} afm_status;

typedef struct afm_potential afm_potential;
typedef struct afm_system afm_system;

AFM_API const char* afm_version(void);
AFM_API const char* afm_last_error(void);
AFM_API void afm_string_free(char* s);

/* ---- potentials ---- */
AFM_API afm_status afm_potential_parse(const char* text, afm_potential** out);
AFM_API afm_status afm_potential_format(const afm_potential* p, char** out);
AFM_API afm_status afm_potential_eval(const afm_potential* p, double r, double* out);
AFM_API afm_status afm_potential_deriv(const afm_potential* p, double r, double* out);
AFM_API afm_status afm_potential_sqrt_transform(const afm_potential* p, double alpha,
                                                afm_potential** out);
AFM_API void afm_potential_free(afm_potential* p);

/* ---- systems and the AFM solver ---- */
/* kinematics: "nr" | "ur" | "sr" | "sigma". U and/or V may be NULL. */
AFM_API afm_status afm_system_create(const char* kinematics, int n_particles, double sigma, double m,
                                     const afm_potential* one_body, const afm_potential* two_body,
                                     afm_system** out);
AFM_API void afm_system_free(afm_system* s);

typedef struct afm_solution {
  double x0;
  double r0_onebody;  /* 0 when absent */
  double r0_twobody;  /* 0 when absent */
  double value;       /* mass, or binding energy for "nr" */
  int iterations;
  double residual;
} afm_solution;

AFM_API afm_status afm_solve(const afm_system* s, double q, afm_solution* out);

AFM_API afm_status afm_universal_F(const afm_potential* p, double x, double* out);
AFM_API afm_status afm_universal_G(const afm_potential* p, double x, double* out);
AFM_API afm_status afm_compact_ur(const afm_system* s, double q, double a, double* out);
AFM_API afm_status afm_compact_nr(const afm_system* s, double q, double a, double* out);
AFM_API afm_status afm_closed_powerlaw(const afm_system* s, double q, double* out);

/* ---- principal quantum numbers ---- */
/* prescription: "ho|improved2b|wkb3b|ur2b|ur3b|custom:alpha=..,beta=..,gamma=.." */
AFM_API afm_status afm_q_eval(const char* prescription, int n_particles, const int* nl_pairs,
                              int n_pairs, double* out);

/* ---- duality catalog ---- */
/* free_params: JSON object, e.g. "{\"p\":2,\"c\":0.5}" (may be NULL).
 * Result: JSON report {relation, lhs, rhs, multiplier, m_target, q_target,
 * sigma_target, abs_residual, rel_residual, passed, error}. */
AFM_API afm_status afm_duality_verify(const char* relation, const afm_system* lhs, double q,
                                      double tol, const char* free_params_json, char** report_json);
AFM_API afm_status afm_duality_sweep(uint64_t seed, int count, double tol, int jobs,
                                     char** report_json);
AFM_API afm_status afm_bridge_verify(const afm_potential* p, const char* body /* "one"|"two" */,
                                     int n_particles, double m, double q, double tol,
                                     char** report_json);

/* ---- exact solvers ---- */
AFM_API afm_status afm_exact2b(double m, const afm_potential* v, int n, int l, int points,
                               double* out);
/* JSON: {L, parity, b, dimension, states:[{labels:[..], bracketed, band,
 * energy, amplitude, multiplicity}]} */
AFM_API afm_status afm_exact3b(double m, const afm_potential* v, int L, int parity, int bmax,
                               double b, int max_states, char** report_json);
AFM_API afm_status afm_salpeter2b(double sigma, double m, const afm_potential* v, int n, int l,
                                  int basis_size, double* out);
AFM_API afm_status afm_universal_f(const afm_potential* v, double m, double* out);

/* ---- duality-based predictors ---- */
/* mode: "two_body_f" | "n_body_gs" | "n_body_via_f" | "gs_link" */
AFM_API afm_status afm_predict(const char* mode, double m, const int* nl_pairs, int n_pairs,
                               const char* prescription, int n_particles, const afm_potential* v,
                               double* out);

/* ---- table reproduction ---- */
/* name: "table1" | "table2"; format: "json" | "csv"; prescription applies to
 * table1 ("ho", "improved2b" or "" for both columns). Returns AFM_OK with
 * check_failed = 0/1 describing the embedded reference comparison. */
AFM_API afm_status afm_table(const char* name, const char* prescription, const char* format,
                             char** out, int* check_failed);

#ifdef __cplusplus
}
#endif

#endif /* AFM_C_H */
