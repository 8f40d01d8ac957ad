/* C interface to the capacity-modification library.
 *
 * Documents cross the boundary as JSON text. Strings returned through
 * `char**` out-parameters are owned by the caller and released with
 * capmatch_string_free. On failure the out-parameters are left untouched
 * and capmatch_last_error() describes the problem (per thread). */
#ifndef CAPMATCH_H
#define CAPMATCH_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CAPMATCH_API __declspec(dllexport)
#else
#define CAPMATCH_API __attribute__((visibility("default")))
#endif

typedef enum capmatch_status {
  CAPMATCH_OK = 0,
  CAPMATCH_ERR_INPUT = 1,
  CAPMATCH_INFEASIBLE = 2, /* result document produced; budget not met */
  CAPMATCH_ERR_GUARD = 3,
  CAPMATCH_ERR_INTERNAL = 4
} capmatch_status;

typedef struct capmatch_instance capmatch_instance;

typedef struct capmatch_stats {
  int students;
  int schools;
  int max_preference_length;
  int max_priority_length;
  long long total_capacity;
  int unassigned;            /* students left out by the student-optimal stable matching */
  int max_unassigned_length; /* longest list among them, 0 if none */
} capmatch_stats;

typedef struct capmatch_solve_options {
  const char* problem;         /* minsum-sp, minmax-sp, minsum-se, minmax-se */
  const char* method;          /* exact, formula, ip, lp-round, greedy, uniform, auto */
  int has_budget;              /* 0: the solver's default budget */
  long long budget;
  unsigned long long guard;    /* 0: default */
  int threads;                 /* <= 1: single-threaded */
} capmatch_solve_options;

CAPMATCH_API const char* capmatch_version(void);
CAPMATCH_API const char* capmatch_last_error(void);
CAPMATCH_API void capmatch_string_free(char* text);

CAPMATCH_API capmatch_status capmatch_instance_parse(const char* json, capmatch_instance** out);
CAPMATCH_API void capmatch_instance_free(capmatch_instance* inst);
CAPMATCH_API capmatch_status capmatch_instance_to_json(const capmatch_instance* inst, char** out);
CAPMATCH_API capmatch_status capmatch_instance_stats(const capmatch_instance* inst,
                                                     capmatch_stats* out);

/* Student-optimal stable matching under q + r. `increase_json` may be NULL. */
CAPMATCH_API capmatch_status capmatch_stable(const capmatch_instance* inst,
                                             const char* increase_json, char** out);

/* Certificate report. `what` is stability, perfect, efficient or all;
 * `increase_json` may be NULL. */
CAPMATCH_API capmatch_status capmatch_check(const capmatch_instance* inst,
                                            const char* matching_json,
                                            const char* increase_json, const char* what,
                                            char** out);

/* Result document. Returns CAPMATCH_INFEASIBLE, with the document, when the
 * budget is not met. */
CAPMATCH_API capmatch_status capmatch_solve(const capmatch_instance* inst,
                                            const capmatch_solve_options* options, char** out);

/* Instance document for a named generator. Budgets the construction fixes
 * are written to `budget` / `max_budget` (-1 when none); either may be NULL. */
CAPMATCH_API capmatch_status capmatch_generate(const char* name, const char* params_json,
                                               char** out, long long* budget,
                                               long long* max_budget);

/* Exhaustive oracles: `what` is enumerate-stable or efficiency. For
 * efficiency, `matching_json` may be NULL to test the student-optimal
 * stable matching. `guard` 0 selects the default. */
CAPMATCH_API capmatch_status capmatch_oracle(const capmatch_instance* inst, const char* what,
                                             const char* increase_json,
                                             const char* matching_json,
                                             unsigned long long guard, char** out);

#ifdef __cplusplus
}
#endif

#endif /* CAPMATCH_H */
