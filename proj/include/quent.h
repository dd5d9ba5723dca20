/*
 * quent — reasoning engine and proof toolkit for graded implications over
 * quasimetric spaces.
 *
 * C API of the shared library. All objects are opaque handles created by
 * *_parse / quent_prove / quent_countermodel and released by the matching
 * *_free. Functions return QUENT_OK on success; on failure they return a
 * status code and leave a message in quent_last_error(). Strings returned
 * through char** out-parameters are heap-allocated; release them with
 * quent_str_free.
 */

#ifndef QUENT_H
#define QUENT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define QUENT_OK 0
#define QUENT_ERR_PARSE 2
#define QUENT_ERR_BUDGET 3
#define QUENT_ERR_INVALID 4
#define QUENT_ERR_INTERNAL 5

typedef struct quent_theory quent_theory;
typedef struct quent_basic_theory quent_basic_theory;
typedef struct quent_forest quent_forest;
typedef struct quent_proof quent_proof;
typedef struct quent_model quent_model;

const char* quent_version(void);

/* Message of the most recent failure on this thread. */
const char* quent_last_error(void);

void quent_str_free(char* s);

/* ---- theories --------------------------------------------------------- */

/* One "FORMULA -> [DEGREE] FORMULA" per line; '#' comments. */
int quent_theory_parse(const char* text, quent_theory** out);
void quent_theory_free(quent_theory* t);
int quent_theory_size(const quent_theory* t, size_t* out);

/* Conversion to the basic normal form (one antecedent clause per
 * implication). The basic theory remembers which source implication each
 * basic implication came from. */
int quent_basify(const quent_theory* t, quent_basic_theory** out);
void quent_basic_theory_free(quent_basic_theory* bt);
/* Text: one implication per line with "# from <k>" provenance comments.
 * JSON: array of {antecedent, consequent, degree, source}. */
int quent_basic_theory_render(const quent_basic_theory* bt, int as_json, char** out);

/* ---- classical decisions ---------------------------------------------- */

int quent_tautology(const char* formula, int* out);

/* ---- proving ----------------------------------------------------------- */

/* goal accepts "[?]" as the degree to query the minimal one.
 * On success: *provable, and when provable *minimal_degree (string) and
 * *witness (forest handle; pass NULL to skip). With a concrete goal degree,
 * *provable means provable at that degree; *minimal_degree still reports
 * the minimum when one exists. state_budget caps the clause lattice
 * (0 = default). */
int quent_prove(const quent_theory* t, const char* goal, size_t state_budget, int* provable,
                char** minimal_degree, quent_forest** witness);

/* ---- forests ----------------------------------------------------------- */

int quent_forest_parse(const char* text, quent_forest** out);
void quent_forest_free(quent_forest* f);
int quent_forest_render(const quent_forest* f, char** out);
/* goal header recorded in the file, if any */
int quent_forest_goal(const quent_forest* f, char** out);
int quent_forest_length(const quent_forest* f, char** out);

/* goal may be NULL when the forest file carries a goal header.
 * any_clause_set honours bzeta:/beta: headers instead of the canonical
 * standard clause sets. */
int quent_forest_verify(const quent_forest* f, const quent_basic_theory* bt, const char* goal,
                        int any_clause_set, int as_json, int* ok, char** report);

/* passes: comma-separated pass tags (prune-improper, cap-inconsistent,
 * fresh-splits, standard-ends, drop-unused, purge-polarity:VAR:+|-);
 * NULL or "" selects the default pipeline. */
int quent_forest_normalize(const quent_forest* f, const quent_basic_theory* bt, const char* goal,
                           const char* passes, quent_forest** out);

int quent_forest_to_proof(const quent_forest* f, const quent_basic_theory* bt, const char* goal,
                          quent_proof** out);

/* ---- rule proofs ------------------------------------------------------- */

int quent_proof_parse(const char* text, quent_proof** out);
void quent_proof_free(quent_proof* p);
int quent_proof_render(const quent_proof* p, char** out);
/* variant 0 = standard calculus, 1 = smallest-weight (no R3, R5 takes the
 * maximum of the premise degrees) */
int quent_proof_check(const quent_proof* p, const quent_theory* t, int variant, int as_json,
                      int* ok, char** report);
int quent_proof_to_forest(const quent_proof* p, const quent_basic_theory* bt, quent_forest** out);

/* ---- models ------------------------------------------------------------ */

/* Space files: "worlds w1 w2 ...", "q v w <degree|inf>" entries,
 * "var name : w1 ..." valuation lines. */
int quent_model_parse(const char* text, quent_model** out);
void quent_model_free(quent_model* m);
int quent_model_render(const quent_model* m, char** out);
int quent_model_validate(const quent_model* m, int as_json, int* ok, char** report);
/* *satisfied and the exact Hausdorff quasidistance between the evaluated
 * sides ("inf" possible). */
int quent_model_eval(const quent_model* m, const char* implication, int* satisfied,
                     char** hausdorff);

/* Bounded countermodel search; QUENT_OK with *out == NULL means the space
 * was exhausted without finding one (not a proof of entailment).
 * budget of 0 selects the default. */
int quent_countermodel(const quent_theory* t, const char* goal, size_t max_worlds, size_t budget,
                       quent_model** out);

#ifdef __cplusplus
}
#endif

#endif /* QUENT_H */
