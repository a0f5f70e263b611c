/* mucheck — generic model checker for the coalgebraic mu-calculus.
 *
 * C API over the core library. All functions returning mc_status report
 * failures through the return code; mc_last_error() gives a thread-local
 * message for the most recent failure on the calling thread. Strings
 * returned as char* are owned by the caller and released with
 * mc_string_free(). Handles are opaque and freed with their *_free
 * function; distinct handles may be used concurrently from different
 * threads.
 */
#ifndef MUCHECK_H
#define MUCHECK_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mc_model mc_model;
typedef struct mc_formula mc_formula;
typedef struct mc_game mc_game;

typedef enum {
  MC_OK = 0,
  MC_ERR_PARSE = 1,
  MC_ERR_INVALID = 2,
  MC_ERR_MISMATCH = 3,
  MC_ERR_TIMEOUT = 4,
  MC_ERR_INTERNAL = 5
} mc_status;

typedef enum {
  MC_ENGINE_LOCAL = 0, /* eager: solves over the full product */
  MC_ENGINE_LAZY = 1,  /* on-the-fly with early termination */
  MC_ENGINE_GAME = 2   /* reduction to a parity game, solved natively */
} mc_engine;

const char* mc_last_error(void);
void mc_string_free(char* s);

/* ---- models ---- */

mc_status mc_model_parse(const char* text, mc_model** out);
char* mc_model_serialize(const mc_model* m);
void mc_model_free(mc_model* m);
int64_t mc_model_state_count(const mc_model* m);
char* mc_model_state_name(const mc_model* m, int64_t index);
char* mc_model_functor(const mc_model* m);

/* ---- formulas ---- */

mc_status mc_formula_parse(const char* text, mc_formula** out);
char* mc_formula_print(const mc_formula* f);
mc_status mc_formula_negate(const mc_formula* f, mc_formula** out);
void mc_formula_free(mc_formula* f);
int64_t mc_formula_closure_size(const mc_formula* f);
int64_t mc_formula_alternation_depth(const mc_formula* f);

/* ---- model checking ---- */

typedef struct {
  int verdict;           /* 1 holds, 0 fails */
  int64_t explored;      /* product pairs expanded (local engines) */
  int64_t total;         /* |states| * |closure| (local engines) */
  double quotient;       /* explored / total, or 1.0 for the eager engine */
  int64_t game_positions; /* game engine only; -1 otherwise */
} mc_check_result;

/* timeout_seconds <= 0 means no timeout */
mc_status mc_check(const mc_model* m, const mc_formula* f, const char* state,
                   mc_engine engine, double timeout_seconds,
                   mc_check_result* out);

/* ---- parity games ---- */

mc_status mc_game_import(const char* text, mc_game** out);
char* mc_game_export(const mc_game* g);
void mc_game_free(mc_game* g);
int64_t mc_game_size(const mc_game* g);
int64_t mc_game_entry(const mc_game* g);
int64_t mc_game_max_priority(const mc_game* g);

/* Builds the model-checking game reachable from (state, formula). */
mc_status mc_game_of_check(const mc_model* m, const mc_formula* f,
                           const char* state, mc_game** out);
/* Winner of a position under the native Zielonka solver. */
mc_status mc_game_winner(const mc_game* g, int64_t position, int* exists_wins);

/* ---- benchmark generators ---- */

/* families: clique, ladder, jurdzinski, hanoi, langincl; size2 only for
 * jurdzinski (0 reuses size) */
mc_status mc_gen_parity(const char* family, int64_t size, int64_t size2,
                        mc_game** out);
mc_status mc_game_make_lazy(const mc_game* g, mc_game** out);
/* lifts: none, monotone, graded, probabilistic */
mc_status mc_game_lift(const mc_game* g, const char* lift, mc_model** out);
char* mc_chi_formula(int64_t max_priority, const char* lift);

mc_status mc_gen_modulo(int64_t agents, int64_t moves, mc_model** out);
/* which: 1 or 2; the coalition is the first coalition_size agents */
char* mc_modulo_formula(int which, int64_t agents, int64_t coalition_size);

mc_status mc_gen_castle(int64_t castles, int64_t hp, mc_model** out);
char* mc_castle_initial_state(int64_t castles, int64_t hp);
/* kind 0: safety of knight `index` (1-based); kind 1: elimination by the
 * coalition of the first `index` knights */
char* mc_castle_formula(int64_t castles, int kind, int64_t index);

#ifdef __cplusplus
}
#endif

#endif /* MUCHECK_H */
