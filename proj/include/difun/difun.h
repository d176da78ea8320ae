#ifndef DIFUN_DIFUN_H_
#define DIFUN_DIFUN_H_

/* C interface to the difunctional-relation semigroup library.
 *
 * Conventions:
 *   - Every function returning difun_status reports failure through the
 *     code and leaves a message readable via difun_last_error() (thread
 *     local, overwritten by the next failing call on the same thread).
 *   - Every char** output receives a heap string owned by the caller;
 *     release it with difun_string_free(). Outputs are written only on
 *     DIFUN_OK unless documented otherwise.
 *   - Relations travel as JSON: {"n": 3, "blocks": [[[1],[2]], ...]} with
 *     one [kernel block, cokernel block] pair per rectangle.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum difun_status {
  DIFUN_OK = 0,
  DIFUN_ERROR_VERIFICATION = 1, /* checks ran and something failed      */
  DIFUN_ERROR_USAGE = 2,        /* bad argument or precondition         */
  DIFUN_ERROR_BUDGET = 3,       /* product budget or size cap exceeded  */
  DIFUN_ERROR_DIMENSION = 4,    /* mixed or out-of-range ground sets    */
  DIFUN_ERROR_FORM = 5,         /* relation is not difunctional         */
  DIFUN_ERROR_PARSE = 6,        /* malformed JSON input                 */
  DIFUN_ERROR_NOMEM = 7
} difun_status;

const char* difun_version(void);

/* Message for the last failing call on this thread ("" when none). */
const char* difun_last_error(void);

void difun_string_free(char* s);

/* ---- relation values ------------------------------------------------- */

typedef struct difun_relation difun_relation;

difun_status difun_relation_parse(const char* json, difun_relation** out);
difun_status difun_relation_to_json(const difun_relation* a, char** out);
difun_status difun_relation_identity(int n, difun_relation** out);
difun_status difun_relation_zero(int n, difun_relation** out);

/* Negative on a null argument. */
int difun_relation_ground_set(const difun_relation* a);
int difun_relation_rank(const difun_relation* a);
int difun_relation_equal(const difun_relation* a, const difun_relation* b);

difun_status difun_diamond(const difun_relation* a, const difun_relation* b,
                           difun_relation** out);
difun_status difun_inverse(const difun_relation* a, difun_relation** out);

void difun_relation_free(difun_relation* a);

/* ---- whole-semigroup front ends --------------------------------------- */

/* Both rank tables, n = 0..max_n (2 <= max_n <= 30).
 * format: "text", "csv", or "json". */
difun_status difun_render_tables(int max_n, const char* format, char** out);

/* Full rank report for the ideal of rank <= r as a JSON object. Counts are
 * decimal strings. n = 1 is answered but flagged claimed_range = false. */
difun_status difun_rank_report_json(int n, int r, char** out);

/* Elements of J_r (ideal = 0) or I_r (ideal = 1), or all of D_n when
 * r = -1, one JSON object per line, then a {"count": K} trailer.
 * Capped at n <= 5; larger asks are DIFUN_ERROR_BUDGET. */
difun_status difun_enumerate_json(int n, int r, int ideal, char** out);

/* Closure of a JSON array of relations under the block product: one JSON
 * object per line, then {"count", "products", "exhausted"}.
 * budget = 0 means unlimited. */
difun_status difun_closure_json(const char* generators_json, uint64_t budget,
                                char** out);

/* Necessary-element audit of a candidate completion (JSON array) for the
 * ideal of rank <= r; returns the verdict object. */
difun_status difun_audit_json(int n, int r, const char* candidate_json,
                              char** out);

/* Runs the verification suite at depth "formula", "closure", or
 * "exhaustive". The report is written even when checks fail:
 *   DIFUN_OK                   every check passed
 *   DIFUN_ERROR_VERIFICATION   at least one check failed
 *   DIFUN_ERROR_BUDGET         nothing failed but the budget cut checks
 * as_json selects the report rendering. */
difun_status difun_verify(int n, const char* depth, uint64_t budget,
                          int as_json, char** report);

#ifdef __cplusplus
}
#endif

#endif /* DIFUN_DIFUN_H_ */
