/* C interface to the qgr library: quotient-category invariants of path
 * algebras and finitely presented monomial algebras.
 *
 * Conventions:
 *   - Every function returns a qgr_status; QGR_OK means success.
 *   - On failure qgr_last_error() returns a thread-local message.
 *   - Objects come back as opaque handles owned by the caller; release
 *     them with the matching *_free function.
 *   - Strings returned through char** are heap-allocated; release with
 *     qgr_string_free.
 *   - Vectors are passed as comma-separated integer strings so that
 *     arbitrary-precision entries survive the ABI.
 */
#ifndef QGR_H
#define QGR_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qgr_quiver qgr_quiver;

typedef enum qgr_status {
  QGR_OK = 0,
  QGR_ERR_PARSE = 1,          /* malformed input text */
  QGR_ERR_INVALID = 2,        /* bad argument or unsatisfied precondition */
  QGR_ERR_NOT_FINITE_GK = 3,  /* the path algebra has exponential growth */
  QGR_ERR_INCONCLUSIVE = 4,   /* truncation or iteration cap reached */
  QGR_ERR_INTERNAL = 5        /* internal consistency failure */
} qgr_status;

const char* qgr_version(void);
const char* qgr_last_error(void);
void qgr_string_free(char* s);

/* ---- quivers ---------------------------------------------------- */

qgr_status qgr_quiver_parse(const char* text, qgr_quiver** out);
qgr_status qgr_quiver_from_json(const char* json_text, qgr_quiver** out);
void qgr_quiver_free(qgr_quiver* q);

size_t qgr_quiver_vertex_count(const qgr_quiver* q);
size_t qgr_quiver_arrow_count(const qgr_quiver* q);

/* format: "text", "json" or "dot" */
qgr_status qgr_quiver_serialize(const qgr_quiver* q, const char* format, char** out);

qgr_status qgr_veronese(const qgr_quiver* q, unsigned power, qgr_quiver** out);

/* ---- monomial algebras ------------------------------------------ */

/* Parses an algebra presentation and builds its Ufnarovskii graph.
 * warnings_json receives a JSON array of dropped-relation notes (may
 * be NULL if not wanted). */
qgr_status qgr_algebra_graph(const char* text, qgr_quiver** out, char** warnings_json);

/* ---- growth ------------------------------------------------------ */

qgr_status qgr_growth_json(const qgr_quiver* q, char** out);
qgr_status qgr_cycles_json(const qgr_quiver* q, char** out);
qgr_status qgr_growth_verify_json(const qgr_quiver* q, char** out);

/* ---- Ext-quiver and equivalence ---------------------------------- */

qgr_status qgr_simples_json(const qgr_quiver* q, char** out);
qgr_status qgr_ext_quiver(const qgr_quiver* q, qgr_quiver** out);
qgr_status qgr_ext_poset_json(const qgr_quiver* q, char** out);
/* gamma(E_Q): the canonical poset quiver with the same QGr */
qgr_status qgr_canonical(const qgr_quiver* q, qgr_quiver** out);
/* equivalent becomes 0 or 1; witness_json is a bijection or a
 * distinguishing invariant */
qgr_status qgr_equivalent(const qgr_quiver* a, const qgr_quiver* b, int* equivalent,
                          char** witness_json);
/* cross-checks the poset isomorphism search against brute force */
qgr_status qgr_equivalent_verified(const qgr_quiver* a, const qgr_quiver* b, int* equivalent,
                                   char** witness_json);

/* ---- K0 ----------------------------------------------------------- */

qgr_status qgr_k0_json(const qgr_quiver* q, char** out);
/* vec: comma-separated integers of length rank(K0) */
qgr_status qgr_cone_contains(const qgr_quiver* q, const char* vec, int* member);
/* verdict: 1 member, 0 nonmember, -1 inconclusive */
qgr_status qgr_cone_oracle(const qgr_quiver* q, const char* vec, unsigned cap, int* verdict);

/* ---- graded representations -------------------------------------- */

/* dim/stabilized: limit of Hom(O_v, O_w) at the given truncation */
qgr_status qgr_hom_dim(const qgr_quiver* q, const char* v, const char* w, int cap_degree,
                       int* dim, int* stabilized);

/* verdict: 1 split, 0 nonsplit, -1 inconclusive; witness: the tail
 * degree of a splitting when split. nu is a comma-separated rational
 * list, zero-padded up to the cap. v and w must carry loops joined by
 * arrow r (apply a Veronese power first). */
qgr_status qgr_ext_split(const qgr_quiver* q, const char* v, const char* w, const char* r,
                         const char* nu, int cap_degree, int* verdict, int* witness);

/* serialized truncated representation of O_v, shifted by `shift` */
qgr_status qgr_point_module_json(const qgr_quiver* q, const char* v, int cap_degree, int shift,
                                 char** out);
/* classifies a serialized dimension-one representation */
qgr_status qgr_point_classify(const char* rep_json, char** out);

/* ---- matricial data ----------------------------------------------- */

qgr_status qgr_matricial_json(const qgr_quiver* q, unsigned n_max, char** out);
qgr_status qgr_gk1_json(const qgr_quiver* q, char** out);
/* left/right become 0 or 1 */
qgr_status qgr_noetherian(const qgr_quiver* q, int* left, int* right);

/* ---- combined report ---------------------------------------------- */

qgr_status qgr_report_json(const qgr_quiver* q, int cap_degree, int cap_iterations, char** out);

#ifdef __cplusplus
}
#endif

#endif /* QGR_H */
