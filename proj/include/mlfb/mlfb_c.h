/* C interface to the mlfb library.
 *
 * Integers cross the boundary as decimal text so that values of any size
 * survive. Vectors are comma separated ("12,13,17"); lists of vectors use ';'
 * between vectors; matrices use the "m n" header format of the CLI.
 *
 * Every returned char* is owned by the caller and must be released with
 * mlfb_free_string. On failure a function returns a non-zero status, leaves
 * its outputs untouched and records a message for mlfb_last_error.
 */
#ifndef MLFB_C_H
#define MLFB_C_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MLFB_API __declspec(dllexport)
#else
#define MLFB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  MLFB_OK = 0,
  MLFB_ERR_INVALID_ARGUMENT = 1,
  MLFB_ERR_MALFORMED = 2,
  MLFB_ERR_NON_COPRIME = 3,
  MLFB_ERR_NON_POSITIVE = 4,
  MLFB_ERR_NOT_SIMPLICIAL = 5,
  MLFB_ERR_INFEASIBLE = 6,
  MLFB_ERR_NOT_LATTICE_FREE = 7,
  MLFB_ERR_NOT_MAXIMAL = 8,
  MLFB_ERR_BUDGET = 9,
  MLFB_ERR_INTERNAL = 10
} mlfb_status;

typedef enum {
  MLFB_METHOD_AUTO = 0, /* mlfb, or ss3 when n = 3 */
  MLFB_METHOD_MLFB = 1,
  MLFB_METHOD_BRAUER_SHOCKLEY = 2,
  MLFB_METHOD_NAIVE = 3,
  MLFB_METHOD_SS3 = 4
} mlfb_method;

typedef struct mlfb_instance mlfb_instance;
typedef struct mlfb_testset mlfb_testset;
typedef struct mlfb_bodies mlfb_bodies;

MLFB_API const char* mlfb_status_string(mlfb_status status);
/* Message of the last failure on the calling thread, "" if none. */
MLFB_API const char* mlfb_last_error(void);
MLFB_API void mlfb_free_string(char* s);
MLFB_API uint64_t mlfb_default_budget(void);

/* ---- instances */

/* Weights a: the matrix is the kernel lattice basis of a and y = a. */
MLFB_API mlfb_status mlfb_instance_from_vector(const char* text, mlfb_instance** out);
/* (d+1) x d matrix; the positive annihilator is derived. */
MLFB_API mlfb_status mlfb_instance_from_matrix(const char* text, mlfb_instance** out);
MLFB_API void mlfb_instance_free(mlfb_instance* inst);
MLFB_API mlfb_status mlfb_instance_dim(const mlfb_instance* inst, size_t* out);
MLFB_API mlfb_status mlfb_instance_matrix(const mlfb_instance* inst, char** out);
MLFB_API mlfb_status mlfb_instance_annihilator(const mlfb_instance* inst, char** out);

/* ---- test sets */

/* Buchberger completion; budget counts S-pairs and reduction steps. */
MLFB_API mlfb_status mlfb_testset_compute(const mlfb_instance* inst, uint64_t budget, mlfb_testset** out);
MLFB_API void mlfb_testset_free(mlfb_testset* t);
MLFB_API mlfb_status mlfb_testset_size(const mlfb_testset* t, size_t* out);
/* z and A z of entry i. */
MLFB_API mlfb_status mlfb_testset_entry(const mlfb_testset* t, size_t i, char** z, char** w);
/* Canonical representative of the body with right hand side b. */
MLFB_API mlfb_status mlfb_canonicalize(const mlfb_testset* t, const char* b, char** out);

/* ---- maximal lattice free bodies */

MLFB_API mlfb_status mlfb_bodies_compute(const mlfb_testset* t, uint64_t budget, mlfb_bodies** out);
MLFB_API void mlfb_bodies_free(mlfb_bodies* bodies);
MLFB_API mlfb_status mlfb_bodies_count(const mlfb_bodies* bodies, size_t* out);
MLFB_API mlfb_status mlfb_bodies_superset_size(const mlfb_bodies* bodies, size_t* out);
MLFB_API mlfb_status mlfb_bodies_containment_consistent(const mlfb_bodies* bodies, int* out);
/* b, generating points, facet witnesses (one per row of A) and y.b. */
MLFB_API mlfb_status mlfb_bodies_body(const mlfb_bodies* bodies, size_t i, char** b, char** gens, char** witnesses,
                                      char** y_dot_b);
/* Independent re-check of body i: lattice freeness and a witness on every facet. */
MLFB_API mlfb_status mlfb_bodies_verify(const mlfb_bodies* bodies, size_t i, uint64_t budget, int* lattice_free,
                                        int* all_facets_witnessed);

/* ---- Frobenius numbers; g is -1 when some weight is 1 */

MLFB_API mlfb_status mlfb_frobenius(const char* weights, mlfb_method method, uint64_t budget, char** g);
/* g via maximal lattice free bodies; the bodies are returned as well. */
MLFB_API mlfb_status mlfb_frobenius_mlfb(const mlfb_instance* inst, uint64_t budget, char** g, mlfb_bodies** bodies);
/* n = 3 column reduction. terminal and transform are 3x2 and 2x2 matrices. */
MLFB_API mlfb_status mlfb_frobenius_ss3(const char* weights, uint64_t budget, char** g, char** terminal,
                                        char** transform, char** b1, char** b2, size_t* steps, int* fell_back);
MLFB_API mlfb_status mlfb_semigroup_gaps(const char* weights, uint64_t budget, char** out);

/* ---- lattice utilities */

MLFB_API mlfb_status mlfb_kernel_basis(const char* weights, char** out);
/* Column Hermite normal form H = M U. */
MLFB_API mlfb_status mlfb_hnf(const char* matrix, char** h, char** u);

#ifdef __cplusplus
}
#endif

#endif
