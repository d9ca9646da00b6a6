/* C interface to the atorsion library.
 *
 * Every object is an opaque handle released by its *_free function.
 * Functions return AT_OK or an error status; the message for the most recent
 * failure on the calling thread is available from at_last_error().  Strings
 * returned through char** out-parameters are heap allocated and must be
 * released with at_string_free().  Big integers cross the boundary as
 * base-10 strings.
 */
#ifndef ATORSION_H
#define ATORSION_H

#include <stddef.h>

#if defined(ATORSION_BUILDING_LIBRARY)
#define AT_API __attribute__((visibility("default")))
#else
#define AT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum at_status {
  AT_OK = 0,
  AT_ERR_DIMENSION = 1,
  AT_ERR_FIELD = 2,
  AT_ERR_RANGE = 3,
  AT_ERR_SIZE = 4,
  AT_ERR_PARSE = 5,
  AT_ERR_STRUCTURE = 6,
  AT_ERR_VALIDATION = 7,
  AT_ERR_INCONSISTENCY = 8,
  AT_ERR_NOT_FOUND = 9,
  AT_ERR_ARGUMENT = 10, /* null pointer or index out of range */
  AT_ERR_INTERNAL = 11
} at_status;

typedef struct at_matrix at_matrix;
typedef struct at_snf at_snf;
typedef struct at_ball at_ball;
typedef struct at_graph at_graph;
typedef struct at_complex at_complex;
typedef struct at_presentation at_presentation;

AT_API const char* at_version(void);
/* Short identifier such as "parse" or "size". */
AT_API const char* at_status_name(at_status status);
AT_API const char* at_last_error(void);
AT_API void at_string_free(char* s);

/* ---- integer matrices and Smith normal form ---- */

AT_API at_status at_matrix_new(size_t rows, size_t cols, at_matrix** out);
AT_API at_status at_matrix_parse(const char* text, at_matrix** out);
AT_API at_status at_matrix_format(const at_matrix* m, char** out);
AT_API size_t at_matrix_rows(const at_matrix* m);
AT_API size_t at_matrix_cols(const at_matrix* m);
AT_API at_status at_matrix_set(at_matrix* m, size_t i, size_t j, const char* value);
AT_API at_status at_matrix_get(const at_matrix* m, size_t i, size_t j, char** out);
AT_API void at_matrix_free(at_matrix* m);

AT_API at_status at_snf_compute(const at_matrix* a, at_snf** out);
AT_API size_t at_snf_rank(const at_snf* s);
/* min(rows, cols) diagonal entries d_1 | d_2 | ... followed by zeros. */
AT_API size_t at_snf_factor_count(const at_snf* s);
AT_API at_status at_snf_factor(const at_snf* s, size_t i, char** out);
/* Copies of U, D, V with U * A * V = D.  Any out-pointer may be NULL. */
AT_API at_status at_snf_transforms(const at_snf* s, at_matrix** u, at_matrix** d, at_matrix** v);
AT_API void at_snf_free(at_snf* s);

/* Order of generator `index` in Z^cols / rowspan; "infinite" or a decimal. */
AT_API at_status at_element_order(const at_matrix* relations, size_t index, char** out);

/* ---- permutations ---- */

/* images[0..n] receives the one-line notation of the cycle c_k in S_{n+1}. */
AT_API at_status at_cycle_perm(size_t n, size_t k, size_t* images, unsigned long* length);
AT_API at_status at_perm_length(const size_t* images, size_t m, unsigned long* length);
AT_API at_status at_poincare(size_t m, const char* q, char** out);

/* ---- flags over GF(p^e); modulus may be NULL for the default ---- */

AT_API at_status at_flag_count(unsigned p, unsigned e, const unsigned* modulus, size_t modulus_len, size_t m,
                               char** out);
/* Enumerates every flag and reports how many were produced. */
AT_API at_status at_flag_enumerate(unsigned p, unsigned e, const unsigned* modulus, size_t modulus_len, size_t m,
                                   size_t* count);
/* Number of flags at relative position w from the standard flag. */
AT_API at_status at_sphere_count(unsigned p, unsigned e, const unsigned* modulus, size_t modulus_len, size_t m,
                                 const size_t* w, size_t* count);

/* ---- building balls ---- */

/* max_vertices = 0 keeps the default guard. */
AT_API at_status at_ball_build(size_t n, unsigned p, size_t radius, unsigned long long max_vertices, at_ball** out);
AT_API size_t at_ball_vertex_count(const at_ball* b);
AT_API size_t at_ball_edge_count(const at_ball* b);
AT_API size_t at_ball_chamber_count(const at_ball* b);
/* types[0..n] receives the per-type vertex tally. */
AT_API at_status at_ball_type_tally(const at_ball* b, size_t* tally, size_t len);
AT_API at_status at_ball_vertex(const at_ball* b, size_t v, unsigned* type, size_t* distance, size_t* degree,
                                size_t* chambers, int* interior);
AT_API at_status at_ball_link_check(const at_ball* b, size_t v, int* ok, unsigned* order);
AT_API at_status at_ball_json(const at_ball* b, int include_bases, char** out);
AT_API void at_ball_free(at_ball* b);

/* ---- quotient graphs ---- */

AT_API at_status at_graph_new(size_t vertices, at_graph** out);
AT_API at_status at_graph_parse(const char* text, at_graph** out);
AT_API at_status at_graph_add_edge(at_graph* g, size_t u, size_t v);
AT_API size_t at_graph_vertex_count(const at_graph* g);
AT_API size_t at_graph_edge_count(const at_graph* g); /* geometric edges */
/* Number of vertices of degree below three. */
AT_API size_t at_graph_low_degree_count(const at_graph* g);
AT_API void at_graph_free(at_graph* g);

/* ---- Ã₂ complexes ---- */

AT_API at_status at_complex_parse(const char* text, at_complex** out);
AT_API at_status at_complex_torus(size_t scale, at_complex** out);
AT_API at_status at_complex_union(const at_complex* a, const at_complex* b, at_complex** out);
AT_API at_status at_complex_format(const at_complex* x, char** out);
AT_API at_status at_complex_counts(const at_complex* x, size_t* n0, size_t* n1, size_t* n2, long long* chi);
/* ok = 1 with the common order, or ok = 0 and one failure per line in
 * *report (which may be NULL).  A mixture of orders is an error. */
AT_API at_status at_complex_link_check(const at_complex* x, int* ok, unsigned* order, char** report);
AT_API at_status at_complex_mk(const at_complex* x, unsigned k, at_matrix** out);
AT_API at_status at_search_presentation(unsigned q, int exhaustive, at_complex** out, size_t* solutions,
                                        size_t* tried);
AT_API void at_complex_free(at_complex* x);

/* ---- relation presentations and closed forms ---- */

AT_API at_status at_presentation_tree(const at_graph* g, at_presentation** out);
AT_API at_status at_presentation_a2(const at_complex* x, int include_mk, at_presentation** out);
AT_API size_t at_presentation_generator_count(const at_presentation* p);
AT_API size_t at_presentation_row_count(const at_presentation* p);
AT_API at_status at_presentation_label(const at_presentation* p, size_t generator, char** out);
AT_API at_status at_presentation_tag(const at_presentation* p, size_t row, char** out);
AT_API at_status at_presentation_matrix(const at_presentation* p, at_matrix** out);
/* Order of [I]: "infinite" or a decimal. */
AT_API at_status at_presentation_order(const at_presentation* p, char** out);
/* Space-separated nonzero invariant factors of the relation matrix. */
AT_API at_status at_presentation_invariant_factors(const at_presentation* p, char** out);
/* Consequences of the relations checked by row-span membership. */
AT_API at_status at_presentation_check_count(const at_presentation* p, size_t* count);
AT_API at_status at_presentation_check(const at_presentation* p, size_t i, char** name, int* holds);
AT_API void at_presentation_free(at_presentation* p);

AT_API at_status at_bound(unsigned n, const char* q, const char* n0, char** m, char** case_tag);
/* Space-separated n0 (q^{k(n+1-k)} - 1) for k = 1..n. */
AT_API at_status at_annihilator_family(unsigned n, const char* q, const char* n0, char** out);
/* "a" or "a/b" in lowest terms. */
AT_API at_status at_chi(unsigned n, const char* q, const char* n0, char** value, int* integral);

#ifdef __cplusplus
}
#endif

#endif /* ATORSION_H */
