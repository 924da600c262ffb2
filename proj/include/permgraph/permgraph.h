#ifndef PERMGRAPH_H
#define PERMGRAPH_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PG_BUILDING_LIBRARY)
#    define PG_API __declspec(dllexport)
#  else
#    define PG_API __declspec(dllimport)
#  endif
#else
#  define PG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/*
 * Every fallible call returns a pg_status and writes its result through an
 * out pointer, which is left untouched on failure. pg_last_error() holds the
 * message of the most recent failure on the calling thread.
 *
 * Exact rationals cross the boundary as strings: "p/q", integers or
 * decimals on input, always "p/q" on output. Strings returned through
 * char** are owned by the caller and released with pg_string_free.
 *
 * Names: op is "ss" or "dr"; family is one of "all", "permutations",
 * "partitions", "fixed-point-free", "single-cycle"; preimage filter is
 * "none", "permutation" (contains a permutation) or "degree" (every row and
 * column nonempty).
 */

typedef enum pg_status {
  PG_OK = 0,
  PG_ERR_DIMENSION = 1,
  PG_ERR_CAPACITY = 2,
  PG_ERR_PARSE = 3,
  PG_ERR_DOMAIN = 4,
  PG_ERR_UNDERFLOW = 5,
  PG_ERR_IO = 6,
  PG_ERR_INVALID_ARGUMENT = 7,
  PG_ERR_INTERNAL = 8
} pg_status;

typedef struct pg_graph pg_graph;
typedef struct pg_graph_list pg_graph_list;
typedef struct pg_perm pg_perm;
typedef struct pg_cyclepoly pg_cyclepoly;
typedef struct pg_bipoly pg_bipoly;
typedef struct pg_pgm_sampler pg_pgm_sampler;
typedef struct pg_crp_sampler pg_crp_sampler;

PG_API const char* pg_version(void);
PG_API const char* pg_last_error(void);
PG_API const char* pg_status_name(pg_status status);
PG_API void pg_string_free(char* s);

/* Canonical "p/q" form of a rational literal; sign is -1, 0 or +1. */
PG_API pg_status pg_rational_parse(const char* text, char** canonical, int* sign);

/* Graphs. Text format: a line with n, then n rows of 0/1 (or 0x.. hex). */
PG_API pg_status pg_graph_parse(const char* text, pg_graph** out);
PG_API pg_status pg_graph_read_file(const char* path, pg_graph** out);
PG_API pg_status pg_graph_from_rows(size_t n, const uint32_t* rows, pg_graph** out);
/* which = 1 or 2: the 4-vertex witness graphs. */
PG_API pg_status pg_graph_witness(int which, pg_graph** out);
PG_API pg_graph* pg_graph_clone(const pg_graph* g);
PG_API void pg_graph_free(pg_graph* g);
PG_API size_t pg_graph_size(const pg_graph* g);
PG_API size_t pg_graph_edge_count(const pg_graph* g);
PG_API int pg_graph_has_edge(const pg_graph* g, size_t i, size_t j);
PG_API uint32_t pg_graph_row(const pg_graph* g, size_t i);
PG_API int pg_graph_equal(const pg_graph* a, const pg_graph* b);
PG_API pg_status pg_graph_format(const pg_graph* g, char** out);
/* {"n":..,"rows":["01..",..]} */
PG_API pg_status pg_graph_to_json(const pg_graph* g, char** out);

PG_API pg_status pg_graph_list_parse(const char* text, pg_graph_list** out);
PG_API size_t pg_graph_list_size(const pg_graph_list* list);
PG_API const pg_graph* pg_graph_list_at(const pg_graph_list* list, size_t i);
PG_API void pg_graph_list_free(pg_graph_list* list);

/* Permutations: one-line "2 3 1" or cycles "(1 2 3)"; n = 0 infers size. */
PG_API pg_status pg_perm_parse(const char* text, size_t n, pg_perm** out);
PG_API void pg_perm_free(pg_perm* p);
PG_API size_t pg_perm_size(const pg_perm* p);
PG_API size_t pg_perm_cycle_count(const pg_perm* p);
PG_API pg_status pg_perm_format(const pg_perm* p, char** out);
PG_API pg_status pg_perm_to_graph(const pg_perm* p, pg_graph** out);

/* Permanent. brute != 0 uses the factorial sum. */
PG_API pg_status pg_permanent_value(const pg_graph* g, const char* alpha, int brute, char** out);
PG_API pg_status pg_cycle_polynomial(const pg_graph* g, unsigned threads, int accept_cost, pg_cyclepoly** out);
PG_API pg_status pg_cycle_polynomial_bruteforce(const pg_graph* g, pg_cyclepoly** out);
PG_API void pg_cyclepoly_free(pg_cyclepoly* p);
PG_API size_t pg_cyclepoly_size(const pg_cyclepoly* p);
PG_API pg_status pg_cyclepoly_coefficient(const pg_cyclepoly* p, size_t k, char** out);
PG_API pg_status pg_cyclepoly_evaluate(const pg_cyclepoly* p, const char* alpha, char** out);
PG_API int pg_cyclepoly_equal(const pg_cyclepoly* a, const pg_cyclepoly* b);

/* Permanental graph model. */
PG_API pg_status pg_pgm_normalizer(size_t n, const char* alpha, const char* beta, const char* family,
                                   int brute, char** out);
PG_API pg_status pg_pgm_pmf(const pg_graph* g, const char* alpha, const char* beta, const char* family,
                            char** out);
PG_API pg_status pg_pgm_family_contains(const char* family, const pg_graph* g, int* out);
/* P(out-degree of vertex 1 is k + 1). */
PG_API pg_status pg_pgm_degree_pmf(size_t n, const char* beta, size_t k, char** out);
PG_API pg_status pg_pgm_expected_edges(size_t n, const char* beta, char** out);
PG_API pg_status pg_pgm_total_variation(size_t n, const char* alpha, const char* beta, char** out);
PG_API pg_status pg_pgm_exchangeability(size_t n, const char* alpha, const char* beta, size_t trials,
                                        uint64_t seed, int* out);
PG_API pg_status pg_pgm_sampler_new(size_t n, const char* alpha, const char* beta, uint64_t seed,
                                    pg_pgm_sampler** out);
/* n up to 4096; pg_pgm_sampler_draw needs n <= 32, draw_cells writes the
 * n*n row-major 0/1 cells of the same draw into a caller buffer. */
PG_API pg_status pg_pgm_sampler_draw(pg_pgm_sampler* s, pg_graph** out);
PG_API size_t pg_pgm_sampler_size(const pg_pgm_sampler* s);
PG_API pg_status pg_pgm_sampler_draw_cells(pg_pgm_sampler* s, uint8_t* cells, size_t capacity);
PG_API void pg_pgm_sampler_free(pg_pgm_sampler* s);

/* Ewens / Chinese restaurant process. Partitions print as "{1 2}{3}". */
PG_API pg_status pg_crp_rising_factorial(const char* alpha, size_t n, char** out);
PG_API pg_status pg_crp_ewens_pmf(const pg_perm* p, const char* alpha, char** out);
PG_API pg_status pg_crp_partition_pmf(const char* partition, const char* alpha, char** out);
PG_API pg_status pg_crp_sampler_new(size_t n, const char* alpha, uint64_t seed, pg_crp_sampler** out);
PG_API pg_status pg_crp_sampler_draw_permutation(pg_crp_sampler* s, pg_perm** out);
PG_API pg_status pg_crp_sampler_draw_partition(pg_crp_sampler* s, char** out);
PG_API void pg_crp_sampler_free(pg_crp_sampler* s);
/* JSON {"pass","census_ok","checked","violation":{..}|null}. */
PG_API pg_status pg_crp_check(size_t n, const char* alpha, const char* op, char** report, int* pass);
PG_API pg_status pg_crp_partition_check(size_t n, const char* alpha, int* pass);

/* Projections and preimages. */
PG_API pg_status pg_project(const pg_graph* g, const char* op, pg_graph** out);
PG_API pg_status pg_preimages(const pg_graph* g, const char* op, const char* filter, pg_graph_list** out);
PG_API pg_status pg_preimage_count(const pg_graph* g, const char* op, const char* filter, uint64_t* out);

/* Bivariate polynomials in a (alpha) and b (beta). */
PG_API void pg_bipoly_free(pg_bipoly* p);
PG_API size_t pg_bipoly_term_count(const pg_bipoly* p);
PG_API pg_status pg_bipoly_coefficient(const pg_bipoly* p, size_t a_exp, size_t b_exp, char** out);
PG_API int pg_bipoly_uniform_sign(const pg_bipoly* p);
PG_API pg_status pg_bipoly_evaluate(const pg_bipoly* p, const char* a, const char* b, char** out);
PG_API pg_status pg_bipoly_to_string(const pg_bipoly* p, char** out);
PG_API pg_status pg_bipoly_to_json(const pg_bipoly* p, char** out);
PG_API int pg_bipoly_equal(const pg_bipoly* x, const pg_bipoly* y);

/* Consistency. */
PG_API pg_status pg_ltp_rhs(const pg_graph* g, const char* op, const char* family, pg_bipoly** out);
PG_API pg_status pg_denominator_polynomial(const pg_graph* g, pg_bipoly** out);
PG_API pg_status pg_dr_difference_certificate(pg_bipoly** out);
PG_API pg_status pg_ss_rhs_closed_form(const pg_graph* g, pg_bipoly** out);
PG_API pg_status pg_ss_rhs_complete_form(const pg_graph* g, pg_bipoly** out);
PG_API pg_status pg_witness_pair_certificate(const pg_graph* g1, const pg_graph* g2, const char* op,
                                             char** report);
/*
 * grid: NULL for the default 3 x 3 grid, otherwise a JSON array of
 * {"alpha_n","beta_n","alpha_next","beta_next"} rational strings.
 */
PG_API pg_status pg_consistency_check(const char* op, const char* family, size_t n, const char* grid,
                                      unsigned threads, int accept_cost, char** report, int* pass);
PG_API pg_status pg_ss_contradiction_chain(size_t n, char** report, int* pass);

#ifdef __cplusplus
}
#endif

#endif
