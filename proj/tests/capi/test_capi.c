#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "permgraph/permgraph.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

static void expect_string(char* s, const char* want, int line) {
  if (!s || strcmp(s, want) != 0) {
    fprintf(stderr, "%s:%d: got '%s', want '%s'\n", __FILE__, line, s ? s : "(null)", want);
    ++failures;
  }
  pg_string_free(s);
}
#define EXPECT_STRING(s, want) expect_string((s), (want), __LINE__)

static int contains(const char* haystack, const char* needle) { return strstr(haystack, needle) != NULL; }

static void graphs(void) {
  pg_graph* g = NULL;
  EXPECT(pg_graph_read_file(PG_FIXTURES_DIR "/g1.txt", &g) == PG_OK);
  EXPECT(pg_graph_size(g) == 4);
  EXPECT(pg_graph_edge_count(g) == 7);
  EXPECT(pg_graph_has_edge(g, 0, 1) == 1);
  EXPECT(pg_graph_row(g, 1) == 0x5u);

  pg_graph* w = NULL;
  EXPECT(pg_graph_witness(1, &w) == PG_OK);
  EXPECT(pg_graph_equal(g, w));
  pg_graph* c = pg_graph_clone(w);
  EXPECT(pg_graph_equal(c, g));
  pg_graph_free(c);
  pg_graph_free(w);
  EXPECT(pg_graph_witness(3, &w) == PG_ERR_INVALID_ARGUMENT);

  char* text = NULL;
  EXPECT(pg_graph_format(g, &text) == PG_OK);
  EXPECT_STRING(text, "4\n0100\n1010\n0101\n1010\n");
  EXPECT(pg_graph_to_json(g, &text) == PG_OK);
  EXPECT_STRING(text, "{\"n\":4,\"rows\":[\"0100\",\"1010\",\"0101\",\"1010\"]}");
  pg_graph_free(g);

  const uint32_t rows[3] = {0x2, 0x4, 0x1};
  EXPECT(pg_graph_from_rows(3, rows, &g) == PG_OK);
  pg_graph* parsed = NULL;
  EXPECT(pg_graph_parse("3\n010\n001\n100\n", &parsed) == PG_OK);
  EXPECT(pg_graph_equal(g, parsed));
  pg_graph_free(parsed);
  pg_graph_free(g);

  g = NULL;
  EXPECT(pg_graph_parse("3\n01\n001\n100\n", &g) == PG_ERR_DIMENSION);
  EXPECT(g == NULL);
  EXPECT(contains(pg_last_error(), "row 1"));
  EXPECT(pg_graph_read_file(PG_FIXTURES_DIR "/nope.txt", &g) == PG_ERR_IO);
  EXPECT(pg_graph_parse("x\n", &g) == PG_ERR_PARSE);
  EXPECT(pg_graph_parse(NULL, &g) == PG_ERR_INVALID_ARGUMENT);
  EXPECT(strcmp(pg_status_name(PG_ERR_CAPACITY), "capacity") == 0);

  pg_graph_list* list = NULL;
  EXPECT(pg_graph_list_parse("1\n1\n1\n0\n", &list) == PG_OK);
  EXPECT(pg_graph_list_size(list) == 2);
  EXPECT(pg_graph_edge_count(pg_graph_list_at(list, 0)) == 1);
  EXPECT(pg_graph_list_at(list, 2) == NULL);
  pg_graph_list_free(list);
}

static void permutations_and_permanents(void) {
  pg_perm* p = NULL;
  EXPECT(pg_perm_parse("(1 2 3)", 4, &p) == PG_OK);
  EXPECT(pg_perm_size(p) == 4);
  EXPECT(pg_perm_cycle_count(p) == 2);
  char* s = NULL;
  EXPECT(pg_perm_format(p, &s) == PG_OK);
  EXPECT_STRING(s, "(1 2 3)(4)");
  pg_graph* g = NULL;
  EXPECT(pg_perm_to_graph(p, &g) == PG_OK);
  EXPECT(pg_graph_edge_count(g) == 4);
  pg_graph_free(g);
  EXPECT(pg_crp_ewens_pmf(p, "2", &s) == PG_OK);
  EXPECT_STRING(s, "1/30");
  pg_perm_free(p);
  EXPECT(pg_perm_parse("1 1", 0, &p) == PG_ERR_INVALID_ARGUMENT);

  pg_graph* g1 = NULL;
  pg_graph_witness(1, &g1);
  EXPECT(pg_permanent_value(g1, "2", 0, &s) == PG_OK);
  EXPECT_STRING(s, "6/1");
  EXPECT(pg_permanent_value(g1, "1/2", 1, &s) == PG_OK);
  EXPECT_STRING(s, "3/4");

  pg_cyclepoly* poly = NULL;
  EXPECT(pg_cycle_polynomial(g1, 2, 0, &poly) == PG_OK);
  EXPECT(pg_cyclepoly_size(poly) == 4);
  EXPECT(pg_cyclepoly_coefficient(poly, 2, &s) == PG_OK);
  EXPECT_STRING(s, "1");
  EXPECT(pg_cyclepoly_coefficient(poly, 5, &s) == PG_OK);
  EXPECT_STRING(s, "0");
  EXPECT(pg_cyclepoly_evaluate(poly, "-1", &s) == PG_OK);
  EXPECT_STRING(s, "0/1");
  pg_cyclepoly* brute = NULL;
  EXPECT(pg_cycle_polynomial_bruteforce(g1, &brute) == PG_OK);
  EXPECT(pg_cyclepoly_equal(poly, brute));
  pg_cyclepoly_free(brute);
  pg_cyclepoly_free(poly);
  pg_graph_free(g1);

  char* canonical = NULL;
  int sign = 0;
  EXPECT(pg_rational_parse("6/4", &canonical, &sign) == PG_OK);
  EXPECT(sign == 1);
  EXPECT_STRING(canonical, "3/2");
  EXPECT(pg_rational_parse("-0.25", &canonical, &sign) == PG_OK);
  EXPECT(sign == -1);
  EXPECT_STRING(canonical, "-1/4");
  EXPECT(pg_rational_parse("1/0", &canonical, &sign) == PG_ERR_DOMAIN);
}

static void model(void) {
  char* s = NULL;
  EXPECT(pg_pgm_normalizer(2, "1", "1", "all", 0, &s) == PG_OK);
  EXPECT_STRING(s, "8/1");
  EXPECT(pg_pgm_normalizer(3, "2", "1/2", "all", 1, &s) == PG_OK);
  EXPECT_STRING(s, "2187/64");
  EXPECT(pg_pgm_normalizer(3, "1", "1", "partitions", 0, &s) == PG_OK);
  EXPECT_STRING(s, "13/1");
  EXPECT(pg_pgm_normalizer(3, "0", "1", "all", 0, &s) == PG_ERR_DOMAIN);
  EXPECT(pg_pgm_normalizer(3, "1", "1", "trees", 0, &s) == PG_ERR_INVALID_ARGUMENT);
  EXPECT(pg_pgm_degree_pmf(4, "1", 2, &s) == PG_OK);
  EXPECT_STRING(s, "3/8");
  EXPECT(pg_pgm_expected_edges(50, "1", &s) == PG_OK);
  EXPECT_STRING(s, "1275/1");

  pg_graph* g = NULL;
  pg_graph_parse("1\n1\n", &g);
  EXPECT(pg_pgm_pmf(g, "3", "2", NULL, &s) == PG_OK);
  EXPECT_STRING(s, "1/1");
  int member = 0;
  EXPECT(pg_pgm_family_contains("single-cycle", g, &member) == PG_OK);
  EXPECT(member == 1);
  pg_graph_free(g);

  int ok = 0;
  EXPECT(pg_pgm_exchangeability(3, "1/2", "2", 4, 1, &ok) == PG_OK);
  EXPECT(ok == 1);

  pg_pgm_sampler* a = NULL;
  pg_pgm_sampler* b = NULL;
  EXPECT(pg_pgm_sampler_new(6, "2", "1/3", 9, &a) == PG_OK);
  EXPECT(pg_pgm_sampler_new(6, "2", "1/3", 9, &b) == PG_OK);
  for (int i = 0; i < 20; ++i) {
    pg_graph* x = NULL;
    pg_graph* y = NULL;
    EXPECT(pg_pgm_sampler_draw(a, &x) == PG_OK);
    EXPECT(pg_pgm_sampler_draw(b, &y) == PG_OK);
    EXPECT(pg_graph_equal(x, y));
    pg_graph_free(x);
    pg_graph_free(y);
  }
  pg_pgm_sampler_free(a);
  pg_pgm_sampler_free(b);
  EXPECT(pg_pgm_sampler_new(6, "2", "-1", 9, &a) == PG_ERR_DOMAIN);

  EXPECT(pg_pgm_sampler_new(50, "1", "1", 5, &a) == PG_OK);
  EXPECT(pg_pgm_sampler_size(a) == 50);
  uint8_t cells[2500];
  EXPECT(pg_pgm_sampler_draw_cells(a, cells, 2499) == PG_ERR_DIMENSION);
  EXPECT(pg_pgm_sampler_draw_cells(a, cells, sizeof cells) == PG_OK);
  for (size_t i = 0; i < 50; ++i) {
    size_t degree = 0;
    for (size_t j = 0; j < 50; ++j) degree += cells[i * 50 + j];
    EXPECT(degree >= 1);
  }
  pg_graph* big = NULL;
  EXPECT(pg_pgm_sampler_draw(a, &big) == PG_ERR_CAPACITY);
  pg_pgm_sampler_free(a);
}

static void crp(void) {
  char* s = NULL;
  EXPECT(pg_crp_rising_factorial("2", 3, &s) == PG_OK);
  EXPECT_STRING(s, "24/1");
  EXPECT(pg_crp_partition_pmf("{1 2}{3}", "1", &s) == PG_OK);
  EXPECT_STRING(s, "1/6");

  pg_crp_sampler* sampler = NULL;
  EXPECT(pg_crp_sampler_new(5, "7/3", 4, &sampler) == PG_OK);
  pg_perm* p = NULL;
  EXPECT(pg_crp_sampler_draw_permutation(sampler, &p) == PG_OK);
  EXPECT(pg_perm_size(p) == 5);
  pg_perm_free(p);
  EXPECT(pg_crp_sampler_draw_partition(sampler, &s) == PG_OK);
  EXPECT(s[0] == '{');
  pg_string_free(s);
  pg_crp_sampler_free(sampler);

  char* report = NULL;
  int pass = 0;
  EXPECT(pg_crp_check(4, "7/3", "dr", &report, &pass) == PG_OK);
  EXPECT(pass == 1);
  EXPECT(contains(report, "\"census_ok\":true"));
  pg_string_free(report);
  EXPECT(pg_crp_check(3, "1", "ss", &report, &pass) == PG_OK);
  EXPECT(pass == 0);
  EXPECT(contains(report, "\"violation\":{"));
  pg_string_free(report);
  EXPECT(pg_crp_check(7, "1", "dr", &report, &pass) == PG_ERR_CAPACITY);
  EXPECT(pg_crp_partition_check(4, "3", &pass) == PG_OK);
  EXPECT(pass == 1);
}

static void projections(void) {
  pg_graph* g = NULL;
  pg_graph_read_file(PG_FIXTURES_DIR "/cycle123.txt", &g);
  pg_graph* h = NULL;
  EXPECT(pg_project(g, "dr", &h) == PG_OK);
  char* s = NULL;
  pg_graph_format(h, &s);
  EXPECT_STRING(s, "2\n01\n10\n");
  pg_graph_free(h);
  EXPECT(pg_project(g, "xx", &h) == PG_ERR_INVALID_ARGUMENT);
  pg_graph_free(g);

  pg_graph_parse("1\n0\n", &g);
  EXPECT(pg_project(g, "ss", &h) == PG_ERR_UNDERFLOW);
  uint64_t count = 0;
  EXPECT(pg_preimage_count(g, "ss", "none", &count) == PG_OK);
  EXPECT(count == 8);
  pg_graph_free(g);

  pg_graph_witness(1, &g);
  EXPECT(pg_preimage_count(g, "dr", "degree", &count) == PG_OK);
  EXPECT(count == 139);
  EXPECT(pg_preimage_count(g, "dr", "permutation", &count) == PG_OK);
  EXPECT(count == 135);
  pg_graph_list* list = NULL;
  EXPECT(pg_preimages(g, "dr", "none", &list) == PG_OK);
  EXPECT(pg_graph_list_size(list) == 170);
  pg_graph_list_free(list);
  EXPECT(pg_preimages(g, "dr", "bogus", &list) == PG_ERR_INVALID_ARGUMENT);
  pg_graph_free(g);
}

static void consistency(void) {
  pg_graph* g1 = NULL;
  pg_graph* g2 = NULL;
  pg_graph_witness(1, &g1);
  pg_graph_witness(2, &g2);

  pg_bipoly* d = NULL;
  EXPECT(pg_dr_difference_certificate(&d) == PG_OK);
  EXPECT(pg_bipoly_term_count(d) == 14);
  EXPECT(pg_bipoly_uniform_sign(d) == 1);
  char* s = NULL;
  EXPECT(pg_bipoly_coefficient(d, 2, 10, &s) == PG_OK);
  EXPECT_STRING(s, "9");
  EXPECT(pg_bipoly_evaluate(d, "1", "1", &s) == PG_OK);
  EXPECT_STRING(s, "48/1");

  pg_bipoly* r1 = NULL;
  pg_bipoly* r2 = NULL;
  EXPECT(pg_ltp_rhs(g1, "dr", NULL, &r1) == PG_OK);
  EXPECT(pg_ltp_rhs(g2, "dr", "all", &r2) == PG_OK);
  EXPECT(pg_bipoly_coefficient(r1, 2, 10, &s) == PG_OK);
  EXPECT_STRING(s, "60");
  EXPECT(pg_bipoly_coefficient(r2, 3, 12, &s) == PG_OK);
  EXPECT_STRING(s, "4");
  EXPECT(!pg_bipoly_equal(r1, r2));
  pg_bipoly_free(r1);
  pg_bipoly_free(r2);
  EXPECT(pg_bipoly_to_string(d, &s) == PG_OK);
  EXPECT(strncmp(s, "a*b^8 + a^2*b^8 + 4*a*b^9", 25) == 0);
  pg_string_free(s);
  pg_bipoly_free(d);

  pg_bipoly* den = NULL;
  EXPECT(pg_denominator_polynomial(g1, &den) == PG_OK);
  EXPECT(pg_bipoly_to_string(den, &s) == PG_OK);
  EXPECT_STRING(s, "a*b^7 + a^2*b^7");
  pg_bipoly_free(den);

  char* report = NULL;
  int pass = -1;
  EXPECT(pg_consistency_check("dr", "all", 4, NULL, 1, 0, &report, &pass) == PG_OK);
  EXPECT(pass == 0);
  EXPECT(contains(report, "\"G1\""));
  EXPECT(contains(report, "\"G2\""));
  pg_string_free(report);
  EXPECT(pg_consistency_check("dr", "permutations", 3,
                              "[{\"alpha_n\":\"7/3\",\"beta_n\":\"1\",\"alpha_next\":\"7/3\",\"beta_next\":\"1\"}]", 2,
                              0, &report, &pass) == PG_OK);
  EXPECT(pass == 1);
  pg_string_free(report);
  EXPECT(pg_consistency_check("dr", "permutations", 3, "[{\"alpha_n\":\"1\"}]", 1, 0, &report, &pass) ==
         PG_ERR_PARSE);
  EXPECT(pg_consistency_check("dr", "all", 5, NULL, 1, 0, &report, &pass) == PG_ERR_CAPACITY);

  EXPECT(pg_witness_pair_certificate(g1, g2, "dr", &report) == PG_OK);
  EXPECT(contains(report, "\"refutes\":true"));
  pg_string_free(report);

  EXPECT(pg_ss_contradiction_chain(3, &report, &pass) == PG_OK);
  EXPECT(pass == 1);
  pg_string_free(report);

  pg_bipoly* closed = NULL;
  pg_bipoly* complete = NULL;
  pg_graph* j = NULL;
  pg_graph_parse("2\n11\n11\n", &j);
  EXPECT(pg_ss_rhs_closed_form(j, &closed) == PG_OK);
  EXPECT(pg_ss_rhs_complete_form(j, &complete) == PG_OK);
  EXPECT(pg_bipoly_equal(closed, complete));
  pg_bipoly_free(closed);
  pg_bipoly_free(complete);
  pg_graph_free(j);

  pg_graph_free(g1);
  pg_graph_free(g2);
}

int main(void) {
  EXPECT(pg_version() != NULL && pg_version()[0] != '\0');
  graphs();
  permutations_and_permanents();
  model();
  crp();
  projections();
  consistency();
  if (failures) {
    fprintf(stderr, "%d C API check(s) failed\n", failures);
    return 1;
  }
  printf("C API checks passed\n");
  return 0;
}
