#include "permgraph/permgraph.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "permgraph/consistency.hpp"
#include "permgraph/crp.hpp"
#include "permgraph/io.hpp"
#include "permgraph/pgm.hpp"

using namespace permgraph;

struct pg_graph {
  DirectedGraph value;
};
struct pg_graph_list {
  std::vector<pg_graph> items;
};
struct pg_perm {
  Permutation value;
};
struct pg_cyclepoly {
  CyclePolynomial value;
};
struct pg_bipoly {
  BivariatePolynomial value;
};
struct pg_pgm_sampler {
  PgmSampler value;
};
struct pg_crp_sampler {
  CrpSampler value;
};

namespace {

thread_local std::string last_error;

pg_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::dimension: return PG_ERR_DIMENSION;
    case ErrorCode::capacity: return PG_ERR_CAPACITY;
    case ErrorCode::parse: return PG_ERR_PARSE;
    case ErrorCode::domain: return PG_ERR_DOMAIN;
    case ErrorCode::underflow: return PG_ERR_UNDERFLOW;
    case ErrorCode::io: return PG_ERR_IO;
    case ErrorCode::invalid_argument: return PG_ERR_INVALID_ARGUMENT;
  }
  return PG_ERR_INTERNAL;
}

template <typename Body>
pg_status guarded(Body&& body) {
  try {
    body();
    return PG_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return PG_ERR_CAPACITY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return PG_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return PG_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) fail(ErrorCode::invalid_argument, std::string(what) + " must not be null");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Rational rational_arg(const char* text, const char* what) {
  need(text, what);
  return parse_rational(text);
}

std::string text_arg(const char* text, const char* what) {
  need(text, what);
  return text;
}

ProjectionOp op_arg(const char* op) { return parse_projection_op(text_arg(op, "op")); }

SupportFamily family_arg(const char* family) { return family ? parse_support_family(family) : SupportFamily::all; }

PreimageFilter filter_arg(const char* filter) {
  const std::string name = filter ? filter : "none";
  if (name == "none") return PreimageFilter::none;
  if (name == "permutation") return PreimageFilter::contains_permutation;
  if (name == "degree") return PreimageFilter::positive_degrees;
  fail(ErrorCode::invalid_argument, "unknown preimage filter '" + name + "' (expected none, permutation, degree)");
}

nlohmann::json graph_json(const DirectedGraph& g) { return {{"n", g.size()}, {"rows", graph_row_strings(g)}}; }

std::vector<LevelParams> grid_arg(const char* grid) {
  if (!grid) return default_parameter_grid();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(grid);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::parse, std::string("parameter grid is not valid JSON: ") + e.what());
  }
  require(doc.is_array(), ErrorCode::parse, "parameter grid must be a JSON array");
  std::vector<LevelParams> out;
  for (const auto& point : doc) {
    auto field = [&](const char* key) {
      require(point.is_object() && point.contains(key) && point[key].is_string(), ErrorCode::parse,
              std::string("grid point is missing the string field '") + key + "'");
      return parse_rational(point[key].get<std::string>());
    };
    LevelParams p{field("alpha_n"), field("beta_n"), field("alpha_next"), field("beta_next")};
    p.validate();
    out.push_back(p);
  }
  return out;
}

}  // namespace

extern "C" {

const char* pg_version(void) { return "0.1.0"; }

const char* pg_last_error(void) { return last_error.c_str(); }

const char* pg_status_name(pg_status status) {
  switch (status) {
    case PG_OK: return "ok";
    case PG_ERR_DIMENSION: return "dimension";
    case PG_ERR_CAPACITY: return "capacity";
    case PG_ERR_PARSE: return "parse";
    case PG_ERR_DOMAIN: return "domain";
    case PG_ERR_UNDERFLOW: return "underflow";
    case PG_ERR_IO: return "io";
    case PG_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case PG_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void pg_string_free(char* s) { std::free(s); }

pg_status pg_rational_parse(const char* text, char** canonical, int* sign) {
  return guarded([&] {
    need(canonical, "canonical");
    need(sign, "sign");
    const Rational value = rational_arg(text, "text");
    *canonical = copy_string(to_fraction_string(value));
    *sign = sgn(value);
  });
}

// --- graphs ----------------------------------------------------------------

pg_status pg_graph_parse(const char* text, pg_graph** out) {
  return guarded([&] {
    need(out, "out");
    *out = new pg_graph{parse_graph(text_arg(text, "text"))};
  });
}

pg_status pg_graph_read_file(const char* path, pg_graph** out) {
  return guarded([&] {
    need(out, "out");
    *out = new pg_graph{read_graph_file(text_arg(path, "path"))};
  });
}

pg_status pg_graph_from_rows(size_t n, const uint32_t* rows, pg_graph** out) {
  return guarded([&] {
    need(out, "out");
    need(rows, "rows");
    *out = new pg_graph{DirectedGraph::from_rows(std::span(rows, n))};
  });
}

pg_status pg_graph_witness(int which, pg_graph** out) {
  return guarded([&] {
    need(out, "out");
    require(which == 1 || which == 2, ErrorCode::invalid_argument, "witness graph index must be 1 or 2");
    *out = new pg_graph{which == 1 ? witness_graph_g1() : witness_graph_g2()};
  });
}

pg_graph* pg_graph_clone(const pg_graph* g) { return g ? new (std::nothrow) pg_graph{g->value} : nullptr; }
void pg_graph_free(pg_graph* g) { delete g; }
size_t pg_graph_size(const pg_graph* g) { return g ? g->value.size() : 0; }
size_t pg_graph_edge_count(const pg_graph* g) { return g ? g->value.edge_count() : 0; }

int pg_graph_has_edge(const pg_graph* g, size_t i, size_t j) {
  if (!g || i >= g->value.size() || j >= g->value.size()) return 0;
  return g->value.has_edge(i, j) ? 1 : 0;
}

uint32_t pg_graph_row(const pg_graph* g, size_t i) {
  return g && i < g->value.size() ? g->value.row(i) : 0;
}

int pg_graph_equal(const pg_graph* a, const pg_graph* b) { return a && b && a->value == b->value ? 1 : 0; }

pg_status pg_graph_format(const pg_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = copy_string(format_graph(g->value));
  });
}

pg_status pg_graph_to_json(const pg_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = copy_string(graph_json(g->value).dump());
  });
}

pg_status pg_graph_list_parse(const char* text, pg_graph_list** out) {
  return guarded([&] {
    need(out, "out");
    auto list = std::make_unique<pg_graph_list>();
    for (const auto& g : parse_graphs(text_arg(text, "text"))) list->items.push_back(pg_graph{g});
    *out = list.release();
  });
}

size_t pg_graph_list_size(const pg_graph_list* list) { return list ? list->items.size() : 0; }

const pg_graph* pg_graph_list_at(const pg_graph_list* list, size_t i) {
  return list && i < list->items.size() ? &list->items[i] : nullptr;
}

void pg_graph_list_free(pg_graph_list* list) { delete list; }

// --- permutations ----------------------------------------------------------

pg_status pg_perm_parse(const char* text, size_t n, pg_perm** out) {
  return guarded([&] {
    need(out, "out");
    *out = new pg_perm{parse_permutation(text_arg(text, "text"), n)};
  });
}

void pg_perm_free(pg_perm* p) { delete p; }
size_t pg_perm_size(const pg_perm* p) { return p ? p->value.size() : 0; }
size_t pg_perm_cycle_count(const pg_perm* p) { return p ? p->value.cycle_count() : 0; }

pg_status pg_perm_format(const pg_perm* p, char** out) {
  return guarded([&] {
    need(p, "permutation");
    need(out, "out");
    *out = copy_string(format_cycles(p->value));
  });
}

pg_status pg_perm_to_graph(const pg_perm* p, pg_graph** out) {
  return guarded([&] {
    need(p, "permutation");
    need(out, "out");
    *out = new pg_graph{permutation_to_graph(p->value)};
  });
}

// --- permanent -------------------------------------------------------------

pg_status pg_permanent_value(const pg_graph* g, const char* alpha, int brute, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    const Rational a = rational_arg(alpha, "alpha");
    const Rational value =
        brute ? alpha_permanent_bruteforce(g->value, a) : cycle_polynomial(g->value).evaluate(a);
    *out = copy_string(to_fraction_string(value));
  });
}

pg_status pg_cycle_polynomial(const pg_graph* g, unsigned threads, int accept_cost, pg_cyclepoly** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    DpOptions options;
    options.threads = threads == 0 ? 1 : threads;
    options.policy = accept_cost ? CostPolicy::accept_cost : CostPolicy::enforce;
    *out = new pg_cyclepoly{cycle_polynomial(g->value, options)};
  });
}

pg_status pg_cycle_polynomial_bruteforce(const pg_graph* g, pg_cyclepoly** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = new pg_cyclepoly{cycle_polynomial_bruteforce(g->value)};
  });
}

void pg_cyclepoly_free(pg_cyclepoly* p) { delete p; }
size_t pg_cyclepoly_size(const pg_cyclepoly* p) { return p ? p->value.size() : 0; }

pg_status pg_cyclepoly_coefficient(const pg_cyclepoly* p, size_t k, char** out) {
  return guarded([&] {
    need(p, "polynomial");
    need(out, "out");
    *out = copy_string(to_string(p->value.coefficient(k)));
  });
}

pg_status pg_cyclepoly_evaluate(const pg_cyclepoly* p, const char* alpha, char** out) {
  return guarded([&] {
    need(p, "polynomial");
    need(out, "out");
    *out = copy_string(to_fraction_string(p->value.evaluate(rational_arg(alpha, "alpha"))));
  });
}

int pg_cyclepoly_equal(const pg_cyclepoly* a, const pg_cyclepoly* b) {
  return a && b && a->value == b->value ? 1 : 0;
}

// --- pgm -------------------------------------------------------------------

pg_status pg_pgm_normalizer(size_t n, const char* alpha, const char* beta, const char* family, int brute,
                            char** out) {
  return guarded([&] {
    need(out, "out");
    const PgmParams params{n, rational_arg(alpha, "alpha"), rational_arg(beta, "beta")};
    const SupportFamily f = family_arg(family);
    const Rational z = (brute || f != SupportFamily::all) ? normalizer_bruteforce(params, f)
                                                           : normalizer_closed_form(params);
    *out = copy_string(to_fraction_string(z));
  });
}

pg_status pg_pgm_pmf(const pg_graph* g, const char* alpha, const char* beta, const char* family, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    const PgmParams params{g->value.size(), rational_arg(alpha, "alpha"), rational_arg(beta, "beta")};
    *out = copy_string(to_fraction_string(pmf(g->value, params, family_arg(family))));
  });
}

pg_status pg_pgm_family_contains(const char* family, const pg_graph* g, int* out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = family_contains(family_arg(family), g->value) ? 1 : 0;
  });
}

pg_status pg_pgm_degree_pmf(size_t n, const char* beta, size_t k, char** out) {
  return guarded([&] {
    need(out, "out");
    *out = copy_string(to_fraction_string(degree_pmf(n, rational_arg(beta, "beta"), k)));
  });
}

pg_status pg_pgm_expected_edges(size_t n, const char* beta, char** out) {
  return guarded([&] {
    need(out, "out");
    *out = copy_string(to_fraction_string(expected_edges(n, rational_arg(beta, "beta"))));
  });
}

pg_status pg_pgm_total_variation(size_t n, const char* alpha, const char* beta, char** out) {
  return guarded([&] {
    need(out, "out");
    const PgmParams params{n, rational_arg(alpha, "alpha"), rational_arg(beta, "beta")};
    *out = copy_string(to_fraction_string(total_variation_to_erdos_renyi(params)));
  });
}

pg_status pg_pgm_exchangeability(size_t n, const char* alpha, const char* beta, size_t trials, uint64_t seed,
                                 int* out) {
  return guarded([&] {
    need(out, "out");
    const PgmParams params{n, rational_arg(alpha, "alpha"), rational_arg(beta, "beta")};
    *out = exchangeability_check(params, trials, seed) ? 1 : 0;
  });
}

pg_status pg_pgm_sampler_new(size_t n, const char* alpha, const char* beta, uint64_t seed,
                             pg_pgm_sampler** out) {
  return guarded([&] {
    need(out, "out");
    const PgmParams params{n, rational_arg(alpha, "alpha"), rational_arg(beta, "beta")};
    *out = new pg_pgm_sampler{PgmSampler(params, seed)};
  });
}

pg_status pg_pgm_sampler_draw(pg_pgm_sampler* s, pg_graph** out) {
  return guarded([&] {
    need(s, "sampler");
    need(out, "out");
    *out = new pg_graph{s->value.draw()};
  });
}

size_t pg_pgm_sampler_size(const pg_pgm_sampler* s) { return s ? s->value.params().n : 0; }

pg_status pg_pgm_sampler_draw_cells(pg_pgm_sampler* s, uint8_t* cells, size_t capacity) {
  return guarded([&] {
    need(s, "sampler");
    need(cells, "cells");
    const std::size_t n = s->value.params().n;
    require(capacity >= n * n, ErrorCode::dimension,
            "cell buffer holds " + std::to_string(capacity) + ", need " + std::to_string(n * n));
    const DenseGraph g = s->value.draw_dense();
    std::copy(g.cells().begin(), g.cells().end(), cells);
  });
}

void pg_pgm_sampler_free(pg_pgm_sampler* s) { delete s; }

// --- crp -------------------------------------------------------------------

pg_status pg_crp_rising_factorial(const char* alpha, size_t n, char** out) {
  return guarded([&] {
    need(out, "out");
    *out = copy_string(to_fraction_string(rising_factorial(rational_arg(alpha, "alpha"), n)));
  });
}

pg_status pg_crp_ewens_pmf(const pg_perm* p, const char* alpha, char** out) {
  return guarded([&] {
    need(p, "permutation");
    need(out, "out");
    *out = copy_string(to_fraction_string(ewens_pmf(p->value, rational_arg(alpha, "alpha"))));
  });
}

pg_status pg_crp_partition_pmf(const char* partition, const char* alpha, char** out) {
  return guarded([&] {
    need(out, "out");
    const Partition pi = parse_partition(text_arg(partition, "partition"));
    *out = copy_string(to_fraction_string(crp_partition_pmf(pi, rational_arg(alpha, "alpha"))));
  });
}

pg_status pg_crp_sampler_new(size_t n, const char* alpha, uint64_t seed, pg_crp_sampler** out) {
  return guarded([&] {
    need(out, "out");
    *out = new pg_crp_sampler{CrpSampler(EwensParams{n, rational_arg(alpha, "alpha")}, seed)};
  });
}

pg_status pg_crp_sampler_draw_permutation(pg_crp_sampler* s, pg_perm** out) {
  return guarded([&] {
    need(s, "sampler");
    need(out, "out");
    *out = new pg_perm{s->value.draw_permutation()};
  });
}

pg_status pg_crp_sampler_draw_partition(pg_crp_sampler* s, char** out) {
  return guarded([&] {
    need(s, "sampler");
    need(out, "out");
    *out = copy_string(format_partition(s->value.draw_partition()));
  });
}

void pg_crp_sampler_free(pg_crp_sampler* s) { delete s; }

pg_status pg_crp_check(size_t n, const char* alpha, const char* op, char** report, int* pass) {
  return guarded([&] {
    need(report, "report");
    need(pass, "pass");
    const Rational a = rational_arg(alpha, "alpha");
    const ProjectionOp projection = op ? parse_projection_op(op) : ProjectionOp::delete_and_repair;
    const CrpConsistencyReport r = crp_consistency_check(n, a, projection);
    nlohmann::json doc = {{"n", n},
                          {"alpha", to_fraction_string(a)},
                          {"op", std::string(to_string(projection))},
                          {"pass", r.pass},
                          {"census_ok", r.census_ok},
                          {"checked", r.checked},
                          {"violation", nullptr}};
    if (r.first_violation)
      doc["violation"] = {{"permutation", format_cycles(*r.first_violation)},
                          {"expected", to_fraction_string(r.expected)},
                          {"observed", to_fraction_string(r.observed)}};
    *report = copy_string(doc.dump());
    *pass = r.pass ? 1 : 0;
  });
}

pg_status pg_crp_partition_check(size_t n, const char* alpha, int* pass) {
  return guarded([&] {
    need(pass, "pass");
    *pass = crp_partition_consistency_check(n, rational_arg(alpha, "alpha")) ? 1 : 0;
  });
}

// --- projection ------------------------------------------------------------

pg_status pg_project(const pg_graph* g, const char* op, pg_graph** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = new pg_graph{project(g->value, op_arg(op))};
  });
}

pg_status pg_preimages(const pg_graph* g, const char* op, const char* filter, pg_graph_list** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    const PreimageSet set = preimages(g->value, op_arg(op), filter_arg(filter));
    auto list = std::make_unique<pg_graph_list>();
    list->items.reserve(set.size());
    for (const auto& h : set) list->items.push_back(pg_graph{h});
    *out = list.release();
  });
}

pg_status pg_preimage_count(const pg_graph* g, const char* op, const char* filter, uint64_t* out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = count_preimages(g->value, op_arg(op), filter_arg(filter));
  });
}

// --- bivariate polynomials -------------------------------------------------

void pg_bipoly_free(pg_bipoly* p) { delete p; }
size_t pg_bipoly_term_count(const pg_bipoly* p) { return p ? p->value.term_count() : 0; }

pg_status pg_bipoly_coefficient(const pg_bipoly* p, size_t a_exp, size_t b_exp, char** out) {
  return guarded([&] {
    need(p, "polynomial");
    need(out, "out");
    *out = copy_string(to_string(p->value.coefficient(a_exp, b_exp)));
  });
}

int pg_bipoly_uniform_sign(const pg_bipoly* p) { return p ? p->value.uniform_sign() : 0; }

pg_status pg_bipoly_evaluate(const pg_bipoly* p, const char* a, const char* b, char** out) {
  return guarded([&] {
    need(p, "polynomial");
    need(out, "out");
    *out = copy_string(to_fraction_string(p->value.evaluate(rational_arg(a, "a"), rational_arg(b, "b"))));
  });
}

pg_status pg_bipoly_to_string(const pg_bipoly* p, char** out) {
  return guarded([&] {
    need(p, "polynomial");
    need(out, "out");
    *out = copy_string(p->value.to_string());
  });
}

pg_status pg_bipoly_to_json(const pg_bipoly* p, char** out) {
  return guarded([&] {
    need(p, "polynomial");
    need(out, "out");
    *out = copy_string(p->value.to_json().dump());
  });
}

int pg_bipoly_equal(const pg_bipoly* x, const pg_bipoly* y) { return x && y && x->value == y->value ? 1 : 0; }

// --- consistency -----------------------------------------------------------

pg_status pg_ltp_rhs(const pg_graph* g, const char* op, const char* family, pg_bipoly** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = new pg_bipoly{ltp_rhs(g->value, op_arg(op), family_arg(family))};
  });
}

pg_status pg_denominator_polynomial(const pg_graph* g, pg_bipoly** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = new pg_bipoly{denominator_polynomial(g->value)};
  });
}

pg_status pg_dr_difference_certificate(pg_bipoly** out) {
  return guarded([&] {
    need(out, "out");
    *out = new pg_bipoly{dr_difference_certificate()};
  });
}

pg_status pg_ss_rhs_closed_form(const pg_graph* g, pg_bipoly** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = new pg_bipoly{ss_rhs_closed_form(g->value)};
  });
}

pg_status pg_ss_rhs_complete_form(const pg_graph* g, pg_bipoly** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = new pg_bipoly{ss_rhs_complete_form(g->value)};
  });
}

pg_status pg_witness_pair_certificate(const pg_graph* g1, const pg_graph* g2, const char* op, char** report) {
  return guarded([&] {
    need(g1, "g1");
    need(g2, "g2");
    need(report, "report");
    *report = copy_string(witness_pair_certificate(g1->value, g2->value, op_arg(op)).dump());
  });
}

pg_status pg_consistency_check(const char* op, const char* family, size_t n, const char* grid, unsigned threads,
                               int accept_cost, char** report, int* pass) {
  return guarded([&] {
    need(report, "report");
    need(pass, "pass");
    LtpOptions options;
    options.threads = threads == 0 ? 1 : threads;
    options.accept_cost = accept_cost != 0;
    const LtpVerdict verdict = ltp_check(op_arg(op), family_arg(family), n, grid_arg(grid), options);
    *report = copy_string(verdict.report.dump());
    *pass = verdict.pass ? 1 : 0;
  });
}

pg_status pg_ss_contradiction_chain(size_t n, char** report, int* pass) {
  return guarded([&] {
    need(report, "report");
    need(pass, "pass");
    const nlohmann::json doc = ss_contradiction_chain(n);
    *report = copy_string(doc.dump());
    *pass = doc["pass"].get<bool>() ? 1 : 0;
  });
}

}  // extern "C"
