#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "permgraph/bivariate.hpp"
#include "permgraph/exact.hpp"
#include "permgraph/graphs.hpp"
#include "permgraph/pgm.hpp"
#include "permgraph/projection.hpp"

namespace permgraph {

// Polynomials in this module use a = alpha and b = beta of the level they
// are attached to: numerators live at level n+1, denominators at level n.

/// The 4-vertex witness graphs: both carry 7 edges and contain exactly two
/// permutations each, (1234)+(12)(34) and (1234)+(123)(4).
DirectedGraph witness_graph_g1();
DirectedGraph witness_graph_g2();

/// sum over preimages G' (restricted to the family at level n+1) of
/// b^{#G'} per_a(G'), as an exact polynomial.
BivariatePolynomial ltp_rhs(const DirectedGraph& g, ProjectionOp op,
                            SupportFamily family = SupportFamily::all);
BivariatePolynomial ltp_rhs_dr(const DirectedGraph& g);
BivariatePolynomial ltp_rhs_ss(const DirectedGraph& g);

/// b^{#G} per_a(G) as a polynomial.
BivariatePolynomial denominator_polynomial(const DirectedGraph& g);
/// beta^{#G} per_alpha(G); n <= 10.
Rational denominator(const DirectedGraph& g, const Rational& alpha, const Rational& beta);

/// ltp_rhs_dr(G2) - ltp_rhs_dr(G1).
BivariatePolynomial dr_difference_certificate();

/// Parameters of two consecutive levels.
struct LevelParams {
  Rational alpha_n{1};
  Rational beta_n{1};
  Rational alpha_next{1};
  Rational beta_next{1};

  void validate() const;
};

/// The 3 x 3 grid alpha in {1/2, 1, 3}, beta in {1/3, 1, 2}, held constant
/// across levels.
std::vector<LevelParams> default_parameter_grid();

struct LtpOptions {
  unsigned threads = 1;
  /// Allows exhaustive scans beyond the default size limits.
  bool accept_cost = false;
};

struct LtpVerdict {
  bool pass = false;
  /// "exhaustive" or "witness-pair-certificate".
  std::string method;
  nlohmann::json report;
};

/// Checks P_n(G) = sum_{G' : phi(G') = G} P_{n+1}(G') for every G in the
/// family. Exhaustive for small n (all: n <= 3, permutation families:
/// n <= 5, partitions: n <= 5), evaluated exactly at every grid point. For
/// op = dr, family = all, n = 4 the fixed witness pair is used instead: equal
/// denominators and a difference of numerators with strictly one-signed
/// coefficients give a parameter-free FAIL.
LtpVerdict ltp_check(ProjectionOp op, SupportFamily family, std::size_t n,
                     const std::vector<LevelParams>& grid, const LtpOptions& options = {});

/// Parameter-free comparison of two graphs: FAIL certificate when the
/// denominators agree as polynomials and the numerator difference has
/// one-signed coefficients.
nlohmann::json witness_pair_certificate(const DirectedGraph& g1, const DirectedGraph& g2,
                                        ProjectionOp op);

/// Closed form of the subselection preimage mass, valid for every G:
/// b^{#G+1}(1+b)^{2n} a per_a(G) + b^{#G+2}(1+b)^{2n-1} sum_i per_a(G with
/// row i set to all ones).
BivariatePolynomial ss_rhs_closed_form(const DirectedGraph& g);

/// The G-independent form b^{#G+1}(1+b)^{2n} a a_{n up 1} +
/// b^{#G+2}(1+b)^{2n-1} n a_{n up 1}; it agrees with the general one only
/// when G contains every permutation.
BivariatePolynomial ss_rhs_complete_form(const DirectedGraph& g);

/// Runs each step of the subselection refutation and returns a JSON
/// document {"n":..,"pass":..,"steps":[{"name":..,"pass":..,...},...]}.
nlohmann::json ss_contradiction_chain(std::size_t n);

}  // namespace permgraph
