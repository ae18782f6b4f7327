// Text expressions over the algebras of one Cartan datum.
//
// Grammar: sums and differences of products; factors are scalars (integers,
// u, q = u^2, v = u^4, parenthesized sums), generators with a 1-based index
// and parenthesized expressions, each optionally raised to an integer power.
// Juxtaposition multiplies. Division is allowed by scalars only.
//
// Contexts and generators:
//   f      t[i]                       (Serre-reduced free algebra)
//   borel  t[i], h[i]                 (ordinary product of B~)
//   star   t[i], h[i]                 (star product of B~^i_tau)
//   u      E[i], F[i], K[i], K'[i]    (Drinfeld double U~)
//   iword  B[i], k[i]                 (formal words in U~^i, embedded into U~)
// Negative powers are allowed on torus generators only.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ihopf/cartan.hpp"

namespace ihopf {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EvalResult {
  std::string normal_form;
  // distinct gradings of the terms, ascending: ϑ-weights, Z^I degrees or generator weights
  std::vector<std::string> gradings;
  // extra line: the embedding into U~ for iwords, empty otherwise
  std::string embedding;
};

const std::vector<std::string>& eval_contexts();
// throws ParseError on malformed input or an unknown context
EvalResult eval_expression(const std::string& expr, const std::string& context, const CartanData& cd,
                           int truncation = 8);

}  // namespace ihopf
