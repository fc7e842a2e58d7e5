#ifndef EQRES_PARSER_HPP
#define EQRES_PARSER_HPP

// Text grammar for polynomials:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' integer)?
//   primary := integer | identifier | '(' expr ')'
//
// Identifiers are parameter names or main variables <prefix><k> with
// 1 <= k <= ambient. Implicit multiplication and unary '+' are rejected.

#include <string>
#include <string_view>
#include <vector>

#include "eqres/factored.hpp"
#include "eqres/ring.hpp"

namespace eqres {

struct ParseContext {
  std::size_t ambient = 0;
  ParameterRing ring;
  std::string variable_prefix = "x";
};

// Parses a homogeneous polynomial of the declared degree.
Polynomial parse_poly(std::string_view text, const ParseContext& ctx, int degree);
// Parses and infers the degree from the leading term (zero gets degree 0).
Polynomial parse_poly(std::string_view text, const ParseContext& ctx);
// Parses an expression in the parameters only.
Coefficient parse_coefficient(std::string_view text, const ParameterRing& ring);

std::string print_coefficient(const Coefficient& c, const ParameterRing& ring);
std::string print_poly(const Polynomial& p, const ParameterRing& ring,
                       std::string_view variable_prefix = "x");

// Header line `n=<int> d=<int> params=<comma list>` followed by n polynomial
// lines. Blank lines and lines starting with '#' are ignored.
struct SystemFile {
  int n = 0;
  int d = 0;
  ParameterRing ring;
  std::vector<Polynomial> polys;
};

SystemFile parse_system(std::string_view text);
std::string print_system(const SystemFile& system);

// {"prefactor": ..., "factors": [{"expr": ..., "multiplicity": ...}, ...]}
std::string emit_factored_json(const FactoredResultant& f, const ParameterRing& ring);

}  // namespace eqres

#endif
