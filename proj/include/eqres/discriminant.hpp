#ifndef EQRES_DISCRIMINANT_HPP
#define EQRES_DISCRIMINANT_HPP

#include <string_view>
#include <utility>
#include <vector>

#include "eqres/combinatorics.hpp"
#include "eqres/divdiff.hpp"
#include "eqres/equivariant.hpp"
#include "eqres/factored.hpp"
#include "eqres/ring.hpp"

namespace eqres {

// e_p(x_1, ..., x_n); zero of degree p when p > n.
Polynomial elementary(int p, int n);
// e_{lambda_1} e_{lambda_2} ... expanded.
Polynomial expand_elementary(const Partition& lambda, int n);
// d e_j / d x_i = sum_{r=0}^{j-1} (-1)^r x_i^r e_{j-1-r}  (i is 0-based).
Polynomial elementary_partial(int j, int i, int n);

// Partitions of d with parts <= n, in reverse-lexicographic order: the
// e_lambda basis of symmetric forms of degree d in n variables.
std::vector<Partition> symmetric_basis(int n, int d);

// sum c_lambda e_lambda over symmetric_basis(n, d).
struct SymmetricPoly {
  int n = 0;
  int d = 0;
  ParameterRing ring;
  std::vector<std::pair<Partition, Coefficient>> coeffs;

  // Missing basis elements get coefficient 0; unknown keys are rejected.
  static SymmetricPoly make(int n, int d, std::vector<std::pair<Partition, Coefficient>> coeffs,
                            ParameterRing ring = {});
  // One parameter per basis element, named c<compact partition>: c3, c21, c111.
  static SymmetricPoly generic(int n, int d);

  const Coefficient& coefficient(const Partition& lambda) const;
  Polynomial expand() const;
};

// Coefficient assignments such as "c3=1, c21=-1, c111=0" or "c[2,1]=2",
// separated by commas, semicolons or newlines ('#' starts a comment). Keys
// may also be written c2_10_1. Values are expressions in the generic symbols
// c3, c21, ...; omitted basis elements get 0. "generic" alone gives
// SymmetricPoly::generic(n, d).
SymmetricPoly parse_symmetric(int n, int d, std::string_view spec);

// The n partials, built with the chain rule in the e_lambda basis.
EquivariantSystem partial_derivatives(const SymmetricPoly& f);

// ((d-1)^n - (-1)^n) / d
Integer a_exponent(int n, int d);

struct DiscriminantResult {
  Integer a;
  // The overall sign is (-1)^epsilon; epsilon = n - 1 for d = 2, else 0.
  int epsilon = 0;
  // d^a Disc = (-1)^epsilon * factored.expand(). For d <= n the prefactor
  // is c_(d)^{m0}.
  FactoredResultant factored;

  Coefficient scaled_value() const;  // d^a Disc
  Coefficient value(int d) const;    // Disc
};

DiscriminantResult discriminant_decomposition(const SymmetricPoly& f, const DecomposeOptions& options = {});

// Res(partials) / d^a computed directly from the Macaulay resultant.
Coefficient discriminant_value(const SymmetricPoly& f);

}  // namespace eqres

#endif
