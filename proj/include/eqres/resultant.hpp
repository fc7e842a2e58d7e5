#ifndef EQRES_RESULTANT_HPP
#define EQRES_RESULTANT_HPP

#include <cstdint>
#include <vector>

#include "eqres/matrix.hpp"
#include "eqres/ring.hpp"

namespace eqres {

// All monomials of total degree t in n variables, lex (= graded lex) descending.
std::vector<Exponents> monomials_of_degree(std::size_t n, unsigned t);

// Smallest i with x_i^{d_i} | x^alpha. Throws InvalidArgument if there is none.
std::size_t index_function(const Exponents& alpha, std::span<const int> degrees);

// Monomials of degree t divisible by x_i^{d_i} x_j^{d_j} for some i != j,
// in the same order as monomials_of_degree.
std::vector<Exponents> dod_monomials(std::size_t n, std::span<const int> degrees, unsigned t);

struct MacaulayData {
  unsigned t = 0;
  std::vector<Exponents> mon;
  std::vector<Exponents> dod;
  // Column beta holds (x^beta / x_i^{d_i}) f_i with i = i(beta); rows follow mon.
  SquareMatrix<Coefficient> M;
  SquareMatrix<Coefficient> D;
};

// Builds the matrices at t = sum(d_i - 1) + 1.
MacaulayData build_macaulay(const std::vector<Polynomial>& polys);

// Resultant normalized by Res(x_1^{d_1}, ..., x_n^{d_n}) = 1.
Coefficient macaulay_resultant(const std::vector<Polynomial>& polys);

// Same value through Res(f_i + s x_i^{d_i}) = det(M + sI) / det(D + sI),
// interpolated at s = 0. Never needs a change of variables; slower.
Coefficient perturbed_resultant(const std::vector<Polynomial>& polys);

// Classical Sylvester determinant for two binary forms.
Coefficient sylvester_resultant(const Polynomial& p, const Polynomial& q);

// x_i -> sum_j phi[i][j] x_j applied to every polynomial.
std::vector<Polynomial> apply_linear_change(const std::vector<Polynomial>& polys,
                                            const SquareMatrix<Integer>& phi);

// Product of random elementary operations with multipliers in [-2, 2];
// determinant 1.
SquareMatrix<Integer> random_unimodular(std::size_t n, std::uint64_t seed);

}  // namespace eqres

#endif
