#ifndef EQRES_TESTS_SUPPORT_HPP
#define EQRES_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "eqres/ring.hpp"

namespace eqres::testing {

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// Random coefficient in `vars` parameters with up to `terms` terms of degree <= max_degree.
inline Coefficient random_coefficient(std::mt19937_64& rng, std::size_t vars, int terms, unsigned max_degree,
                                      long bound = 9) {
  std::vector<Coefficient::Term> out;
  for (int t = 0; t < terms; ++t) {
    Exponents e;
    for (std::size_t v = 0; v < vars; ++v) e.set(v, static_cast<unsigned>(uniform(rng, 0, max_degree)));
    out.emplace_back(e, Integer(uniform(rng, -bound, bound)));
  }
  return Coefficient::from_terms(std::move(out));
}

// Every monomial of degree `degree` in `ambient` variables.
inline void monomials(std::size_t ambient, unsigned degree, std::size_t index, Exponents& current,
                      std::vector<Exponents>& out) {
  if (index + 1 == ambient) {
    current.set(index, degree);
    out.push_back(current);
    current.set(index, 0);
    return;
  }
  for (unsigned e = 0; e <= degree; ++e) {
    current.set(index, e);
    monomials(ambient, degree - e, index + 1, current, out);
  }
  current.set(index, 0);
}

// Dense random homogeneous polynomial with integer coefficients.
inline Polynomial random_form(std::mt19937_64& rng, std::size_t ambient, int degree, long bound = 5) {
  std::vector<Exponents> mons;
  Exponents current;
  monomials(ambient, static_cast<unsigned>(degree), 0, current, mons);
  std::vector<Polynomial::Term> terms;
  for (const auto& e : mons) terms.emplace_back(e, Coefficient(Integer(uniform(rng, -bound, bound))));
  return Polynomial::from_terms(ambient, degree, std::move(terms));
}

// Random homogeneous polynomial whose coefficients are random parameter polynomials.
inline Polynomial random_symbolic_form(std::mt19937_64& rng, std::size_t ambient, int degree, std::size_t vars) {
  std::vector<Exponents> mons;
  Exponents current;
  monomials(ambient, static_cast<unsigned>(degree), 0, current, mons);
  std::vector<Polynomial::Term> terms;
  for (const auto& e : mons) terms.emplace_back(e, random_coefficient(rng, vars, 2, 2, 4));
  return Polynomial::from_terms(ambient, degree, std::move(terms));
}

inline std::vector<Integer> random_point(std::mt19937_64& rng, std::size_t size, long bound = 20) {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < size; ++i) out.emplace_back(uniform(rng, -bound, bound));
  return out;
}

}  // namespace eqres::testing

#endif
