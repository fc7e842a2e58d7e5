#include "eqres/factored.hpp"

#include "eqres/error.hpp"

namespace eqres {

namespace {

unsigned long small_exponent(const Integer& e) {
  if (sgn(e) < 0 || !e.fits_ulong_p()) throw InvalidArgument("multiplicity out of range for expansion");
  return e.get_ui();
}

}  // namespace

Coefficient FactoredResultant::expand() const {
  Coefficient out = prefactor;
  for (const auto& f : factors) out *= f.value.pow(small_exponent(f.multiplicity));
  return out;
}

Integer FactoredResultant::evaluate(std::span<const Integer> parameters) const {
  Integer out = prefactor.evaluate(parameters);
  for (const auto& f : factors) out *= ipow(f.value.evaluate(parameters), small_exponent(f.multiplicity));
  return out;
}

}  // namespace eqres
