#ifndef EQRES_FACTORED_HPP
#define EQRES_FACTORED_HPP

#include <string>
#include <vector>

#include "eqres/ring.hpp"

namespace eqres {

// One factor of a decomposition. `label` names the partition it comes from.
struct Factor {
  Coefficient value;
  Integer multiplicity;
  std::string label;
};

// prefactor * prod(value ^ multiplicity). The prefactor is the expanded power
// prefactor_base ^ prefactor_exponent (1 when there is none).
struct FactoredResultant {
  Coefficient prefactor{1};
  Coefficient prefactor_base{1};
  Integer prefactor_exponent{0};
  std::vector<Factor> factors;

  // Multiplies everything out.
  Coefficient expand() const;
  // Plugs integers into the parameters of every factor, then multiplies.
  Integer evaluate(std::span<const Integer> parameters) const;
};

}  // namespace eqres

#endif
