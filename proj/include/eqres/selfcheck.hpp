#ifndef EQRES_SELFCHECK_HPP
#define EQRES_SELFCHECK_HPP

#include <string>
#include <vector>

namespace eqres {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Closed-form identities for small cases: linear systems, quadratic
// systems and their length-two factors, the averaging constant, quadric and
// cubic discriminants, the Clebsch cubic, normalization, degree counts.
std::vector<CheckResult> run_selfcheck();

}  // namespace eqres

#endif
