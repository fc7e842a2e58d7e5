#ifndef EQRES_DIVDIFF_HPP
#define EQRES_DIVDIFF_HPP

#include <map>
#include <optional>
#include <vector>

#include "eqres/ring.hpp"

namespace eqres {

// Sorted, duplicate-free, 0-based variable indices.
using Subset = std::vector<int>;

struct EquivarianceReport {
  bool ok = true;
  // First failure: the transposition (swap, swap + 1) sends F^{index} to the
  // wrong polynomial.
  int swap = -1;
  int index = -1;
};

// Checks sigma(F^i) == F^{sigma(i)} for every adjacent transposition sigma.
EquivarianceReport check_equivariance(const std::vector<Polynomial>& polys);

// n homogeneous polynomials of degree d in n variables, verified equivariant.
class EquivariantSystem {
 public:
  // Throws NotEquivariant when the check fails.
  EquivariantSystem(std::vector<Polynomial> polys, ParameterRing ring = {});

  int n() const { return static_cast<int>(polys_.size()); }
  int d() const { return degree_; }
  const std::vector<Polynomial>& polys() const { return polys_; }
  const ParameterRing& ring() const { return ring_; }

 private:
  std::vector<Polynomial> polys_;
  ParameterRing ring_;
  int degree_ = 0;
};

// Divided differences P^I of a family P^{i} with (x_i - x_j) | P^{i} - P^{j}.
//
// The primary route is the recurrence
//   (x_q - x_p) P^I = P^{I \ p} - P^{I \ q},  p = max I, q = second max I,
// with every subset cached independently. The bordered-Vandermonde
// determinant route is kept as an independent check.
class DividedDifferenceTable {
 public:
  explicit DividedDifferenceTable(const EquivariantSystem& system);
  // Families that only satisfy the divisibility hypothesis, e.g. the
  // specialized systems F_lambda^{i}.
  static DividedDifferenceTable from_divisible_family(std::vector<Polynomial> polys);

  int n() const { return static_cast<int>(base_.size()); }
  int d() const { return degree_; }

  const Polynomial& get(const Subset& subset);
  // Recurrence with an explicit choice of p != q in the subset.
  Polynomial recursive(const Subset& subset, int p, int q);
  Polynomial by_determinant(const Subset& subset) const;

  // Common value of P^I over |I| = d + 1 (requires n >= d + 1). Compares a
  // handful of (d+1)-subsets and throws Mismatch on disagreement.
  Coefficient top_constant();

  // After freezing, get() only serves cached subsets.
  void freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }
  const Polynomial& at(const Subset& subset) const;
  std::size_t cached() const { return cache_.size(); }

 private:
  DividedDifferenceTable(std::vector<Polynomial> polys, int degree);
  void validate(const Subset& subset) const;

  std::vector<Polynomial> base_;
  int degree_ = 0;
  std::map<Subset, Polynomial> cache_;
  bool frozen_ = false;
};

// prod_{s<r} (x_{i_r} - x_{i_s}) over the subset, in a ring with `ambient` variables.
Polynomial vandermonde(const Subset& subset, std::size_t ambient);

}  // namespace eqres

#endif
