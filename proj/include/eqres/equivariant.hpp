#ifndef EQRES_EQUIVARIANT_HPP
#define EQRES_EQUIVARIANT_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "eqres/combinatorics.hpp"
#include "eqres/divdiff.hpp"
#include "eqres/factored.hpp"
#include "eqres/ring.hpp"

namespace eqres {

// Collapses consecutive blocks of x-variables of sizes lambda_1, lambda_2, ...
// onto y_1, y_2, ...
Polynomial rho_lambda(const Polynomial& p, const Partition& lambda);

// {0}, {0, lambda_1}, {0, lambda_1, lambda_1 + lambda_2}, ...: the first
// index of each block.
std::vector<Subset> chain_subsets(const Partition& lambda);

struct SpecializedSystem {
  Partition lambda;
  // rho_lambda(P^{chain_subsets[k]}) in y_1..y_l, of degrees d, d-1, ..., d-l+1.
  std::vector<Polynomial> polys;
};

// Throws InvalidArgument if l(lambda) > d or |lambda| != n.
SpecializedSystem specialize_chain(DividedDifferenceTable& table, const Partition& lambda);

struct DecomposeOptions {
  // Worker threads for the per-partition resultants.
  int jobs = 1;
};

// Res(F^1, ..., F^n) as a product over partitions of n.
FactoredResultant decompose_resultant(const EquivariantSystem& system, const DecomposeOptions& options = {});

enum class VerifyMode { Auto, Symbolic, Sampled };

struct VerificationReport {
  bool equal = false;
  VerifyMode mode = VerifyMode::Symbolic;
  // Symbolic mode: both sides as polynomials in the parameters.
  Coefficient decomposition;
  Coefficient direct;
  // Sampled mode: the parameter points and both values at each point.
  std::vector<std::vector<Integer>> points;
  std::vector<Integer> decomposition_values;
  std::vector<Integer> direct_values;
};

struct VerifyOptions {
  VerifyMode mode = VerifyMode::Auto;
  int samples = 4;
  std::uint64_t seed = 1;
  DecomposeOptions decompose;
};

// Compares the expanded decomposition against the Macaulay resultant of the
// whole system. Symbolic when cheap (or requested); otherwise both sides are
// evaluated exactly at random integer parameter points. Never throws on a
// mismatch.
VerificationReport verify_decomposition(const EquivariantSystem& system, const VerifyOptions& options = {});

struct AveragedChain {
  // Res(sum_{|I|=1} F_lambda^I, sum_{|I|=2} F_lambda^I, ..., F_lambda^{[l]}).
  Coefficient averaged;
  // Res(F_lambda^{1}, F_lambda^{1,2}, ..., F_lambda^{[l]}).
  Coefficient chain;
  // prod_{k=1}^{l-1} C(l,k)^{falling_quotient(d, l, k)}
  Integer predicted_constant;
  bool holds = false;
  // Resultant of the sums divided by C(l,k), when every division is exact.
  std::optional<Coefficient> divided;
};

AveragedChain averaged_chain_resultant(const EquivariantSystem& system, const Partition& lambda);

// F^i = sum_k x_i^k S_{d-k} with S_j a generic combination of the products
// e_mu, mu |- j, parts <= n. One fresh parameter per (k, mu); names run
// a, b, c, ... (skipping e and x), or p1, p2, ... when there are too many.
EquivariantSystem generic_equivariant_system(int n, int d);

// The generic system with every parameter replaced by a uniform integer in
// [-bound, bound].
EquivariantSystem random_equivariant_system(int n, int d, std::mt19937_64& rng, long bound = 5);

// Replaces every parameter by an integer.
EquivariantSystem specialize_parameters(const EquivariantSystem& system, std::span<const Integer> values);

}  // namespace eqres

#endif
