#include <gtest/gtest.h>

#include <numeric>

#include "eqres/divdiff.hpp"
#include "eqres/equivariant.hpp"
#include "eqres/error.hpp"
#include "eqres/parser.hpp"
#include "support.hpp"

using namespace eqres;
using namespace eqres::testing;

namespace {

std::vector<Subset> all_subsets(int n) {
  std::vector<Subset> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Subset s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

// Complete homogeneous symmetric polynomial h_k of the variables in `subset`.
Polynomial complete_homogeneous(const Subset& subset, int k, std::size_t ambient) {
  if (k < 0) return Polynomial::zero(ambient, k);
  std::vector<Exponents> mons;
  Exponents current;
  monomials(subset.size(), static_cast<unsigned>(k), 0, current, mons);
  std::vector<Polynomial::Term> terms;
  for (const auto& m : mons) {
    Exponents e;
    for (std::size_t r = 0; r < subset.size(); ++r) e.set(subset[r], m[r]);
    terms.emplace_back(e, Coefficient(1));
  }
  return Polynomial::from_terms(ambient, k, std::move(terms));
}

}  // namespace

TEST(Equivariance, AcceptsAndRejects) {
  auto sys = parse_system(
      "n=3 d=1 params=a,b,c,d\n"
      "(a + d)*x1 + b*x2 + c*x3\n"
      "a*x1 + (b + d)*x2 + c*x3\n"
      "a*x1 + b*x2 + (c + d)*x3\n");
  auto report = check_equivariance(sys.polys);
  EXPECT_FALSE(report.ok);
  EXPECT_EQ(report.swap, 0);
  EXPECT_THROW(EquivariantSystem(sys.polys, sys.ring), NotEquivariant);

  auto good = parse_system("n=3 d=2 params=a,b\na*x1^2 + b*x1*x2 + b*x1*x3\na*x2^2 + b*x1*x2 + b*x2*x3\na*x3^2 + b*x1*x3 + b*x2*x3\n");
  EXPECT_TRUE(check_equivariance(good.polys).ok);
  EXPECT_NO_THROW(EquivariantSystem(good.polys, good.ring));

  std::vector<Polynomial> constant{Polynomial::constant(2, 1), Polynomial::constant(2, 1)};
  EXPECT_THROW(EquivariantSystem{constant}, InvalidArgument);
}

// Linear family that only satisfies the divisibility hypothesis.
TEST(DividedDifferences, NonEquivariantLinearFamily) {
  auto sys = parse_system(
      "n=3 d=1 params=a,b,c,d\n"
      "(a + d)*x1 + b*x2 + c*x3\n"
      "a*x1 + (b + d)*x2 + c*x3\n"
      "a*x1 + b*x2 + (c + d)*x3\n");
  auto table = DividedDifferenceTable::from_divisible_family(sys.polys);
  auto d = Polynomial::constant(3, Coefficient::variable(3));
  EXPECT_EQ(table.get({0, 1}), d);
  EXPECT_EQ(table.get({0, 2}), d);
  EXPECT_EQ(table.get({1, 2}), d);
  EXPECT_TRUE(table.get({0, 1, 2}).is_zero());
  EXPECT_TRUE(table.by_determinant({0, 1, 2}).is_zero());
  EXPECT_EQ(table.by_determinant({0, 2}), d);
}

TEST(DividedDifferences, PowerFamilyGivesCompleteHomogeneous) {
  for (int n = 2; n <= 5; ++n)
    for (int d = 1; d <= 4; ++d) {
      std::vector<Polynomial> polys;
      for (int i = 0; i < n; ++i) {
        Exponents e;
        e.set(i, d);
        polys.push_back(Polynomial::monomial(n, e, 1));
      }
      auto table = DividedDifferenceTable(EquivariantSystem(polys));
      for (const auto& s : all_subsets(n)) {
        int k = d - static_cast<int>(s.size()) + 1;
        auto got = table.get(s);
        if (k < 0)
          EXPECT_TRUE(got.is_zero());
        else
          EXPECT_EQ(got, complete_homogeneous(s, k, n));
      }
      if (n >= d + 1) EXPECT_EQ(table.top_constant(), Coefficient(1));
    }
}

TEST(DividedDifferences, RecurrenceMatchesDeterminantExhaustively) {
  std::mt19937_64 rng(7);
  for (int n = 2; n <= 4; ++n)
    for (int d = 1; d <= 3; ++d) {
      auto system = random_equivariant_system(n, d, rng);
      DividedDifferenceTable table(system);
      for (const auto& s : all_subsets(n)) {
        auto value = table.get(s);
        EXPECT_EQ(value, table.by_determinant(s)) << n << "," << d;
        if (static_cast<int>(s.size()) > d + 1) EXPECT_TRUE(value.is_zero());
        // Any pair (p, q) gives the same result.
        for (std::size_t a = 0; s.size() >= 2 && a < s.size(); ++a)
          for (std::size_t b = 0; b < s.size(); ++b)
            if (a != b) EXPECT_EQ(table.recursive(s, s[a], s[b]), value);
      }
    }
}

TEST(DividedDifferences, SymbolicGenericSystems) {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {3, 3}}) {
    auto system = generic_equivariant_system(n, d);
    DividedDifferenceTable table(system);
    for (const auto& s : all_subsets(n)) {
      if (s.size() > 3) continue;
      EXPECT_EQ(table.get(s), table.by_determinant(s)) << n << "," << d;
    }
  }
}

TEST(DividedDifferences, PermutationCovariance) {
  std::mt19937_64 rng(8);
  const int n = 4;
  auto system = random_equivariant_system(n, 3, rng);
  DividedDifferenceTable table(system);
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  do {
    for (const auto& s : all_subsets(n)) {
      Subset image;
      for (int i : s) image.push_back(static_cast<int>(sigma[i]));
      std::sort(image.begin(), image.end());
      EXPECT_EQ(remap_variables(table.get(s), sigma, n), table.get(image));
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

TEST(DividedDifferences, TopOrderIsAConstant) {
  std::mt19937_64 rng(9);
  for (int n = 2; n <= 5; ++n)
    for (int d = 1; d < n && d <= 3; ++d) {
      auto system = random_equivariant_system(n, d, rng);
      DividedDifferenceTable table(system);
      auto c = table.top_constant();
      for (const auto& s : all_subsets(n))
        if (static_cast<int>(s.size()) == d + 1) EXPECT_EQ(table.get(s), Polynomial::constant(n, c));
    }
  DividedDifferenceTable small(generic_equivariant_system(2, 2));
  EXPECT_THROW(small.top_constant(), InvalidArgument);
}

// For the generic quadratic system a x_i^2 + b x_i e1 + c e1^2 + d e2 the top
// divided difference is a.
TEST(DividedDifferences, GenericQuadraticTopConstant) {
  auto system = generic_equivariant_system(4, 2);
  DividedDifferenceTable table(system);
  EXPECT_EQ(print_coefficient(table.top_constant(), system.ring()), "a");
}

TEST(DividedDifferences, FreezeAndValidation) {
  std::mt19937_64 rng(10);
  DividedDifferenceTable table(random_equivariant_system(3, 2, rng));
  table.get({0, 1});
  table.freeze();
  EXPECT_NO_THROW(table.get({0, 1}));
  EXPECT_NO_THROW(table.at({0, 1}));
  EXPECT_THROW(table.get({0, 2}), InvalidArgument);
  EXPECT_THROW(table.at({1, 2}), InvalidArgument);
  DividedDifferenceTable other(random_equivariant_system(3, 2, rng));
  EXPECT_THROW(other.get({}), InvalidArgument);
  EXPECT_THROW(other.get({1, 0}), InvalidArgument);
  EXPECT_THROW(other.get({0, 3}), InvalidArgument);
  EXPECT_THROW(other.recursive({0, 1}, 0, 0), InvalidArgument);
  EXPECT_THROW(other.recursive({0, 1}, 0, 2), InvalidArgument);
}

TEST(DividedDifferences, RejectsNonDivisibleFamily) {
  auto sys = parse_system("n=2 d=1\nx1\n2*x2\n");
  auto table = DividedDifferenceTable::from_divisible_family(sys.polys);
  EXPECT_THROW(table.get({0, 1}), NotDivisible);
}

TEST(Vandermonde, Degree) {
  auto v = vandermonde({0, 1, 3}, 4);
  EXPECT_EQ(v.degree(), 3);
  std::vector<Integer> pt{2, 5, 0, 11};
  EXPECT_EQ(evaluate(v, pt), Coefficient((5 - 2) * (11 - 2) * (11 - 5)));
}
