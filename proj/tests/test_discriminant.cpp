#include <gtest/gtest.h>

#include "eqres/discriminant.hpp"
#include "eqres/error.hpp"
#include "eqres/parser.hpp"
#include "eqres/resultant.hpp"
#include "support.hpp"

using namespace eqres;
using namespace eqres::testing;

namespace {

Polynomial power_sum(int p, int n) {
  Polynomial s = Polynomial::zero(n, p);
  for (int i = 0; i < n; ++i) s = add(s, Polynomial::monomial(n, Exponents::unit(i, p), 1));
  return s;
}

SymmetricPoly random_symmetric(std::mt19937_64& rng, int n, int d, long bound = 4) {
  std::vector<std::pair<Partition, Coefficient>> coeffs;
  for (const auto& lambda : symmetric_basis(n, d)) coeffs.emplace_back(lambda, Coefficient(Integer(uniform(rng, -bound, bound))));
  // Keep the top coefficient nonzero so the d <= n prefactor is exercised.
  if (coeffs.front().second.is_zero()) coeffs.front().second = 1;
  return SymmetricPoly::make(n, d, std::move(coeffs));
}

Coefficient in_generic(const std::string& text, const SymmetricPoly& f) { return parse_coefficient(text, f.ring); }

const Factor& factor(const FactoredResultant& f, const std::string& label) {
  for (const auto& x : f.factors)
    if (x.label == label) return x;
  throw std::runtime_error("no factor " + label);
}

std::string str(long v) { return std::to_string(v); }

}  // namespace

// Newton's identities: p e_p = sum_{i=1}^{p} (-1)^{i-1} e_{p-i} p_i.
TEST(Elementary, NewtonIdentities) {
  for (int n = 1; n <= 5; ++n)
    for (int p = 1; p <= n + 1; ++p) {
      Polynomial rhs = Polynomial::zero(n, p);
      for (int i = 1; i <= p; ++i) {
        auto term = mul(p - i == 0 ? Polynomial::constant(n, 1) : elementary(p - i, n), power_sum(i, n));
        rhs = (i % 2 == 1) ? add(rhs, term) : sub(rhs, term);
      }
      EXPECT_EQ(scale(elementary(p, n), Integer(p)), rhs) << n << "," << p;
    }
  EXPECT_TRUE(elementary(4, 3).is_zero());
}

TEST(Elementary, ProductsAndPartials) {
  auto e21 = expand_elementary(Partition({2, 1}), 3);
  EXPECT_EQ(e21, mul(elementary(2, 3), elementary(1, 3)));
  EXPECT_EQ(e21.term_count(), 7u);
  EXPECT_EQ(expand_elementary(Partition({1, 1}), 4), pow(elementary(1, 4), 2));
  for (int n = 1; n <= 5; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < n; ++i) EXPECT_EQ(elementary_partial(j, i, n), derivative(elementary(j, n), i));
}

TEST(SymmetricBasis, Partitions) {
  std::vector<std::string> got;
  for (const auto& p : symmetric_basis(2, 4)) got.push_back(p.to_string());
  EXPECT_EQ(got, (std::vector<std::string>{"(2,2)", "(2,1,1)", "(1,1,1,1)"}));
  EXPECT_EQ(symmetric_basis(4, 3).size(), 3u);
}

TEST(SymmetricPoly, GenericAndExpand) {
  auto f = SymmetricPoly::generic(3, 3);
  EXPECT_EQ(f.ring.names(), (std::vector<std::string>{"c3", "c21", "c111"}));
  auto expected = add(add(scale(elementary(3, 3), Coefficient::variable(0)),
                          scale(expand_elementary(Partition({2, 1}), 3), Coefficient::variable(1))),
                      scale(pow(elementary(1, 3), 3), Coefficient::variable(2)));
  EXPECT_EQ(f.expand(), expected);
  EXPECT_EQ(f.coefficient(Partition({2, 1})), Coefficient::variable(1));
  EXPECT_THROW(SymmetricPoly::make(2, 3, {{Partition({3}), 1}}), InvalidArgument);
  EXPECT_THROW(SymmetricPoly::make(3, 3, {{Partition({2}), 1}}), InvalidArgument);
}

TEST(SymmetricPoly, Parsing) {
  auto f = parse_symmetric(4, 3, "c3=1, c21=-1");
  EXPECT_EQ(f.coefficient(Partition({3})), Coefficient(1));
  EXPECT_EQ(f.coefficient(Partition({2, 1})), Coefficient(-1));
  EXPECT_TRUE(f.coefficient(Partition({1, 1, 1})).is_zero());
  auto g = parse_symmetric(4, 3, "# comment\nc[1,1,1] = 2; c[3]=c21 + 1\nc21=5\n");
  EXPECT_EQ(g.coefficient(Partition({1, 1, 1})), Coefficient(2));
  EXPECT_EQ(g.coefficient(Partition({3})), in_generic("c21 + 1", g));
  auto big = parse_symmetric(11, 11, "c10_1=3, c[11]=1");
  EXPECT_EQ(big.coefficient(Partition({10, 1})), Coefficient(3));
  EXPECT_EQ(big.coefficient(Partition({11})), Coefficient(1));
  EXPECT_EQ(parse_symmetric(3, 2, "generic").ring.names(), (std::vector<std::string>{"c2", "c11"}));
  EXPECT_THROW(parse_symmetric(4, 3, "c4=1"), InvalidArgument);
  EXPECT_THROW(parse_symmetric(4, 3, "c3"), ParseError);
  EXPECT_THROW(parse_symmetric(4, 3, "c3=1, c3=2"), InvalidArgument);
  EXPECT_THROW(parse_symmetric(4, 3, "c3=q"), ParseError);
}

TEST(Partials, ChainRuleMatchesDirectDerivative) {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}, {4, 3}, {2, 4}, {4, 4}, {5, 3}}) {
    auto f = SymmetricPoly::generic(n, d);
    auto partials = partial_derivatives(f);
    auto expanded = f.expand();
    for (int i = 0; i < n; ++i) EXPECT_EQ(partials.polys()[i], derivative(expanded, i)) << n << "," << d;
  }
}

TEST(Partials, QuadraticAndCubicFormulas) {
  for (int n = 2; n <= 5; ++n) {
    auto f = SymmetricPoly::generic(n, 2);
    ParseContext ctx{static_cast<std::size_t>(n), f.ring, "x"};
    std::string e1 = "x1";
    for (int i = 2; i <= n; ++i) e1 += " + x" + str(i);
    EXPECT_EQ(partial_derivatives(f).polys()[0], parse_poly("c2*(" + e1 + " - x1) + 2*c11*(" + e1 + ")", ctx, 1));
  }
  for (int n = 3; n <= 5; ++n) {
    auto f = SymmetricPoly::generic(n, 3);
    ParseContext ctx{static_cast<std::size_t>(n), f.ring, "x"};
    std::string e1 = "(x1", e2 = "(0";
    for (int i = 2; i <= n; ++i) e1 += " + x" + str(i);
    e1 += ")";
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) e2 += " + x" + str(i) + "*x" + str(j);
    e2 += ")";
    auto expected = parse_poly("c3*(" + e2 + " - x1*" + e1 + " + x1^2) + c21*(" + e2 + " + " + e1 + "*(" + e1 +
                                   " - x1)) + 3*c111*" + e1 + "^2",
                               ctx, 2);
    EXPECT_EQ(partial_derivatives(f).polys()[0], expected);
  }
}

TEST(Exponent, Values) {
  EXPECT_EQ(a_exponent(2, 2), 0);
  EXPECT_EQ(a_exponent(3, 2), 1);
  EXPECT_EQ(a_exponent(3, 3), 3);
  EXPECT_EQ(a_exponent(4, 3), 5);
  for (int n = 1; n <= 8; ++n)
    for (int d = 2; d <= 6; ++d) {
      Integer num = ipow(d - 1, n) - ((n % 2) ? -1 : 1);
      EXPECT_EQ(a_exponent(n, d) * d, num);
    }
}

TEST(Discriminant, SmallExplicitValues) {
  // x1 x2: partials x2, x1.
  auto f = SymmetricPoly::make(2, 2, {{Partition({2}), 1}});
  EXPECT_EQ(discriminant_value(f), Coefficient(-1));
  EXPECT_EQ(discriminant_decomposition(f).value(2), Coefficient(-1));
  // Clebsch diagonal cubic surface e3 - e2 e1.
  auto clebsch = SymmetricPoly::make(4, 3, {{Partition({3}), 1}, {Partition({2, 1}), -1}});
  EXPECT_EQ(discriminant_value(clebsch), Coefficient(-5));
  auto r = discriminant_decomposition(clebsch);
  EXPECT_EQ(r.a, 5);
  EXPECT_EQ(r.scaled_value(), Coefficient(-1215));
  EXPECT_EQ(macaulay_resultant(partial_derivatives(clebsch).polys()), Coefficient(-1215));
}

TEST(Discriminant, QuadricsClosedForm) {
  for (int n = 2; n <= 7; ++n) {
    auto f = SymmetricPoly::generic(n, 2);
    auto r = discriminant_decomposition(f);
    EXPECT_EQ(r.epsilon, n - 1);
    EXPECT_EQ(factor(r.factored, "(" + str(n) + ")").value, in_generic(str(n - 1) + "*c2 + " + str(2 * n) + "*c11", f));
    std::string closed = n % 2 == 0
                             ? "-c2^" + str(n - 1) + "*(" + str(n - 1) + "*c2 + " + str(2 * n) + "*c11)"
                             : "c2^" + str(n - 1) + "*(" + str((n - 1) / 2) + "*c2 + " + str(n) + "*c11)";
    EXPECT_EQ(r.value(2), in_generic(closed, f)) << n;
    if (n <= 5) EXPECT_EQ(discriminant_value(f), r.value(2));
  }
}

TEST(Discriminant, CubicFactors) {
  for (int n = 3; n <= 6; ++n) {
    auto f = SymmetricPoly::generic(n, 3);
    auto r = discriminant_decomposition(f);
    EXPECT_EQ(r.epsilon, 0);
    EXPECT_EQ(r.factored.prefactor_exponent, Integer(n - 3) * ipow(2, n - 1) + 2);
    long b1 = (n - 1) * (n - 2) / 2, b2 = n * (n - 1) / 2;
    std::string full = str(b1) + "*c3 + " + str(3 * b2) + "*c21 + " + str(3 * n * n) + "*c111";
    EXPECT_EQ(factor(r.factored, "(" + str(n) + ")").value, in_generic(full, f));
    for (int k = 1; 2 * k <= n; ++k) {
      const auto& x = factor(r.factored, "(" + str(n - k) + "," + str(k) + ")");
      // Twice the stated factor, to keep integer coefficients.
      std::string doubled = "2*c3^2*(" + full + ") - " + str(k * (n - k)) + "*(" + str(n - 2) + "*c3^3 + (24*c111 + " +
                            str(3 * n) + "*c21)*c3^2 + " + str(3 * n - 6) + "*c21^2*c3 + " + str(n) + "*c21^3)";
      EXPECT_EQ(x.value.scaled(2), in_generic(doubled, f)) << n << "," << k;
      EXPECT_EQ(x.multiplicity, m_lambda(Partition({n - k, k})));
    }
  }
}

TEST(Discriminant, CubicClosedForms) {
  auto f3 = SymmetricPoly::generic(3, 3);
  EXPECT_EQ(discriminant_decomposition(f3).value(3),
            in_generic("c3^2*(c3 + 9*c21 + 27*c111)*(-c21^2*c3 - c21^3 + c111*c3^2)^3", f3));
  EXPECT_EQ(discriminant_value(f3), discriminant_decomposition(f3).value(3));
  auto f4 = SymmetricPoly::generic(4, 3);
  EXPECT_EQ(discriminant_decomposition(f4).value(3),
            in_generic("-c3^10*(c3 + 2*c21)^9*(6*c21 + 16*c111 + c3)*(4*c111*c3^2 - 3*c21^2*c3 - 2*c21^3)^4", f4));
}

TEST(Discriminant, DegreeInCoefficients) {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}, {4, 3}, {2, 4}, {3, 4}}) {
    auto f = SymmetricPoly::generic(n, d);
    auto v = discriminant_decomposition(f).value(d);
    EXPECT_TRUE(v.is_homogeneous());
    EXPECT_EQ(Integer(v.total_degree()), Integer(n) * ipow(d - 1, n - 1)) << n << "," << d;
  }
}

TEST(Discriminant, TopDividedDifferenceOfPartials) {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}, {4, 3}, {4, 4}}) {
    auto f = SymmetricPoly::generic(n, d);
    DividedDifferenceTable table(partial_derivatives(f));
    Subset top(d);
    for (int i = 0; i < d; ++i) top[i] = i;
    auto expected = f.coefficient(symmetric_basis(n, d).front());
    if (d % 2 == 0) expected = -expected;
    EXPECT_EQ(table.get(top), Polynomial::constant(n, expected));
  }
}

TEST(Discriminant, BranchAboveN) {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 4}, {2, 5}}) {
    auto f = SymmetricPoly::generic(n, d);
    auto r = discriminant_decomposition(f);
    EXPECT_TRUE(r.factored.prefactor.is_one());
    EXPECT_EQ(r.epsilon, 0);
    EXPECT_EQ(r.factored.factors.size(), partitions(n).size());
    auto value = r.value(d);
    if (n == 2) {
      EXPECT_EQ(value, discriminant_value(f)) << n << "," << d;
      continue;
    }
    // The direct symbolic oracle is too slow here; compare at integer points.
    std::mt19937_64 rng(n * 10 + d);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Integer> point;
      std::vector<std::pair<Partition, Coefficient>> coeffs;
      for (const auto& lambda : symmetric_basis(n, d)) {
        point.emplace_back(uniform(rng, -6, 6));
        coeffs.emplace_back(lambda, Coefficient(point.back()));
      }
      EXPECT_EQ(Coefficient(value.evaluate(point)), discriminant_value(SymmetricPoly::make(n, d, coeffs)));
    }
  }
}

TEST(Discriminant, RandomIntegerForms) {
  std::mt19937_64 rng(21);
  const std::vector<std::pair<int, int>> cases{{2, 2}, {3, 2}, {4, 2}, {5, 2}, {6, 2}, {2, 3}, {3, 3},
                                               {4, 3}, {2, 4}, {3, 4}, {4, 4}, {2, 5}};
  for (auto [n, d] : cases)
    for (int trial = 0; trial < 3; ++trial) {
      auto f = random_symmetric(rng, n, d);
      auto r = discriminant_decomposition(f);
      EXPECT_EQ(r.value(d), discriminant_value(f)) << n << "," << d;
      EXPECT_EQ(r.scaled_value(), macaulay_resultant(partial_derivatives(f).polys()));
    }
}

TEST(Discriminant, ParallelMatchesSerial) {
  auto f = SymmetricPoly::generic(5, 3);
  auto a = discriminant_decomposition(f);
  auto b = discriminant_decomposition(f, DecomposeOptions{3});
  EXPECT_EQ(a.value(3), b.value(3));
}
