#include "eqres/selfcheck.hpp"

#include <functional>

#include "eqres/discriminant.hpp"
#include "eqres/error.hpp"
#include "eqres/parser.hpp"
#include "eqres/resultant.hpp"

namespace eqres {

namespace {

std::string truncate(std::string s) {
  constexpr std::size_t kLimit = 160;
  if (s.size() > kLimit) s = s.substr(0, kLimit) + "...";
  return s;
}

CheckResult compare(std::string name, const Coefficient& got, const Coefficient& want, const ParameterRing& ring) {
  CheckResult r{std::move(name), got == want, {}};
  if (!r.passed) r.detail = "got " + truncate(print_coefficient(got, ring)) + ", want " + truncate(print_coefficient(want, ring));
  return r;
}

// Runs body, turning exceptions into failures.
CheckResult guarded(const std::string& name, const std::function<CheckResult()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return CheckResult{name, false, std::string("error: ") + e.what()};
  }
}

std::string s(long v) { return std::to_string(v); }

// Res(F_(m,n-m)^{1}, F_(m,n-m)^{1,2}) for F^i = a x_i^2 + b x_i e1 + c e1^2 + d e2,
// doubled so that the coefficients are integers.
Coefficient doubled_length_two_factor(long m, long n) {
  static const ParameterRing ring({"a", "b", "c", "d", "m", "n"});
  const Coefficient formula = parse_coefficient(
      "2*a*b^2*n*m + 4*d*m^2*a*b - d*m*b^2*n^2 + d*m^2*b^2*n - 4*d*m*n*a^2 - 8*c*m*n*a^2"
      " - 4*d*m*a*b*n + d*n^2*a^2 + 4*d*m^2*a^2 + 2*a^2*b*n - d*n*a^2 + 2*c*n^2*a^2"
      " + 8*c*m^2*a^2 - 2*a*b^2*m^2 + 2*a^3",
      ring);
  std::vector<Coefficient> images{Coefficient::variable(0), Coefficient::variable(1), Coefficient::variable(2),
                                  Coefficient::variable(3), Coefficient(m), Coefficient(n)};
  return formula.substitute(images);
}

Coefficient chain_factor(const EquivariantSystem& system, const Partition& lambda) {
  DividedDifferenceTable table(system);
  return macaulay_resultant(specialize_chain(table, lambda).polys);
}

}  // namespace

std::vector<CheckResult> run_selfcheck() {
  std::vector<CheckResult> out;

  out.push_back(guarded("normalization Res(x_1^d_1, ..., x_n^d_n) = 1", [] {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (int d = 1; d <= 3; ++d) {
        std::vector<Polynomial> polys;
        for (std::size_t i = 0; i < n; ++i)
          polys.push_back(Polynomial::monomial(n, Exponents::unit(i, static_cast<unsigned>(d + static_cast<int>(i) % 2)), 1));
        if (!macaulay_resultant(polys).is_one())
          return CheckResult{"normalization Res(x_1^d_1, ..., x_n^d_n) = 1", false, "n=" + s(static_cast<long>(n)) + " d=" + s(d)};
      }
    }
    return CheckResult{"normalization Res(x_1^d_1, ..., x_n^d_n) = 1", true, {}};
  }));

  for (int n = 2; n <= 5; ++n) {
    const std::string name = "linear system a x_i + b e1, n=" + s(n) + ": a^(n-1) (a + n b)";
    out.push_back(guarded(name, [&] {
      auto system = generic_equivariant_system(n, 1);
      auto want = parse_coefficient("a^" + s(n - 1) + "*(a + " + s(n) + "*b)", system.ring());
      return compare(name, decompose_resultant(system).expand(), want, system.ring());
    }));
  }

  {
    const std::string name = "quadratic system n=2: (a+2b+4c+d)(a+b)^2(a-d)";
    out.push_back(guarded(name, [&] {
      auto system = generic_equivariant_system(2, 2);
      auto want = parse_coefficient("(a + 2*b + 4*c + d)*(a + b)^2*(a - d)", system.ring());
      return compare(name, decompose_resultant(system).expand(), want, system.ring());
    }));
  }

  for (auto [m, n] : {std::pair{2, 3}, std::pair{3, 4}, std::pair{2, 4}}) {
    const std::string name = "quadratic length-two factor (m,n)=(" + s(m) + "," + s(n) + ")";
    out.push_back(guarded(name, [&] {
      auto system = generic_equivariant_system(n, 2);
      auto got = chain_factor(system, Partition({m, n - m})).scaled(2);
      return compare(name, got, doubled_length_two_factor(m, n), system.ring());
    }));
  }

  for (int k = 1; k <= 3; ++k) {
    // Res of a quadric and a linear form has degree 1 + 2 = 3 in the
    // coefficients; k=1 is the (a+b)^2(a-d) of the n=2 product.
    const std::string name = "quadratic (k,k) factor k=" + s(k) + ": (a+bk)^2(a-dk)";
    out.push_back(guarded(name, [&] {
      auto system = generic_equivariant_system(2 * k, 2);
      auto want = parse_coefficient("(a + " + s(k) + "*b)^2*(a - " + s(k) + "*d)", system.ring());
      return compare(name, chain_factor(system, Partition({k, k})), want, system.ring());
    }));
  }

  {
    const std::string name = "averaging: Res(F^1 + F^2, F^{12}) = 2 Res(F^1, F^{12}) for (2,1)";
    out.push_back(guarded(name, [&] {
      auto system = generic_equivariant_system(3, 2);
      auto avg = averaged_chain_resultant(system, Partition({2, 1}));
      CheckResult r = compare(name, avg.averaged, avg.chain.scaled(2), system.ring());
      if (r.passed && avg.predicted_constant != 2) r = {name, false, "predicted constant " + avg.predicted_constant.get_str()};
      return r;
    }));
  }

  for (int n = 2; n <= 5; ++n) {
    const std::string name = "quadric discriminant n=" + s(n);
    out.push_back(guarded(name, [&] {
      auto f = SymmetricPoly::generic(n, 2);
      std::string want = n % 2 == 0 ? "-c2^" + s(n - 1) + "*(" + s(n - 1) + "*c2 + " + s(2 * n) + "*c11)"
                                    : "c2^" + s(n - 1) + "*(" + s((n - 1) / 2) + "*c2 + " + s(n) + "*c11)";
      return compare(name, discriminant_decomposition(f).value(2), parse_coefficient(want, f.ring), f.ring);
    }));
  }

  {
    const std::string name = "cubic discriminant n=3";
    out.push_back(guarded(name, [&] {
      auto f = SymmetricPoly::generic(3, 3);
      auto want = parse_coefficient("c3^2*(c3 + 9*c21 + 27*c111)*(-c21^2*c3 - c21^3 + c111*c3^2)^3", f.ring);
      return compare(name, discriminant_decomposition(f).value(3), want, f.ring);
    }));
  }
  {
    const std::string name = "cubic discriminant n=4";
    out.push_back(guarded(name, [&] {
      auto f = SymmetricPoly::generic(4, 3);
      auto want = parse_coefficient(
          "-c3^10*(c3 + 2*c21)^9*(6*c21 + 16*c111 + c3)*(4*c111*c3^2 - 3*c21^2*c3 - 2*c21^3)^4", f.ring);
      return compare(name, discriminant_decomposition(f).value(3), want, f.ring);
    }));
  }
  {
    const std::string name = "Clebsch cubic e3 - e2 e1: Disc = -5";
    out.push_back(guarded(name, [&] {
      auto f = SymmetricPoly::make(4, 3, {{Partition({3}), 1}, {Partition({2, 1}), -1}});
      Coefficient direct = discriminant_value(f);
      Coefficient factored = discriminant_decomposition(f).value(3);
      CheckResult r = compare(name, direct, Coefficient(-5), {});
      if (r.passed) r = compare(name, factored, Coefficient(-5), {});
      return r;
    }));
  }
  {
    const std::string name = "degree identity n d^(n-1) = sum m_lambda deg, 2 <= n <= d <= 7";
    out.push_back(guarded(name, [&] {
      for (int d = 2; d <= 7; ++d)
        for (int n = 2; n <= d; ++n)
          if (!degree_identity_check(n, d)) return CheckResult{name, false, "fails at n=" + s(n) + " d=" + s(d)};
      return CheckResult{name, true, {}};
    }));
  }
  return out;
}

}  // namespace eqres
