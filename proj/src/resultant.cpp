#include "eqres/resultant.hpp"

#include <random>
#include <unordered_map>
#include <string>

#include "eqres/error.hpp"

namespace eqres {

namespace {

void generate_monomials(std::size_t n, std::size_t index, unsigned remaining, Exponents& current,
                        std::vector<Exponents>& out) {
  if (index + 1 == n) {
    current.set(index, remaining);
    out.push_back(current);
    current.set(index, 0);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    current.set(index, e);
    generate_monomials(n, index + 1, remaining - e, current, out);
  }
  current.set(index, 0);
}

bool divisible_by_power(const Exponents& alpha, std::size_t i, int d) {
  return alpha[i] >= static_cast<unsigned>(d);
}

std::uint64_t fnv_mix(std::uint64_t h, std::string_view bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t input_seed(const std::vector<Polynomial>& polys) {
  std::uint64_t h = 14695981039346656037ULL;
  for (const auto& p : polys) {
    for (const auto& [e, c] : flatten(p).terms()) {
      h = fnv_mix(h, std::to_string(e.hash()));
      h = fnv_mix(h, c.get_str(16));
    }
    h = fnv_mix(h, "|");
  }
  return h;
}

void check_square_system(const std::vector<Polynomial>& polys) {
  if (polys.empty()) throw InvalidArgument("resultant of an empty system");
  const std::size_t n = polys.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (polys[i].ambient() != n)
      throw InvalidArgument("resultant needs n polynomials in n variables (polynomial " + std::to_string(i + 1) +
                            " lives in " + std::to_string(polys[i].ambient()) + " variables)");
    if (polys[i].degree() < 1) throw InvalidArgument("resultant needs polynomials of positive degree");
  }
}

bool integral_system(const std::vector<Polynomial>& polys) {
  for (const auto& p : polys)
    if (p.used_parameters() != 0) return false;
  return true;
}

// Res != 0 exactly when the multiples x^gamma f_i span every form of degree t.
// Fraction-free elimination on the full (not just the reduced) Macaulay matrix.
bool spans_degree_t(const std::vector<Polynomial>& polys, unsigned t) {
  const std::size_t n = polys.size();
  const auto mon = monomials_of_degree(n, t);
  std::unordered_map<Exponents, std::size_t, ExponentsHash> row_of;
  for (std::size_t r = 0; r < mon.size(); ++r) row_of.emplace(mon[r], r);
  // Stored transposed: one vector per multiple x^gamma f_i.
  std::vector<std::vector<Integer>> rows;
  for (const auto& p : polys)
    for (const auto& gamma : monomials_of_degree(n, t - static_cast<unsigned>(p.degree()))) {
      std::vector<Integer> row(mon.size());
      for (const auto& [e, c] : p.terms()) row[row_of.at(e + gamma)] = c.constant_value();
      rows.push_back(std::move(row));
    }
  std::size_t rank = 0;
  Integer previous = 1;
  for (std::size_t col = 0; col < mon.size() && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && sgn(rows[pivot][col]) == 0) ++pivot;
    if (pivot == rows.size()) return false;
    std::swap(rows[rank], rows[pivot]);
    const auto& top = rows[rank];
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      auto& row = rows[i];
      for (std::size_t j = col + 1; j < mon.size(); ++j) {
        row[j] = top[col] * row[j] - row[col] * top[j];
        mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), previous.get_mpz_t());
      }
      row[col] = 0;
    }
    previous = top[col];
    ++rank;
  }
  return rank == mon.size();
}

// Res(f_1 + s x_1^{d_1}, ..., f_n + s x_n^{d_n}) is det(M + sI) / det(D + sI)
// whenever the denominator is nonzero, and det(D + sI) is a nonzero
// polynomial in s. Evaluate at enough integer s and interpolate back to s = 0.
Coefficient perturbed(const std::vector<Polynomial>& polys, const MacaulayData& data) {
  Integer bound = 0;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    Integer prod = 1;
    for (std::size_t j = 0; j < polys.size(); ++j)
      if (j != i) prod *= polys[j].degree();
    bound += prod;
  }
  const unsigned long points = bound.get_ui() + 1;

  auto shifted = [](SquareMatrix<Coefficient> m, long s) {
    for (std::size_t i = 0; i < m.dim(); ++i) m(i, i) += Coefficient(s);
    return m;
  };
  std::vector<long> nodes;
  std::vector<Coefficient> values;
  for (long s = 1; nodes.size() < points; ++s) {
    Coefficient det_d = data.D.dim() == 0 ? Coefficient(1) : determinant(shifted(data.D, s));
    if (det_d.is_zero()) continue;
    nodes.push_back(s);
    values.push_back(determinant(shifted(data.M, s)).exact_div(det_d));
  }

  std::vector<mpq_class> weights;
  Integer common = 1;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    mpq_class w = 1;
    for (std::size_t j = 0; j < nodes.size(); ++j)
      if (j != k) {
        mpq_class factor(nodes[j], nodes[j] - nodes[k]);
        factor.canonicalize();
        w *= factor;
      }
    common = lcm(common, Integer(w.get_den()));
    weights.push_back(w);
  }
  Coefficient sum;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    mpq_class scaled = weights[k] * common;
    sum += values[k].scaled(Integer(scaled.get_num()));
  }
  return sum.exact_div(Coefficient(common));
}

}  // namespace

std::vector<Exponents> monomials_of_degree(std::size_t n, unsigned t) {
  if (n == 0 || n > Exponents::kCapacity) throw InvalidArgument("monomials_of_degree: bad number of variables");
  std::vector<Exponents> out;
  Exponents current;
  generate_monomials(n, 0, t, current, out);
  return out;
}

std::size_t index_function(const Exponents& alpha, std::span<const int> degrees) {
  for (std::size_t i = 0; i < degrees.size(); ++i)
    if (divisible_by_power(alpha, i, degrees[i])) return i;
  throw InvalidArgument("index_function: no x_i^{d_i} divides the monomial");
}

std::vector<Exponents> dod_monomials(std::size_t n, std::span<const int> degrees, unsigned t) {
  std::vector<Exponents> out;
  for (const auto& alpha : monomials_of_degree(n, t)) {
    int hits = 0;
    for (std::size_t i = 0; i < n; ++i) hits += divisible_by_power(alpha, i, degrees[i]);
    if (hits >= 2) out.push_back(alpha);
  }
  return out;
}

MacaulayData build_macaulay(const std::vector<Polynomial>& polys) {
  check_square_system(polys);
  const std::size_t n = polys.size();
  std::vector<int> degrees;
  unsigned delta = 0;
  for (const auto& p : polys) {
    degrees.push_back(p.degree());
    delta += static_cast<unsigned>(p.degree() - 1);
  }
  MacaulayData data;
  data.t = delta + 1;
  data.mon = monomials_of_degree(n, data.t);
  data.dod = dod_monomials(n, degrees, data.t);

  std::unordered_map<Exponents, std::size_t, ExponentsHash> row_of;
  for (std::size_t r = 0; r < data.mon.size(); ++r) row_of.emplace(data.mon[r], r);

  const std::size_t size = data.mon.size();
  data.M = SquareMatrix<Coefficient>(size);
  for (std::size_t col = 0; col < size; ++col) {
    const Exponents& beta = data.mon[col];
    std::size_t i = index_function(beta, degrees);
    Exponents shift = beta - Exponents::unit(i, static_cast<unsigned>(degrees[i]));
    for (const auto& [e, c] : polys[i].terms()) data.M(row_of.at(e + shift), col) = c;
  }

  std::vector<std::size_t> dod_index;
  for (const auto& alpha : data.dod) dod_index.push_back(row_of.at(alpha));
  data.D = data.M.submatrix(dod_index);
  return data;
}

Coefficient macaulay_resultant(const std::vector<Polynomial>& polys) {
  check_square_system(polys);
  const std::size_t n = polys.size();
  for (const auto& p : polys)
    if (p.is_zero()) return Coefficient(0);
  if (n == 1) {
    if (polys[0].term_count() != 1) throw InvalidArgument("univariate form has more than one term");
    return polys[0].terms().front().second;
  }

  // A vanishing extraneous factor is usually an artifact of the coordinates;
  // when it survives a few changes of variables (e.g. two forms share a
  // factor) fall back to the perturbed computation.
  const MacaulayData original = build_macaulay(polys);
  std::uint64_t seed = input_seed(polys);
  constexpr int kAttempts = 3;
  for (int attempt = 0; attempt <= kAttempts; ++attempt) {
    MacaulayData changed;
    if (attempt > 0)
      changed = build_macaulay(apply_linear_change(polys, random_unimodular(n, seed + static_cast<std::uint64_t>(attempt))));
    const MacaulayData& data = attempt == 0 ? original : changed;
    Coefficient det_d = data.D.dim() == 0 ? Coefficient(1) : determinant(data.D);
    if (!det_d.is_zero()) return determinant(data.M).exact_div(det_d);
  }
  if (integral_system(polys) && !spans_degree_t(polys, original.t)) return Coefficient(0);
  return perturbed(polys, original);
}

Coefficient perturbed_resultant(const std::vector<Polynomial>& polys) {
  check_square_system(polys);
  for (const auto& p : polys)
    if (p.is_zero()) return Coefficient(0);
  if (polys.size() == 1) return macaulay_resultant(polys);
  return perturbed(polys, build_macaulay(polys));
}

Coefficient sylvester_resultant(const Polynomial& p, const Polynomial& q) {
  if (p.ambient() != 2 || q.ambient() != 2) throw InvalidArgument("sylvester_resultant needs binary forms");
  if (p.degree() < 1 || q.degree() < 1) throw InvalidArgument("sylvester_resultant needs positive degrees");
  const std::size_t d1 = static_cast<std::size_t>(p.degree());
  const std::size_t d2 = static_cast<std::size_t>(q.degree());
  // Coefficient of x1^{d-k} x2^k at position k.
  auto coefficients = [](const Polynomial& f, std::size_t d) {
    std::vector<Coefficient> out(d + 1);
    for (const auto& [e, c] : f.terms()) out[e[1]] = c;
    return out;
  };
  auto a = coefficients(p, d1);
  auto b = coefficients(q, d2);
  SquareMatrix<Coefficient> s(d1 + d2);
  for (std::size_t r = 0; r < d2; ++r)
    for (std::size_t k = 0; k <= d1; ++k) s(r, r + k) = a[k];
  for (std::size_t r = 0; r < d1; ++r)
    for (std::size_t k = 0; k <= d2; ++k) s(d2 + r, r + k) = b[k];
  return determinant(s);
}

std::vector<Polynomial> apply_linear_change(const std::vector<Polynomial>& polys,
                                            const SquareMatrix<Integer>& phi) {
  const std::size_t n = phi.dim();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial image = Polynomial::zero(n, 1);
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(phi(i, j)) != 0) image = add(image, scale(Polynomial::variable(n, j), Coefficient(phi(i, j))));
    images.push_back(image);
  }
  std::vector<Polynomial> out;
  for (const auto& p : polys) {
    if (p.ambient() != n) throw InvalidArgument("apply_linear_change: ambient mismatch");
    out.push_back(substitute(p, images));
  }
  return out;
}

SquareMatrix<Integer> random_unimodular(std::size_t n, std::uint64_t seed) {
  SquareMatrix<Integer> m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = (i == j) ? 1 : 0;
  if (n < 2) return m;
  std::mt19937_64 rng(seed);
  for (std::size_t step = 0; step < 3 * n; ++step) {
    std::size_t i = rng() % n;
    std::size_t j = rng() % (n - 1);
    if (j >= i) ++j;
    long c = static_cast<long>(rng() % 5) - 2;
    if (c == 0) c = 1;
    for (std::size_t k = 0; k < n; ++k) m(i, k) += c * m(j, k);
  }
  return m;
}

}  // namespace eqres
