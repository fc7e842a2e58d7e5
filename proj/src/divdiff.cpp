#include "eqres/divdiff.hpp"

#include <algorithm>
#include <numeric>

#include "eqres/error.hpp"
#include "eqres/matrix.hpp"

namespace eqres {

namespace {

void check_family(const std::vector<Polynomial>& polys) {
  if (polys.empty()) throw InvalidArgument("empty polynomial family");
  const std::size_t n = polys.size();
  for (const auto& p : polys) {
    if (p.ambient() != n)
      throw InvalidArgument("expected polynomials in " + std::to_string(n) + " variables, got " +
                            std::to_string(p.ambient()));
    if (!p.is_zero() && !polys[0].is_zero() && p.degree() != polys[0].degree())
      throw InvalidArgument("polynomials of the family have different degrees");
  }
}

int family_degree(const std::vector<Polynomial>& polys) {
  for (const auto& p : polys)
    if (!p.is_zero()) return p.degree();
  return polys[0].degree();
}

Subset without(const Subset& s, int element) {
  Subset out;
  for (int v : s)
    if (v != element) out.push_back(v);
  return out;
}

}  // namespace

EquivarianceReport check_equivariance(const std::vector<Polynomial>& polys) {
  check_family(polys);
  const std::size_t n = polys.size();
  EquivarianceReport report;
  for (std::size_t s = 0; s + 1 < n; ++s) {
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    std::swap(sigma[s], sigma[s + 1]);
    for (std::size_t k = 0; k < n; ++k) {
      if (remap_variables(polys[k], sigma, n) != polys[sigma[k]]) {
        report.ok = false;
        report.swap = static_cast<int>(s);
        report.index = static_cast<int>(k);
        return report;
      }
    }
  }
  return report;
}

EquivariantSystem::EquivariantSystem(std::vector<Polynomial> polys, ParameterRing ring)
    : polys_(std::move(polys)), ring_(std::move(ring)) {
  auto report = check_equivariance(polys_);
  if (!report.ok)
    throw NotEquivariant("system is not S_n-equivariant: swapping x" + std::to_string(report.swap + 1) +
                         " and x" + std::to_string(report.swap + 2) + " does not map F^{" +
                         std::to_string(report.index + 1) + "} to the expected polynomial");
  degree_ = family_degree(polys_);
  if (degree_ < 1) throw InvalidArgument("equivariant system must have degree at least 1");
}

Polynomial vandermonde(const Subset& subset, std::size_t ambient) {
  Polynomial v = Polynomial::constant(ambient, 1);
  for (std::size_t r = 0; r < subset.size(); ++r)
    for (std::size_t s = 0; s < r; ++s)
      v = mul(v, sub(Polynomial::variable(ambient, subset[r]), Polynomial::variable(ambient, subset[s])));
  return v;
}

DividedDifferenceTable::DividedDifferenceTable(std::vector<Polynomial> polys, int degree)
    : base_(std::move(polys)), degree_(degree) {}

DividedDifferenceTable::DividedDifferenceTable(const EquivariantSystem& system)
    : DividedDifferenceTable(system.polys(), system.d()) {}

DividedDifferenceTable DividedDifferenceTable::from_divisible_family(std::vector<Polynomial> polys) {
  check_family(polys);
  int degree = family_degree(polys);
  return DividedDifferenceTable(std::move(polys), degree);
}

void DividedDifferenceTable::validate(const Subset& subset) const {
  if (subset.empty()) throw InvalidArgument("divided difference of the empty subset");
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] < 0 || subset[i] >= n()) throw InvalidArgument("subset index out of range");
    if (i > 0 && subset[i] <= subset[i - 1]) throw InvalidArgument("subset must be sorted without repeats");
  }
}

const Polynomial& DividedDifferenceTable::get(const Subset& subset) {
  if (auto it = cache_.find(subset); it != cache_.end()) return it->second;
  if (frozen_) throw InvalidArgument("divided-difference table is frozen and the subset is not cached");
  validate(subset);
  const int k = static_cast<int>(subset.size());
  Polynomial value;
  if (k == 1) {
    value = base_[subset[0]];
  } else if (k > degree_ + 1) {
    value = Polynomial::zero(base_.size(), degree_ - k + 1);
  } else {
    value = recursive(subset, subset[k - 1], subset[k - 2]);
  }
  return cache_.emplace(subset, std::move(value)).first->second;
}

Polynomial DividedDifferenceTable::recursive(const Subset& subset, int p, int q) {
  validate(subset);
  if (subset.size() < 2) throw InvalidArgument("recurrence needs a subset of size at least 2");
  if (p == q || !std::binary_search(subset.begin(), subset.end(), p) ||
      !std::binary_search(subset.begin(), subset.end(), q))
    throw InvalidArgument("recurrence needs two distinct elements of the subset");
  const std::size_t ambient = base_.size();
  // Copies: get() may insert into the cache.
  Polynomial without_p = get(without(subset, p));
  Polynomial without_q = get(without(subset, q));
  Polynomial numerator = sub(without_p, without_q);
  Polynomial denominator = sub(Polynomial::variable(ambient, q), Polynomial::variable(ambient, p));
  Polynomial out = exact_div(numerator, denominator);
  if (out.is_zero()) return Polynomial::zero(ambient, degree_ - static_cast<int>(subset.size()) + 1);
  return out;
}

Polynomial DividedDifferenceTable::by_determinant(const Subset& subset) const {
  validate(subset);
  const std::size_t ambient = base_.size();
  const std::size_t k = subset.size();
  const int degree = degree_ - static_cast<int>(k) + 1;
  if (k == 1) return base_[subset[0]];
  SquareMatrix<Polynomial> m(k);
  for (std::size_t r = 0; r < k; ++r) {
    Polynomial x = Polynomial::variable(ambient, subset[r]);
    Polynomial power = Polynomial::constant(ambient, 1);
    for (std::size_t c = 0; c + 1 < k; ++c) {
      m(r, c) = power;
      power = mul(power, x);
    }
    m(r, k - 1) = base_[subset[r]];
  }
  Polynomial det = determinant(m);
  if (det.is_zero()) return Polynomial::zero(ambient, degree);
  if (degree < 0) throw NotDivisible("bordered Vandermonde determinant is nonzero above the top order");
  return exact_div(det, vandermonde(subset, ambient));
}

Coefficient DividedDifferenceTable::top_constant() {
  const int size = degree_ + 1;
  if (n() < size)
    throw InvalidArgument("top constant needs n >= d + 1 (n=" + std::to_string(n()) +
                          ", d=" + std::to_string(degree_) + ")");
  // Sliding windows plus the spread {0, 2, 4, ...} when it fits.
  std::vector<Subset> subsets;
  for (int start = 0; start + size <= n(); ++start) {
    Subset s(size);
    std::iota(s.begin(), s.end(), start);
    subsets.push_back(s);
    if (subsets.size() >= 4) break;
  }
  if (2 * (size - 1) < n()) {
    Subset s(size);
    for (int i = 0; i < size; ++i) s[i] = 2 * i;
    subsets.push_back(s);
  }
  if (size >= 2 && n() > size) {
    Subset s(size);
    std::iota(s.begin(), s.end() - 1, 0);
    s.back() = n() - 1;
    subsets.push_back(s);
  }
  const Polynomial& first = get(subsets[0]);
  for (std::size_t i = 1; i < subsets.size(); ++i)
    if (get(subsets[i]) != first)
      throw Mismatch("top-order divided differences differ between subsets");
  return first.coefficient(Exponents{});
}

const Polynomial& DividedDifferenceTable::at(const Subset& subset) const {
  auto it = cache_.find(subset);
  if (it == cache_.end()) throw InvalidArgument("subset not present in the divided-difference table");
  return it->second;
}

}  // namespace eqres
