#include "eqres/ring.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_map>

#include "eqres/error.hpp"

namespace eqres {

// ---------------------------------------------------------------------------
// Exponents

Exponents::Exponents(std::initializer_list<unsigned> values)
    : Exponents(std::span<const unsigned>(values.begin(), values.size())) {}

Exponents::Exponents(std::span<const unsigned> values) {
  if (values.size() > kCapacity)
    throw InvalidArgument("too many variables (at most " + std::to_string(kCapacity) + ")");
  for (std::size_t i = 0; i < values.size(); ++i) set(i, values[i]);
}

Exponents Exponents::unit(std::size_t index, unsigned power) {
  Exponents e;
  e.set(index, power);
  return e;
}

void Exponents::set(std::size_t i, unsigned value) {
  if (i >= kCapacity)
    throw InvalidArgument("too many variables (at most " + std::to_string(kCapacity) + ")");
  if (value > std::numeric_limits<std::uint16_t>::max())
    throw InvalidArgument("exponent overflow");
  e_[i] = static_cast<std::uint16_t>(value);
}

void Exponents::add(std::size_t i, unsigned value) { set(i, e_.at(i) + value); }

unsigned Exponents::total_degree() const {
  unsigned s = 0;
  for (auto v : e_) s += v;
  return s;
}

std::size_t Exponents::used() const {
  for (std::size_t i = kCapacity; i > 0; --i)
    if (e_[i - 1] != 0) return i;
  return 0;
}

bool Exponents::divides(const Exponents& other) const {
  for (std::size_t i = 0; i < kCapacity; ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Exponents Exponents::operator+(const Exponents& other) const {
  Exponents r;
  for (std::size_t i = 0; i < kCapacity; ++i) {
    unsigned v = unsigned{e_[i]} + other.e_[i];
    if (v > std::numeric_limits<std::uint16_t>::max()) throw InvalidArgument("exponent overflow");
    r.e_[i] = static_cast<std::uint16_t>(v);
  }
  return r;
}

Exponents Exponents::operator-(const Exponents& rhs) const {
  Exponents r;
  for (std::size_t i = 0; i < kCapacity; ++i) r.e_[i] = static_cast<std::uint16_t>(e_[i] - rhs.e_[i]);
  return r;
}

Exponents Exponents::shifted(std::size_t offset) const {
  Exponents r;
  for (std::size_t i = 0; i < kCapacity; ++i)
    if (e_[i] != 0) r.set(i + offset, e_[i]);
  return r;
}

Exponents Exponents::slice(std::size_t from, std::size_t to) const {
  Exponents r;
  for (std::size_t i = from; i < to && i < kCapacity; ++i) r.e_[i - from] = e_[i];
  return r;
}

std::size_t Exponents::hash() const noexcept {
  // FNV-1a over the packed entries.
  std::uint64_t h = 1469598103934665603ull;
  for (auto v : e_) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------
// ParameterRing

ParameterRing::ParameterRing(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > Exponents::kCapacity)
    throw InvalidArgument("too many parameters");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw InvalidArgument("empty parameter name");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw InvalidArgument("duplicate parameter name '" + names_[i] + "'");
  }
}

std::optional<std::size_t> ParameterRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Coefficient

namespace {

bool term_greater(const Coefficient::Term& a, const Coefficient::Term& b) { return a.first > b.first; }

// Merge two descending term lists: lhs + sign * rhs.
std::vector<Coefficient::Term> merge_terms(const std::vector<Coefficient::Term>& lhs,
                                           const std::vector<Coefficient::Term>& rhs, int sign) {
  std::vector<Coefficient::Term> out;
  out.reserve(lhs.size() + rhs.size());
  std::size_t i = 0, j = 0;
  while (i < lhs.size() || j < rhs.size()) {
    if (j == rhs.size() || (i < lhs.size() && lhs[i].first > rhs[j].first)) {
      out.push_back(lhs[i++]);
    } else if (i == lhs.size() || rhs[j].first > lhs[i].first) {
      out.emplace_back(rhs[j].first, sign > 0 ? Integer(rhs[j].second) : Integer(-rhs[j].second));
      ++j;
    } else {
      Integer v = sign > 0 ? Integer(lhs[i].second + rhs[j].second)
                           : Integer(lhs[i].second - rhs[j].second);
      if (sgn(v) != 0) out.emplace_back(lhs[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Coefficient::Coefficient(long value) {
  if (value != 0) terms_.emplace_back(Exponents{}, Integer(value));
}

Coefficient::Coefficient(const Integer& value) {
  if (sgn(value) != 0) terms_.emplace_back(Exponents{}, value);
}

Coefficient Coefficient::variable(std::size_t index) { return monomial(Exponents::unit(index), 1); }

Coefficient Coefficient::monomial(const Exponents& e, const Integer& c) {
  Coefficient r;
  if (sgn(c) != 0) r.terms_.emplace_back(e, c);
  return r;
}

Coefficient Coefficient::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  Coefficient r;
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().first == t.first) {
      r.terms_.back().second += t.second;
    } else {
      if (!r.terms_.empty() && sgn(r.terms_.back().second) == 0) r.terms_.pop_back();
      r.terms_.push_back(std::move(t));
    }
  }
  if (!r.terms_.empty() && sgn(r.terms_.back().second) == 0) r.terms_.pop_back();
  return r;
}

bool Coefficient::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_constant());
}

bool Coefficient::is_one() const {
  return terms_.size() == 1 && terms_[0].first.is_constant() && terms_[0].second == 1;
}

Integer Coefficient::constant_value() const {
  if (!is_constant()) throw InvalidArgument("coefficient is not an integer constant");
  return terms_.empty() ? Integer(0) : terms_[0].second;
}

Integer Coefficient::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_constant()) return terms_.back().second;
  return 0;
}

unsigned Coefficient::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.total_degree());
  return d;
}

bool Coefficient::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.first.total_degree() != terms_.front().first.total_degree()) return false;
  return true;
}

std::size_t Coefficient::used_variables() const {
  std::size_t u = 0;
  for (const auto& t : terms_) u = std::max(u, t.first.used());
  return u;
}

Coefficient Coefficient::operator-() const {
  Coefficient r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Coefficient& Coefficient::operator+=(const Coefficient& rhs) {
  if (rhs.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, rhs.terms_, +1);
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& rhs) {
  if (rhs.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, rhs.terms_, -1);
  return *this;
}

Coefficient operator*(const Coefficient& lhs, const Coefficient& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  if (lhs.terms_.size() == 1 && lhs.terms_[0].first.is_constant())
    return rhs.scaled(lhs.terms_[0].second);
  if (rhs.terms_.size() == 1 && rhs.terms_[0].first.is_constant())
    return lhs.scaled(rhs.terms_[0].second);
  std::unordered_map<Exponents, Integer, ExponentsHash> acc;
  acc.reserve(lhs.terms_.size() * rhs.terms_.size());
  Integer prod;
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      mpz_mul(prod.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      acc[ea + eb] += prod;
    }
  }
  Coefficient r;
  r.terms_.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (sgn(c) != 0) r.terms_.emplace_back(e, std::move(c));
  std::sort(r.terms_.begin(), r.terms_.end(), term_greater);
  return r;
}

Coefficient& Coefficient::operator*=(const Coefficient& rhs) { return *this = *this * rhs; }

Coefficient Coefficient::scaled(const Integer& factor) const {
  if (sgn(factor) == 0) return {};
  Coefficient r = *this;
  for (auto& t : r.terms_) t.second *= factor;
  return r;
}

Coefficient Coefficient::pow(unsigned long exponent) const {
  Coefficient result(1);
  Coefficient base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::optional<Coefficient> Coefficient::try_exact_div(const Coefficient& divisor) const {
  if (divisor.is_zero()) throw InvalidArgument("division by zero");
  if (is_zero()) return Coefficient{};
  if (divisor.is_constant()) {
    const Integer& d = divisor.terms_[0].second;
    Coefficient r = *this;
    for (auto& t : r.terms_) {
      if (!mpz_divisible_p(t.second.get_mpz_t(), d.get_mpz_t())) return std::nullopt;
      mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), d.get_mpz_t());
    }
    return r;
  }
  // Multivariate division with respect to lex: at every step the leading
  // term of the remainder must be divisible by the leading term of `divisor`.
  const auto& [lead_e, lead_c] = divisor.terms_.front();
  std::map<Exponents, Integer, std::greater<>> rem;
  for (const auto& t : terms_) rem.emplace(t.first, t.second);
  Coefficient q;
  Integer qc, prod;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lead_e.divides(it->first)) return std::nullopt;
    if (!mpz_divisible_p(it->second.get_mpz_t(), lead_c.get_mpz_t())) return std::nullopt;
    mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), lead_c.get_mpz_t());
    Exponents qe = it->first - lead_e;
    rem.erase(it);
    for (std::size_t k = 1; k < divisor.terms_.size(); ++k) {
      const auto& [e, c] = divisor.terms_[k];
      mpz_mul(prod.get_mpz_t(), qc.get_mpz_t(), c.get_mpz_t());
      auto [pos, inserted] = rem.try_emplace(qe + e);
      pos->second -= prod;
      if (sgn(pos->second) == 0) rem.erase(pos);
    }
    q.terms_.emplace_back(qe, qc);
  }
  return q;
}

Coefficient Coefficient::exact_div(const Coefficient& divisor) const {
  auto q = try_exact_div(divisor);
  if (!q) throw NotDivisible("exact division failed: nonzero remainder");
  return std::move(*q);
}

Integer Coefficient::evaluate(std::span<const Integer> values) const {
  if (values.size() < used_variables())
    throw InvalidArgument("evaluation point does not cover every variable");
  Integer sum = 0;
  for (const auto& [e, c] : terms_) {
    Integer term = c;
    for (std::size_t i = 0; i < e.used(); ++i)
      if (e[i] != 0) term *= ipow(values[i], e[i]);
    sum += term;
  }
  return sum;
}

Coefficient Coefficient::substitute(std::span<const Coefficient> images) const {
  if (images.size() < used_variables())
    throw InvalidArgument("substitution does not cover every variable");
  Coefficient sum;
  for (const auto& [e, c] : terms_) {
    Coefficient term(c);
    for (std::size_t i = 0; i < e.used(); ++i)
      if (e[i] != 0) term *= images[i].pow(e[i]);
    sum += term;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

bool poly_term_greater(const Polynomial::Term& a, const Polynomial::Term& b) { return a.first > b.first; }

void check_ambient(std::size_t ambient) {
  if (ambient > Exponents::kCapacity) throw InvalidArgument("too many variables");
}

}  // namespace

Polynomial Polynomial::zero(std::size_t ambient, int degree) {
  check_ambient(ambient);
  Polynomial p;
  p.ambient_ = ambient;
  p.degree_ = degree;
  return p;
}

Polynomial Polynomial::constant(std::size_t ambient, const Coefficient& c) {
  return monomial(ambient, Exponents{}, c);
}

Polynomial Polynomial::variable(std::size_t ambient, std::size_t index) {
  if (index >= ambient) throw InvalidArgument("variable index out of range");
  return monomial(ambient, Exponents::unit(index), 1);
}

Polynomial Polynomial::monomial(std::size_t ambient, const Exponents& e, const Coefficient& c) {
  Polynomial p = zero(ambient, static_cast<int>(e.total_degree()));
  if (e.used() > ambient) throw InvalidArgument("monomial uses variables beyond the ambient ring");
  if (!c.is_zero()) p.terms_.emplace_back(e, c);
  return p;
}

Polynomial Polynomial::from_terms(std::size_t ambient, int degree, std::vector<Term> terms) {
  Polynomial p = zero(ambient, degree);
  std::sort(terms.begin(), terms.end(), poly_term_greater);
  for (auto& t : terms) {
    if (t.first.used() > ambient) throw InvalidArgument("monomial uses variables beyond the ambient ring");
    if (static_cast<int>(t.first.total_degree()) != degree)
      throw InvalidArgument("inhomogeneous polynomial: monomial of degree " +
                            std::to_string(t.first.total_degree()) + " in a degree-" +
                            std::to_string(degree) + " polynomial");
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
    } else {
      if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
  return p;
}

Coefficient Polynomial::coefficient(const Exponents& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exponents& key) { return t.first > key; });
  if (it != terms_.end() && it->first == e) return it->second;
  return {};
}

std::size_t Polynomial::used_parameters() const {
  std::size_t u = 0;
  for (const auto& t : terms_) u = std::max(u, t.second.used_variables());
  return u;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.ambient_ != b.ambient_ || a.terms_ != b.terms_) return false;
  return a.terms_.empty() || a.degree_ == b.degree_;
}

namespace {

void check_compatible(const Polynomial& p, const Polynomial& q) {
  if (p.ambient() != q.ambient())
    throw InvalidArgument("ambient mismatch: " + std::to_string(p.ambient()) + " vs " +
                          std::to_string(q.ambient()) + " variables");
  if (!p.is_zero() && !q.is_zero() && p.degree() != q.degree())
    throw InvalidArgument("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                          std::to_string(q.degree()));
}

Polynomial combine(const Polynomial& p, const Polynomial& q, int sign) {
  check_compatible(p, q);
  int degree = p.is_zero() ? q.degree() : p.degree();
  std::vector<Polynomial::Term> out;
  const auto& a = p.terms();
  const auto& b = q.terms();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first > a[i].first) {
      out.emplace_back(b[j].first, sign > 0 ? b[j].second : -b[j].second);
      ++j;
    } else {
      Coefficient c = sign > 0 ? a[i].second + b[j].second : a[i].second - b[j].second;
      if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  // Terms are already canonical; from_terms re-validates cheaply.
  return Polynomial::from_terms(p.ambient(), degree, std::move(out));
}

}  // namespace

Polynomial add(const Polynomial& p, const Polynomial& q) { return combine(p, q, +1); }
Polynomial sub(const Polynomial& p, const Polynomial& q) { return combine(p, q, -1); }

Polynomial mul(const Polynomial& p, const Polynomial& q) {
  if (p.ambient() != q.ambient())
    throw InvalidArgument("ambient mismatch: " + std::to_string(p.ambient()) + " vs " +
                          std::to_string(q.ambient()) + " variables");
  int degree = p.degree() + q.degree();
  if (p.is_zero() || q.is_zero()) return Polynomial::zero(p.ambient(), degree);
  std::unordered_map<Exponents, Coefficient, ExponentsHash> acc;
  for (const auto& [ea, ca] : p.terms())
    for (const auto& [eb, cb] : q.terms()) acc[ea + eb] += ca * cb;
  std::vector<Polynomial::Term> terms;
  terms.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (!c.is_zero()) terms.emplace_back(e, std::move(c));
  return Polynomial::from_terms(p.ambient(), degree, std::move(terms));
}

Polynomial scale(const Polynomial& p, const Coefficient& c) {
  std::vector<Polynomial::Term> terms;
  for (const auto& [e, pc] : p.terms()) {
    Coefficient v = pc * c;
    if (!v.is_zero()) terms.emplace_back(e, std::move(v));
  }
  return Polynomial::from_terms(p.ambient(), p.degree(), std::move(terms));
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial result = Polynomial::constant(p.ambient(), 1);
  Polynomial base = p;
  while (exponent > 0) {
    if (exponent & 1u) result = mul(result, base);
    exponent >>= 1;
    if (exponent > 0) base = mul(base, base);
  }
  return result;
}

Coefficient flatten(const Polynomial& p) {
  const std::size_t n = p.ambient();
  if (n + p.used_parameters() > Exponents::kCapacity)
    throw InvalidArgument("too many variables and parameters combined");
  std::vector<Coefficient::Term> terms;
  for (const auto& [e, c] : p.terms())
    for (const auto& [pe, pc] : c.terms()) terms.emplace_back(e + pe.shifted(n), pc);
  return Coefficient::from_terms(std::move(terms));
}

Polynomial unflatten(const Coefficient& c, std::size_t ambient, int nominal_degree) {
  if (c.is_zero()) return Polynomial::zero(ambient, nominal_degree);
  std::map<Exponents, std::vector<Coefficient::Term>, std::greater<>> grouped;
  for (const auto& [e, v] : c.terms())
    grouped[e.slice(0, ambient)].emplace_back(e.slice(ambient, Exponents::kCapacity), v);
  int degree = static_cast<int>(grouped.begin()->first.total_degree());
  std::vector<Polynomial::Term> terms;
  for (auto& [e, ts] : grouped) terms.emplace_back(e, Coefficient::from_terms(std::move(ts)));
  return Polynomial::from_terms(ambient, degree, std::move(terms));
}

Polynomial exact_div(const Polynomial& p, const Polynomial& q) {
  if (p.ambient() != q.ambient()) throw InvalidArgument("ambient mismatch in exact division");
  if (q.is_zero()) throw InvalidArgument("division by the zero polynomial");
  int degree = p.degree() - q.degree();
  if (p.is_zero()) return Polynomial::zero(p.ambient(), degree);
  if (p.degree() < q.degree()) throw NotDivisible("exact division failed: divisor degree too large");
  auto quotient = flatten(p).try_exact_div(flatten(q));
  if (!quotient) throw NotDivisible("exact division failed: nonzero remainder");
  return unflatten(*quotient, p.ambient(), degree);
}

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images) {
  if (images.size() < p.ambient()) throw InvalidArgument("substitution leaves a variable undefined");
  if (images.empty()) return p;
  const std::size_t target = images[0].ambient();
  std::optional<int> image_degree;
  for (const auto& img : images) {
    if (img.ambient() != target) throw InvalidArgument("substitution images have different ambients");
    if (!img.is_zero()) {
      if (image_degree && *image_degree != img.degree())
        throw InvalidArgument("substitution images have different degrees");
      image_degree = img.degree();
    }
  }
  const int g = image_degree.value_or(1);
  const int degree = p.degree() * g;
  std::vector<std::vector<Polynomial>> powers(p.ambient());
  auto power_of = [&](std::size_t i, unsigned k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= k) cache.push_back(mul(cache.back(), images[i]));
    return cache[k];
  };
  Polynomial sum = Polynomial::zero(target, degree);
  for (const auto& [e, c] : p.terms()) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < p.ambient(); ++i)
      if (e[i] != 0) term = mul(term, power_of(i, e[i]));
    sum = add(sum, term);
  }
  return sum;
}

Coefficient evaluate(const Polynomial& p, std::span<const Integer> values) {
  if (values.size() < p.ambient()) throw InvalidArgument("evaluation leaves a variable undefined");
  Coefficient sum;
  for (const auto& [e, c] : p.terms()) {
    Integer m = 1;
    for (std::size_t i = 0; i < p.ambient(); ++i)
      if (e[i] != 0) m *= ipow(values[i], e[i]);
    sum += c.scaled(m);
  }
  return sum;
}

Polynomial remap_variables(const Polynomial& p, std::span<const std::size_t> target,
                           std::size_t new_ambient) {
  if (target.size() < p.ambient()) throw InvalidArgument("variable map leaves a variable undefined");
  std::vector<Polynomial::Term> terms;
  terms.reserve(p.term_count());
  for (const auto& [e, c] : p.terms()) {
    Exponents out;
    for (std::size_t i = 0; i < p.ambient(); ++i) {
      if (e[i] == 0) continue;
      if (target[i] >= new_ambient) throw InvalidArgument("variable map target out of range");
      out.add(target[i], e[i]);
    }
    terms.emplace_back(out, c);
  }
  return Polynomial::from_terms(new_ambient, p.degree(), std::move(terms));
}

Polynomial map_coefficients(const Polynomial& p,
                            const std::function<Coefficient(const Coefficient&)>& f) {
  std::vector<Polynomial::Term> terms;
  for (const auto& [e, c] : p.terms()) terms.emplace_back(e, f(c));
  return Polynomial::from_terms(p.ambient(), p.degree(), std::move(terms));
}

Polynomial derivative(const Polynomial& p, std::size_t index) {
  if (index >= p.ambient()) throw InvalidArgument("variable index out of range");
  std::vector<Polynomial::Term> terms;
  for (const auto& [e, c] : p.terms()) {
    if (e[index] == 0) continue;
    Exponents out = e;
    out.set(index, e[index] - 1);
    terms.emplace_back(out, c.scaled(Integer(e[index])));
  }
  return Polynomial::from_terms(p.ambient(), p.degree() - 1, std::move(terms));
}

// ---------------------------------------------------------------------------
// Integers

Integer exact_quotient(const Integer& a, const Integer& b) {
  if (sgn(b) == 0) throw InvalidArgument("division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw NotDivisible("exact division failed: nonzero remainder");
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

}  // namespace eqres
