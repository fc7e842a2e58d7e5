#ifndef EQRES_RING_HPP
#define EQRES_RING_HPP

// Exact arithmetic for sparse polynomials over the integers.
//
// Two layers:
//   Coefficient  an element of Z[p_1, ..., p_m] (the parameter ring). It is
//                also used, with main variables and parameters flattened into
//                one exponent vector, as the workhorse for exact division and
//                determinants of polynomials in x.
//   Polynomial   a homogeneous polynomial in x_1..x_n whose coefficients are
//                Coefficients. Terms are kept in graded-lex descending order.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace eqres {

using Integer = mpz_class;

// Packed exponent vector. Index 0 is the most significant variable, so the
// defaulted comparison is the lexicographic order with x_1 > x_2 > ...
class Exponents {
 public:
  static constexpr std::size_t kCapacity = 24;

  Exponents() = default;
  Exponents(std::initializer_list<unsigned> values);
  explicit Exponents(std::span<const unsigned> values);

  static Exponents unit(std::size_t index, unsigned power = 1);

  unsigned operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, unsigned value);
  void add(std::size_t i, unsigned value);

  unsigned total_degree() const;
  // One past the index of the last nonzero entry (0 for the constant monomial).
  std::size_t used() const;
  bool is_constant() const { return used() == 0; }
  bool divides(const Exponents& other) const;

  Exponents operator+(const Exponents& other) const;
  // Requires divides(other) from this side: returns this - rhs.
  Exponents operator-(const Exponents& rhs) const;

  // Moves entries [0, count) to [offset, offset + count).
  Exponents shifted(std::size_t offset) const;
  // Entries [from, to) moved down to start at 0.
  Exponents slice(std::size_t from, std::size_t to) const;

  std::size_t hash() const noexcept;

  friend auto operator<=>(const Exponents&, const Exponents&) = default;
  friend bool operator==(const Exponents&, const Exponents&) = default;

 private:
  std::array<std::uint16_t, kCapacity> e_{};
};

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept { return e.hash(); }
};

// Ordered list of parameter symbol names, e.g. a, b, c, d or c3, c21, c111.
class ParameterRing {
 public:
  ParameterRing() = default;
  explicit ParameterRing(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const ParameterRing&, const ParameterRing&) = default;

 private:
  std::vector<std::string> names_;
};

// Sparse polynomial in parameters with arbitrary-precision integer entries.
// Terms are sorted in strictly decreasing lexicographic order; no zero entries.
class Coefficient {
 public:
  using Term = std::pair<Exponents, Integer>;

  Coefficient() = default;
  Coefficient(long value);  // NOLINT: integers are constant coefficients
  Coefficient(const Integer& value);  // NOLINT
  static Coefficient variable(std::size_t index);
  static Coefficient monomial(const Exponents& e, const Integer& c);
  // Canonicalizes arbitrary (unsorted, possibly duplicated) terms.
  static Coefficient from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  // Throws InvalidArgument when the coefficient is not a constant.
  Integer constant_value() const;
  // Value of the constant term (0 if absent).
  Integer constant_term() const;
  unsigned total_degree() const;
  bool is_homogeneous() const;
  std::size_t used_variables() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const { return terms_.front(); }

  Coefficient operator-() const;
  Coefficient& operator+=(const Coefficient& rhs);
  Coefficient& operator-=(const Coefficient& rhs);
  Coefficient& operator*=(const Coefficient& rhs);
  friend Coefficient operator+(Coefficient lhs, const Coefficient& rhs) { return lhs += rhs; }
  friend Coefficient operator-(Coefficient lhs, const Coefficient& rhs) { return lhs -= rhs; }
  friend Coefficient operator*(const Coefficient& lhs, const Coefficient& rhs);
  friend bool operator==(const Coefficient&, const Coefficient&) = default;

  Coefficient scaled(const Integer& factor) const;
  Coefficient pow(unsigned long exponent) const;

  // Exact quotient; throws NotDivisible on a nonzero remainder.
  Coefficient exact_div(const Coefficient& divisor) const;
  std::optional<Coefficient> try_exact_div(const Coefficient& divisor) const;

  // Plug integers into every variable (missing trailing values count as 0 is
  // not allowed: the span must cover used_variables()).
  Integer evaluate(std::span<const Integer> values) const;
  // Plug coefficients into every variable.
  Coefficient substitute(std::span<const Coefficient> images) const;

 private:
  std::vector<Term> terms_;
};

// Homogeneous polynomial in `ambient` main variables with Coefficient entries.
class Polynomial {
 public:
  using Term = std::pair<Exponents, Coefficient>;

  Polynomial() = default;
  static Polynomial zero(std::size_t ambient, int degree);
  static Polynomial constant(std::size_t ambient, const Coefficient& c);
  static Polynomial variable(std::size_t ambient, std::size_t index);
  static Polynomial monomial(std::size_t ambient, const Exponents& e, const Coefficient& c);
  // Canonicalizes the terms and checks that every monomial has total degree
  // `degree` over the first `ambient` variables.
  static Polynomial from_terms(std::size_t ambient, int degree, std::vector<Term> terms);

  std::size_t ambient() const { return ambient_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  Coefficient coefficient(const Exponents& e) const;
  // Highest parameter index used by any coefficient, plus one.
  std::size_t used_parameters() const;

  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  std::size_t ambient_ = 0;
  int degree_ = 0;
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial sub(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Polynomial& p, const Coefficient& c);
Polynomial pow(const Polynomial& p, unsigned exponent);
// Returns h with q*h == p; throws NotDivisible otherwise.
Polynomial exact_div(const Polynomial& p, const Polynomial& q);

// Replaces x_i by images[i]. All images must share one ambient and be
// homogeneous of one common degree (zero images are allowed).
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images);
// Replaces x_i by the integer values[i].
Coefficient evaluate(const Polynomial& p, std::span<const Integer> values);
// Sends x_i to x_{target[i]} in a ring with `new_ambient` variables.
Polynomial remap_variables(const Polynomial& p, std::span<const std::size_t> target,
                           std::size_t new_ambient);
// Applies a map on the parameter ring to every coefficient.
Polynomial map_coefficients(const Polynomial& p,
                            const std::function<Coefficient(const Coefficient&)>& f);
Polynomial derivative(const Polynomial& p, std::size_t index);

// Main variables and parameters in one exponent vector: x_1..x_n first, then
// the parameters. Used for division and determinants over Z[x, params].
Coefficient flatten(const Polynomial& p);
// Inverse of flatten. The result must be homogeneous in the first `ambient`
// variables; `nominal_degree` is used only when the input is zero.
Polynomial unflatten(const Coefficient& c, std::size_t ambient, int nominal_degree);

// Overloads used by the generic determinant code.
inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Coefficient& x) { return x.is_zero(); }
Integer exact_quotient(const Integer& a, const Integer& b);
inline Coefficient exact_quotient(const Coefficient& a, const Coefficient& b) {
  return a.exact_div(b);
}

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);
Integer ipow(const Integer& base, unsigned long exponent);

}  // namespace eqres

#endif
