#include "eqres/combinatorics.hpp"

#include "eqres/error.hpp"

namespace eqres {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw InvalidArgument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidArgument("partition parts must be weakly decreasing");
    total_ += parts_[i];
  }
}

int Partition::count(int value) const {
  int c = 0;
  for (int p : parts_) c += (p == value);
  return c;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::string Partition::compact() const {
  bool small = true;
  for (int p : parts_) small = small && p <= 9;
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i && !small) s += '_';
    s += std::to_string(parts_[i]);
  }
  return s;
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& prefix, std::optional<int> max_length,
              std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (max_length && static_cast<int>(prefix.size()) == *max_length) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    generate(remaining - part, part, prefix, max_length, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n, std::optional<int> max_length) {
  if (n < 1) throw InvalidArgument("partitions: n must be at least 1");
  std::vector<Partition> out;
  std::vector<int> prefix;
  generate(n, n, prefix, max_length, out);
  return out;
}

Integer multinomial(const Partition& lambda) {
  Integer r = factorial(static_cast<unsigned long>(lambda.size()));
  for (int p : lambda.parts()) r = exact_quotient(r, factorial(static_cast<unsigned long>(p)));
  return r;
}

Integer m_lambda(const Partition& lambda) {
  Integer r = multinomial(lambda);
  for (int j = 1; j <= lambda.size(); ++j) {
    int s = lambda.count(j);
    if (s > 1) r = exact_quotient(r, factorial(static_cast<unsigned long>(s)));
  }
  return r;
}

Integer falling_quotient(int d, int l, int j) {
  if (!(1 <= j && j <= l && l <= d)) throw InvalidArgument("falling_quotient: need 1 <= j <= l <= d");
  Integer r = 1;
  for (int k = 0; k < l; ++k)
    if (d - k != d - j + 1) r *= d - k;
  return r;
}

Integer chain_degree(int d, int l) {
  Integer s = 0;
  for (int j = 1; j <= l; ++j) s += falling_quotient(d, l, j);
  return s;
}

Integer m_zero_resultant(int n, int d) {
  if (d < 1 || d >= n) throw InvalidArgument("m_zero_resultant: need 1 <= d < n");
  Integer m0 = Integer(n) * ipow(d, static_cast<unsigned long>(n - 1));
  for (const auto& lambda : partitions(n, d)) m0 -= m_lambda(lambda) * chain_degree(d, lambda.length());
  if (sgn(m0) < 0) throw Mismatch("m_zero_resultant: negative exponent");
  return m0;
}

Integer m_zero_discriminant(int n, int d) {
  if (d < 2 || d > n) throw InvalidArgument("m_zero_discriminant: need 2 <= d <= n");
  // Same count as for a resultant of the degree-(d-1) system of partials.
  return m_zero_resultant(n, d - 1);
}

bool degree_identity_check(int n, int d) {
  if (n < 1 || d < n) throw InvalidArgument("degree_identity_check: need d >= n >= 1");
  Integer lhs = Integer(n) * ipow(d, static_cast<unsigned long>(n - 1));
  Integer rhs = 0;
  for (const auto& lambda : partitions(n)) rhs += m_lambda(lambda) * chain_degree(d, lambda.length());
  return lhs == rhs;
}

}  // namespace eqres
