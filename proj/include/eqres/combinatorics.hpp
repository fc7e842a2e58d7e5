#ifndef EQRES_COMBINATORICS_HPP
#define EQRES_COMBINATORICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "eqres/ring.hpp"

namespace eqres {

// Weakly decreasing positive integers.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int size() const { return total_; }  // the integer being partitioned
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t i) const { return parts_.at(i); }
  const std::vector<int>& parts() const { return parts_; }
  // Number of parts equal to `value`.
  int count(int value) const;
  // "(2,1)"
  std::string to_string() const;
  // "21" for parts <= 9, otherwise "2_10_1"
  std::string compact() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions(int n, std::optional<int> max_length = std::nullopt);

// n! / (lambda_1! ... lambda_k!)
Integer multinomial(const Partition& lambda);
// multinomial / prod_j s_j!, where s_j counts the parts equal to j.
Integer m_lambda(const Partition& lambda);

// d(d-1)...(d-l+1) / (d-j+1) for 1 <= j <= l <= d, as an exact integer.
Integer falling_quotient(int d, int l, int j);
// Total coefficient degree of the chain resultant attached to a partition of
// length l for a degree-d system: sum_j falling_quotient(d, l, j).
Integer chain_degree(int d, int l);

// Exponent of the top divided difference for a resultant, 1 <= d < n.
Integer m_zero_resultant(int n, int d);
// Exponent of c_(d) for a discriminant, 2 <= d <= n.
Integer m_zero_discriminant(int n, int d);
// n d^(n-1) == sum over lambda |- n of m_lambda * chain_degree(d, l(lambda)); d >= n.
bool degree_identity_check(int n, int d);

}  // namespace eqres

#endif
