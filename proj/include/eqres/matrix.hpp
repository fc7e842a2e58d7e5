#ifndef EQRES_MATRIX_HPP
#define EQRES_MATRIX_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "eqres/error.hpp"
#include "eqres/ring.hpp"

namespace eqres {

// Dense square matrix stored row-major.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
  SquareMatrix(std::size_t dim, std::vector<T> entries) : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim * dim) throw InvalidArgument("matrix is not square");
  }

  std::size_t dim() const { return dim_; }
  T& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < dim_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  // Square submatrix on the given row/column indices.
  SquareMatrix submatrix(const std::vector<std::size_t>& idx) const {
    SquareMatrix out(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = (*this)(idx[i], idx[j]);
    return out;
  }

  template <typename F>
  auto map(F&& f) const -> SquareMatrix<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<U> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(f(e));
    return SquareMatrix<U>(dim_, std::move(out));
  }

 private:
  std::size_t dim_ = 0;
  std::vector<T> entries_;
};

// Single-step fraction-free elimination with first-nonzero pivoting. Every
// division is exact over an integral domain.
template <typename T>
T determinant_bareiss(SquareMatrix<T> m) {
  const std::size_t n = m.dim();
  if (n == 0) return T(1);
  bool negate = false;
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && is_zero(m(pivot, k))) ++pivot;
    if (pivot == n) return T(0);
    if (pivot != k) {
      m.swap_rows(pivot, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = m(k, k) * m(i, j);
        if (!is_zero(m(i, k))) v -= m(i, k) * m(k, j);
        m(i, j) = exact_quotient(v, prev);
      }
      m(i, k) = T(0);
    }
    prev = m(k, k);
  }
  T det = m(n - 1, n - 1);
  if (negate) det = -det;
  return det;
}

// Laplace expansion along the first row.
template <typename T>
T determinant_cofactor(const SquareMatrix<T>& m) {
  const std::size_t n = m.dim();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  T det(0);
  for (std::size_t c = 0; c < n; ++c) {
    if (is_zero(m(0, c))) continue;
    SquareMatrix<T> minor(n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    T term = m(0, c) * determinant_cofactor(minor);
    if (c % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

// Division-free expansion by minors, memoized over the set of columns used by
// the rows processed so far. Rows are visited sparsest first and only nonzero
// minors are stored, which keeps sparse symbolic matrices cheap. dim <= 64.
template <typename T>
T determinant_minor_expansion(const SquareMatrix<T>& m) {
  const std::size_t n = m.dim();
  if (n == 0) return T(1);
  if (n > 64) throw InvalidArgument("minor expansion supports at most 64 columns");
  std::vector<std::size_t> order(n), nonzeros(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    order[r] = r;
    for (std::size_t c = 0; c < n; ++c) nonzeros[r] += !is_zero(m(r, c));
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return nonzeros[a] < nonzeros[b]; });
  // Parity of the row reordering.
  bool negate = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) negate ^= order[i] > order[j];

  std::unordered_map<std::uint64_t, T> level{{0, T(1)}};
  for (std::size_t row : order) {
    std::unordered_map<std::uint64_t, T> next;
    for (const auto& [used, minor] : level) {
      for (std::size_t c = 0; c < n; ++c) {
        const std::uint64_t bit = std::uint64_t{1} << c;
        if ((used & bit) || is_zero(m(row, c))) continue;
        T term = m(row, c) * minor;
        const int inversions = std::popcount(used & ~((bit << 1) - 1));
        auto [it, inserted] = next.try_emplace(used | bit, T(0));
        if (inversions % 2 == 0)
          it->second += term;
        else
          it->second -= term;
      }
    }
    level.clear();
    for (auto& [used, minor] : next)
      if (!is_zero(minor)) level.emplace(used, std::move(minor));
    if (level.empty()) return T(0);
  }
  T det = std::move(level.begin()->second);
  if (negate) det = -det;
  return det;
}

template <typename T>
T determinant_generic(const SquareMatrix<T>& m) {
  return m.dim() <= 4 ? determinant_cofactor(m) : determinant_bareiss(m);
}

// Determinants over Z[params]. Integer matrices use Bareiss over GMP;
// symbolic ones use the memoized minor expansion up to 24x24, Bareiss beyond.
Coefficient determinant(const SquareMatrix<Coefficient>& m);
Integer determinant(const SquareMatrix<Integer>& m);
// Determinant over Z[x, params]. The result must be homogeneous in x; a zero
// determinant is returned with nominal degree 0.
Polynomial determinant(const SquareMatrix<Polynomial>& m);

}  // namespace eqres

#endif
