#include "eqres/matrix.hpp"

namespace eqres {

Integer determinant(const SquareMatrix<Integer>& m) { return determinant_generic(m); }

Coefficient determinant(const SquareMatrix<Coefficient>& m) {
  bool integral = true;
  for (std::size_t i = 0; i < m.dim() && integral; ++i)
    for (std::size_t j = 0; j < m.dim() && integral; ++j) integral = m(i, j).is_constant();
  if (integral) return Coefficient(determinant(m.map([](const Coefficient& c) { return c.constant_value(); })));
  if (m.dim() <= 4) return determinant_cofactor(m);
  if (m.dim() <= 24) return determinant_minor_expansion(m);
  return determinant_bareiss(m);
}

Polynomial determinant(const SquareMatrix<Polynomial>& m) {
  if (m.dim() == 0) throw InvalidArgument("determinant of an empty polynomial matrix has no ambient");
  const std::size_t ambient = m(0, 0).ambient();
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (m(i, j).ambient() != ambient) throw InvalidArgument("matrix entries have different ambients");
  return unflatten(determinant(m.map([](const Polynomial& p) { return flatten(p); })), ambient, 0);
}

}  // namespace eqres
