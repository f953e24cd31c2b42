#include "subshift/matrix.hpp"

namespace subshift {

std::vector<Rational> kernel_vector(DenseMatrix<Rational> a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    Rational inv = 1 / a(r, c);
    for (std::size_t j = 0; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (pivot_col.size() + 1 != cols)
    throw std::domain_error("kernel is not one dimensional");
  std::size_t free = 0;
  for (std::size_t k = 0; k < pivot_col.size() && pivot_col[k] == free; ++k) ++free;
  std::vector<Rational> x(cols, Rational(0));
  x[free] = 1;
  for (std::size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = -a(k, free);
  return x;
}

}  // namespace subshift
