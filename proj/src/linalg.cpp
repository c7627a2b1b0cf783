#include "bgnf/linalg.hpp"

#include "bgnf/error.hpp"

namespace bgnf {

std::vector<int> row_reduce(RationalMatrix& m, int columns) {
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != columns) throw argument_error("ragged matrix");
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < columns && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rational inv = Rational(1) / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rational f = m[i][c];
      for (int j = c; j < columns; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Rational>> nullspace(RationalMatrix m, int columns) {
  std::vector<int> pivots = row_reduce(m, columns);
  std::vector<bool> is_pivot(static_cast<std::size_t>(columns), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < columns; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(columns));
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[static_cast<std::size_t>(pivots[i])] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(RationalMatrix m, int columns) { return static_cast<int>(row_reduce(m, columns).size()); }

}  // namespace bgnf
