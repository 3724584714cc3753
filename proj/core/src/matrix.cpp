#include "quadstab/matrix.hpp"

#include <utility>

namespace quadstab::exact {

namespace {

struct Echelon {
  std::vector<std::vector<Rational>> rows;  // reduced row echelon form
  std::vector<std::size_t> pivot_cols;      // ascending
};

Echelon reduce(const RationalMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.at(r, c);
  }

  Echelon e;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < a.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < a.size() && a[sel][col].is_zero()) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[pivot_row], a[sel]);

    const Rational inv_pivot = Rational(1) / a[pivot_row][col];
    for (std::size_t c = col; c < m.cols(); ++c) a[pivot_row][c] *= inv_pivot;

    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == pivot_row || a[r][col].is_zero()) continue;
      const Rational factor = a[r][col];
      for (std::size_t c = col; c < m.cols(); ++c) {
        a[r][c] -= factor * a[pivot_row][c];
      }
    }
    e.pivot_cols.push_back(col);
    ++pivot_row;
  }
  e.rows = std::move(a);
  return e;
}

}  // namespace

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
  const Echelon e = reduce(m);

  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(m.cols());
    v[free_col] = Rational(1);
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
      v[e.pivot_cols[r]] = -e.rows[r][free_col];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const RationalMatrix& m) { return reduce(m).pivot_cols.size(); }

}  // namespace quadstab::exact
