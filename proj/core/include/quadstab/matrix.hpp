#pragma once

#include <cstddef>
#include <vector>

#include "quadstab/rational.hpp"

namespace quadstab::exact {

/// Dense matrix of exact rationals. Small: built for coefficient-matching
/// systems, not for numerics.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

/// Basis of the right nullspace over the rationals, computed by exact
/// Gauss-Jordan elimination. Basis vectors are in the canonical form induced
/// by the reduced row echelon form: one vector per free column, with a 1 in
/// that free position. Returns an empty list for a trivial nullspace.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

/// Exact rank (via the same elimination).
std::size_t rank(const RationalMatrix& m);

}  // namespace quadstab::exact
