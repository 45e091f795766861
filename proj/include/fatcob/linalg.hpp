#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace fatcob {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector apply(const Vector& x) const;
  Matrix operator*(const Matrix& other) const;
  bool operator==(const Matrix& other) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Gauss-Jordan elimination choosing the leftmost available pivot column.
Rref rref(Matrix m);
std::size_t rank(const Matrix& m);

// One basis vector per non-pivot column c, with entry 1 at c and 0 at the
// other non-pivot columns.
struct Nullspace {
  std::vector<Vector> basis;
  std::vector<std::size_t> free_columns;
};
Nullspace nullspace(const Matrix& m);

Rational determinant(Matrix m);

// A solution of m x = b (free variables set to 0), if one exists.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

// Greedy unit-vector completion: indices j (ascending) such that the given
// columns together with e_j for the chosen j span Q^dim.
std::vector<std::size_t> complete_with_units(std::size_t dim, const std::vector<Vector>& columns);

int sign(const Rational& q);

}  // namespace fatcob
