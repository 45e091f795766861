#include "fatcob/linalg.hpp"

#include "fatcob/error.hpp"

namespace fatcob {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m.at(k, k) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) fail(ErrorCode::Internal, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) fail(ErrorCode::Internal, "vector length mismatch");
  Vector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn(at(r, c)) != 0 && sgn(x[c]) != 0) y[r] += at(r, c) * x[c];
  return y;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) fail(ErrorCode::Internal, "matrix shape mismatch");
  Matrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (sgn(at(r, k)) == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out.at(r, c) += at(r, k) * other.at(k, c);
    }
  return out;
}

bool Matrix::operator==(const Matrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

Rref rref(Matrix m) {
  Rref out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && sgn(m.at(p, col)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
    Rational inv = 1 / m.at(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m.at(r, col)) == 0) continue;
      Rational factor = m.at(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (sgn(m.at(row, c)) != 0) m.at(r, c) -= factor * m.at(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Nullspace nullspace(const Matrix& m) {
  Rref r = rref(m);
  Nullspace ns;
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vector v(m.cols());
    v[c] = 1;
    for (std::size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.reduced.at(k, c);
    ns.basis.push_back(std::move(v));
    ns.free_columns.push_back(c);
  }
  return ns;
}

Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) fail(ErrorCode::Internal, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && sgn(m.at(p, col)) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m.at(p, c), m.at(col, c));
      det = -det;
    }
    det *= m.at(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(m.at(r, col)) == 0) continue;
      Rational factor = m.at(r, col) / m.at(col, col);
      for (std::size_t c = col; c < n; ++c) m.at(r, c) -= factor * m.at(col, c);
    }
  }
  return det;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) fail(ErrorCode::Internal, "right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  Rref red = rref(std::move(aug));
  Vector x(m.cols());
  for (std::size_t k = 0; k < red.pivots.size(); ++k) {
    if (red.pivots[k] == m.cols()) return std::nullopt;
    x[red.pivots[k]] = red.reduced.at(k, m.cols());
  }
  return x;
}

std::vector<std::size_t> complete_with_units(std::size_t dim, const std::vector<Vector>& columns) {
  Matrix m(dim, columns.size() + dim);
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < dim; ++r) m.at(r, c) = columns[c][r];
  for (std::size_t r = 0; r < dim; ++r) m.at(r, columns.size() + r) = 1;
  std::vector<std::size_t> chosen;
  for (std::size_t p : rref(std::move(m)).pivots)
    if (p >= columns.size()) chosen.push_back(p - columns.size());
  return chosen;
}

int sign(const Rational& q) { return sgn(q); }

}  // namespace fatcob
