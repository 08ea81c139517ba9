#include "scalg/linalg.hpp"

#include <string>

namespace scalg {

namespace {

void require_same(const DenseMatrix& a, const DenseMatrix& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("matrices over different fields");
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("matrix shapes differ: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                            " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

}  // namespace

Vector zero_vector(Field f, std::size_t n) { return Vector(n, f.zero()); }

Vector basis_vector(Field f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v.at(i) = f.one();
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector scale(const Scalar& s, const Vector& v) {
  Vector r = v;
  for (auto& x : r) x *= s;
  return r;
}

DenseMatrix::DenseMatrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

DenseMatrix DenseMatrix::identity(Field f, std::size_t n) {
  DenseMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

DenseMatrix DenseMatrix::from_columns(Field f, std::size_t rows, const std::vector<Vector>& cols) {
  DenseMatrix m(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionMismatch("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

DenseMatrix DenseMatrix::from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows) {
  DenseMatrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector DenseMatrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector DenseMatrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (!(a.field_ == b.field_)) throw FieldMismatch("matrices over different fields");
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  DenseMatrix m(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
      }
    }
  }
  return m;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  require_same(a, b);
  DenseMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  require_same(a, b);
  DenseMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

Vector operator*(const DenseMatrix& a, const Vector& v) {
  if (v.size() != a.cols_) throw DimensionMismatch("matrix-vector shape mismatch");
  Vector r = zero_vector(a.field_, a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) {
      if (!a(i, j).is_zero() && !v[j].is_zero()) r[i] += a(i, j) * v[j];
    }
  }
  return r;
}

bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
  if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  return a.data_ == b.data_;
}

bool DenseMatrix::is_zero() const {
  for (const auto& s : data_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

RrefResult rref(const DenseMatrix& input) {
  DenseMatrix m = input;
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t r = lead_row;
    while (r < m.rows() && m(r, c).is_zero()) ++r;
    if (r == m.rows()) continue;
    if (r != lead_row) {
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(r, j), m(lead_row, j));
    }
    Scalar inv = m(lead_row, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead_row || m(i, c).is_zero()) continue;
      Scalar factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(lead_row, j).is_zero()) m(i, j) -= factor * m(lead_row, j);
      }
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const DenseMatrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> kernel_basis(const DenseMatrix& m) {
  auto [reduced, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = basis_vector(m.field(), m.cols(), free);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

DenseMatrix inverse(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  std::size_t n = m.rows();
  DenseMatrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field().one();
  }
  auto [reduced, pivots] = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) throw BuildError("matrix is singular");
  DenseMatrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = reduced(i, n + j);
  }
  return inv;
}

std::optional<Vector> solve(const DenseMatrix& m, const Vector& rhs) {
  if (rhs.size() != m.rows()) throw DimensionMismatch("right-hand side length mismatch");
  DenseMatrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  auto [reduced, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.field(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = reduced(i, m.cols());
  return x;
}

Subspace::Subspace(Field f, std::size_t ambient, std::vector<Vector> basis)
    : field_(f),
      ambient_(ambient),
      basis_(std::move(basis)),
      selected_inverse_(f, 0, 0),
      echelon_(f, 0, ambient) {
  for (const auto& v : basis_) {
    if (v.size() != ambient_) throw DimensionMismatch("subspace vector has wrong length");
  }
  auto cols = DenseMatrix::from_columns(f, ambient_, basis_);
  // rows of the basis matrix that form an invertible square block
  auto [reduced_t, row_pivots] = rref(cols.transpose());
  if (row_pivots.size() != basis_.size()) throw BuildError("subspace basis is linearly dependent");
  selected_rows_ = row_pivots;
  DenseMatrix block(f, basis_.size(), basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = 0; j < basis_.size(); ++j) block(i, j) = cols(selected_rows_[i], j);
  }
  selected_inverse_ = inverse(block);
  echelon_ = DenseMatrix(f, basis_.size(), ambient_);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = 0; j < ambient_; ++j) echelon_(i, j) = reduced_t(i, j);
  }
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector length differs from ambient dimension");
  Vector picked;
  picked.reserve(dim());
  for (auto r : selected_rows_) picked.push_back(v[r]);
  Vector coords = selected_inverse_ * picked;
  if (!(combine(coords) == v)) return std::nullopt;
  return coords;
}

Vector Subspace::combine(const Vector& coords) const {
  if (coords.size() != dim()) throw DimensionMismatch("coordinate vector length mismatch");
  Vector v = zero_vector(field_, ambient_);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (!basis_[i][j].is_zero()) v[j] += coords[i] * basis_[i][j];
    }
  }
  return v;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.echelon_ == b.echelon_;
}

}  // namespace scalg
