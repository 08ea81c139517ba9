#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "scalg/scalar.hpp"

namespace scalg {

using Vector = std::vector<Scalar>;

Vector zero_vector(Field f, std::size_t n);
Vector basis_vector(Field f, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector scale(const Scalar& s, const Vector& v);

/// Row-major dense matrix over one field.
class DenseMatrix {
 public:
  DenseMatrix(Field f, std::size_t rows, std::size_t cols);
  static DenseMatrix identity(Field f, std::size_t n);
  /// Each vector becomes one column.
  static DenseMatrix from_columns(Field f, std::size_t rows, const std::vector<Vector>& cols);
  static DenseMatrix from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  DenseMatrix transpose() const;

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
  friend Vector operator*(const DenseMatrix& a, const Vector& v);
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b);

  bool is_zero() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

struct RrefResult {
  DenseMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Pivots are taken at the first nonzero column,
/// scanning rows top-down, so the result is unique and reproducible.
RrefResult rref(const DenseMatrix& m);

std::size_t rank(const DenseMatrix& m);

/// Right null space in the canonical parametrization: one vector per free
/// column (increasing), carrying a 1 in its own free slot and 0 in the others.
std::vector<Vector> kernel_basis(const DenseMatrix& m);

/// Throws BuildError when the matrix is singular.
DenseMatrix inverse(const DenseMatrix& m);

/// Some solution of m x = rhs with free variables set to zero, or nullopt if
/// the system is inconsistent.
std::optional<Vector> solve(const DenseMatrix& m, const Vector& rhs);

/// A linear subspace of k^n with a fixed ordered basis. Coordinates are
/// always expressed in that basis; membership is exact.
class Subspace {
 public:
  Subspace(Field f, std::size_t ambient, std::vector<Vector> basis);

  Field field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }

  /// Coordinates of v in the stored basis, or nullopt when v lies outside.
  std::optional<Vector> coordinates(const Vector& v) const;
  bool contains(const Vector& v) const { return coordinates(v).has_value(); }
  Vector combine(const Vector& coords) const;

  /// Reduced echelon basis; equal for equal subspaces.
  const DenseMatrix& echelon() const { return echelon_; }

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> selected_rows_;
  DenseMatrix selected_inverse_;
  DenseMatrix echelon_;
};

}  // namespace scalg
