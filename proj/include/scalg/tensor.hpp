#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "scalg/linalg.hpp"

namespace scalg {

/// Sorted (index, nonzero value) pairs.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

SparseVec to_sparse(const Vector& v);
Vector to_dense(const SparseVec& v, Field f, std::size_t n);
/// acc += s * v, keeping acc sorted and free of zeros.
void add_scaled(SparseVec& acc, const Scalar& s, const SparseVec& v);

/// Sparse rank-3 coefficient array c[i][j][k]. Zero entries are never stored;
/// iteration order is lexicographic in (i, j, k).
class StructureTensor {
 public:
  using Index = std::array<std::size_t, 3>;

  StructureTensor(Field f, std::size_t d1, std::size_t d2, std::size_t d3);

  Field field() const { return field_; }
  Index dims() const { return dims_; }
  const std::map<Index, Scalar>& entries() const { return entries_; }

  Scalar get(std::size_t i, std::size_t j, std::size_t k) const;
  void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);
  /// Accumulates; an entry that cancels to zero is erased.
  void add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);

  friend bool operator==(const StructureTensor& a, const StructureTensor& b);

 private:
  void check_index(std::size_t i, std::size_t j, std::size_t k) const;

  Field field_;
  Index dims_;
  std::map<Index, Scalar> entries_;
};

/// Sums t against v over one leg. Contracting leg 0 or 1 yields the operator
/// matrix from the other input leg to leg 2 (rows indexed by leg 2); contracting
/// leg 2 yields the bilinear-form matrix with rows on leg 0 and columns on leg 1.
DenseMatrix contract(const StructureTensor& t, std::size_t slot, const Vector& v);

/// Linear map k^cols -> k^rows given column by column. Composite maps are lazy:
/// composition and Kronecker products evaluate columns on demand, so checks on
/// H^{x4} never materialize the large intermediate operators.
class LinearMap {
 public:
  using ColumnFn = std::function<SparseVec(std::size_t)>;

  LinearMap(Field f, std::size_t rows, std::size_t cols, ColumnFn column);

  static LinearMap from_columns(Field f, std::size_t rows, std::vector<SparseVec> columns);
  static LinearMap from_dense(const DenseMatrix& m);
  static LinearMap identity(Field f, std::size_t n);
  static LinearMap zero(Field f, std::size_t rows, std::size_t cols);
  /// Reorders tensor legs: output leg q is input leg perm[q]. Leg 0 is the
  /// most significant digit of the flat index.
  static LinearMap permute_legs(Field f, const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm);
  /// x (x) y -> y (x) x for x in k^a, y in k^b.
  static LinearMap swap(Field f, std::size_t a, std::size_t b);
  /// Row vector (1 x n).
  static LinearMap covector(const Vector& v);
  /// Column vector (n x 1).
  static LinearMap vector(const Vector& v);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  SparseVec column(std::size_t c) const;
  SparseVec apply(const SparseVec& v) const;
  Vector apply(const Vector& v) const;
  DenseMatrix to_dense() const;
  /// Evaluates and stores every column once.
  LinearMap materialize() const;

  friend LinearMap operator*(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator+(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator-(const LinearMap& a, const LinearMap& b);
  friend LinearMap kron(const LinearMap& a, const LinearMap& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  ColumnFn column_;
};

LinearMap kron(const LinearMap& a, const LinearMap& b);
LinearMap kron(std::initializer_list<LinearMap> maps);

/// Index of the first column (in increasing order) where a and b differ.
std::optional<std::size_t> first_difference(const LinearMap& a, const LinearMap& b);
bool equal(const LinearMap& a, const LinearMap& b);

/// (i, j) -> k as a map k^{d1 d2} -> k^{d3}.
LinearMap bilinear_map(const StructureTensor& t);
/// i -> (j, k) as a map k^{d1} -> k^{d2 d3}.
LinearMap split_map(const StructureTensor& t);
StructureTensor tensor_from_bilinear(const LinearMap& m, std::size_t d1, std::size_t d2);
StructureTensor tensor_from_split(const LinearMap& m, std::size_t d2, std::size_t d3);

/// Splits a flat index into digits of the given radices (first digit most significant).
std::vector<std::size_t> unflatten(std::size_t index, const std::vector<std::size_t>& dims);

}  // namespace scalg
