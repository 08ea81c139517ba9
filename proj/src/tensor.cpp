#include "scalg/tensor.hpp"

#include <algorithm>
#include <string>

namespace scalg {

SparseVec to_sparse(const Vector& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) s.emplace_back(i, v[i]);
  }
  return s;
}

Vector to_dense(const SparseVec& v, Field f, std::size_t n) {
  Vector d = zero_vector(f, n);
  for (const auto& [i, c] : v) d.at(i) = c;
  return d;
}

void add_scaled(SparseVec& acc, const Scalar& s, const SparseVec& v) {
  if (s.is_zero() || v.empty()) return;
  SparseVec out;
  out.reserve(acc.size() + v.size());
  auto a = acc.begin();
  auto b = v.begin();
  while (a != acc.end() || b != v.end()) {
    if (b == v.end() || (a != acc.end() && a->first < b->first)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == acc.end() || b->first < a->first) {
      out.emplace_back(b->first, s * b->second);
      ++b;
    } else {
      Scalar sum = a->second + s * b->second;
      if (!sum.is_zero()) out.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  acc = std::move(out);
}

StructureTensor::StructureTensor(Field f, std::size_t d1, std::size_t d2, std::size_t d3)
    : field_(f), dims_{d1, d2, d3} {}

void StructureTensor::check_index(std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= dims_[0] || j >= dims_[1] || k >= dims_[2]) {
    throw DimensionMismatch("tensor index (" + std::to_string(i) + "," + std::to_string(j) + "," +
                            std::to_string(k) + ") out of range");
  }
}

Scalar StructureTensor::get(std::size_t i, std::size_t j, std::size_t k) const {
  check_index(i, j, k);
  auto it = entries_.find({i, j, k});
  return it == entries_.end() ? field_.zero() : it->second;
}

void StructureTensor::set(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
  check_index(i, j, k);
  if (!(c.field() == field_)) throw FieldMismatch("tensor entry from a different field");
  if (c.is_zero()) {
    entries_.erase({i, j, k});
  } else {
    entries_.insert_or_assign({i, j, k}, c);
  }
}

void StructureTensor::add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
  set(i, j, k, get(i, j, k) + c);
}

bool operator==(const StructureTensor& a, const StructureTensor& b) {
  return a.field_ == b.field_ && a.dims_ == b.dims_ && a.entries_ == b.entries_;
}

DenseMatrix contract(const StructureTensor& t, std::size_t slot, const Vector& v) {
  auto d = t.dims();
  if (slot > 2) throw DimensionMismatch("tensor slot must be 0, 1 or 2");
  if (v.size() != d[slot]) throw DimensionMismatch("contraction vector length does not match slot dimension");
  std::size_t rows = slot == 2 ? d[0] : d[2];
  std::size_t cols = slot == 0 ? d[1] : (slot == 1 ? d[0] : d[1]);
  DenseMatrix m(t.field(), rows, cols);
  for (const auto& [idx, c] : t.entries()) {
    const Scalar& w = v[idx[slot]];
    if (w.is_zero()) continue;
    switch (slot) {
      case 0: m(idx[2], idx[1]) += w * c; break;
      case 1: m(idx[2], idx[0]) += w * c; break;
      default: m(idx[0], idx[1]) += w * c; break;
    }
  }
  return m;
}

LinearMap::LinearMap(Field f, std::size_t rows, std::size_t cols, ColumnFn column)
    : field_(f), rows_(rows), cols_(cols), column_(std::move(column)) {}

LinearMap LinearMap::from_columns(Field f, std::size_t rows, std::vector<SparseVec> columns) {
  auto store = std::make_shared<const std::vector<SparseVec>>(std::move(columns));
  std::size_t cols = store->size();
  return LinearMap(f, rows, cols, [store](std::size_t c) { return (*store)[c]; });
}

LinearMap LinearMap::from_dense(const DenseMatrix& m) {
  std::vector<SparseVec> cols;
  cols.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(to_sparse(m.column(c)));
  return from_columns(m.field(), m.rows(), std::move(cols));
}

LinearMap LinearMap::identity(Field f, std::size_t n) {
  return LinearMap(f, n, n, [f](std::size_t c) { return SparseVec{{c, f.one()}}; });
}

LinearMap LinearMap::zero(Field f, std::size_t rows, std::size_t cols) {
  return LinearMap(f, rows, cols, [](std::size_t) { return SparseVec{}; });
}

std::vector<std::size_t> unflatten(std::size_t index, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> digits(dims.size());
  for (std::size_t q = dims.size(); q-- > 0;) {
    digits[q] = index % dims[q];
    index /= dims[q];
  }
  return digits;
}

LinearMap LinearMap::permute_legs(Field f, const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm) {
  if (perm.size() != dims.size()) throw DimensionMismatch("permutation length differs from leg count");
  std::size_t total = 1;
  for (auto d : dims) total *= d;
  return LinearMap(f, total, total, [f, dims, perm](std::size_t c) {
    auto in = unflatten(c, dims);
    std::size_t out = 0;
    for (std::size_t q = 0; q < perm.size(); ++q) out = out * dims[perm[q]] + in[perm[q]];
    return SparseVec{{out, f.one()}};
  });
}

LinearMap LinearMap::swap(Field f, std::size_t a, std::size_t b) { return permute_legs(f, {a, b}, {1, 0}); }

LinearMap LinearMap::covector(const Vector& v) {
  if (v.empty()) throw DimensionMismatch("empty covector");
  Field f = v.front().field();
  std::vector<SparseVec> cols;
  for (const auto& c : v) cols.push_back(c.is_zero() ? SparseVec{} : SparseVec{{0, c}});
  return from_columns(f, 1, std::move(cols));
}

LinearMap LinearMap::vector(const Vector& v) {
  if (v.empty()) throw DimensionMismatch("empty vector");
  return from_columns(v.front().field(), v.size(), {to_sparse(v)});
}

SparseVec LinearMap::column(std::size_t c) const {
  if (c >= cols_) throw DimensionMismatch("column index out of range");
  return column_(c);
}

SparseVec LinearMap::apply(const SparseVec& v) const {
  SparseVec acc;
  for (const auto& [i, s] : v) add_scaled(acc, s, column(i));
  return acc;
}

Vector LinearMap::apply(const Vector& v) const {
  if (v.size() != cols_) throw DimensionMismatch("vector length does not match map domain");
  return scalg::to_dense(apply(to_sparse(v)), field_, rows_);
}

DenseMatrix LinearMap::to_dense() const {
  DenseMatrix m(field_, rows_, cols_);
  for (std::size_t c = 0; c < cols_; ++c) {
    for (auto& [r, s] : column(c)) m(r, c) = s;
  }
  return m;
}

LinearMap LinearMap::materialize() const {
  std::vector<SparseVec> cols;
  cols.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) cols.push_back(column(c));
  return from_columns(field_, rows_, std::move(cols));
}

LinearMap operator*(const LinearMap& a, const LinearMap& b) {
  if (!(a.field_ == b.field_)) throw FieldMismatch("composing maps over different fields");
  if (a.cols_ != b.rows_) {
    throw DimensionMismatch("cannot compose " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " after " +
                            std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  return LinearMap(a.field_, a.rows_, b.cols_, [a, b](std::size_t c) { return a.apply(b.column(c)); });
}

LinearMap operator+(const LinearMap& a, const LinearMap& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("adding maps of different shapes");
  Field f = a.field_;
  return LinearMap(f, a.rows_, a.cols_, [a, b, f](std::size_t c) {
    SparseVec v = a.column(c);
    add_scaled(v, f.one(), b.column(c));
    return v;
  });
}

LinearMap operator-(const LinearMap& a, const LinearMap& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("subtracting maps of different shapes");
  Field f = a.field_;
  return LinearMap(f, a.rows_, a.cols_, [a, b, f](std::size_t c) {
    SparseVec v = a.column(c);
    add_scaled(v, -f.one(), b.column(c));
    return v;
  });
}

LinearMap kron(const LinearMap& a, const LinearMap& b) {
  if (!(a.field_ == b.field_)) throw FieldMismatch("tensoring maps over different fields");
  std::size_t brows = b.rows_;
  std::size_t bcols = b.cols_;
  return LinearMap(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_, [a, b, brows, bcols](std::size_t c) {
    SparseVec left = a.column(c / bcols);
    SparseVec right = b.column(c % bcols);
    SparseVec out;
    out.reserve(left.size() * right.size());
    for (const auto& [i, x] : left) {
      for (const auto& [j, y] : right) out.emplace_back(i * brows + j, x * y);
    }
    return out;
  });
}

LinearMap kron(std::initializer_list<LinearMap> maps) {
  auto it = maps.begin();
  LinearMap acc = *it;
  for (++it; it != maps.end(); ++it) acc = kron(acc, *it);
  return acc;
}

std::optional<std::size_t> first_difference(const LinearMap& a, const LinearMap& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("comparing maps of different shapes: " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (a.column(c) != b.column(c)) return c;
  }
  return std::nullopt;
}

bool equal(const LinearMap& a, const LinearMap& b) { return !first_difference(a, b).has_value(); }

LinearMap bilinear_map(const StructureTensor& t) {
  auto d = t.dims();
  std::vector<SparseVec> cols(d[0] * d[1]);
  for (const auto& [idx, c] : t.entries()) cols[idx[0] * d[1] + idx[1]].emplace_back(idx[2], c);
  return LinearMap::from_columns(t.field(), d[2], std::move(cols));
}

LinearMap split_map(const StructureTensor& t) {
  auto d = t.dims();
  std::vector<SparseVec> cols(d[0]);
  for (const auto& [idx, c] : t.entries()) cols[idx[0]].emplace_back(idx[1] * d[2] + idx[2], c);
  return LinearMap::from_columns(t.field(), d[1] * d[2], std::move(cols));
}

StructureTensor tensor_from_bilinear(const LinearMap& m, std::size_t d1, std::size_t d2) {
  if (m.cols() != d1 * d2) throw DimensionMismatch("bilinear map domain is not d1*d2");
  StructureTensor t(m.field(), d1, d2, m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (const auto& [r, s] : m.column(c)) t.set(c / d2, c % d2, r, s);
  }
  return t;
}

StructureTensor tensor_from_split(const LinearMap& m, std::size_t d2, std::size_t d3) {
  if (m.rows() != d2 * d3) throw DimensionMismatch("split map codomain is not d2*d3");
  StructureTensor t(m.field(), m.cols(), d2, d3);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (const auto& [r, s] : m.column(c)) t.set(c, r / d3, r % d3, s);
  }
  return t;
}

}  // namespace scalg
