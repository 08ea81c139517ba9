#include "scalg/hopf.hpp"

#include <string>

namespace scalg {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DimensionMismatch(what);
}

DenseMatrix placeholder_antipode(Field f, std::size_t n) { return DenseMatrix::identity(f, n); }

}  // namespace

void check_shapes(const HopfAlgebraData& h) {
  std::size_t n = h.dim;
  require(n > 0, "hopf algebra must have positive dimension");
  require(h.mul.dims() == StructureTensor::Index{n, n, n}, "mul tensor dims differ from n x n x n");
  require(h.comul.dims() == StructureTensor::Index{n, n, n}, "comul tensor dims differ from n x n x n");
  require(h.unit.size() == n, "unit vector length differs from dim");
  require(h.counit.size() == n, "counit covector length differs from dim");
  require(h.antipode.rows() == n && h.antipode.cols() == n, "antipode is not n x n");
  require(h.antipode_inv.rows() == n && h.antipode_inv.cols() == n, "antipode inverse is not n x n");
  Field f = h.field;
  if (!(h.mul.field() == f) || !(h.comul.field() == f) || !(h.antipode.field() == f) ||
      !(h.antipode_inv.field() == f) || !(h.unit.front().field() == f) || !(h.counit.front().field() == f)) {
    throw FieldMismatch("hopf algebra data mixes field descriptors");
  }
}

HopfAlgebraData make_hopf(Field f, std::size_t dim, StructureTensor mul, Vector unit, StructureTensor comul,
                          Vector counit, std::optional<DenseMatrix> antipode) {
  HopfAlgebraData h{f,
                    dim,
                    std::move(mul),
                    std::move(unit),
                    std::move(comul),
                    std::move(counit),
                    placeholder_antipode(f, dim),
                    placeholder_antipode(f, dim)};
  check_shapes(h);
  h.antipode = antipode ? *antipode : solve_antipode(h);
  try {
    h.antipode_inv = inverse(h.antipode);
  } catch (const BuildError&) {
    throw BuildError("antipode is singular");
  }
  check_shapes(h);
  return h;
}

HopfMaps maps_of(const HopfAlgebraData& h) {
  check_shapes(h);
  Field f = h.field;
  return {bilinear_map(h.mul),
          LinearMap::vector(h.unit),
          split_map(h.comul),
          LinearMap::covector(h.counit),
          LinearMap::from_dense(h.antipode),
          LinearMap::from_dense(h.antipode_inv),
          LinearMap::identity(f, h.dim)};
}

LinearMap product_map(const HopfAlgebraData& h, std::size_t factors) {
  if (factors == 0) throw DimensionMismatch("product of zero factors");
  LinearMap m = bilinear_map(h.mul);
  LinearMap acc = LinearMap::identity(h.field, h.dim);
  for (std::size_t i = 1; i < factors; ++i) acc = m * kron(acc, LinearMap::identity(h.field, h.dim));
  return acc.materialize();
}

Vector multiply(const HopfAlgebraData& h, const Vector& a, const Vector& b) {
  LinearMap m = bilinear_map(h.mul);
  SparseVec ab;
  auto sa = to_sparse(a);
  auto sb = to_sparse(b);
  for (const auto& [i, x] : sa) {
    for (const auto& [j, y] : sb) add_scaled(ab, x * y, m.column(i * h.dim + j));
  }
  return to_dense(ab, h.field, h.dim);
}

AxiomReport verify_hopf(const HopfAlgebraData& h) {
  auto H = maps_of(h);
  Field f = h.field;
  std::size_t n = h.dim;
  const auto& I = H.id;
  LinearMap k1 = LinearMap::identity(f, 1);
  AxiomReport r;

  r.check("associativity", H.mul * kron(H.mul, I), H.mul * kron(I, H.mul), {n, n, n});
  r.check("left unit", H.mul * kron(H.unit, I), I, {n});
  r.check("right unit", H.mul * kron(I, H.unit), I, {n});
  r.check("coassociativity", kron(H.comul, I) * H.comul, kron(I, H.comul) * H.comul, {n});
  r.check("left counit", kron(H.counit, I) * H.comul, I, {n});
  r.check("right counit", kron(I, H.counit) * H.comul, I, {n});

  LinearMap middle_swap = kron({I, LinearMap::swap(f, n, n), I});
  r.check("comultiplication multiplicative", H.comul * H.mul,
          kron(H.mul, H.mul) * middle_swap * kron(H.comul, H.comul), {n, n});
  r.check("comultiplication unital", H.comul * H.unit, kron(H.unit, H.unit), {1});
  r.check("counit multiplicative", H.counit * H.mul, kron(H.counit, H.counit), {n, n});
  r.check("counit unital", H.counit * H.unit, k1, {1});

  LinearMap unit_counit = H.unit * H.counit;
  r.check("antipode left", H.mul * kron(H.antipode, I) * H.comul, unit_counit, {n});
  r.check("antipode right", H.mul * kron(I, H.antipode) * H.comul, unit_counit, {n});
  auto inv_first = first_difference(H.antipode * H.antipode_inv, I);
  auto inv_second = first_difference(H.antipode_inv * H.antipode, I);
  if (!inv_first && !inv_second) {
    r.add_pass("antipode invertible");
  } else {
    std::size_t c = inv_first ? *inv_first : *inv_second;
    if (inv_first && inv_second) c = std::min(*inv_first, *inv_second);
    r.add_fail("antipode invertible", {c});
  }
  return r;
}

AxiomReport verify_antipode_properties(const HopfAlgebraData& h) {
  auto H = maps_of(h);
  Field f = h.field;
  std::size_t n = h.dim;
  LinearMap tau = LinearMap::swap(f, n, n);
  AxiomReport r;
  r.check("antipode anti-multiplicative", H.antipode * H.mul, H.mul * kron(H.antipode, H.antipode) * tau, {n, n});
  r.check("antipode anti-comultiplicative", H.comul * H.antipode, kron(H.antipode, H.antipode) * tau * H.comul, {n});
  r.check("antipode preserves counit", H.counit * H.antipode, H.counit, {n});
  r.check("antipode preserves unit", H.antipode * H.unit, H.unit, {1});
  return r;
}

DenseMatrix solve_antipode(const HopfAlgebraData& b) {
  std::size_t n = b.dim;
  Field f = b.field;
  // unknown s(j, a) = coefficient of e_j in S(e_a), flattened as j * n + a
  DenseMatrix system(f, n * n, n * n);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> by_second(n);  // b -> (j, k)
  std::vector<std::vector<Scalar>> by_second_coef(n);
  for (const auto& [idx, c] : b.mul.entries()) {
    by_second[idx[1]].emplace_back(idx[0], idx[2]);
    by_second_coef[idx[1]].push_back(c);
  }
  for (const auto& [idx, c] : b.comul.entries()) {
    std::size_t i = idx[0];
    std::size_t a = idx[1];
    std::size_t second = idx[2];
    for (std::size_t t = 0; t < by_second[second].size(); ++t) {
      auto [j, k] = by_second[second][t];
      system(i * n + k, j * n + a) += c * by_second_coef[second][t];
    }
  }
  Vector rhs = zero_vector(f, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) rhs[i * n + k] = b.counit[i] * b.unit[k];
  }
  auto x = solve(system, rhs);
  if (!x) throw NoAntipode();
  DenseMatrix s(f, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t a = 0; a < n; ++a) s(j, a) = (*x)[j * n + a];
  }
  HopfAlgebraData probe = b;
  probe.antipode = s;
  auto H = maps_of(probe);
  if (!equal(H.mul * kron(H.id, H.antipode) * H.comul, H.unit * H.counit)) {
    throw InternalError("solved antipode fails the right antipode identity");
  }
  return s;
}

HopfAlgebraData dual_hopf(const HopfAlgebraData& h) {
  check_shapes(h);
  std::size_t n = h.dim;
  StructureTensor mul(h.field, n, n, n);
  StructureTensor comul(h.field, n, n, n);
  for (const auto& [idx, c] : h.comul.entries()) mul.set(idx[1], idx[2], idx[0], c);
  for (const auto& [idx, c] : h.mul.entries()) comul.set(idx[2], idx[0], idx[1], c);
  return {h.field, n, std::move(mul), h.counit, std::move(comul), h.unit, h.antipode.transpose(),
          h.antipode_inv.transpose()};
}

HopfAlgebraData opposite_hopf(const HopfAlgebraData& h) {
  check_shapes(h);
  std::size_t n = h.dim;
  StructureTensor mul(h.field, n, n, n);
  for (const auto& [idx, c] : h.mul.entries()) mul.set(idx[1], idx[0], idx[2], c);
  return {h.field, n, std::move(mul), h.unit, h.comul, h.counit, h.antipode_inv, h.antipode};
}

AxiomReport check_lemma_aux(const HopfAlgebraData& h) {
  auto H = maps_of(h);
  Field f = h.field;
  std::size_t n = h.dim;
  const auto& I = H.id;
  // g (x) h -> g (x) S(h1) (x) h2 -> x (x) h2 with x = g S(h1)
  LinearMap x_and_h2 = kron(H.mul, I) * kron({I, H.antipode, I}) * kron(I, H.comul);
  // x (x) h2 -> x1 (x) x2 (x) h2 -> x1 (x) h2 (x) x2 -> x1 h2 (x) x2
  LinearMap lhs = kron(H.mul, I) * kron(I, LinearMap::swap(f, n, n)) * kron(H.comul, I) * x_and_h2;
  LinearMap rhs = kron(I, H.mul) * kron(H.comul, H.antipode);
  AxiomReport r;
  r.check("antipode sum identity", lhs, rhs, {n, n});
  return r;
}

LinearMap iterated_coproduct(const HopfAlgebraData& h, std::size_t order) {
  if (order == 0) throw DimensionMismatch("iterated coproduct order must be at least 1");
  auto H = maps_of(h);
  LinearMap acc = H.comul;
  std::size_t tail = h.dim;
  for (std::size_t r = 2; r <= order; ++r) {
    acc = kron(H.comul, LinearMap::identity(h.field, tail)) * acc;
    tail *= h.dim;
  }
  return acc.materialize();
}

}  // namespace scalg
