#include "scalg/modalg.hpp"

#include <string>

namespace scalg {

namespace {

std::string tuple_text(std::initializer_list<std::size_t> xs) {
  std::string s = "(";
  bool first = true;
  for (auto x : xs) {
    s += (first ? "" : ", ") + std::to_string(x);
    first = false;
  }
  return s + ")";
}

void check_algebra_shape(const AlgebraData& a) {
  if (a.dim == 0) throw DimensionMismatch("algebra must have positive dimension");
  if (a.mul.dims() != StructureTensor::Index{a.dim, a.dim, a.dim}) throw DimensionMismatch("algebra mul dims differ from m x m x m");
  if (a.unit.size() != a.dim) throw DimensionMismatch("algebra unit length differs from dim");
  if (!(a.mul.field() == a.field)) throw FieldMismatch("algebra data mixes field descriptors");
}

void check_action_shape(const StructureTensor& action, std::size_t hdim, std::size_t mdim) {
  if (action.dims() != StructureTensor::Index{hdim, mdim, mdim}) {
    throw DimensionMismatch("action tensor dims differ from dim H x dim M x dim M");
  }
}

}  // namespace

GroupData make_group(std::vector<std::vector<std::size_t>> table) {
  std::size_t n = table.size();
  if (n == 0) throw BuildError("group must be nonempty");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw BuildError("Cayley table row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n) throw BuildError("Cayley table entry out of range at " + tuple_text({i, j}));
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw BuildError("Cayley table not associative at " + tuple_text({a, b, c}));
        }
      }
    }
  }
  std::size_t e = n;
  for (std::size_t cand = 0; cand < n && e == n; ++cand) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = table[cand][x] == x && table[x][cand] == x;
    if (ok) e = cand;
  }
  if (e == n) throw BuildError("Cayley table has no identity element");
  std::vector<std::size_t> inv(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (table[x][y] == e && table[y][x] == e) inv[x] = y;
    }
    if (inv[x] == n) throw BuildError("element " + std::to_string(x) + " has no inverse");
  }
  return {n, std::move(table), e, std::move(inv)};
}

GroupData cyclic_group(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  }
  return make_group(std::move(t));
}

GroupData symmetric_group_3() {
  // element 3a + b is s^a r^b; r^b s = s r^{-b}
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t x = 0; x < 6; ++x) {
    for (std::size_t y = 0; y < 6; ++y) {
      std::size_t a = x / 3, b = x % 3, c = y / 3, d = y % 3;
      t[x][y] = c == 0 ? 3 * a + (b + d) % 3 : 3 * ((a + 1) % 2) + (d + 3 - b) % 3;
    }
  }
  return make_group(std::move(t));
}

AlgebraData algebra_of(const HopfAlgebraData& h) { return {h.field, h.dim, h.mul, h.unit}; }

AlgebraData matrix_algebra(Field f, std::size_t r) {
  std::size_t m = r * r;
  StructureTensor mul(f, m, m, m);
  for (std::size_t p = 0; p < r; ++p) {
    for (std::size_t q = 0; q < r; ++q) {
      for (std::size_t t = 0; t < r; ++t) mul.set(p * r + q, q * r + t, p * r + t, f.one());
    }
  }
  Vector unit = zero_vector(f, m);
  for (std::size_t p = 0; p < r; ++p) unit[p * r + p] = f.one();
  return {f, m, std::move(mul), std::move(unit)};
}

AlgebraData opposite_algebra(const AlgebraData& a) {
  StructureTensor mul(a.field, a.dim, a.dim, a.dim);
  for (const auto& [idx, c] : a.mul.entries()) mul.set(idx[1], idx[0], idx[2], c);
  return {a.field, a.dim, std::move(mul), a.unit};
}

ModuleData underlying_module(const ModuleAlgebraData& m) { return {m.hopf, m.alg.dim, m.action}; }

ModuleData regular_module(const HopfAlgebraData& h) { return {h, h.dim, h.mul}; }

ModuleData trivial_module(const HopfAlgebraData& h) {
  StructureTensor action(h.field, h.dim, 1, 1);
  for (std::size_t i = 0; i < h.dim; ++i) action.set(i, 0, 0, h.counit[i]);
  return {h, 1, std::move(action)};
}

LinearMap action_map(const StructureTensor& action) { return bilinear_map(action); }

DenseMatrix action_matrix(const StructureTensor& action, std::size_t h) {
  auto d = action.dims();
  DenseMatrix m(action.field(), d[2], d[1]);
  for (auto it = action.entries().lower_bound({h, 0, 0}); it != action.entries().end() && it->first[0] == h; ++it) {
    m(it->first[2], it->first[1]) = it->second;
  }
  return m;
}

AxiomReport verify_algebra(const AlgebraData& a) {
  check_algebra_shape(a);
  LinearMap m = bilinear_map(a.mul);
  LinearMap I = LinearMap::identity(a.field, a.dim);
  LinearMap eta = LinearMap::vector(a.unit);
  AxiomReport r;
  r.check("associativity", m * kron(m, I), m * kron(I, m), {a.dim, a.dim, a.dim});
  r.check("left unit", m * kron(eta, I), I, {a.dim});
  r.check("right unit", m * kron(I, eta), I, {a.dim});
  return r;
}

AxiomReport verify_module(const ModuleData& m) {
  check_shapes(m.hopf);
  check_action_shape(m.action, m.hopf.dim, m.dim);
  auto H = maps_of(m.hopf);
  LinearMap rho = action_map(m.action);
  LinearMap I = LinearMap::identity(m.hopf.field, m.dim);
  AxiomReport r;
  r.check("module associativity", rho * kron(H.mul, I), rho * kron(H.id, rho), {m.hopf.dim, m.hopf.dim, m.dim});
  r.check("module unit", rho * kron(H.unit, I), I, {m.dim});
  return r;
}

AxiomReport verify_module_algebra(const ModuleAlgebraData& m) {
  check_shapes(m.hopf);
  check_algebra_shape(m.alg);
  check_action_shape(m.action, m.hopf.dim, m.alg.dim);
  if (!(m.alg.field == m.hopf.field)) throw FieldMismatch("algebra and hopf algebra over different fields");
  std::size_t n = m.hopf.dim;
  std::size_t d = m.alg.dim;
  Field f = m.hopf.field;
  auto H = maps_of(m.hopf);
  LinearMap rho = action_map(m.action);
  LinearMap mA = bilinear_map(m.alg.mul);
  LinearMap etaA = LinearMap::vector(m.alg.unit);
  LinearMap IA = LinearMap::identity(f, d);

  AxiomReport r;
  r.append(verify_algebra(m.alg), "algebra ");
  r.append(verify_module(underlying_module(m)));
  LinearMap lhs = rho * kron(H.id, mA);
  LinearMap rhs = mA * kron(rho, rho) * kron({H.id, LinearMap::swap(f, n, d), IA}) * kron({H.comul, IA, IA});
  r.check("module algebra law", lhs, rhs, {n, d, d});
  r.check("action on unit", rho * kron(H.id, etaA), etaA * H.counit, {n});
  return r;
}

ModuleAlgebraData trivial_module_algebra(const HopfAlgebraData& h) {
  Field f = h.field;
  StructureTensor mul(f, 1, 1, 1);
  mul.set(0, 0, 0, f.one());
  AlgebraData k{f, 1, std::move(mul), {f.one()}};
  return {h, std::move(k), trivial_module(h).action};
}

ModuleAlgebraData dual_regular_module_algebra(const HopfAlgebraData& h) {
  check_shapes(h);
  std::size_t n = h.dim;
  StructureTensor mul(h.field, n, n, n);
  for (const auto& [idx, c] : h.comul.entries()) mul.set(idx[1], idx[2], idx[0], c);
  // (e_h . e^j)(e_g) = e^j(e_g e_h)
  StructureTensor action(h.field, n, n, n);
  for (const auto& [idx, c] : h.mul.entries()) action.set(idx[1], idx[2], idx[0], c);
  return {h, AlgebraData{h.field, n, std::move(mul), h.counit}, std::move(action)};
}

ModuleAlgebraData matrix_amplify(const ModuleAlgebraData& m, std::size_t r) {
  if (r == 0) throw DimensionMismatch("matrix size must be at least 1");
  Field f = m.alg.field;
  std::size_t d = m.alg.dim;
  std::size_t big = r * r * d;
  auto index = [&](std::size_t p, std::size_t q, std::size_t i) { return (p * r + q) * d + i; };
  StructureTensor mul(f, big, big, big);
  for (const auto& [idx, c] : m.alg.mul.entries()) {
    for (std::size_t p = 0; p < r; ++p) {
      for (std::size_t q = 0; q < r; ++q) {
        for (std::size_t t = 0; t < r; ++t) mul.set(index(p, q, idx[0]), index(q, t, idx[1]), index(p, t, idx[2]), c);
      }
    }
  }
  Vector unit = zero_vector(f, big);
  for (std::size_t p = 0; p < r; ++p) {
    for (std::size_t i = 0; i < d; ++i) unit[index(p, p, i)] = m.alg.unit[i];
  }
  StructureTensor action(f, m.hopf.dim, big, big);
  for (const auto& [idx, c] : m.action.entries()) {
    for (std::size_t p = 0; p < r; ++p) {
      for (std::size_t q = 0; q < r; ++q) action.set(idx[0], index(p, q, idx[1]), index(p, q, idx[2]), c);
    }
  }
  return {m.hopf, AlgebraData{f, big, std::move(mul), std::move(unit)}, std::move(action)};
}

HopfAlgebraData group_hopf(Field f, const GroupData& g) {
  std::size_t n = g.order;
  StructureTensor mul(f, n, n, n), comul(f, n, n, n);
  DenseMatrix s(f, n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mul.set(a, b, g.mul(a, b), f.one());
    comul.set(a, a, a, f.one());
    s(g.inverse[a], a) = f.one();
  }
  Vector counit(n, f.one());
  return make_hopf(f, n, std::move(mul), basis_vector(f, n, g.identity), std::move(comul), std::move(counit), s);
}

HopfAlgebraData dual_group_hopf(Field f, const GroupData& g) {
  std::size_t n = g.order;
  StructureTensor mul(f, n, n, n), comul(f, n, n, n);
  DenseMatrix s(f, n, n);
  for (std::size_t a = 0; a < n; ++a) {
    mul.set(a, a, a, f.one());
    for (std::size_t b = 0; b < n; ++b) comul.set(g.mul(a, b), a, b, f.one());
    s(g.inverse[a], a) = f.one();
  }
  Vector unit(n, f.one());
  return make_hopf(f, n, std::move(mul), std::move(unit), std::move(comul), basis_vector(f, n, g.identity), s);
}

ModuleAlgebraData g_action_algebra(const GroupData& g, const AlgebraData& a, const std::vector<DenseMatrix>& autos) {
  check_algebra_shape(a);
  Field f = a.field;
  std::size_t m = a.dim;
  if (autos.size() != g.order) throw BuildError("expected one matrix per group element");
  LinearMap mA = bilinear_map(a.mul);
  for (std::size_t x = 0; x < g.order; ++x) {
    const auto& M = autos[x];
    if (M.rows() != m || M.cols() != m) throw DimensionMismatch("automorphism matrix is not dim A x dim A");
    LinearMap L = LinearMap::from_dense(M);
    auto diff = first_difference(L * mA, mA * kron(L, L));
    if (diff) {
      auto w = unflatten(*diff, {m, m});
      throw BuildError("element " + std::to_string(x) + " is not multiplicative at " + tuple_text({w[0], w[1]}));
    }
    if (!(M * a.unit == a.unit)) throw BuildError("element " + std::to_string(x) + " does not fix the unit");
  }
  if (!(autos[g.identity] == DenseMatrix::identity(f, m))) throw BuildError("identity element does not act trivially");
  for (std::size_t x = 0; x < g.order; ++x) {
    for (std::size_t y = 0; y < g.order; ++y) {
      if (!(autos[x] * autos[y] == autos[g.mul(x, y)])) {
        throw BuildError("action violates the Cayley table at " + tuple_text({x, y}));
      }
    }
  }
  StructureTensor action(f, g.order, m, m);
  for (std::size_t x = 0; x < g.order; ++x) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        if (!autos[x](k, j).is_zero()) action.set(x, j, k, autos[x](k, j));
      }
    }
  }
  return {group_hopf(f, g), a, std::move(action)};
}

ModuleAlgebraData graded_algebra(const GroupData& g, const AlgebraData& a, const std::vector<std::size_t>& degrees) {
  check_algebra_shape(a);
  Field f = a.field;
  std::size_t m = a.dim;
  if (degrees.size() != m) throw BuildError("expected one degree per basis vector");
  for (std::size_t i = 0; i < m; ++i) {
    if (degrees[i] >= g.order) throw BuildError("degree out of range for basis vector " + std::to_string(i));
  }
  for (const auto& [idx, c] : a.mul.entries()) {
    if (degrees[idx[2]] != g.mul(degrees[idx[0]], degrees[idx[1]])) {
      throw BuildError("multiplication violates the grading at " + tuple_text({idx[0], idx[1], idx[2]}));
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!a.unit[i].is_zero() && degrees[i] != g.identity) {
      throw BuildError("unit has a component outside degree e at " + tuple_text({i}));
    }
  }
  StructureTensor action(f, g.order, m, m);
  for (std::size_t i = 0; i < m; ++i) action.set(degrees[i], i, i, f.one());
  return {dual_group_hopf(f, g), a, std::move(action)};
}

}  // namespace scalg
