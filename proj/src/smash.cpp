#include "scalg/smash.hpp"

#include <string>

namespace scalg {

SmashProductData smash_product(const ModuleAlgebraData& m) {
  check_shapes(m.hopf);
  std::size_t n = m.hopf.dim;
  std::size_t d = m.alg.dim;
  Field f = m.hopf.field;
  auto H = maps_of(m.hopf);
  LinearMap rho = action_map(m.action);
  LinearMap mA = bilinear_map(m.alg.mul);
  LinearMap IA = LinearMap::identity(f, d);
  LinearMap IH = H.id;
  // a g b h -> a g1 g2 b h -> a g1 b g2 h -> a g1(b) g2h -> a g1(b) # g2h
  LinearMap prod = kron(mA, IH) * kron({IA, rho, H.mul}) * kron({IA, IH, LinearMap::swap(f, n, d), IH}) *
                   kron({IA, H.comul, IA, IH});
  std::size_t dim = d * n;
  StructureTensor mul = tensor_from_bilinear(prod, dim, dim);
  Vector unit = zero_vector(f, dim);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < n; ++j) unit[i * n + j] = m.alg.unit[i] * m.hopf.unit[j];
  }
  StructureTensor comodule = tensor_from_split(kron(IA, H.comul), dim, n);
  return {m, dim, std::move(mul), std::move(unit), std::move(comodule)};
}

Vector smash_element(const SmashProductData& s, const Vector& a, const Vector& h) {
  std::size_t n = s.base.hopf.dim;
  Vector v = zero_vector(s.base.hopf.field, s.dim);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) v[i * n + j] = a[i] * h[j];
  }
  return v;
}

AxiomReport verify_smash(const SmashProductData& s) {
  Field f = s.base.hopf.field;
  std::size_t n = s.base.hopf.dim;
  std::size_t d = s.base.alg.dim;
  AlgebraData alg{f, s.dim, s.mul, s.unit};
  AxiomReport r = verify_algebra(alg);
  LinearMap m = bilinear_map(s.mul);
  LinearMap embA = kron(LinearMap::identity(f, d), LinearMap::vector(s.base.hopf.unit));
  LinearMap embH = kron(LinearMap::vector(s.base.alg.unit), LinearMap::identity(f, n));
  r.check("algebra embedding", m * kron(embA, embA), embA * bilinear_map(s.base.alg.mul), {d, d});
  r.check("hopf embedding", m * kron(embH, embH), embH * bilinear_map(s.base.hopf.mul), {n, n});
  return r;
}

AxiomReport smash_comodule(const SmashProductData& s) {
  Field f = s.base.hopf.field;
  std::size_t n = s.base.hopf.dim;
  std::size_t D = s.dim;
  auto H = maps_of(s.base.hopf);
  LinearMap psi = split_map(s.comodule);
  LinearMap ID = LinearMap::identity(f, D);
  LinearMap m = bilinear_map(s.mul);
  AxiomReport r;
  r.check("comodule coassociativity", kron(psi, H.id) * psi, kron(ID, H.comul) * psi, {D});
  r.check("comodule counit", kron(ID, H.counit) * psi, ID, {D});
  LinearMap rhs = kron(m, H.mul) * kron({ID, LinearMap::swap(f, n, D), H.id}) * kron(psi, psi);
  r.check("comodule multiplicative", psi * m, rhs, {D, D});
  r.check("comodule unital", psi * LinearMap::vector(s.unit),
          kron(LinearMap::vector(s.unit), LinearMap::vector(s.base.hopf.unit)), {1});
  return r;
}

DenseMatrix combine_operators(const std::vector<DenseMatrix>& ops, const Vector& coeffs) {
  if (ops.empty() || ops.size() != coeffs.size()) throw DimensionMismatch("operator family and coefficients differ in size");
  DenseMatrix out(ops.front().field(), ops.front().rows(), ops.front().cols());
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    for (std::size_t r = 0; r < out.rows(); ++r) {
      for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) += coeffs[i] * ops[i](r, c);
    }
  }
  return out;
}

namespace {

std::vector<DenseMatrix> theta_operators(const SmashProductData& s) {
  const auto& base = s.base;
  std::size_t n = base.hopf.dim;
  if (base.alg.dim != n) throw DimensionMismatch("theta needs the dual of H as base algebra");
  std::vector<DenseMatrix> ops;
  ops.reserve(s.dim);
  for (std::size_t i = 0; i < n; ++i) {
    DenseMatrix left = contract(base.alg.mul, 0, basis_vector(base.hopf.field, n, i));
    for (std::size_t j = 0; j < n; ++j) ops.push_back(left * action_matrix(base.action, j));
  }
  return ops;
}

}  // namespace

DenseMatrix theta_map(const SmashProductData& s) {
  auto ops = theta_operators(s);
  std::size_t n = s.base.hopf.dim;
  DenseMatrix t(s.base.hopf.field, n * n, s.dim);
  for (std::size_t c = 0; c < ops.size(); ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) t(i * n + j, c) = ops[c](i, j);
    }
  }
  if (rank(t) != n * n) throw InternalError("theta is not bijective");
  return t;
}

DenseMatrix theta_operator(const SmashProductData& s, const Vector& element) {
  return combine_operators(theta_operators(s), element);
}

std::vector<DenseMatrix> module_correspondence(const ModuleAlgebraData& m, const std::vector<DenseMatrix>& rep_a,
                                               const std::vector<DenseMatrix>& rep_h) {
  std::size_t n = m.hopf.dim;
  std::size_t d = m.alg.dim;
  if (rep_a.size() != d || rep_h.size() != n) throw DimensionMismatch("one matrix per basis element expected");
  std::size_t dim = rep_a.front().rows();
  for (const auto& x : rep_a) {
    if (x.rows() != dim || x.cols() != dim) throw DimensionMismatch("representation matrices differ in size");
  }
  for (const auto& x : rep_h) {
    if (x.rows() != dim || x.cols() != dim) throw DimensionMismatch("representation matrices differ in size");
  }
  Field f = m.hopf.field;
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t a = 0; a < d; ++a) {
      DenseMatrix lhs = rep_h[h] * rep_a[a];
      DenseMatrix rhs(f, dim, dim);
      for (auto it = m.hopf.comul.entries().lower_bound({h, 0, 0});
           it != m.hopf.comul.entries().end() && it->first[0] == h; ++it) {
        std::size_t h1 = it->first[1], h2 = it->first[2];
        Vector ha = action_matrix(m.action, h1).column(a);
        DenseMatrix acted = combine_operators(rep_a, ha) * rep_h[h2];
        for (std::size_t r = 0; r < dim; ++r) {
          for (std::size_t c = 0; c < dim; ++c) rhs(r, c) += it->second * acted(r, c);
        }
      }
      if (!(lhs == rhs)) {
        for (std::size_t c = 0; c < dim; ++c) {
          if (!(lhs.column(c) == rhs.column(c))) {
            throw BuildError("module pair is incompatible at (" + std::to_string(h) + ", " + std::to_string(a) + ", " +
                             std::to_string(c) + ")");
          }
        }
      }
    }
  }
  std::vector<DenseMatrix> out;
  out.reserve(d * n);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t h = 0; h < n; ++h) out.push_back(rep_a[a] * rep_h[h]);
  }
  return out;
}

std::pair<std::vector<DenseMatrix>, std::vector<DenseMatrix>> split_representation(
    const SmashProductData& s, const std::vector<DenseMatrix>& rep) {
  Field f = s.base.hopf.field;
  std::size_t n = s.base.hopf.dim;
  std::size_t d = s.base.alg.dim;
  std::vector<DenseMatrix> rep_a, rep_h;
  for (std::size_t a = 0; a < d; ++a) {
    rep_a.push_back(combine_operators(rep, smash_element(s, basis_vector(f, d, a), s.base.hopf.unit)));
  }
  for (std::size_t h = 0; h < n; ++h) {
    rep_h.push_back(combine_operators(rep, smash_element(s, s.base.alg.unit, basis_vector(f, n, h))));
  }
  return {std::move(rep_a), std::move(rep_h)};
}

}  // namespace scalg
