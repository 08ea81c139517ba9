#include "scalg/centre.hpp"

#include <string>

namespace scalg {

namespace {

DenseMatrix basis_matrix(const Subspace& s) { return DenseMatrix::from_columns(s.field(), s.ambient(), s.basis()); }

DenseMatrix coordinates_matrix(const Subspace& target, const std::vector<Vector>& images) {
  std::vector<Vector> cols;
  for (const auto& v : images) {
    auto c = target.coordinates(v);
    if (!c) return DenseMatrix(target.field(), 0, 0);
    cols.push_back(*c);
  }
  return DenseMatrix::from_columns(target.field(), target.dim(), cols);
}

}  // namespace

std::vector<Vector> centralizer(const SmashProductData& s) {
  Field f = s.base.hopf.field;
  std::size_t n = s.base.hopf.dim;
  std::size_t d = s.base.alg.dim;
  std::size_t D = s.dim;
  DenseMatrix stacked(f, d * D, D);
  for (std::size_t j = 0; j < d; ++j) {
    Vector aj = smash_element(s, basis_vector(f, d, j), s.base.hopf.unit);
    DenseMatrix comm = contract(s.mul, 0, aj) - contract(s.mul, 1, aj);
    for (std::size_t r = 0; r < D; ++r) {
      for (std::size_t c = 0; c < D; ++c) stacked(j * D + r, c) = comm(r, c);
    }
  }
  (void)n;
  return kernel_basis(stacked);
}

StructureTensor centre_action_tensor(const SmashProductData& s) {
  const auto& h = s.base.hopf;
  Field f = h.field;
  std::size_t n = h.dim;
  std::size_t d = s.base.alg.dim;
  auto H = maps_of(h);
  // transported from R(A) along a#g -> S(g) (x) a
  // h a g -> h1 h2 h3 a g -> h2 a h3 g h1 -> h2(a) h3 g S^{-1}(h1)
  LinearMap perm = LinearMap::permute_legs(f, {n, n, n, d, n}, {1, 3, 2, 4, 0});
  LinearMap act = kron(action_map(s.base.action), product_map(h, 3) * kron({H.id, H.id, H.antipode_inv})) * perm *
                  kron({iterated_coproduct(h, 2), LinearMap::identity(f, d), H.id});
  return tensor_from_bilinear(act, n, s.dim);
}

StructureTensor centre_coaction_tensor(const SmashProductData& s) {
  const auto& h = s.base.hopf;
  Field f = h.field;
  std::size_t n = h.dim;
  std::size_t d = s.base.alg.dim;
  auto H = maps_of(h);
  // a g -> a g1 g2 -> g2 a g1 -> S(g2) a g1
  LinearMap coact = kron({H.antipode, LinearMap::identity(f, d), H.id}) *
                    LinearMap::permute_legs(f, {d, n, n}, {2, 0, 1}) * kron(LinearMap::identity(f, d), H.comul);
  return tensor_from_split(coact, n, s.dim);
}

FullCentreData full_centre(const ModuleAlgebraData& m) {
  SmashProductData s = smash_product(m);
  Field f = m.hopf.field;
  std::size_t D = s.dim;
  Subspace sub(f, D, centralizer(s));
  StructureTensor action = centre_action_tensor(s);
  StructureTensor coaction = centre_coaction_tensor(s);
  StructureTensor opmul(f, D, D, D);
  for (const auto& [idx, c] : s.mul.entries()) opmul.set(idx[1], idx[0], idx[2], c);
  YDAlgebraData yd = restrict_yd_algebra(m.hopf, sub, action, coaction, opmul, s.unit);
  LinearMap eps = kron(LinearMap::identity(f, m.alg.dim), LinearMap::covector(m.hopf.counit));
  DenseMatrix can = eps.to_dense() * basis_matrix(sub);
  FullCentreData z{std::move(s), std::move(sub), std::move(yd), std::move(can), std::move(action), std::move(coaction)};
  canonical_projection(z);
  return z;
}

DenseMatrix canonical_projection(const FullCentreData& z) {
  LinearMap p = LinearMap::from_dense(z.canonical_to_A);
  const auto& alg = z.source.base.alg;
  if (!equal(p * bilinear_map(z.yd.mul), bilinear_map(alg.mul) * kron(p, p)) ||
      !(z.canonical_to_A * z.yd.unit == alg.unit)) {
    throw InternalError("canonical map Z(A) -> A is not an algebra homomorphism");
  }
  return z.canonical_to_A;
}

AxiomReport verify_centre(const FullCentreData& z) {
  AxiomReport r = verify_yd_algebra(z.yd);
  r.append(quantum_commutative_check(z.yd));
  return r;
}

AxiomReport embed_and_compare(const ModuleAlgebraData& m, bool inverse) {
  FullCentreData z = full_centre(m);
  Field f = m.hopf.field;
  std::size_t n = m.hopf.dim;
  std::size_t d = m.alg.dim;
  YDAlgebraData r_alg = r_lax_product(m.hopf, m);
  LeftCentre lc = left_centre(r_alg);
  const DenseMatrix& s = inverse ? m.hopf.antipode_inv : m.hopf.antipode;
  LinearMap phi = kron(LinearMap::from_dense(s), LinearMap::identity(f, d)) *
                  LinearMap::swap(f, d, n);
  std::vector<Vector> images;
  for (const auto& v : z.subspace.basis()) images.push_back(phi.apply(v));
  AxiomReport r;
  DenseMatrix img = DenseMatrix::from_columns(f, n * d, images);
  r.check("embedding injective", rank(img) == z.subspace.dim());
  bool same = rank(img) == z.subspace.dim() && Subspace(f, n * d, images) == lc.subspace;
  r.check("image equals left centre", same, {}, "dim " + std::to_string(z.subspace.dim()) + " vs " +
                                                     std::to_string(lc.subspace.dim()));
  if (same) {
    DenseMatrix q = coordinates_matrix(lc.subspace, images);
    r.append(check_yd_algebra_morphism(q, z.yd, lc.algebra), "embedding ");
  }
  return r;
}

AxiomReport z_of_k_comparison(const HopfAlgebraData& h, bool inverse) {
  FullCentreData z = full_centre(trivial_module_algebra(h));
  std::size_t n = h.dim;
  AxiomReport r;
  r.check("dim Z(k) = dim H", z.subspace.dim() == n, {}, std::to_string(z.subspace.dim()) + " vs " + std::to_string(n));
  if (z.subspace.dim() != n) return r;
  DenseMatrix b = basis_matrix(z.subspace);
  DenseMatrix q = (inverse ? h.antipode_inv : h.antipode) * b;
  std::string name = inverse ? "S^-1" : "S";
  YDAlgebraData target = adjoint_algebra(h);
  YDAlgebraData target_op{adjoint_yd(h), opposite_hopf(h).mul, h.unit};
  r.append(check_yd_algebra_morphism(q, z.yd, target), name + " onto H: ");
  AxiomReport anti = check_yd_algebra_morphism(q, z.yd, target_op, true);
  for (const auto& res : anti.results()) {
    if (res.name.find("multiplicative") != std::string::npos || res.name == "morphism bijective") {
      r.check(name + " onto H^op: " + res.name, res.passed, res.counterexample);
    }
  }
  AlgebraData zalg = algebra_part(z.yd);
  AlgebraData hop = algebra_part(target_op);
  LinearMap id = LinearMap::from_dense(b);
  r.check("identity onto H^op: algebra isomorphism", id * bilinear_map(zalg.mul), bilinear_map(hop.mul) * kron(id, id),
          {n, n});
  return r;
}

AxiomReport morita_check(const ModuleAlgebraData& m, std::size_t rsize) {
  FullCentreData z = full_centre(m);
  ModuleAlgebraData big = matrix_amplify(m, rsize);
  FullCentreData zr = full_centre(big);
  Field f = m.hopf.field;
  std::size_t n = m.hopf.dim;
  std::size_t d = m.alg.dim;
  AxiomReport r;
  r.check("dimensions agree", z.subspace.dim() == zr.subspace.dim(), {},
          std::to_string(z.subspace.dim()) + " vs " + std::to_string(zr.subspace.dim()));
  std::vector<Vector> images;
  for (const auto& v : z.subspace.basis()) {
    Vector w = zero_vector(f, zr.source.dim);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t g = 0; g < n; ++g) {
        const auto& c = v[i * n + g];
        if (c.is_zero()) continue;
        for (std::size_t p = 0; p < rsize; ++p) w[((p * rsize + p) * d + i) * n + g] = c;
      }
    }
    images.push_back(std::move(w));
  }
  DenseMatrix q = coordinates_matrix(zr.subspace, images);
  r.check("image lies in amplified centre", q.rows() == zr.subspace.dim() && q.cols() == z.subspace.dim());
  if (r.all_passed()) r.append(check_yd_algebra_morphism(q, z.yd, zr.yd), "amplification ");
  return r;
}

AxiomReport dual_example_check(const HopfAlgebraData& h) {
  ModuleAlgebraData m = dual_regular_module_algebra(h);
  SmashProductData s = smash_product(m);
  std::size_t n = h.dim;
  AxiomReport r;
  bool bijective = true;
  try {
    theta_map(s);
  } catch (const InternalError&) {
    bijective = false;
  }
  r.check("theta bijective", bijective);
  auto basis = centralizer(s);
  r.check("centraliser dimension equals dim H", basis.size() == n, {},
          std::to_string(basis.size()) + " vs " + std::to_string(n));
  bool right = true;
  std::vector<std::size_t> witness;
  for (std::size_t i = 0; i < basis.size() && right; ++i) {
    DenseMatrix op = theta_operator(s, basis[i]);
    Vector y = op * m.alg.unit;
    if (!(op == contract(m.alg.mul, 1, y))) {
      right = false;
      witness = {i};
    }
  }
  r.check("centre acts by right multiplications", right, witness);
  return r;
}

}  // namespace scalg
