#include "scalg/yd.hpp"

namespace scalg {

namespace {

LinearMap tensor_action(const YDModuleData& m, const YDModuleData& n) {
  Field f = m.hopf.field;
  auto H = maps_of(m.hopf);
  return kron(action_map(m.action), action_map(n.action)) *
         kron({H.id, LinearMap::swap(f, m.hopf.dim, m.dim), LinearMap::identity(f, n.dim)}) *
         kron({H.comul, LinearMap::identity(f, m.dim), LinearMap::identity(f, n.dim)});
}

LinearMap tensor_coaction(const YDModuleData& m, const YDModuleData& n) {
  Field f = m.hopf.field;
  auto H = maps_of(m.hopf);
  LinearMap IM = LinearMap::identity(f, m.dim);
  LinearMap IN = LinearMap::identity(f, n.dim);
  return kron({H.mul, IM, IN}) * kron({H.id, LinearMap::swap(f, m.dim, m.hopf.dim), IN}) *
         kron(coaction_map(m), coaction_map(n));
}

void require_same_hopf(const YDModuleData& m, const YDModuleData& n) {
  if (!(m.hopf.mul == n.hopf.mul) || !(m.hopf.comul == n.hopf.comul)) {
    throw DimensionMismatch("YD modules over different Hopf algebras");
  }
}

// Structure map of the induced YD module on H (x) N from the action on N.
LinearMap induced_action(const HopfAlgebraData& h, const LinearMap& rho_n, std::size_t dn) {
  Field f = h.field;
  std::size_t n = h.dim;
  auto H = maps_of(h);
  LinearMap IN = LinearMap::identity(f, dn);
  // h g x -> h1 h2 h3 g x -> h1 g h3 h2 x -> h1 g S(h3) h2 x -> h1 g S(h3) (x) h2 x
  LinearMap perm = LinearMap::permute_legs(f, {n, n, n, n, dn}, {0, 3, 2, 1, 4});
  return kron(product_map(h, 3), rho_n) * kron({H.id, H.id, H.antipode, H.id, IN}) * perm *
         kron({iterated_coproduct(h, 2), H.id, IN});
}

}  // namespace

LinearMap coaction_map(const YDModuleData& m) { return split_map(m.coaction); }

ModuleData module_part(const YDModuleData& m) { return {m.hopf, m.dim, m.action}; }

AlgebraData algebra_part(const YDAlgebraData& a) { return {a.module.hopf.field, a.module.dim, a.mul, a.unit}; }

AxiomReport verify_comodule(const YDModuleData& m) {
  if (m.coaction.dims() != StructureTensor::Index{m.dim, m.hopf.dim, m.dim}) {
    throw DimensionMismatch("coaction tensor dims differ from dim M x dim H x dim M");
  }
  auto H = maps_of(m.hopf);
  LinearMap delta = coaction_map(m);
  LinearMap IM = LinearMap::identity(m.hopf.field, m.dim);
  AxiomReport r;
  r.check("comodule coassociativity", kron(H.comul, IM) * delta, kron(H.id, delta) * delta, {m.dim});
  r.check("comodule counit", kron(H.counit, IM) * delta, IM, {m.dim});
  return r;
}

AxiomReport verify_yd(const YDModuleData& m) {
  AxiomReport r = verify_module(module_part(m));
  r.append(verify_comodule(m));
  Field f = m.hopf.field;
  std::size_t n = m.hopf.dim;
  std::size_t d = m.dim;
  auto H = maps_of(m.hopf);
  LinearMap rho = action_map(m.action);
  LinearMap delta = coaction_map(m);
  LinearMap IM = LinearMap::identity(f, d);

  LinearMap com_lhs = kron(H.mul, rho) * kron({H.id, LinearMap::swap(f, n, n), IM}) * kron(H.comul, delta);
  LinearMap com_rhs = kron(H.mul, IM) * kron(H.id, LinearMap::swap(f, d, n)) * kron(delta, H.id) * kron(rho, H.id) *
                      kron(H.id, LinearMap::swap(f, n, d)) * kron(H.comul, IM);
  r.check("yd compatibility (com)", com_lhs, com_rhs, {n, d});

  LinearMap perm = LinearMap::permute_legs(f, {n, n, n, n, d}, {0, 3, 2, 1, 4});
  LinearMap yde_rhs = kron(product_map(m.hopf, 3), rho) * kron({H.id, H.id, H.antipode, H.id, IM}) * perm *
                      kron(iterated_coproduct(m.hopf, 2), delta);
  r.check("yd compatibility (yde)", delta * rho, yde_rhs, {n, d});

  bool agree = r.passed("yd compatibility (com)") == r.passed("yd compatibility (yde)");
  r.check("com and yde verdicts agree", agree);
  return r;
}

AxiomReport verify_yd_algebra(const YDAlgebraData& a) {
  const auto& m = a.module;
  AxiomReport r = verify_yd(m);
  r.append(verify_algebra(algebra_part(a)), "algebra ");
  Field f = m.hopf.field;
  std::size_t d = m.dim;
  auto H = maps_of(m.hopf);
  LinearMap mul = bilinear_map(a.mul);
  LinearMap eta = LinearMap::vector(a.unit);
  LinearMap rho = action_map(m.action);
  LinearMap delta = coaction_map(m);
  r.check("multiplication H-linear", rho * kron(H.id, mul), mul * tensor_action(m, m), {m.hopf.dim, d, d});
  r.check("multiplication H-colinear", delta * mul, kron(H.id, mul) * tensor_coaction(m, m), {d, d});
  r.check("unit H-linear", rho * kron(H.id, eta), eta * H.counit, {m.hopf.dim});
  r.check("unit H-colinear", delta * eta, kron(H.unit, eta), {1});
  (void)f;
  return r;
}

YDModuleData trivial_yd(const HopfAlgebraData& h) {
  StructureTensor coaction(h.field, 1, h.dim, 1);
  for (std::size_t i = 0; i < h.dim; ++i) {
    if (!h.unit[i].is_zero()) coaction.set(0, i, 0, h.unit[i]);
  }
  return {h, 1, trivial_module(h).action, std::move(coaction)};
}

YDModuleData adjoint_yd(const HopfAlgebraData& h) {
  auto H = maps_of(h);
  Field f = h.field;
  std::size_t n = h.dim;
  // g h -> g1 g2 h -> g1 h g2 -> g1 h S(g2)
  LinearMap ad = product_map(h, 3) * kron({H.id, H.id, H.antipode}) * kron(H.id, LinearMap::swap(f, n, n)) *
                 kron(H.comul, H.id);
  return {h, n, tensor_from_bilinear(ad, n, n), h.comul};
}

YDAlgebraData adjoint_algebra(const HopfAlgebraData& h) {
  return {adjoint_yd(h), h.mul, h.unit};
}

YDModuleData tensor_product(const YDModuleData& m, const YDModuleData& n) {
  require_same_hopf(m, n);
  std::size_t d = m.dim * n.dim;
  return {m.hopf, d, tensor_from_bilinear(tensor_action(m, n), m.hopf.dim, d),
          tensor_from_split(tensor_coaction(m, n), m.hopf.dim, d)};
}

LinearMap braiding_map(const YDModuleData& m, const YDModuleData& n) {
  require_same_hopf(m, n);
  Field f = m.hopf.field;
  return kron(action_map(n.action), LinearMap::identity(f, m.dim)) *
         kron(LinearMap::identity(f, m.hopf.dim), LinearMap::swap(f, m.dim, n.dim)) *
         kron(coaction_map(m), LinearMap::identity(f, n.dim));
}

Braiding braiding(const YDModuleData& m, const YDModuleData& n) {
  require_same_hopf(m, n);
  Field f = m.hopf.field;
  std::size_t hd = m.hopf.dim;
  auto H = maps_of(m.hopf);
  LinearMap IM = LinearMap::identity(f, m.dim);
  LinearMap IN = LinearMap::identity(f, n.dim);
  LinearMap c = braiding_map(m, n).materialize();
  LinearMap inv = (kron(IM, action_map(n.action)) * kron({IM, H.antipode_inv, IN}) *
                   kron(LinearMap::swap(f, hd, m.dim), IN) * kron(coaction_map(m), IN) *
                   LinearMap::swap(f, n.dim, m.dim))
                      .materialize();
  AxiomReport r;
  r.check("braiding inverse left", inv * c, LinearMap::identity(f, m.dim * n.dim), {m.dim, n.dim});
  r.check("braiding inverse right", c * inv, LinearMap::identity(f, m.dim * n.dim), {n.dim, m.dim});
  r.check("braiding H-linear", c * tensor_action(m, n), tensor_action(n, m) * kron(H.id, c), {hd, m.dim, n.dim});
  r.check("braiding H-colinear", tensor_coaction(n, m) * c, kron(H.id, c) * tensor_coaction(m, n), {m.dim, n.dim});
  if (rank(c.to_dense()) != m.dim * n.dim) throw InternalError("braiding is singular");
  return {c, inv, std::move(r)};
}

AxiomReport check_hexagons(const YDModuleData& m, const YDModuleData& n, const YDModuleData& p) {
  Field f = m.hopf.field;
  LinearMap IM = LinearMap::identity(f, m.dim);
  LinearMap IN = LinearMap::identity(f, n.dim);
  LinearMap IP = LinearMap::identity(f, p.dim);
  AxiomReport r;
  LinearMap first = braiding_map(tensor_product(m, n), p);
  r.check("hexagon (M N, P)", first, kron(braiding_map(m, p), IN) * kron(IM, braiding_map(n, p)),
          {m.dim, n.dim, p.dim});
  LinearMap second = braiding_map(m, tensor_product(n, p));
  r.check("hexagon (M, N P)", second, kron(IN, braiding_map(m, p)) * kron(braiding_map(m, n), IP),
          {m.dim, n.dim, p.dim});
  return r;
}

AxiomReport quantum_commutative_check(const YDAlgebraData& a) {
  LinearMap mul = bilinear_map(a.mul);
  AxiomReport r;
  r.check("quantum commutativity", mul, mul * braiding_map(a.module, a.module), {a.module.dim, a.module.dim});
  return r;
}

YDAlgebraData restrict_yd_algebra(const HopfAlgebraData& h, const Subspace& sub, const StructureTensor& action,
                                  const StructureTensor& coaction, const StructureTensor& mul, const Vector& unit) {
  Field f = h.field;
  std::size_t n = h.dim;
  std::size_t D = sub.ambient();
  std::size_t z = sub.dim();
  const auto& basis = sub.basis();
  LinearMap rho = bilinear_map(action);
  LinearMap delta = split_map(coaction);
  LinearMap m = bilinear_map(mul);

  auto coords = [&](const Vector& v, const char* what) {
    auto c = sub.coordinates(v);
    if (!c) throw InternalError(std::string("subspace is not closed under ") + what);
    return *c;
  };

  StructureTensor act(f, n, z, z);
  for (std::size_t hh = 0; hh < n; ++hh) {
    LinearMap eh = kron(LinearMap::vector(basis_vector(f, n, hh)), LinearMap::identity(f, D));
    LinearMap op = rho * eh;
    for (std::size_t i = 0; i < z; ++i) {
      auto c = coords(op.apply(basis[i]), "the action");
      for (std::size_t k = 0; k < z; ++k) {
        if (!c[k].is_zero()) act.set(hh, i, k, c[k]);
      }
    }
  }
  StructureTensor coact(f, z, n, z);
  for (std::size_t i = 0; i < z; ++i) {
    Vector img = delta.apply(basis[i]);
    for (std::size_t hh = 0; hh < n; ++hh) {
      Vector block(img.begin() + hh * D, img.begin() + (hh + 1) * D);
      auto c = coords(block, "the coaction");
      for (std::size_t k = 0; k < z; ++k) {
        if (!c[k].is_zero()) coact.set(i, hh, k, c[k]);
      }
    }
  }
  StructureTensor zmul(f, z, z, z);
  for (std::size_t i = 0; i < z; ++i) {
    for (std::size_t j = 0; j < z; ++j) {
      Vector prod = zero_vector(f, D);
      for (const auto& [p, x] : to_sparse(basis[i])) {
        for (const auto& [q, y] : to_sparse(basis[j])) {
          for (const auto& [k, c] : m.column(p * D + q)) prod[k] += x * y * c;
        }
      }
      auto c = coords(prod, "multiplication");
      for (std::size_t k = 0; k < z; ++k) {
        if (!c[k].is_zero()) zmul.set(i, j, k, c[k]);
      }
    }
  }
  Vector zunit = coords(unit, "the unit");
  return {YDModuleData{h, z, std::move(act), std::move(coact)}, std::move(zmul), std::move(zunit)};
}

LeftCentre left_centre(const YDAlgebraData& a) {
  Field f = a.module.hopf.field;
  std::size_t d = a.module.dim;
  LinearMap mul = bilinear_map(a.mul);
  LinearMap diff = mul - mul * braiding_map(a.module, a.module);
  DenseMatrix stacked(f, d * d, d);
  for (std::size_t j = 0; j < d; ++j) {
    LinearMap against = diff * kron(LinearMap::identity(f, d), LinearMap::vector(basis_vector(f, d, j)));
    DenseMatrix block = against.to_dense();
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) stacked(j * d + r, c) = block(r, c);
    }
  }
  Subspace sub(f, d, kernel_basis(stacked));
  auto restricted = restrict_yd_algebra(a.module.hopf, sub, a.module.action, a.module.coaction, a.mul, a.unit);
  return {std::move(sub), std::move(restricted)};
}

YDModuleData induce_R(const HopfAlgebraData& h, const ModuleData& n) {
  Field f = h.field;
  std::size_t d = h.dim * n.dim;
  LinearMap act = induced_action(h, action_map(n.action), n.dim);
  LinearMap coact = kron(maps_of(h).comul, LinearMap::identity(f, n.dim));
  return {h, d, tensor_from_bilinear(act, h.dim, d), tensor_from_split(coact, h.dim, d)};
}

Adjunction adjunction_maps(const YDModuleData& m, const ModuleData& n) {
  Field f = m.hopf.field;
  std::size_t hd = m.hopf.dim;
  auto H = maps_of(m.hopf);
  YDModuleData rm = induce_R(m.hopf, module_part(m));
  YDModuleData rn = induce_R(m.hopf, n);
  LinearMap IM = LinearMap::identity(f, m.dim);
  LinearMap IN = LinearMap::identity(f, n.dim);
  LinearMap alpha = coaction_map(m);
  LinearMap beta = kron(H.counit, IN);
  LinearMap beta_m = kron(H.counit, IM);
  AxiomReport r;
  r.check("alpha H-linear", alpha * action_map(m.action), action_map(rm.action) * kron(H.id, alpha), {hd, m.dim});
  r.check("alpha H-colinear", coaction_map(rm) * alpha, kron(H.id, alpha) * coaction_map(m), {m.dim});
  r.check("beta H-linear", beta * action_map(rn.action), action_map(n.action) * kron(H.id, beta), {hd, hd, n.dim});
  r.check("triangle identity F", beta_m * alpha, IM, {m.dim});
  r.check("triangle identity R", kron(H.id, beta) * coaction_map(rn), LinearMap::identity(f, hd * n.dim),
          {hd, n.dim});
  DenseMatrix beta_dense = beta.to_dense();
  r.check("beta epi", rank(beta_dense) == n.dim);
  return {alpha.to_dense(), std::move(beta_dense), std::move(r)};
}

YDAlgebraData r_lax_product(const HopfAlgebraData& h, const ModuleAlgebraData& a) {
  Field f = h.field;
  std::size_t n = h.dim;
  std::size_t d = a.alg.dim;
  YDModuleData mod = induce_R(h, underlying_module(a));
  LinearMap prod = kron(bilinear_map(h.mul), bilinear_map(a.alg.mul)) *
                   kron({LinearMap::identity(f, n), LinearMap::swap(f, d, n), LinearMap::identity(f, d)});
  Vector unit = zero_vector(f, n * d);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t i = 0; i < d; ++i) unit[g * d + i] = h.unit[g] * a.alg.unit[i];
  }
  return {std::move(mod), tensor_from_bilinear(prod, n * d, n * d), std::move(unit)};
}

}  // namespace scalg

namespace scalg {

AxiomReport check_yd_algebra_morphism(const DenseMatrix& q, const YDAlgebraData& a, const YDAlgebraData& b,
                                      bool anti) {
  Field f = a.module.hopf.field;
  std::size_t n = a.module.hopf.dim;
  std::size_t da = a.module.dim;
  std::size_t db = b.module.dim;
  if (q.rows() != db || q.cols() != da) throw DimensionMismatch("morphism matrix has wrong shape");
  LinearMap Q = LinearMap::from_dense(q);
  LinearMap ma = bilinear_map(a.mul);
  LinearMap mb = bilinear_map(b.mul);
  if (anti) mb = mb * LinearMap::swap(f, db, db);
  auto H = maps_of(a.module.hopf);
  AxiomReport r;
  r.check("morphism bijective", da == db && rank(q) == da);
  r.check(anti ? "morphism anti-multiplicative" : "morphism multiplicative", Q * ma, mb * kron(Q, Q), {da, da});
  r.check("morphism unital", Q * LinearMap::vector(a.unit), LinearMap::vector(b.unit), {1});
  r.check("morphism H-linear", Q * action_map(a.module.action), action_map(b.module.action) * kron(H.id, Q),
          {n, da});
  r.check("morphism H-colinear", kron(H.id, Q) * coaction_map(a.module), coaction_map(b.module) * Q, {da});
  return r;
}

}  // namespace scalg
