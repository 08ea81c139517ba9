#include "scalg/grouplike.hpp"

#include <string>

namespace scalg {

namespace {

void require_group_hopf(const HopfAlgebraData& h, const GroupData& g) {
  HopfAlgebraData k = group_hopf(h.field, g);
  if (!(k.mul == h.mul) || !(k.comul == h.comul)) throw BuildError("hopf algebra is not the group algebra of G");
}

void require_dual_group_hopf(const HopfAlgebraData& h, const GroupData& g) {
  HopfAlgebraData k = dual_group_hopf(h.field, g);
  if (!(k.mul == h.mul) || !(k.comul == h.comul)) throw BuildError("hopf algebra is not the function algebra of G");
}

std::vector<Vector> image_basis(const DenseMatrix& p) {
  auto rr = rref(p);
  std::vector<Vector> out;
  for (auto c : rr.pivots) out.push_back(p.column(c));
  return out;
}

DenseMatrix kron_dense(const DenseMatrix& a, const DenseMatrix& b) {
  return kron(LinearMap::from_dense(a), LinearMap::from_dense(b)).to_dense();
}

}  // namespace

ZGObjectData zg_convert(const YDModuleData& m, const GroupData& g) {
  require_group_hopf(m.hopf, g);
  Field f = m.hopf.field;
  std::size_t d = m.dim;
  std::size_t n = g.order;
  std::vector<DenseMatrix> proj(n, DenseMatrix(f, d, d));
  for (const auto& [idx, c] : m.coaction.entries()) proj[idx[1]](idx[2], idx[0]) = c;
  DenseMatrix sum(f, d, d);
  for (std::size_t x = 0; x < n; ++x) {
    sum = sum + proj[x];
    for (std::size_t y = 0; y < n; ++y) {
      DenseMatrix prod = proj[x] * proj[y];
      if (!(prod == (x == y ? proj[x] : DenseMatrix(f, d, d)))) {
        throw BuildError("coaction does not split into grouplike components at (" + std::to_string(x) + ", " +
                         std::to_string(y) + ")");
      }
    }
  }
  if (!(sum == DenseMatrix::identity(f, d))) throw BuildError("coaction components do not sum to the identity");

  std::vector<Vector> cols;
  std::vector<std::size_t> degrees;
  bool standard = true;
  for (std::size_t i = 0; i < d && standard; ++i) {
    std::size_t hits = 0;
    for (std::size_t x = 0; x < n; ++x) hits += proj[x].column(i) == basis_vector(f, d, i) ? 1 : 0;
    standard = hits == 1;
  }
  if (standard) {
    for (std::size_t i = 0; i < d; ++i) {
      cols.push_back(basis_vector(f, d, i));
      for (std::size_t x = 0; x < n; ++x) {
        if (proj[x].column(i) == cols.back()) degrees.push_back(x);
      }
    }
  } else {
    for (std::size_t x = 0; x < n; ++x) {
      for (auto& v : image_basis(proj[x])) {
        cols.push_back(std::move(v));
        degrees.push_back(x);
      }
    }
  }
  DenseMatrix basis = DenseMatrix::from_columns(f, d, cols);
  DenseMatrix binv = inverse(basis);
  std::vector<DenseMatrix> action;
  for (std::size_t x = 0; x < n; ++x) action.push_back(binv * action_matrix(m.action, x) * basis);
  ZGObjectData z{g, d, std::move(degrees), std::move(action), std::move(basis)};
  auto r = check_zg_compatibility(z);
  if (!r.all_passed()) throw BuildError("action is not compatible with the grading");
  return z;
}

YDModuleData zg_to_yd(const ZGObjectData& z, Field f) {
  std::size_t n = z.group.order;
  StructureTensor action(f, n, z.dim, z.dim);
  StructureTensor coaction(f, z.dim, n, z.dim);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t j = 0; j < z.dim; ++j) {
      for (std::size_t k = 0; k < z.dim; ++k) {
        if (!z.action[x](k, j).is_zero()) action.set(x, j, k, z.action[x](k, j));
      }
    }
  }
  for (std::size_t i = 0; i < z.dim; ++i) coaction.set(i, z.degrees[i], i, f.one());
  return {group_hopf(f, z.group), z.dim, std::move(action), std::move(coaction)};
}

AxiomReport check_zg_compatibility(const ZGObjectData& z) {
  AxiomReport r;
  std::vector<std::size_t> witness;
  for (std::size_t x = 0; x < z.group.order && witness.empty(); ++x) {
    for (std::size_t j = 0; j < z.dim && witness.empty(); ++j) {
      std::size_t target = z.group.mul(z.group.mul(x, z.degrees[j]), z.group.inverse[x]);
      for (std::size_t k = 0; k < z.dim; ++k) {
        if (!z.action[x](k, j).is_zero() && z.degrees[k] != target) witness = {x, j};
      }
    }
  }
  r.check("action compatible with grading", witness.empty(), witness);
  return r;
}

AxiomReport check_zg_braiding(const YDModuleData& x, const YDModuleData& y, const GroupData& g) {
  Field f = x.hopf.field;
  ZGObjectData zx = zg_convert(x, g);
  ZGObjectData zy = zg_convert(y, g);
  std::size_t dx = x.dim, dy = y.dim;
  // c(x_i (x) y_j) = deg(x_i)(y_j) (x) x_i on the homogeneous bases
  DenseMatrix c_new(f, dy * dx, dx * dy);
  for (std::size_t i = 0; i < dx; ++i) {
    const auto& act = zy.action[zx.degrees[i]];
    for (std::size_t j = 0; j < dy; ++j) {
      for (std::size_t k = 0; k < dy; ++k) c_new(k * dx + i, i * dy + j) = act(k, j);
    }
  }
  DenseMatrix c_old = kron_dense(zy.basis, zx.basis) * c_new * inverse(kron_dense(zx.basis, zy.basis));
  AxiomReport r;
  r.check("braiding (br)", LinearMap::from_dense(c_old), braiding_map(x, y), {dx, dy});
  // half-braiding Y (x) X -> X (x) Y, z (x) u -> u (x) deg(u)^-1 (z) with Y = Z, X = U
  DenseMatrix hb_new(f, dx * dy, dy * dx);
  for (std::size_t j = 0; j < dy; ++j) {
    for (std::size_t i = 0; i < dx; ++i) {
      const auto& act = zy.action[g.inverse[zx.degrees[i]]];
      for (std::size_t k = 0; k < dy; ++k) hb_new(i * dy + k, j * dx + i) = act(k, j);
    }
  }
  DenseMatrix hb_old = kron_dense(zx.basis, zy.basis) * hb_new * inverse(kron_dense(zy.basis, zx.basis));
  r.check("half-braiding (hb)", LinearMap::from_dense(hb_old), braiding(x, y).inverse, {dy, dx});
  return r;
}

AxiomReport check_zg_algebra(const YDAlgebraData& a, const GroupData& g) {
  Field f = a.module.hopf.field;
  ZGObjectData z = zg_convert(a.module, g);
  std::size_t d = z.dim;
  DenseMatrix binv = inverse(z.basis);
  LinearMap m = bilinear_map(a.mul);
  auto product = [&](std::size_t i, std::size_t j) {
    return binv * m.apply(to_dense(kron(LinearMap::vector(z.basis.column(i)), LinearMap::vector(z.basis.column(j)))
                                       .column(0),
                                   f, d * d));
  };
  AxiomReport r;
  std::vector<std::size_t> ah, co;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Vector ab = product(i, j);
      for (std::size_t x = 0; x < g.order && ah.empty(); ++x) {
        Vector lhs = z.action[x] * ab;
        Vector rhs = zero_vector(f, d);
        Vector fa = z.action[x].column(i), fb = z.action[x].column(j);
        for (std::size_t p = 0; p < d; ++p) {
          if (fa[p].is_zero()) continue;
          for (std::size_t q = 0; q < d; ++q) {
            if (fb[q].is_zero()) continue;
            rhs = add(rhs, scale(fa[p] * fb[q], product(p, q)));
          }
        }
        if (!(lhs == rhs)) ah = {x, i, j};
      }
      if (co.empty()) {
        Vector fb = z.action[z.degrees[i]].column(j);
        Vector rhs = zero_vector(f, d);
        for (std::size_t q = 0; q < d; ++q) {
          if (!fb[q].is_zero()) rhs = add(rhs, scale(fb[q], product(q, i)));
        }
        if (!(ab == rhs)) co = {i, j};
      }
    }
  }
  r.check("action multiplicative (ah)", ah.empty(), ah);
  r.check("commutativity (co)", co.empty(), co);
  return r;
}

GCentreData g_full_centre(const ModuleAlgebraData& m, const GroupData& g) {
  require_group_hopf(m.hopf, g);
  Field f = m.hopf.field;
  std::size_t d = m.alg.dim;
  std::size_t n = g.order;
  GCentreData out;
  for (std::size_t x = 0; x < n; ++x) {
    DenseMatrix act = action_matrix(m.action, x);
    DenseMatrix stacked(f, d * d, d);
    for (std::size_t j = 0; j < d; ++j) {
      // y -> y a_j - x(a_j) y
      DenseMatrix block = contract(m.alg.mul, 1, basis_vector(f, d, j)) - contract(m.alg.mul, 0, act.column(j));
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) stacked(j * d + r, c) = block(r, c);
      }
    }
    out.pieces.push_back(kernel_basis(stacked));
  }

  FullCentreData z = full_centre(m);
  SmashProductData s = z.source;
  std::size_t total = 0;
  for (const auto& p : out.pieces) total += p.size();
  AxiomReport& r = out.report;
  r.check("fcga dimension", total == z.subspace.dim(), {},
          std::to_string(total) + " vs " + std::to_string(z.subspace.dim()));

  std::vector<Vector> images;
  std::vector<std::size_t> image_degree;
  for (std::size_t x = 0; x < n; ++x) {
    for (const auto& v : out.pieces[x]) {
      images.push_back(smash_element(s, v, basis_vector(f, n, g.inverse[x])));
      image_degree.push_back(x);
    }
  }
  bool same = total == z.subspace.dim() &&
              (images.empty() ? z.subspace.dim() == 0 : Subspace(f, s.dim, images) == z.subspace);
  r.check("fcga subspaces agree", same);

  LinearMap delta = split_map(z.global_coaction);
  std::vector<std::size_t> bad_degree;
  for (std::size_t i = 0; i < images.size() && bad_degree.empty(); ++i) {
    Vector expected = zero_vector(f, n * s.dim);
    for (std::size_t k = 0; k < s.dim; ++k) expected[image_degree[i] * s.dim + k] = images[i][k];
    if (!(delta.apply(images[i]) == expected)) bad_degree = {i};
  }
  r.check("fcga degrees agree (x # g has degree g^-1)", bad_degree.empty(), bad_degree);

  LinearMap rho = bilinear_map(z.global_action);
  std::vector<std::size_t> bad_action;
  std::size_t idx = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (const auto& v : out.pieces[x]) {
      for (std::size_t h = 0; h < n && bad_action.empty(); ++h) {
        Vector hv = action_matrix(m.action, h) * v;
        std::size_t target = g.mul(g.mul(h, x), g.inverse[h]);
        Vector expected = smash_element(s, hv, basis_vector(f, n, g.inverse[target]));
        Vector in = zero_vector(f, n * s.dim);
        for (std::size_t k = 0; k < s.dim; ++k) in[h * s.dim + k] = images[idx][k];
        Vector got = rho.apply(in);
        if (!(got == expected)) bad_action = {h, idx};
      }
      ++idx;
    }
  }
  r.check("fcga action induced from A", bad_action.empty(), bad_action);
  r.append(check_zg_algebra(z.yd, g));
  return out;
}

GradedCentreData graded_full_centre(const ModuleAlgebraData& m, const GroupData& g,
                                    const std::vector<std::size_t>& degrees) {
  require_dual_group_hopf(m.hopf, g);
  Field f = m.hopf.field;
  std::size_t d = m.alg.dim;
  std::size_t n = g.order;
  if (degrees.size() != d) throw DimensionMismatch("expected one degree per basis vector");
  std::size_t D = d * n;
  auto at = [n](std::size_t a, std::size_t x) { return a * n + x; };
  // a_j z(x) - z(h_j x) a_j = 0 for every basis a_j of degree h_j and every x
  DenseMatrix stacked(f, d * n * d, D);
  std::size_t row = 0;
  for (std::size_t j = 0; j < d; ++j) {
    DenseMatrix left = contract(m.alg.mul, 0, basis_vector(f, d, j));
    DenseMatrix right = contract(m.alg.mul, 1, basis_vector(f, d, j));
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t hx = g.mul(degrees[j], x);
      for (std::size_t r = 0; r < d; ++r, ++row) {
        for (std::size_t c = 0; c < d; ++c) {
          stacked(row, at(c, x)) += left(r, c);
          stacked(row, at(c, hx)) -= right(r, c);
        }
      }
    }
  }
  GradedCentreData out;
  out.functions = kernel_basis(stacked);

  // Z_f: |z(x)| = x f x^-1 for every x
  std::vector<Vector> all_graded;
  for (std::size_t fdeg = 0; fdeg < n; ++fdeg) {
    std::vector<std::size_t> keep;
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t want = g.mul(g.mul(x, fdeg), g.inverse[x]);
      for (std::size_t a = 0; a < d; ++a) {
        if (degrees[a] == want) keep.push_back(at(a, x));
      }
    }
    // projection of the solution space onto the functions supported on `keep`
    std::vector<Vector> piece;
    for (const auto& v : out.functions) {
      Vector w = zero_vector(f, D);
      for (auto k : keep) w[k] = v[k];
      if (!is_zero(w)) piece.push_back(std::move(w));
    }
    std::vector<Vector> independent;
    if (!piece.empty()) {
      DenseMatrix pm = DenseMatrix::from_columns(f, D, piece);
      independent = image_basis(pm);
    }
    for (const auto& v : independent) all_graded.push_back(v);
    out.graded.push_back(std::move(independent));
  }

  FullCentreData z = full_centre(m);
  AxiomReport& r = out.report;
  bool same = out.functions.size() == z.subspace.dim() &&
              (out.functions.empty() || Subspace(f, D, out.functions) == z.subspace);
  r.check("graded functions agree with centraliser", same, {},
          std::to_string(out.functions.size()) + " vs " + std::to_string(z.subspace.dim()));
  bool decomposes = all_graded.size() == out.functions.size() &&
                    (all_graded.empty() || Subspace(f, D, all_graded) == Subspace(f, D, out.functions));
  r.check("graded pieces span the centre", decomposes);

  LinearMap rho = bilinear_map(z.global_action);
  std::vector<std::size_t> bad_grade;
  for (std::size_t fdeg = 0; fdeg < n && bad_grade.empty(); ++fdeg) {
    for (std::size_t i = 0; i < out.graded[fdeg].size() && bad_grade.empty(); ++i) {
      const auto& v = out.graded[fdeg][i];
      for (std::size_t p = 0; p < n; ++p) {
        Vector in = zero_vector(f, n * D);
        for (std::size_t k = 0; k < D; ++k) in[p * D + k] = v[k];
        Vector expected = p == fdeg ? v : zero_vector(f, D);
        if (!(rho.apply(in) == expected)) bad_grade = {fdeg, i};
      }
    }
  }
  r.check("graded degrees agree (|z(g)| = g f g^-1)", bad_grade.empty(), bad_grade);

  LinearMap delta = split_map(z.global_coaction);
  std::vector<std::size_t> bad_action;
  for (std::size_t i = 0; i < out.functions.size() && bad_action.empty(); ++i) {
    const auto& v = out.functions[i];
    Vector img = delta.apply(v);
    for (std::size_t x = 0; x < n; ++x) {
      // x acts through the p_{x^-1} component: x(z)(y) = z(y x)
      Vector expected = zero_vector(f, D);
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t y = 0; y < n; ++y) expected[at(a, y)] = v[at(a, g.mul(y, x))];
      }
      std::size_t b = g.inverse[x];
      Vector block(img.begin() + b * D, img.begin() + (b + 1) * D);
      if (!(block == expected)) bad_action = {x, i};
    }
  }
  r.check("graded action agrees (g(z)(f) = z(f g))", bad_action.empty(), bad_action);

  std::vector<std::size_t> bad_eval;
  for (std::size_t i = 0; i < z.subspace.dim() && bad_eval.empty(); ++i) {
    const auto& v = z.subspace.basis()[i];
    Vector eval = zero_vector(f, d);
    for (std::size_t a = 0; a < d; ++a) eval[a] = v[at(a, g.identity)];
    if (!(eval == z.canonical_to_A.column(i))) bad_eval = {i};
  }
  r.check("evaluation at e equals canonical projection", bad_eval.empty(), bad_eval);
  return out;
}

}  // namespace scalg
