#pragma once

// Brute-force reference computations written directly from structure
// constants, sharing no code with the library beyond scalars and rref.

#include <vector>

#include "fixtures.hpp"

namespace oracles {

using namespace scalg;

/// Coefficient table c[i][j] -> vector over k of length d3.
inline std::vector<std::vector<Vector>> table(const StructureTensor& t) {
  auto [d1, d2, d3] = t.dims();
  std::vector<std::vector<Vector>> out(d1, std::vector<Vector>(d2, zero_vector(t.field(), d3)));
  for (const auto& [idx, c] : t.entries()) out[idx[0]][idx[1]][idx[2]] = c;
  return out;
}

/// (a_i # e_g)(a_j # e_h) expanded by hand, flat index a * n + h.
inline Vector smash_basis_product(const ModuleAlgebraData& m, std::size_t i, std::size_t g, std::size_t j,
                                  std::size_t h) {
  Field f = m.alg.field;
  std::size_t n = m.hopf.dim, da = m.alg.dim;
  auto mul_a = table(m.alg.mul), mul_h = table(m.hopf.mul), act = table(m.action), com = table(m.hopf.comul);
  Vector out = zero_vector(f, da * n);
  for (std::size_t g1 = 0; g1 < n; ++g1)
    for (std::size_t g2 = 0; g2 < n; ++g2) {
      Scalar cg = com[g][g1][g2];
      if (cg.is_zero()) continue;
      for (std::size_t b = 0; b < da; ++b) {
        Scalar cb = act[g1][j][b];
        if (cb.is_zero()) continue;
        for (std::size_t a = 0; a < da; ++a) {
          Scalar ca = mul_a[i][b][a];
          if (ca.is_zero()) continue;
          for (std::size_t k = 0; k < n; ++k) {
            Scalar ck = mul_h[g2][h][k];
            if (ck.is_zero()) continue;
            out[a * n + k] += cg * cb * ca * ck;
          }
        }
      }
    }
  return out;
}

inline Vector smash_multiply(const ModuleAlgebraData& m, const Vector& u, const Vector& v) {
  std::size_t n = m.hopf.dim, d = m.alg.dim * n;
  Vector out = zero_vector(m.alg.field, d);
  for (std::size_t p = 0; p < d; ++p) {
    if (u[p].is_zero()) continue;
    for (std::size_t q = 0; q < d; ++q) {
      if (v[q].is_zero()) continue;
      Vector w = smash_basis_product(m, p / n, p % n, q / n, q % n);
      for (std::size_t r = 0; r < d; ++r) out[r] += u[p] * v[q] * w[r];
    }
  }
  return out;
}

/// Dimension of {v in A#H | (a#1) v = v (a#1) for all basis a}.
inline std::size_t centraliser_dim(const ModuleAlgebraData& m) {
  Field f = m.alg.field;
  std::size_t n = m.hopf.dim, da = m.alg.dim, d = da * n;
  auto unit_h = m.hopf.unit;
  std::vector<Vector> rows;
  for (std::size_t a = 0; a < da; ++a) {
    Vector left = zero_vector(f, d);
    for (std::size_t h = 0; h < n; ++h) left[a * n + h] = unit_h[h];
    std::vector<Vector> cols;
    for (std::size_t q = 0; q < d; ++q) {
      Vector e = basis_vector(f, d, q);
      cols.push_back(add(smash_multiply(m, left, e), scale(-f.one(), smash_multiply(m, e, left))));
    }
    DenseMatrix block = DenseMatrix::from_columns(f, d, cols);
    for (std::size_t r = 0; r < d; ++r) rows.push_back(block.row(r));
  }
  return d - rank(DenseMatrix::from_rows(f, d, rows));
}

/// Checks every vector lies in the centraliser by direct multiplication.
inline bool commutes_with_A(const ModuleAlgebraData& m, const Vector& v) {
  Field f = m.alg.field;
  std::size_t n = m.hopf.dim, da = m.alg.dim;
  for (std::size_t a = 0; a < da; ++a) {
    Vector left = zero_vector(f, da * n);
    for (std::size_t h = 0; h < n; ++h) left[a * n + h] = m.hopf.unit[h];
    if (!(smash_multiply(m, left, v) == smash_multiply(m, v, left))) return false;
  }
  return true;
}

}  // namespace oracles
