#pragma once

#include <cstddef>
#include <vector>

#include "scalg/hopf.hpp"

namespace scalg {

/// Associative unital algebra: a_i a_j = sum_k mul[i][j][k] a_k.
struct AlgebraData {
  Field field;
  std::size_t dim;
  StructureTensor mul;
  Vector unit;
};

/// Left H-module: e_h(m_j) = sum_k action[h][j][k] m_k.
struct ModuleData {
  HopfAlgebraData hopf;
  std::size_t dim;
  StructureTensor action;
};

/// H-module algebra: `action` uses the same convention as ModuleData.
struct ModuleAlgebraData {
  HopfAlgebraData hopf;
  AlgebraData alg;
  StructureTensor action;
};

/// Finite group by Cayley table: g_i g_j = g_{table[i][j]}.
struct GroupData {
  std::size_t order;
  std::vector<std::vector<std::size_t>> table;
  std::size_t identity;
  std::vector<std::size_t> inverse;

  std::size_t mul(std::size_t a, std::size_t b) const { return table[a][b]; }
};

/// Validates the table (closure, associativity, identity, inverses) and
/// fills identity/inverse. Throws BuildError naming the witness.
GroupData make_group(std::vector<std::vector<std::size_t>> table);
GroupData cyclic_group(std::size_t n);
/// S3 with elements ordered e, r, r^2, s, sr, sr^2 (r^3 = s^2 = 1, rs = sr^2).
GroupData symmetric_group_3();

AlgebraData algebra_of(const HopfAlgebraData& h);
AlgebraData matrix_algebra(Field f, std::size_t r);
AlgebraData opposite_algebra(const AlgebraData& a);
ModuleData underlying_module(const ModuleAlgebraData& m);
ModuleData regular_module(const HopfAlgebraData& h);
ModuleData trivial_module(const HopfAlgebraData& h);

AxiomReport verify_algebra(const AlgebraData& a);
AxiomReport verify_module(const ModuleData& m);
AxiomReport verify_module_algebra(const ModuleAlgebraData& m);

ModuleAlgebraData trivial_module_algebra(const HopfAlgebraData& h);
/// H^* with the regular action (h.l)(g) = l(gh).
ModuleAlgebraData dual_regular_module_algebra(const HopfAlgebraData& h);
/// Mat_r(A) = Mat_r(k) (x) A with H acting on the A leg only. The basis
/// index of E_pq (x) a_i is (p * r + q) * dim A + i.
ModuleAlgebraData matrix_amplify(const ModuleAlgebraData& m, std::size_t r);

HopfAlgebraData group_hopf(Field f, const GroupData& g);
/// k(G) on the idempotent basis p_g.
HopfAlgebraData dual_group_hopf(Field f, const GroupData& g);

/// k[G]-module algebra with g_i acting by automorphisms[i] (column convention).
ModuleAlgebraData g_action_algebra(const GroupData& g, const AlgebraData& a,
                                   const std::vector<DenseMatrix>& automorphisms);
/// k(G)-module algebra where p_g projects onto the span of basis vectors of degree g.
ModuleAlgebraData graded_algebra(const GroupData& g, const AlgebraData& a, const std::vector<std::size_t>& degrees);

/// action tensor as the map H (x) M -> M.
LinearMap action_map(const StructureTensor& action);
/// Matrix of e_h acting on M.
DenseMatrix action_matrix(const StructureTensor& action, std::size_t h);

}  // namespace scalg
