#pragma once

#include <cstddef>
#include <string>

#include "scalg/modalg.hpp"

namespace scalg {

/// Left-left Yetter-Drinfeld module. Action as in ModuleData; the coaction is
/// delta(m_i) = sum_{h,k} coaction[i][h][k] e_h (x) m_k.
struct YDModuleData {
  HopfAlgebraData hopf;
  std::size_t dim;
  StructureTensor action;
  StructureTensor coaction;
};

struct YDAlgebraData {
  YDModuleData module;
  StructureTensor mul;
  Vector unit;
};

LinearMap coaction_map(const YDModuleData& m);
ModuleData module_part(const YDModuleData& m);
AlgebraData algebra_part(const YDAlgebraData& a);

AxiomReport verify_comodule(const YDModuleData& m);
/// Module and comodule axioms, both compatibility forms, and their agreement.
AxiomReport verify_yd(const YDModuleData& m);
/// verify_yd plus algebra axioms and (co)linearity of mul and unit.
AxiomReport verify_yd_algebra(const YDAlgebraData& a);

YDModuleData trivial_yd(const HopfAlgebraData& h);
/// H with g(h) = g1 h S(g2) and coaction Delta.
YDModuleData adjoint_yd(const HopfAlgebraData& h);
/// The adjoint YD module with the multiplication of H. Quantum commutative;
/// for commutative H it coincides with H^op.
YDAlgebraData adjoint_algebra(const HopfAlgebraData& h);

/// Diagonal action and coaction m(-1) n(-1) (x) m0 (x) n0 on M (x) N.
YDModuleData tensor_product(const YDModuleData& m, const YDModuleData& n);

struct Braiding {
  LinearMap forward;  // M (x) N -> N (x) M
  LinearMap inverse;  // N (x) M -> M (x) N
  AxiomReport report;
};

/// c(m (x) n) = m(-1) n (x) m0 and c^{-1}(n (x) m) = m0 (x) S^{-1}(m(-1)) n,
/// with both inverse laws and (co)linearity of c checked.
Braiding braiding(const YDModuleData& m, const YDModuleData& n);
LinearMap braiding_map(const YDModuleData& m, const YDModuleData& n);
/// Both hexagon identities for the ordered triple (m, n, p).
AxiomReport check_hexagons(const YDModuleData& m, const YDModuleData& n, const YDModuleData& p);

/// ab = a(-1)(b) a0 on all basis pairs.
AxiomReport quantum_commutative_check(const YDAlgebraData& a);

/// Restricts an algebra with (not necessarily YD) action and coaction tensors on
/// k^D to the subspace. Throws InternalError naming the structure that fails
/// to preserve it.
YDAlgebraData restrict_yd_algebra(const HopfAlgebraData& h, const Subspace& sub, const StructureTensor& action,
                                  const StructureTensor& coaction, const StructureTensor& mul, const Vector& unit);

struct LeftCentre {
  Subspace subspace;
  YDAlgebraData algebra;
};

/// {a | ab = a(-1)(b) a0 for all b}.
LeftCentre left_centre(const YDAlgebraData& a);

/// R(N) = H (x) N with h(g (x) n) = h1 g S(h3) (x) h2 n and coaction Delta (x) 1.
/// Basis g_i (x) n_j has index i * dim N + j.
YDModuleData induce_R(const HopfAlgebraData& h, const ModuleData& n);

struct Adjunction {
  DenseMatrix alpha;  // M -> H (x) M
  DenseMatrix beta;   // H (x) N -> N
  AxiomReport report;
};

Adjunction adjunction_maps(const YDModuleData& m, const ModuleData& n);

/// R(A) with the componentwise product (g (x) a)(h (x) b) = gh (x) ab.
YDAlgebraData r_lax_product(const HopfAlgebraData& h, const ModuleAlgebraData& a);

}  // namespace scalg

namespace scalg {

/// Checks that q (columns: images of the basis of a in coordinates of b) is a
/// bijective morphism of YD algebras. `anti` compares q(xy) with q(y)q(x).
AxiomReport check_yd_algebra_morphism(const DenseMatrix& q, const YDAlgebraData& a, const YDAlgebraData& b,
                                      bool anti = false);

}  // namespace scalg
