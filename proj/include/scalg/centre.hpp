#pragma once

#include <cstddef>

#include "scalg/smash.hpp"
#include "scalg/yd.hpp"

namespace scalg {

/// C_{A#H}(A) with its YD algebra structure. The multiplication on the centre
/// is the opposite of the one inherited from A#H; with it the embedding into
/// H (x) A is multiplicative and the result is quantum commutative.
struct FullCentreData {
  SmashProductData source;
  Subspace subspace;
  YDAlgebraData yd;
  /// dim A x dim Z, sum a_i # g_i -> sum eps(g_i) a_i.
  DenseMatrix canonical_to_A;
  /// h(a#g) = h2(a) # h3 g S^{-1}(h1) on all of A#H.
  StructureTensor global_action;
  /// a#g -> S(g2) (x) a#g1 on all of A#H.
  StructureTensor global_coaction;
};

std::vector<Vector> centralizer(const SmashProductData& s);

StructureTensor centre_action_tensor(const SmashProductData& s);
StructureTensor centre_coaction_tensor(const SmashProductData& s);

/// Throws InternalError when the centraliser is not closed or the canonical
/// map is not multiplicative.
FullCentreData full_centre(const ModuleAlgebraData& m);

/// Checks the canonical map is a unital algebra homomorphism; throws
/// InternalError otherwise.
DenseMatrix canonical_projection(const FullCentreData& z);

/// Embedding a#h -> S(h) (x) a into R(A) compared with C_l(R(A)).
/// With inverse set the map uses S^{-1}, which misses C_l(R(A)) once S^2 acts
/// nontrivially on A.
AxiomReport embed_and_compare(const ModuleAlgebraData& m, bool inverse = false);

/// Z(k) against H: dimension, S (or S^{-1} with inverse set) as YD algebra
/// isomorphism onto H with the adjoint structure (equivalently an
/// anti-isomorphism onto H^op), and the identity as algebra isomorphism onto H^op.
AxiomReport z_of_k_comparison(const HopfAlgebraData& h, bool inverse = false);

/// z -> z (Identity_r # 1) from Z(A) to Z(Mat_r(A)).
AxiomReport morita_check(const ModuleAlgebraData& m, std::size_t r = 2);

/// theta bijective, dim of the centraliser of H^* in H^*#H, and every centre
/// element acting on H^* as a right multiplication.
AxiomReport dual_example_check(const HopfAlgebraData& h);

/// Full YD algebra report for a computed centre: verify_yd_algebra plus
/// quantum commutativity.
AxiomReport verify_centre(const FullCentreData& z);

}  // namespace scalg
