#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "scalg/modalg.hpp"

namespace scalg {

/// A#H on the basis a_i # h_j with flat index i * dim H + j.
struct SmashProductData {
  ModuleAlgebraData base;
  std::size_t dim;
  StructureTensor mul;
  Vector unit;
  /// psi(u) = sum comodule[u][v][h] v (x) e_h.
  StructureTensor comodule;

  std::size_t index(std::size_t a, std::size_t h) const { return a * base.hopf.dim + h; }
};

/// (a#g)(b#h) = sum a g1(b) # g2 h.
SmashProductData smash_product(const ModuleAlgebraData& m);

/// Algebra axioms plus the two embeddings a -> a#1 and h -> 1#h.
AxiomReport verify_smash(const SmashProductData& s);

/// psi(a#h) = sum a#h1 (x) h2: coassociativity, counit, multiplicativity, unit.
AxiomReport smash_comodule(const SmashProductData& s);

/// Element a (x) h of A#H as a vector.
Vector smash_element(const SmashProductData& s, const Vector& a, const Vector& h);

/// theta(l#h)(m) = l h(m) for A = H^* with the regular action. Column
/// i * n + j holds the operator of e^i # e_j flattened row-major.
/// Throws InternalError when theta is not bijective.
DenseMatrix theta_map(const SmashProductData& s);
/// Operator on H^* of an arbitrary element of H^*#H.
DenseMatrix theta_operator(const SmashProductData& s, const Vector& element);

/// (a#h) -> repA(a) repH(h). Throws BuildError with an (h, a, m) witness
/// when the pair is incompatible.
std::vector<DenseMatrix> module_correspondence(const ModuleAlgebraData& m, const std::vector<DenseMatrix>& rep_a,
                                               const std::vector<DenseMatrix>& rep_h);
/// Restriction of an A#H representation along the two embeddings.
std::pair<std::vector<DenseMatrix>, std::vector<DenseMatrix>> split_representation(
    const SmashProductData& s, const std::vector<DenseMatrix>& rep);

/// Operator of an arbitrary linear combination of basis operators.
DenseMatrix combine_operators(const std::vector<DenseMatrix>& basis_ops, const Vector& coeffs);

}  // namespace scalg
