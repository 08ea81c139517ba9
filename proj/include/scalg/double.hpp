#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "scalg/yd.hpp"

namespace scalg {

/// Coproduct of H^* inside D(H): l1(x) l2(y) = l(xy), or the flipped l(yx).
enum class DualCoproduct { transpose, flipped };

/// D(H) on the basis h_i l_j (index i * n + j). The H^* factor multiplies by
/// (l l')(x) = l(x2) l'(x1), and l h = sum h2 l(h1 - S(h3)).
struct DoubleData {
  HopfAlgebraData base;
  HopfAlgebraData hopf;
  DenseMatrix embed_hopf;  // n^2 x n
  DenseMatrix embed_dual;  // n^2 x n
  /// l (x) h -> sum h2 (x) l(h1 - S(h3)), as a map k^{n n} -> k^{n n}.
  StructureTensor straightening;
  DualCoproduct convention;
};

std::string describe(DualCoproduct c);

/// (l l')(x) = l(x2) l'(x1) on the dual basis.
StructureTensor dual_product(const HopfAlgebraData& h);

/// Builds D(H) with a solved antipode. Throws BuildError naming the first
/// failing axiom when the convention does not give a Hopf algebra.
DoubleData drinfeld_double(const HopfAlgebraData& h, DualCoproduct convention = DualCoproduct::transpose);
/// Structure constants only; no verification and no antipode.
HopfAlgebraData double_bialgebra(const HopfAlgebraData& h, DualCoproduct convention);

/// Embeddings are injective algebra maps and the straightening rule holds.
AxiomReport verify_double(const DoubleData& d);

/// Operators of h_i l_j on M with l.m = l(m(-1)) m0.
std::vector<DenseMatrix> double_representation(const YDModuleData& m);

/// D(H) relations on M, recovery of the coaction from the H^* action, and
/// independence of the recovered coaction from the dual basis.
AxiomReport yd_double_roundtrip(const YDModuleData& m, const DoubleData& d);

/// The D(H) action on M (x) N through the coproduct of D(H) agrees with the
/// representation of the YD tensor product.
AxiomReport double_tensor_check(const YDModuleData& m, const YDModuleData& n, const DoubleData& d);

}  // namespace scalg
