#pragma once

#include <cstddef>
#include <optional>

#include "scalg/linalg.hpp"
#include "scalg/report.hpp"
#include "scalg/tensor.hpp"

namespace scalg {

class NoAntipode : public Error {
 public:
  NoAntipode() : Error("no antipode exists") {}
};

/// A finite-dimensional Hopf algebra presented by structure constants on a
/// basis e_0..e_{n-1}:
///   e_i e_j  = sum_k mul[i][j][k] e_k
///   Delta(e_i) = sum_{j,k} comul[i][j][k] e_j (x) e_k
/// The antipode matrices act on coordinate columns: column i of `antipode`
/// holds S(e_i).
struct HopfAlgebraData {
  Field field;
  std::size_t dim;
  StructureTensor mul;
  Vector unit;
  StructureTensor comul;
  Vector counit;
  DenseMatrix antipode;
  DenseMatrix antipode_inv;
};

/// Builds H from structure constants. When `antipode` is absent it is solved
/// for; S^{-1} is always computed by inversion and a singular S is rejected.
HopfAlgebraData make_hopf(Field f, std::size_t dim, StructureTensor mul, Vector unit, StructureTensor comul,
                          Vector counit, std::optional<DenseMatrix> antipode = std::nullopt);

/// Throws DimensionMismatch / FieldMismatch for inconsistent shapes.
void check_shapes(const HopfAlgebraData& h);

/// The structure maps of H as linear maps.
struct HopfMaps {
  LinearMap mul;      // H(x)H -> H
  LinearMap unit;     // k -> H
  LinearMap comul;    // H -> H(x)H
  LinearMap counit;   // H -> k
  LinearMap antipode;
  LinearMap antipode_inv;
  LinearMap id;
};

HopfMaps maps_of(const HopfAlgebraData& h);

/// Product of `factors` elements, H^{(x)factors} -> H (factors >= 1).
LinearMap product_map(const HopfAlgebraData& h, std::size_t factors);

Vector multiply(const HopfAlgebraData& h, const Vector& a, const Vector& b);

AxiomReport verify_hopf(const HopfAlgebraData& h);

/// Consequences of the axioms: S is an algebra and coalgebra anti-morphism
/// and preserves the counit.
AxiomReport verify_antipode_properties(const HopfAlgebraData& h);

/// Convolution inverse of the identity from the left antipode identity,
/// checked against the right one. Stored antipode fields are ignored.
DenseMatrix solve_antipode(const HopfAlgebraData& bialgebra);

HopfAlgebraData dual_hopf(const HopfAlgebraData& h);
HopfAlgebraData opposite_hopf(const HopfAlgebraData& h);

/// sum (g S(h1))_1 h2 (x) (g S(h1))_2 == sum g1 (x) g2 S(h) for all basis g, h.
AxiomReport check_lemma_aux(const HopfAlgebraData& h);

/// Delta^{(r)} : H -> H^{(x)(r+1)}, associated to the left.
LinearMap iterated_coproduct(const HopfAlgebraData& h, std::size_t order);

}  // namespace scalg
