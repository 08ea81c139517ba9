#pragma once

#include <cstddef>
#include <vector>

#include "scalg/centre.hpp"

namespace scalg {

/// Object of Z(G): a G-graded space with a compatible G-action, written in a
/// homogeneous basis. Column i of `basis` is the i-th homogeneous basis vector
/// in the coordinates of the YD module it came from.
struct ZGObjectData {
  GroupData group;
  std::size_t dim;
  std::vector<std::size_t> degrees;
  std::vector<DenseMatrix> action;
  DenseMatrix basis;
};

/// Grading from the coaction (delta(m) = g (x) m for m of degree g) and the
/// action of the group elements. Throws BuildError if H is not k[G] or the
/// coaction does not split into grouplike components.
ZGObjectData zg_convert(const YDModuleData& m, const GroupData& g);
/// YD module over k[G] on the homogeneous basis.
YDModuleData zg_to_yd(const ZGObjectData& z, Field f);

/// f(V_g) lies in V_{f g f^-1}.
AxiomReport check_zg_compatibility(const ZGObjectData& z);
/// Braiding c(x (x) y) = f(y) (x) x and half-braiding z (x) u -> u (x) g^-1(z)
/// against the YD braiding and its inverse.
AxiomReport check_zg_braiding(const YDModuleData& x, const YDModuleData& y, const GroupData& g);
/// f(ab) = f(a) f(b) and ab = f(b) a for a of degree f, on the homogeneous basis.
AxiomReport check_zg_algebra(const YDAlgebraData& a, const GroupData& g);

struct GCentreData {
  /// pieces[g]: basis of Z_g(A) = {x | x a = g(a) x} in coordinates of A.
  std::vector<std::vector<Vector>> pieces;
  AxiomReport report;
};

/// Graded pieces of Z(A) for a k[G]-module algebra, cross-checked against
/// full_centre: x in Z_g corresponds to x # g^-1, of degree g.
GCentreData g_full_centre(const ModuleAlgebraData& m, const GroupData& g);

struct GradedCentreData {
  /// Functions z : G -> A, stored as sum_g z(g) # p_g (index a * |G| + g).
  std::vector<Vector> functions;
  /// graded[f]: functions with |z(g)| = g f g^-1.
  std::vector<std::vector<Vector>> graded;
  AxiomReport report;
};

/// {z | a z(g) = z(hg) a for a in A_h} for a k(G)-module algebra given by a
/// grading, cross-checked against full_centre.
GradedCentreData graded_full_centre(const ModuleAlgebraData& m, const GroupData& g,
                                    const std::vector<std::size_t>& degrees);

}  // namespace scalg
