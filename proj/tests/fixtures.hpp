#pragma once

#include <vector>

#include "scalg/centre.hpp"
#include "scalg/double.hpp"
#include "scalg/format.hpp"
#include "scalg/grouplike.hpp"

namespace fixtures {

using namespace scalg;

inline Field Q() { return Field::rational(); }
inline Field GF7() { return Field::prime(7); }

HopfAlgebraData kc2(Field f = Q());
HopfAlgebraData kc3(Field f = Q());
HopfAlgebraData ks3(Field f = Q());
HopfAlgebraData fs3(Field f = Q());
/// Basis 1, g, x, gx.
HopfAlgebraData sweedler(Field f = Q());
/// Monoid algebra of {1, p} with p^2 = p: a bialgebra without antipode.
HopfAlgebraData idempotent_monoid_bialgebra(Field f = Q());

/// k[x]/(x^2 - 1) with the generator of C2 acting by x -> -x.
ModuleAlgebraData f4(Field f = Q());
/// Mat_2(k) with C2 acting by conjugation with diag(1, -1).
ModuleAlgebraData f5(Field f = Q());
/// k[C2] graded by C2.
ModuleAlgebraData kc2_graded(Field f = Q());
/// Mat_2(k) graded by C2 with off-diagonal units in degree g.
ModuleAlgebraData mat2_graded(Field f = Q());
/// A commutative algebra concentrated in degree e over k(C2).
ModuleAlgebraData trivially_graded(Field f = Q());

AlgebraData laurent_quotient(Field f = Q());
std::vector<DenseMatrix> sign_action(Field f = Q());
std::vector<DenseMatrix> diag_conjugation(Field f = Q());

/// Hopf fixtures used across the suites.
std::vector<HopfAlgebraData> hopf_pool(Field f = Q());
/// Module algebra fixtures used across the suites.
std::vector<ModuleAlgebraData> module_algebra_pool(Field f = Q());

/// Reads data/<name>.
std::string data_file(const std::string& name);

}  // namespace fixtures
