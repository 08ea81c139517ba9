#include "fixtures.hpp"

#include <fstream>
#include <sstream>

namespace fixtures {

namespace {

AlgebraData make_algebra(Field f, std::size_t dim, const std::vector<std::array<int, 4>>& mul, std::size_t unit) {
  StructureTensor t(f, dim, dim, dim);
  for (const auto& e : mul) t.set(e[0], e[1], e[2], f.from_int(e[3]));
  return {f, dim, std::move(t), basis_vector(f, dim, unit)};
}

}  // namespace

HopfAlgebraData kc2(Field f) { return group_hopf(f, cyclic_group(2)); }
HopfAlgebraData kc3(Field f) { return group_hopf(f, cyclic_group(3)); }
HopfAlgebraData ks3(Field f) { return group_hopf(f, symmetric_group_3()); }
HopfAlgebraData fs3(Field f) { return dual_group_hopf(f, symmetric_group_3()); }

HopfAlgebraData sweedler(Field f) {
  StructureTensor mul(f, 4, 4, 4), comul(f, 4, 4, 4);
  auto one = f.one(), neg = -f.one();
  for (std::size_t b = 0; b < 4; ++b) {
    mul.set(0, b, b, one);
    mul.set(b, 0, b, one);
  }
  mul.set(1, 1, 0, one);
  mul.set(1, 2, 3, one);
  mul.set(1, 3, 2, one);
  mul.set(2, 1, 3, neg);
  mul.set(3, 1, 2, neg);
  comul.set(0, 0, 0, one);
  comul.set(1, 1, 1, one);
  comul.set(2, 2, 0, one);
  comul.set(2, 1, 2, one);
  comul.set(3, 3, 1, one);
  comul.set(3, 0, 3, one);
  Vector counit{one, one, f.zero(), f.zero()};
  DenseMatrix s(f, 4, 4);
  s(0, 0) = one;
  s(1, 1) = one;
  s(3, 2) = neg;
  s(2, 3) = one;
  return make_hopf(f, 4, mul, basis_vector(f, 4, 0), comul, counit, s);
}

HopfAlgebraData idempotent_monoid_bialgebra(Field f) {
  StructureTensor mul(f, 2, 2, 2), comul(f, 2, 2, 2);
  mul.set(0, 0, 0, f.one());
  mul.set(0, 1, 1, f.one());
  mul.set(1, 0, 1, f.one());
  mul.set(1, 1, 1, f.one());
  comul.set(0, 0, 0, f.one());
  comul.set(1, 1, 1, f.one());
  DenseMatrix id = DenseMatrix::identity(f, 2);
  return {f, 2, mul, basis_vector(f, 2, 0), comul, Vector{f.one(), f.one()}, id, id};
}

AlgebraData laurent_quotient(Field f) { return make_algebra(f, 2, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}}, 0); }

std::vector<DenseMatrix> sign_action(Field f) {
  DenseMatrix s = DenseMatrix::identity(f, 2);
  s(1, 1) = -f.one();
  return {DenseMatrix::identity(f, 2), s};
}

std::vector<DenseMatrix> diag_conjugation(Field f) {
  DenseMatrix s = DenseMatrix::identity(f, 4);
  s(1, 1) = -f.one();
  s(2, 2) = -f.one();
  return {DenseMatrix::identity(f, 4), s};
}

ModuleAlgebraData f4(Field f) { return g_action_algebra(cyclic_group(2), laurent_quotient(f), sign_action(f)); }

ModuleAlgebraData f5(Field f) { return g_action_algebra(cyclic_group(2), matrix_algebra(f, 2), diag_conjugation(f)); }

ModuleAlgebraData kc2_graded(Field f) { return graded_algebra(cyclic_group(2), laurent_quotient(f), {0, 1}); }

ModuleAlgebraData mat2_graded(Field f) { return graded_algebra(cyclic_group(2), matrix_algebra(f, 2), {0, 1, 1, 0}); }

ModuleAlgebraData trivially_graded(Field f) { return graded_algebra(cyclic_group(2), laurent_quotient(f), {0, 0}); }

std::vector<HopfAlgebraData> hopf_pool(Field f) { return {kc2(f), kc3(f), ks3(f), fs3(f), sweedler(f)}; }

std::vector<ModuleAlgebraData> module_algebra_pool(Field f) {
  return {trivial_module_algebra(kc2(f)), trivial_module_algebra(sweedler(f)), f4(f), f5(f), kc2_graded(f),
          mat2_graded(f), dual_regular_module_algebra(kc2(f)), dual_regular_module_algebra(sweedler(f))};
}

std::string data_file(const std::string& name) {
  std::ifstream in(std::string(SCALG_DATA_DIR_FALLBACK) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace fixtures
