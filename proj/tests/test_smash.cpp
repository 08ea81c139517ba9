#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace scalg;
using namespace fixtures;

TEST(Smash, AxiomsOnPool) {
  for (Field f : {Q(), GF7()})
    for (const auto& m : module_algebra_pool(f)) {
      auto s = smash_product(m);
      EXPECT_EQ(s.dim, m.alg.dim * m.hopf.dim);
      EXPECT_TRUE(verify_smash(s).all_passed());
      EXPECT_TRUE(smash_comodule(s).all_passed());
    }
}

TEST(Smash, MatchesHandExpansion) {
  for (const auto& m : module_algebra_pool()) {
    auto s = smash_product(m);
    std::size_t n = m.hopf.dim;
    for (std::size_t u = 0; u < s.dim; ++u)
      for (std::size_t v = 0; v < s.dim; ++v) {
        Vector expected = oracles::smash_basis_product(m, u / n, u % n, v / n, v % n);
        for (std::size_t w = 0; w < s.dim; ++w) ASSERT_EQ(s.mul.get(u, v, w), expected[w]);
      }
  }
}

TEST(Smash, TrivialAlgebraGivesH) {
  for (const auto& h : hopf_pool()) {
    auto s = smash_product(trivial_module_algebra(h));
    EXPECT_EQ(s.mul, h.mul);
    EXPECT_EQ(s.unit, h.unit);
  }
}

TEST(Smash, OneDimensionalHopfGivesA) {
  auto k = group_hopf(Q(), cyclic_group(1));
  auto a = matrix_algebra(Q(), 2);
  auto m = g_action_algebra(cyclic_group(1), a, {DenseMatrix::identity(Q(), 4)});
  EXPECT_EQ(smash_product(m).mul, a.mul);
  EXPECT_TRUE(verify_hopf(k).all_passed());
}

TEST(Smash, F4Relations) {
  auto s = smash_product(f4());
  Field f = Q();
  auto x1 = smash_element(s, basis_vector(f, 2, 1), basis_vector(f, 2, 0));
  auto g1 = smash_element(s, basis_vector(f, 2, 0), basis_vector(f, 2, 1));
  auto xg = basis_vector(f, 4, s.index(1, 1));
  auto prod = [&](const Vector& a, const Vector& b) { return bilinear_map(s.mul).apply(kron(LinearMap::vector(a), LinearMap::vector(b)).apply(Vector{f.one()})); };
  EXPECT_EQ(prod(x1, g1), xg);
  EXPECT_EQ(prod(g1, x1), scale(-f.one(), xg));
}

TEST(SmashComodule, GrouplikeAndSkewPrimitive) {
  auto s = smash_product(trivial_module_algebra(kc2()));
  EXPECT_TRUE(s.comodule.get(1, 1, 1).is_one());
  EXPECT_EQ(s.comodule.entries().size(), 2u);
  auto s4 = smash_product(f4());
  EXPECT_TRUE(s4.comodule.get(s4.index(1, 1), s4.index(1, 1), 1).is_one());
  auto sw = smash_product(trivial_module_algebra(sweedler()));
  // psi(1#x) = 1#x (x) 1 + 1#g (x) x
  EXPECT_TRUE(sw.comodule.get(2, 2, 0).is_one());
  EXPECT_TRUE(sw.comodule.get(2, 1, 2).is_one());
  std::size_t count = 0;
  for (const auto& [idx, c] : sw.comodule.entries()) count += idx[0] == 2;
  EXPECT_EQ(count, 2u);
}

TEST(Theta, BijectiveOnFixtures) {
  for (const auto& h : {group_hopf(Q(), cyclic_group(1)), kc2(), kc3(), sweedler(), ks3()}) {
    auto s = smash_product(dual_regular_module_algebra(h));
    DenseMatrix t = theta_map(s);
    EXPECT_EQ(t.rows(), h.dim * h.dim);
    EXPECT_EQ(rank(t), h.dim * h.dim);
  }
  auto k = smash_product(dual_regular_module_algebra(group_hopf(Q(), cyclic_group(1))));
  EXPECT_EQ(theta_map(k), DenseMatrix::identity(Q(), 1));
}

TEST(Theta, IsMultiplicative) {
  auto s = smash_product(dual_regular_module_algebra(sweedler()));
  Field f = Q();
  for (std::size_t u = 0; u < s.dim; ++u)
    for (std::size_t v = 0; v < s.dim; ++v) {
      Vector uv = zero_vector(f, s.dim);
      for (std::size_t w = 0; w < s.dim; ++w) uv[w] = s.mul.get(u, v, w);
      EXPECT_EQ(theta_operator(s, uv), theta_operator(s, basis_vector(f, s.dim, u)) * theta_operator(s, basis_vector(f, s.dim, v)));
    }
}

namespace {

std::vector<DenseMatrix> left_regular(const AlgebraData& a) {
  std::vector<DenseMatrix> out;
  for (std::size_t i = 0; i < a.dim; ++i) out.push_back(contract(a.mul, 0, basis_vector(a.field, a.dim, i)));
  return out;
}

std::vector<DenseMatrix> action_ops(const ModuleAlgebraData& m) {
  std::vector<DenseMatrix> out;
  for (std::size_t h = 0; h < m.hopf.dim; ++h) out.push_back(action_matrix(m.action, h));
  return out;
}

}  // namespace

TEST(ModuleCorrespondence, RegularModuleSatisfiesSmashRelations) {
  for (const auto& m : module_algebra_pool()) {
    auto s = smash_product(m);
    auto ops = module_correspondence(m, left_regular(m.alg), action_ops(m));
    ASSERT_EQ(ops.size(), s.dim);
    for (std::size_t u = 0; u < s.dim; ++u)
      for (std::size_t v = 0; v < s.dim; ++v) {
        Vector coeffs = zero_vector(m.alg.field, s.dim);
        for (std::size_t w = 0; w < s.dim; ++w) coeffs[w] = s.mul.get(u, v, w);
        EXPECT_EQ(ops[u] * ops[v], combine_operators(ops, coeffs));
      }
    auto [ra, rh] = split_representation(s, ops);
    EXPECT_EQ(ra, left_regular(m.alg));
    EXPECT_EQ(rh, action_ops(m));
  }
}

TEST(ModuleCorrespondence, F4DefiningModule) {
  auto m = f4();
  auto s = smash_product(m);
  auto ops = module_correspondence(m, left_regular(m.alg), action_ops(m));
  EXPECT_EQ(ops.size(), 4u);
  // (1#g)(x#1) = g(x)#g = -x#g
  EXPECT_TRUE((ops[s.index(0, 1)] * ops[s.index(1, 0)] + ops[s.index(1, 1)]).is_zero());
  EXPECT_FALSE(ops[s.index(1, 1)].is_zero());
}

TEST(ModuleCorrespondence, IncompatiblePairRejected) {
  auto m = f4();
  std::vector<DenseMatrix> trivial(2, DenseMatrix::identity(Q(), 2));
  EXPECT_THROW(module_correspondence(m, left_regular(m.alg), trivial), BuildError);
}
