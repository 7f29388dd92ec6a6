#include <gtest/gtest.h>

#include <random>

#include "schwinger/monomial_space.hpp"

using namespace schwinger;

namespace {

MonomialCombination random_combination(int n, std::mt19937_64& rng) {
  const auto basis = enumerate_all(n);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  MonomialCombination f(n);
  for (int t = 0; t < 5; ++t) f.add(Monomial(basis[pick(rng)]), Rational(num(rng), den(rng)));
  return f;
}

}  // namespace

TEST(Monomial, RenderingAndValidation) {
  EXPECT_EQ(Monomial(4, {{1, 2}, {3, 4}}).str(), "x12*x34");
  EXPECT_EQ(Monomial::constant(3).str(), "1");
  EXPECT_THROW(Monomial(4, {{2, 1}}), std::invalid_argument);
  EXPECT_THROW(Monomial(4, {{1, 2}, {2, 3}}), std::invalid_argument);
}

TEST(GaussianMoment, Table) {
  EXPECT_EQ(gaussian_moment(0), 1);
  EXPECT_EQ(gaussian_moment(1), 0);
  EXPECT_EQ(gaussian_moment(2), Rational(1, 2));
  EXPECT_EQ(gaussian_moment(3), 0);
  EXPECT_EQ(gaussian_moment(4), Rational(3, 4));
}

TEST(InnerProduct, Examples) {
  const Monomial x12(3, {{1, 2}});
  const Monomial x13(3, {{1, 3}});
  EXPECT_EQ(inner_product(x12, x12), Rational(1, 2));
  EXPECT_EQ(inner_product(Monomial::constant(3), Monomial::constant(3)), 1);
  EXPECT_EQ(inner_product(x12, x13), 0);
  EXPECT_THROW(inner_product(x12, Monomial::constant(4)), std::invalid_argument);
}

TEST(InnerProduct, SelfPairingIsTwoToMinusOrder) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& x : enumerate_all(n)) {
      Rational expected = 1;
      for (int k = 0; k < x.level(); ++k) expected /= 2;
      EXPECT_EQ(inner_product(Monomial(x), Monomial(x)), expected);
    }
  }
}

TEST(InnerProduct, UnpairedVariableKillsThePairing) {
  for (int n = 2; n <= 6; ++n) {
    const auto basis = enumerate_all(n);
    for (const auto& a : basis) {
      for (const auto& b : basis) {
        // Some variable of a is missing from b (or vice versa) iff a != b.
        EXPECT_EQ(inner_product(Monomial(a), Monomial(b)) == 0, a != b);
      }
    }
  }
}

TEST(InnerProduct, SymmetricAndBilinear) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_combination(5, rng);
    const auto g = random_combination(5, rng);
    const auto h = random_combination(5, rng);
    EXPECT_EQ(inner_product(f, g), inner_product(g, f));
    auto g_plus_h = g;
    g_plus_h += Rational(3, 2) * h;
    EXPECT_EQ(inner_product(f, g_plus_h), inner_product(f, g) + Rational(3, 2) * inner_product(f, h));
    if (!f.terms().empty()) EXPECT_GT(inner_product(f, f), 0);
  }
}

TEST(InnerProduct, ComplexCombinationsAreSesquilinear) {
  const Monomial x12(3, {{1, 2}});
  // f = (1 + 2i) x12, g = (3 - i) x12; <f,g> = conj(1+2i)(3-i)/2 = (1 - 7i)/2
  ComplexCombination f{MonomialCombination(x12, 1), MonomialCombination(x12, 2)};
  ComplexCombination g{MonomialCombination(x12, 3), MonomialCombination(x12, -1)};
  EXPECT_EQ(inner_product(f, g), (ComplexRational{Rational(1, 2), Rational(-7, 2)}));
  EXPECT_EQ(inner_product(f, f), (ComplexRational{Rational(5, 2), 0}));
}

TEST(NormalizedBasis, SmallCases) {
  const auto two = normalized_basis(2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].monomial, Monomial::constant(2));
  EXPECT_EQ(two[0].scale_squared, 1);
  EXPECT_EQ(two[1].monomial, Monomial(2, {{1, 2}}));
  EXPECT_EQ(two[1].scale_squared, 2);
  EXPECT_TRUE(is_identity(gram_matrix(two)));
}

TEST(NormalizedBasis, GramIsIdentity) {
  for (int n = 1; n <= 6; ++n) {
    const auto gram = gram_matrix(normalized_basis(n));
    EXPECT_EQ(gram.size(), enumerate_all(n).size());
    EXPECT_TRUE(is_identity(gram)) << "n = " << n;
  }
}

TEST(ActOnMonomial, Examples) {
  const Monomial x12(4, {{1, 2}});
  EXPECT_EQ(act_on_monomial(Permutation::identity(4), x12), std::make_pair(x12, 1));
  EXPECT_EQ(act_on_monomial(Permutation({2, 1, 3, 4}), x12), std::make_pair(x12, -1));
  EXPECT_EQ(act_on_monomial(Permutation({1, 3, 2, 4}), x12), std::make_pair(Monomial(4, {{1, 3}}), 1));
  EXPECT_THROW(act_on_monomial(Permutation::identity(3), x12), std::invalid_argument);
}

TEST(ActOnMonomial, AgreesWithInvolutionAction) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& pi : adjacent_transpositions(n)) {
      for (const auto& x : enumerate_all(n)) {
        const auto [image, sign] = act_on_monomial(pi, Monomial(x));
        const auto expected = act(pi, x);
        EXPECT_EQ(image.to_involution(), expected.element);
        EXPECT_EQ(sign, expected.sign);
      }
    }
  }
}

TEST(ActOnMonomial, PreservesInnerProduct) {
  std::mt19937_64 rng(17);
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto f1 = random_combination(n, rng);
      const auto f2 = random_combination(n, rng);
      const auto pi = Permutation::random(n, rng);
      EXPECT_EQ(inner_product(act_on_combination(pi, f1), act_on_combination(pi, f2)), inner_product(f1, f2));
    }
  }
}

TEST(MonomialCombination, DropsCancelledTerms) {
  const Monomial x12(3, {{1, 2}});
  MonomialCombination f(x12, 2);
  f.add(x12, -2);
  EXPECT_TRUE(f.terms().empty());
  EXPECT_EQ(f.str(), "0");
  MonomialCombination g(x12, Rational(-1, 2));
  g.add(Monomial::constant(3), 1);
  EXPECT_EQ(g.str(), "1 - 1/2*x12");
}
