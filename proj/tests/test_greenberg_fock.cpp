#include <gtest/gtest.h>

#include <random>

#include "schwinger/greenberg_fock.hpp"

using namespace schwinger;

namespace {

FockWord word(std::vector<int> indices) { return FockWord{std::move(indices)}; }

}  // namespace

TEST(WordInnerProduct, Examples) {
  EXPECT_EQ(word_inner_product(word({}), word({})), 1);
  EXPECT_EQ(word_inner_product(word({1, 2}), word({1, 2})), 1);
  EXPECT_EQ(word_inner_product(word({1, 2}), word({2, 1})), 0);
  EXPECT_EQ(word_inner_product_by_reduction(word({}), word({})), 1);
  EXPECT_EQ(word_inner_product_by_reduction(word({1, 2}), word({1, 2})), 1);
  EXPECT_EQ(word_inner_product_by_reduction(word({1, 2}), word({2, 1})), 0);
}

TEST(VacuumExpectation, ReducesOnlyAdjacentAnnihilatorCreatorPairs) {
  using K = LadderOp::Kind;
  // <0| a(1) a†(1) |0> = 1
  EXPECT_EQ(vacuum_expectation(std::vector<LadderOp>{{K::Annihilate, 1}, {K::Create, 1}}), 1);
  // <0| a†(1) a(1) |0> = 0, since a(1)|0> = 0
  EXPECT_EQ(vacuum_expectation(std::vector<LadderOp>{{K::Create, 1}, {K::Annihilate, 1}}), 0);
  // <0| a(2) a(1) a†(1) a†(2) |0> = 1
  EXPECT_EQ(vacuum_expectation(std::vector<LadderOp>{
                {K::Annihilate, 2}, {K::Annihilate, 1}, {K::Create, 1}, {K::Create, 2}}),
            1);
  // <0| a(1) a(2) a†(1) a†(2) |0> = 0: a(2)a†(1) = 0 with no exchange term
  EXPECT_EQ(vacuum_expectation(std::vector<LadderOp>{
                {K::Annihilate, 1}, {K::Annihilate, 2}, {K::Create, 1}, {K::Create, 2}}),
            0);
  // <0| a(1) a†(1) a(2) a†(2) |0> = 1
  EXPECT_EQ(vacuum_expectation(std::vector<LadderOp>{
                {K::Annihilate, 1}, {K::Create, 1}, {K::Annihilate, 2}, {K::Create, 2}}),
            1);
}

TEST(WordInnerProduct, FastPathAgreesWithReduction) {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> index(1, 4);
  std::uniform_int_distribution<int> length(0, 4);
  auto random_word = [&] {
    FockWord w;
    for (int k = length(rng); k > 0; --k) w.indices.push_back(index(rng));
    return w;
  };
  int equal_pairs = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto w1 = random_word();
    const auto w2 = trial % 3 == 0 ? w1 : random_word();
    const int fast = word_inner_product(w1, w2);
    ASSERT_EQ(fast, word_inner_product_by_reduction(w1, w2)) << w1.str() << " vs " << w2.str();
    equal_pairs += fast;
  }
  EXPECT_GT(equal_pairs, 300);
}

TEST(StateInnerProduct, Examples) {
  const auto single = commutator_product_state(2, {{1, 2}}, {1});
  EXPECT_EQ(state_inner_product(single, single), 2);
  const auto product = commutator_product_state(4, {{1, 2}, {3, 4}}, {1, 2});
  EXPECT_EQ(state_inner_product(product, product), 4);
  EXPECT_THROW(state_inner_product(single, FockState::vacuum(3)), std::invalid_argument);
}

TEST(StateInnerProduct, NormIsSumOfSquares) {
  FockState s(3);
  s.add(word({1, 2}), Rational(1, 2));
  s.add(word({2, 1}), -3);
  s.add(word({3}), Rational(2, 3));
  EXPECT_EQ(state_inner_product(s, s), Rational(1, 4) + 9 + Rational(4, 9));
}

TEST(CommutatorProductState, Examples) {
  FockState one(2);
  one.add(word({1, 2}), 1);
  one.add(word({2, 1}), -1);
  EXPECT_EQ(commutator_product_state(2, {{1, 2}}, {1}), one);

  EXPECT_EQ(commutator_product_state(3, {}, {}), FockState::vacuum(3));

  FockState two(4);
  two.add(word({1, 2, 3, 4}), 1);
  two.add(word({1, 2, 4, 3}), -1);
  two.add(word({2, 1, 3, 4}), -1);
  two.add(word({2, 1, 4, 3}), 1);
  EXPECT_EQ(commutator_product_state(4, {{1, 2}, {3, 4}}, {1, 2}), two);
}

TEST(CommutatorProductState, OrderingReversesFactorOrder) {
  const auto reversed = commutator_product_state(4, {{1, 2}, {3, 4}}, {2, 1});
  EXPECT_EQ(reversed.terms().at(word({3, 4, 1, 2})), 1);
  EXPECT_EQ(reversed.terms().at(word({4, 3, 1, 2})), -1);
  EXPECT_EQ(state_inner_product(reversed, commutator_product_state(4, {{1, 2}, {3, 4}}, {1, 2})), 0);
}

TEST(CommutatorProductState, RejectsOverlapsAndBadOrderings) {
  EXPECT_THROW(commutator_product_state(4, {{1, 2}, {2, 3}}, {1, 2}), std::invalid_argument);
  EXPECT_THROW(commutator_product_state(4, {{1, 2}, {3, 4}}, {1, 1}), std::invalid_argument);
  EXPECT_THROW(commutator_product_state(3, {{1, 4}}, {1}), std::invalid_argument);
}

TEST(BasisState, Examples) {
  const auto vacuum = basis_state(Involution::identity(4));
  EXPECT_EQ(vacuum.raw, FockState::vacuum(4));
  EXPECT_EQ(vacuum.norm_squared, 1);

  const auto x12 = basis_state(Involution(4, {{1, 2}}));
  EXPECT_EQ(x12.raw, commutator_product_state(4, {{1, 2}}, {1}));
  EXPECT_EQ(x12.norm_squared, 2);

  const auto x1324 = basis_state(Involution(4, {{1, 3}, {2, 4}}));
  auto expected = commutator_product_state(4, {{1, 3}, {2, 4}}, {1, 2});
  expected += commutator_product_state(4, {{1, 3}, {2, 4}}, {2, 1});
  EXPECT_EQ(x1324.raw, expected);
  EXPECT_EQ(x1324.norm_squared, 8);
  EXPECT_TRUE(inner_product(x1324, x1324).equals(1));
}

TEST(BasisState, SupportSizeAndCoefficients) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& x : enumerate_all(n)) {
      const auto s = basis_state(x);
      const int m = x.level();
      ASSERT_EQ(BigInt(s.raw.terms().size()), factorial(m) * (BigInt(1) << m));
      EXPECT_EQ(s.norm_squared, Rational(factorial(m) * (BigInt(1) << m)));
      for (const auto& [w, c] : s.raw.terms()) {
        // Normalized coefficient squared is 1 / (m! 2^m).
        EXPECT_EQ(c * c / s.norm_squared, 1 / s.norm_squared);
        EXPECT_EQ(w.indices.size(), static_cast<std::size_t>(2 * m));
      }
    }
  }
}

TEST(BasisState, GramIsIdentity) {
  for (int n = 1; n <= 6; ++n) EXPECT_TRUE(is_identity(fock_gram_matrix(n))) << "n = " << n;
}

TEST(ActOnState, Examples) {
  const auto b12 = basis_state(Involution(4, {{1, 2}}));
  EXPECT_EQ(act_on_state(Permutation::identity(4), b12), b12);
  EXPECT_EQ(act_on_state(Permutation({2, 1, 3, 4}), b12).raw, Rational(-1) * b12.raw);
  EXPECT_EQ(act_on_state(Permutation({1, 3, 2, 4}), b12), basis_state(Involution(4, {{1, 3}})));
  EXPECT_THROW(act_on_state(Permutation::identity(3), b12.raw), std::invalid_argument);
}

TEST(ActOnState, EquivariantWithInvolutionAction) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& pi : adjacent_transpositions(n)) {
      for (const auto& x : enumerate_all(n)) {
        const auto expected = act(pi, x);
        const auto moved = act_on_state(pi, basis_state(x));
        const auto target = basis_state(expected.element);
        EXPECT_EQ(moved.norm_squared, target.norm_squared);
        EXPECT_EQ(moved.raw, Rational(expected.sign) * target.raw) << x.str();
      }
    }
  }
}

TEST(ActOnState, IsLinearAndPreservesInnerProducts) {
  std::mt19937_64 rng(8);
  const auto basis = enumerate_all(5);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto pi = Permutation::random(5, rng);
    const auto a = basis_state(basis[pick(rng)]).raw;
    const auto b = basis_state(basis[pick(rng)]).raw;
    auto sum = a;
    sum += Rational(2) * b;
    auto moved_sum = act_on_state(pi, a);
    moved_sum += Rational(2) * act_on_state(pi, b);
    EXPECT_EQ(act_on_state(pi, sum), moved_sum);
    EXPECT_EQ(state_inner_product(act_on_state(pi, a), act_on_state(pi, b)), state_inner_product(a, b));
  }
}

TEST(FockState, Rendering) {
  EXPECT_EQ(word({1, 2}).str(), "a+(1) a+(2) |0>");
  EXPECT_EQ(FockWord{}.str(), "|0>");
  EXPECT_EQ(commutator_product_state(2, {{1, 2}}, {1}).str(), "a+(1) a+(2) |0> - a+(2) a+(1) |0>");
}
