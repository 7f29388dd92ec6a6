#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "schwinger/level_table.hpp"
#include "schwinger/representation.hpp"

using namespace schwinger;

TEST(SignedPermutationMatrix, ProductTransposeTrace) {
  const SignedPermutationMatrix a{{1, 0, 2}, {1, -1, 1}};
  const SignedPermutationMatrix b{{2, 1, 0}, {-1, 1, 1}};
  const auto ab = a * b;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      int dense = 0;
      for (std::size_t k = 0; k < 3; ++k) dense += a.entry(i, k) * b.entry(k, j);
      EXPECT_EQ(ab.entry(i, j), dense);
      EXPECT_EQ(a.transpose().entry(i, j), a.entry(j, i));
    }
  }
  EXPECT_EQ(a * a.transpose(), SignedPermutationMatrix::identity(3));
  EXPECT_EQ(a.trace(), 1);
}

TEST(RepMatrix, IdentityPermutation) {
  for (int n = 1; n <= 6; ++n) {
    for (int m = 0; 2 * m <= n; ++m) {
      EXPECT_EQ(rep_matrix(Permutation::identity(n), n, m),
                SignedPermutationMatrix::identity(enumerate_level(n, m).size()));
    }
  }
}

TEST(RepMatrix, TranspositionOnFourPointsLevelOne) {
  const auto rho = rep_matrix(Permutation::transposition(4, 1, 2), 4, 1);
  // basis: (1 2) (1 3) (1 4) (2 3) (2 4) (3 4)
  EXPECT_EQ(rho.entry(0, 0), -1);
  EXPECT_EQ(rho.entry(5, 5), 1);
  EXPECT_EQ(rho.entry(3, 1), 1);  // (1 3) -> (2 3)
}

TEST(RepMatrix, TranspositionOnFourPointsLevelTwo) {
  // (1 2)(3 4) -> (2 1)(3 4): one descent. (1 3)(2 4) -> (2 3)(1 4) and
  // (1 4)(2 3) -> (2 4)(1 3): no descents, the two swap.
  const auto rho = rep_matrix(Permutation::transposition(4, 1, 2), 4, 2);
  EXPECT_EQ(rho, (SignedPermutationMatrix{{0, 2, 1}, {-1, 1, 1}}));

  const auto basis = enumerate_level(4, 2);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto expected = oracle::apply({2, 1, 3, 4}, basis[j].pairs());
    EXPECT_EQ(basis[rho.image[j]].pairs(), expected.pairs);
    EXPECT_EQ(rho.sign[j], expected.sign);
  }
}

TEST(RepMatrix, RejectsDegreeMismatch) {
  EXPECT_THROW(rep_matrix(Permutation::identity(3), 4, 1), std::invalid_argument);
  EXPECT_THROW(rep_matrix(Permutation::identity(4), 4, 3), std::invalid_argument);
}

TEST(RepMatrix, Homomorphism) {
  std::mt19937_64 rng(0);
  for (int n = 1; n <= 6; ++n) {
    for (int m = 0; 2 * m <= n; ++m) {
      for (int trial = 0; trial < 200; ++trial) {
        const auto pi = Permutation::random(n, rng);
        const auto sigma = Permutation::random(n, rng);
        ASSERT_EQ(rep_matrix(pi * sigma, n, m), rep_matrix(pi, n, m) * rep_matrix(sigma, n, m));
      }
    }
  }
}

TEST(RepMatrix, InverseIsTranspose) {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 6; ++n) {
    for (int m = 0; 2 * m <= n; ++m) {
      for (int trial = 0; trial < 20; ++trial) {
        const auto pi = Permutation::random(n, rng);
        EXPECT_EQ(rep_matrix(pi.inverse(), n, m), rep_matrix(pi, n, m).transpose());
      }
    }
  }
}

TEST(RepCharacter, Examples) {
  const auto level_one = rep_character(4, 1);
  EXPECT_EQ(level_one.at(Partition::column(4)), 6);
  EXPECT_EQ(level_one.at(Partition{2, 1, 1}), 0);
  for (const auto& [mu, value] : rep_character(4, 0).values) EXPECT_EQ(value, 1);
}

TEST(RepCharacter, MatchesBruteForceTrace) {
  for (int n = 1; n <= 7; ++n) {
    for (int m = 0; 2 * m <= n; ++m) {
      const auto chi = rep_character(n, m);
      for (const auto& mu : enumerate_partitions(n)) {
        const auto rep = Permutation::canonical_representative(mu);
        EXPECT_EQ(chi.at(mu), oracle::signed_trace_bruteforce(rep.images(), m)) << n << " " << m << " " << mu.str();
      }
    }
  }
}

TEST(RepCharacter, ClassFunction) {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 6; ++n) {
    for (int m = 0; 2 * m <= n; ++m) {
      const auto chi = rep_character(n, m);
      for (const auto& mu : enumerate_partitions(n)) {
        const auto base = Permutation::canonical_representative(mu);
        for (int trial = 0; trial < 2; ++trial) {
          const auto g = Permutation::random(n, rng);
          const auto conjugated = g * base * g.inverse();
          EXPECT_EQ(signed_trace(conjugated, n, m), chi.at(mu));
          EXPECT_EQ(BigInt(rep_matrix(conjugated, n, m).trace()), chi.at(mu));
        }
      }
    }
  }
}

TEST(RepCharacter, DimensionsAddUp) {
  for (int n = 1; n <= 9; ++n) {
    BigInt at_identity = 0;
    for (int m = 0; 2 * m <= n; ++m) at_identity += rep_character(n, m).at(Partition::column(n));
    BigInt dims = 0;
    for (const auto& lambda : enumerate_partitions(n)) dims += dimension(lambda);
    EXPECT_EQ(at_identity, dims);
  }
}

TEST(Decompose, Examples) {
  const auto one = decompose(4, 1);
  EXPECT_EQ(one.support(), (std::vector<Partition>{{3, 1}, {2, 1, 1}}));
  EXPECT_EQ(decompose(4, 0).support(), (std::vector<Partition>{{4}}));
  EXPECT_EQ(decompose(4, 2).support(), (std::vector<Partition>{{2, 2}, {1, 1, 1, 1}}));
  for (const auto& [lambda, mult] : one.multiplicities) EXPECT_EQ(mult, 1);
  EXPECT_TRUE(one.multiplicity_free);
  EXPECT_TRUE(one.disjoint_from_lower_levels);
}

TEST(Decompose, DimensionsSumToLevelSize) {
  for (int n = 1; n <= 8; ++n) {
    for (int m = 0; 2 * m <= n; ++m) {
      const auto r = decompose(n, m);
      BigInt total = 0;
      for (const auto& [lambda, mult] : r.multiplicities) total += mult * dimension(lambda);
      EXPECT_EQ(total, level_size(n, m));
    }
  }
}

TEST(Decompose, SupportEqualsClosedForm) {
  for (int n = 1; n <= 8; ++n) {
    for (int m = 0; 2 * m <= n; ++m) EXPECT_EQ(decompose(n, m).support(), level_content_closed_form(n, m));
  }
}

TEST(Decompose, NonIntegralInnerProductRaises) {
  // A "character" that is 1 on the identity and 0 elsewhere has inner
  // product dim(lambda)/n! with chi_lambda, which is never integral for n = 3.
  CharacterVector bogus;
  bogus.n = 3;
  for (const auto& mu : enumerate_partitions(3)) bogus.values.emplace(mu, mu == Partition::column(3) ? 1 : 0);
  EXPECT_THROW(multiplicities(bogus, character_table(3)), NonIntegralMultiplicity);
}

TEST(Decompose, JsonSchemaAndRoundTrip) {
  const auto r = decompose(4, 1);
  const nlohmann::json j = r;
  EXPECT_EQ(j.at("n"), 4);
  EXPECT_EQ(j.at("m"), 1);
  EXPECT_EQ(j.at("multiplicities")[0].at("partition"), (std::vector<int>{3, 1}));
  EXPECT_EQ(j.at("multiplicities")[0].at("mult"), 1);
  EXPECT_EQ(j.at("multiplicity_free"), true);
  EXPECT_EQ(j.at("disjoint"), true);
  EXPECT_EQ(j.get<DecompositionReport>(), r);
}

TEST(VerifyModel, Examples) {
  const auto four = verify_model(4);
  EXPECT_TRUE(four.passed());
  EXPECT_EQ(four.levels.size(), 3u);
  EXPECT_EQ(four.basis_size, 10);
  std::size_t irreps = 0;
  for (const auto& l : four.levels) irreps += l.multiplicities.size();
  EXPECT_EQ(irreps, 5u);

  EXPECT_TRUE(verify_model(1).passed());
  const auto seven = verify_model(7);
  EXPECT_TRUE(seven.passed());
  EXPECT_EQ(seven.dimension_sum, 232);
  EXPECT_TRUE(seven.counterexamples.empty());
}

TEST(VerifyModel, JsonRoundTrip) {
  const auto r = verify_model(5);
  EXPECT_EQ(nlohmann::json(r).get<ModelReport>(), r);
}
