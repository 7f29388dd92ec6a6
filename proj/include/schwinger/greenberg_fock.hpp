#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "schwinger/exact.hpp"
#include "schwinger/involutions.hpp"

namespace schwinger {

/// a†(i_1) a†(i_2) ... a†(i_k)|0>, stored as [i_1, ..., i_k]; the operator
/// nearest the vacuum is last. The empty word is the vacuum itself.
struct FockWord {
  std::vector<int> indices;

  [[nodiscard]] bool is_vacuum() const { return indices.empty(); }
  /// `a+(1) a+(2) |0>`; the vacuum renders as `|0>`.
  [[nodiscard]] std::string str() const;

  bool operator==(const FockWord&) const = default;
  auto operator<=>(const FockWord&) const = default;
};

/// A single Greenberg ladder operator: a(i) or a†(i).
struct LadderOp {
  enum class Kind { Annihilate, Create };
  Kind kind;
  int index;
};

/// <0| ops |0> for an operator string written left to right, reduced using
/// only a(i) a†(j) = delta_ij and a(i)|0> = 0. No other reordering relation
/// exists in this algebra.
int vacuum_expectation(std::span<const LadderOp> ops);

/// Normative inner product: builds <0| a(i_k)...a(i_1) a†(j_1)...a†(j_l) |0>
/// and reduces it with vacuum_expectation.
int word_inner_product_by_reduction(const FockWord& w1, const FockWord& w2);

/// Fast path: 1 iff the words are identical sequences.
int word_inner_product(const FockWord& w1, const FockWord& w2);

/// Finite rational combination of Fock words; zero terms are never stored.
class FockState {
 public:
  explicit FockState(int n) : n_(n) {}
  FockState(int n, const FockWord& w, Rational coefficient = 1);

  static FockState vacuum(int n) { return FockState(n, FockWord{}); }

  [[nodiscard]] int degree() const { return n_; }
  [[nodiscard]] const std::map<FockWord, Rational>& terms() const { return terms_; }

  /// Throws std::invalid_argument for indices outside 1..n.
  void add(const FockWord& w, const Rational& c);

  FockState& operator+=(const FockState& other);
  friend FockState operator*(const Rational& c, const FockState& s);

  [[nodiscard]] std::string str() const;

  bool operator==(const FockState&) const = default;

 private:
  int n_ = 0;
  std::map<FockWord, Rational> terms_;
};

/// Sum over words of c1 * c2 (coefficients are real, conjugation is trivial).
/// Throws std::invalid_argument on degree mismatch.
Rational state_inner_product(const FockState& s1, const FockState& s2);

/// [a†(a_1), a†(b_1)] [a†(a_2), a†(b_2)] ... |0> with the factors taken in
/// the given order (a permutation of 1..m, 1-based). Expands to 2^m words
/// with +-1 coefficients. Throws std::invalid_argument on overlapping pairs.
FockState commutator_product_state(int n, const std::vector<Involution::Pair>& pairs,
                                   const std::vector<int>& ordering);

/// State = raw / sqrt(norm_squared). Normalizations like 1/sqrt(8) stay exact.
struct NormalizedFockState {
  FockState raw;
  Rational norm_squared{1};

  [[nodiscard]] std::string str() const;

  bool operator==(const NormalizedFockState&) const = default;
};

/// 1/sqrt(m! 2^m) times the sum of commutator_product_state over all m!
/// factor orderings; unit norm.
NormalizedFockState basis_state(const Involution& x);

/// Inner product of normalized states, exact as coefficient * sqrt(radicand).
RadicalValue inner_product(const NormalizedFockState& s1, const NormalizedFockState& s2);

/// Relabel every a†(i) to a†(pi(i)). Throws std::invalid_argument on degree mismatch.
FockState act_on_state(const Permutation& pi, const FockState& s);
NormalizedFockState act_on_state(const Permutation& pi, const NormalizedFockState& s);

/// Gram matrix of basis_state over enumerate_all(n).
std::vector<std::vector<RadicalValue>> fock_gram_matrix(int n);

}  // namespace schwinger
