#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "schwinger/partitions.hpp"

namespace schwinger {

/// A bijection of {1..n} in one-line notation: images()[i-1] = pi(i).
///
/// Composition follows function notation: (pi * sigma)(i) = pi(sigma(i)),
/// i.e. sigma acts first.
class Permutation {
 public:
  /// Throws std::invalid_argument unless `images` is a permutation of 1..n.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// The transposition swapping a and b (1-based).
  static Permutation transposition(int n, int a, int b);
  /// Cycle notation; cycles must be disjoint and within 1..n.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  /// The consecutive-block representative (1..mu1)(mu1+1..mu1+mu2)... of cycle type mu.
  static Permutation canonical_representative(const Partition& mu);
  /// Uniformly random permutation of degree n.
  static Permutation random(int n, std::mt19937_64& rng);

  [[nodiscard]] int degree() const { return static_cast<int>(images_.size()); }
  [[nodiscard]] int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  [[nodiscard]] const std::vector<int>& images() const { return images_; }

  [[nodiscard]] Permutation inverse() const;
  [[nodiscard]] Partition cycle_type() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// pi * sigma, sigma applied first. Throws std::invalid_argument on degree mismatch.
Permutation operator*(const Permutation& pi, const Permutation& sigma);

/// Adjacent transpositions (1 2), (2 3), ..., (n-1 n).
std::vector<Permutation> adjacent_transpositions(int n);

/// A product of m disjoint transpositions in standard form:
/// a_k < b_k within each pair, a_1 < a_2 < ... < a_m, all 2m entries distinct.
/// m = 0 is the identity.
class Involution {
 public:
  using Pair = std::pair<int, int>;

  Involution() = default;
  /// Throws std::invalid_argument if the pairs are not in standard form for degree n.
  Involution(int n, std::vector<Pair> pairs);

  static Involution identity(int n) { return Involution(n, {}); }

  [[nodiscard]] int degree() const { return n_; }
  [[nodiscard]] int level() const { return static_cast<int>(pairs_.size()); }
  [[nodiscard]] const std::vector<Pair>& pairs() const { return pairs_; }

  /// The involution as a group element.
  [[nodiscard]] Permutation as_permutation() const;

  /// `(1 2)(3 4)`; the identity renders as `e`.
  [[nodiscard]] std::string str() const;

  bool operator==(const Involution&) const = default;
  auto operator<=>(const Involution&) const = default;

 private:
  int n_ = 0;
  std::vector<Pair> pairs_;
};

/// Whether `pairs` satisfy the standard-form constraints for degree n.
bool is_standard_form(int n, const std::vector<Involution::Pair>& pairs);

struct SignedInvolution {
  Involution element;
  int sign = 1;

  bool operator==(const SignedInvolution&) const = default;
};

/// X_m: all standard-form involutions of degree n with exactly m pairs,
/// in lexicographic order of the flattened pair sequence.
/// Count is n! / (2^m m! (n-2m)!). Throws std::invalid_argument for m out of range.
std::vector<Involution> enumerate_level(int n, int m);

/// X = X_0 u X_1 u ... u X_{n/2}, concatenated by level.
std::vector<Involution> enumerate_all(int n);

/// |X_m| without enumerating.
BigInt level_size(int n, int m);

/// Apply pi entrywise, count within-pair descents for the sign, then swap
/// descended pairs and sort pairs by first entry (reordering carries no sign).
SignedInvolution act(const Permutation& pi, const Involution& x);

/// Position of x within enumerate_level(x.degree(), x.level()).
std::size_t involution_index(const Involution& x);

/// Inverse of involution_index.
Involution involution_at(int n, int m, std::size_t index);

}  // namespace schwinger
