#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "schwinger/exact.hpp"

namespace schwinger {

/// Hard cap on n for enumeration; anything larger is rejected instead of
/// running into factorial blowup.
inline constexpr int kDefaultMaxDegree = 30;

/// An integer partition, parts stored weakly decreasing with no zeros.
///
/// Labels both conjugacy classes (cycle types) and irreducible
/// representations of S_n.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless `parts` is nonincreasing and positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// The one-row partition (n).
  static Partition row(int n);
  /// The one-column partition (1^n).
  static Partition column(int n);

  [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
  [[nodiscard]] int size() const { return size_; }
  [[nodiscard]] std::size_t length() const { return parts_.size(); }
  [[nodiscard]] int operator[](std::size_t i) const { return parts_[i]; }
  [[nodiscard]] bool empty() const { return parts_.empty(); }

  /// Multiplicity of part `k`.
  [[nodiscard]] int multiplicity(int k) const;

  /// "(3,1,1)" style; the empty partition renders as "()".
  [[nodiscard]] std::string str() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Canonical order: descending lexicographic on parts, so (4) < (3,1) < (2,2)
/// when used as a sort key. Partitions of different size compare by size first.
struct CanonicalOrder {
  bool operator()(const Partition& a, const Partition& b) const;
};

/// All partitions of n in canonical (descending lexicographic) order.
/// Throws std::invalid_argument for n < 1 or n > max_degree.
std::vector<Partition> enumerate_partitions(int n, int max_degree = kDefaultMaxDegree);

/// Transpose of the Young diagram.
Partition conjugate(const Partition& lambda);

/// Dimension of the irreducible labelled by lambda, via the hook length formula.
BigInt dimension(const Partition& lambda);

/// Size of the conjugacy class of cycle type mu: n! / z_mu.
BigInt class_size(const Partition& mu);

/// z_mu = prod_k k^{m_k} m_k!, the centralizer order.
BigInt centralizer_order(const Partition& mu);

int odd_part_count(const Partition& lambda);

/// Irreducible character chi_lambda on the class of cycle type mu,
/// by the Murnaghan-Nakayama border-strip recursion.
/// Throws std::invalid_argument if the sizes differ.
BigInt mn_character(const Partition& lambda, const Partition& mu);

/// Character values of one representation, keyed by class in canonical order.
struct CharacterVector {
  int n = 0;
  std::map<Partition, BigInt, CanonicalOrder> values;

  [[nodiscard]] const BigInt& at(const Partition& mu) const;
};

}  // namespace schwinger
