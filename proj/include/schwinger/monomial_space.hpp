#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schwinger/exact.hpp"
#include "schwinger/involutions.hpp"

namespace schwinger {

/// Product xi_{j1 k1} xi_{j2 k2} ... xi_{jr kr} of antisymmetric variables
/// (xi_{jk} = -xi_{kj}), in the same standard form as an involution:
/// all indices distinct, j_i < k_i, j_1 < j_2 < ... < j_r.
class Monomial {
 public:
  using Factor = std::pair<int, int>;

  Monomial() = default;
  /// Throws std::invalid_argument unless the factors are in standard form.
  Monomial(int n, std::vector<Factor> factors);
  explicit Monomial(const Involution& x) : Monomial(x.degree(), x.pairs()) {}

  static Monomial constant(int n) { return Monomial(n, {}); }

  [[nodiscard]] int degree() const { return n_; }
  [[nodiscard]] int order() const { return static_cast<int>(factors_.size()); }
  [[nodiscard]] const std::vector<Factor>& factors() const { return factors_; }

  [[nodiscard]] Involution to_involution() const { return Involution(n_, factors_); }

  /// `x12*x34`; the constant monomial renders as `1`.
  [[nodiscard]] std::string str() const;

  bool operator==(const Monomial&) const = default;
  auto operator<=>(const Monomial&) const = default;

 private:
  int n_ = 0;
  std::vector<Factor> factors_;
};

/// Finite real-rational linear combination of monomials; zero terms are never stored.
class MonomialCombination {
 public:
  explicit MonomialCombination(int n) : n_(n) {}
  MonomialCombination(const Monomial& m, Rational coefficient = 1);

  [[nodiscard]] int degree() const { return n_; }
  [[nodiscard]] const std::map<Monomial, Rational>& terms() const { return terms_; }

  /// Adds c * m; throws std::invalid_argument on degree mismatch.
  void add(const Monomial& m, const Rational& c);

  MonomialCombination& operator+=(const MonomialCombination& other);
  friend MonomialCombination operator*(const Rational& c, const MonomialCombination& f);

  [[nodiscard]] std::string str() const;

  bool operator==(const MonomialCombination&) const = default;

 private:
  int n_ = 0;
  std::map<Monomial, Rational> terms_;
};

/// Complex combination f = re + i*im with rational real and imaginary parts.
struct ComplexCombination {
  MonomialCombination re;
  MonomialCombination im;
};

struct ComplexRational {
  Rational re{0};
  Rational im{0};

  bool operator==(const ComplexRational&) const = default;
};

/// Normalized Gaussian moment <xi^e> under weight e^{-xi^2}/sqrt(pi):
/// 0 for odd e, (e-1)!!/2^{e/2} for even e (so 1, 0, 1/2 for e = 0, 1, 2).
Rational gaussian_moment(int exponent);

/// <M1, M2> as a product of per-variable moments over the merged exponents.
/// Throws std::invalid_argument on degree mismatch.
Rational inner_product(const Monomial& a, const Monomial& b);

/// Bilinear extension of the monomial rule.
Rational inner_product(const MonomialCombination& f1, const MonomialCombination& f2);

/// Sesquilinear in the first argument.
ComplexRational inner_product(const ComplexCombination& f1, const ComplexCombination& f2);

/// Relabel xi_{jk} -> xi_{pi(j) pi(k)}, flip to j < k using antisymmetry
/// (one sign per flip), then sort factors by first index.
std::pair<Monomial, int> act_on_monomial(const Permutation& pi, const Monomial& m);

MonomialCombination act_on_combination(const Permutation& pi, const MonomialCombination& f);

/// Basis element sqrt(scale_squared) * monomial; scale_squared = 2^r.
struct NormalizedMonomial {
  Monomial monomial;
  Rational scale_squared{1};
};

/// One normalized monomial 2^{r/2} M_r per involution of degree n, in enumerate_all order.
std::vector<NormalizedMonomial> normalized_basis(int n);

/// Exact Gram matrix of a normalized basis: entry (i, j) is
/// sqrt(s_i s_j) <M_i, M_j> carried as a RadicalValue.
std::vector<std::vector<RadicalValue>> gram_matrix(const std::vector<NormalizedMonomial>& basis);

}  // namespace schwinger
