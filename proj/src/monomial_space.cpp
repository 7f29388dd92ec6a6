#include "schwinger/monomial_space.hpp"

#include <algorithm>
#include <stdexcept>

namespace schwinger {

Monomial::Monomial(int n, std::vector<Factor> factors) : n_(n), factors_(std::move(factors)) {
  if (!is_standard_form(n_, factors_)) {
    throw std::invalid_argument("factors are not a standard-form monomial of degree " + std::to_string(n));
  }
}

std::string Monomial::str() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [j, k] : factors_) {
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(j) + std::to_string(k);
  }
  return out;
}

MonomialCombination::MonomialCombination(const Monomial& m, Rational coefficient) : n_(m.degree()) {
  add(m, coefficient);
}

void MonomialCombination::add(const Monomial& m, const Rational& c) {
  if (m.degree() != n_) throw std::invalid_argument("monomial degree differs from combination degree");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MonomialCombination& MonomialCombination::operator+=(const MonomialCombination& other) {
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

MonomialCombination operator*(const Rational& c, const MonomialCombination& f) {
  MonomialCombination out(f.n_);
  for (const auto& [m, coeff] : f.terms_) out.add(m, c * coeff);
  return out;
}

std::string MonomialCombination::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const Rational magnitude = c < 0 ? Rational(-c) : c;
    if (magnitude != 1) out += to_string(magnitude) + "*";
    out += m.str();
  }
  return out;
}

Rational gaussian_moment(int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  if (exponent % 2 != 0) return 0;
  Rational moment = 1;
  for (int k = exponent - 1; k > 0; k -= 2) moment *= k;
  for (int k = 0; k < exponent / 2; ++k) moment /= 2;
  return moment;
}

Rational inner_product(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("inner_product: monomial degrees differ");
  // Both factor lists use j < k, so each variable has one canonical key.
  std::map<Monomial::Factor, int> exponents;
  for (const auto& f : a.factors()) ++exponents[f];
  for (const auto& f : b.factors()) ++exponents[f];
  Rational product = 1;
  for (const auto& [variable, e] : exponents) {
    product *= gaussian_moment(e);
    if (product == 0) break;
  }
  return product;
}

Rational inner_product(const MonomialCombination& f1, const MonomialCombination& f2) {
  if (f1.degree() != f2.degree()) throw std::invalid_argument("inner_product: combination degrees differ");
  Rational total = 0;
  for (const auto& [m1, c1] : f1.terms()) {
    for (const auto& [m2, c2] : f2.terms()) {
      const Rational overlap = inner_product(m1, m2);
      if (overlap != 0) total += c1 * c2 * overlap;
    }
  }
  return total;
}

ComplexRational inner_product(const ComplexCombination& f1, const ComplexCombination& f2) {
  // conj(a + ib)(c + id) = (ac + bd) + i(ad - bc)
  return {inner_product(f1.re, f2.re) + inner_product(f1.im, f2.im),
          inner_product(f1.re, f2.im) - inner_product(f1.im, f2.re)};
}

std::pair<Monomial, int> act_on_monomial(const Permutation& pi, const Monomial& m) {
  if (pi.degree() != m.degree()) throw std::invalid_argument("act_on_monomial: degrees differ");
  std::vector<Monomial::Factor> relabelled;
  int sign = 1;
  for (const auto& [j, k] : m.factors()) {
    const int pj = pi(j);
    const int pk = pi(k);
    if (pj < pk) {
      relabelled.emplace_back(pj, pk);
    } else {
      relabelled.emplace_back(pk, pj);  // xi_{ab} = -xi_{ba}
      sign = -sign;
    }
  }
  // Variables commute, so reordering factors is free.
  std::sort(relabelled.begin(), relabelled.end());
  return {Monomial(m.degree(), std::move(relabelled)), sign};
}

MonomialCombination act_on_combination(const Permutation& pi, const MonomialCombination& f) {
  MonomialCombination out(f.degree());
  for (const auto& [m, c] : f.terms()) {
    auto [image, sign] = act_on_monomial(pi, m);
    out.add(image, sign * c);
  }
  return out;
}

std::vector<NormalizedMonomial> normalized_basis(int n) {
  std::vector<NormalizedMonomial> basis;
  for (const auto& x : enumerate_all(n)) {
    Rational scale_squared = 1;
    for (int k = 0; k < x.level(); ++k) scale_squared *= 2;
    basis.push_back({Monomial(x), scale_squared});
  }
  return basis;
}

std::vector<std::vector<RadicalValue>> gram_matrix(const std::vector<NormalizedMonomial>& basis) {
  std::vector<std::vector<RadicalValue>> gram(basis.size(), std::vector<RadicalValue>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      gram[i][j] = RadicalValue{inner_product(basis[i].monomial, basis[j].monomial),
                                basis[i].scale_squared * basis[j].scale_squared};
    }
  }
  return gram;
}

}  // namespace schwinger
