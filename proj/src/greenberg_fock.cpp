#include "schwinger/greenberg_fock.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace schwinger {

std::string FockWord::str() const {
  std::string out;
  for (int i : indices) out += "a+(" + std::to_string(i) + ") ";
  return out + "|0>";
}

int vacuum_expectation(std::span<const LadderOp> ops) {
  // Ket built from the right; ket.back() is the leftmost creation operator.
  std::vector<int> ket;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    if (it->kind == LadderOp::Kind::Create) {
      ket.push_back(it->index);
      continue;
    }
    // a(i) a†(j) ... |0> = delta_ij ... |0>, and a(i)|0> = 0.
    if (ket.empty() || ket.back() != it->index) return 0;
    ket.pop_back();
  }
  return ket.empty() ? 1 : 0;
}

int word_inner_product_by_reduction(const FockWord& w1, const FockWord& w2) {
  std::vector<LadderOp> ops;
  ops.reserve(w1.indices.size() + w2.indices.size());
  // Adjoint of a†(u_1)...a†(u_k) is a(u_k)...a(u_1).
  for (auto it = w1.indices.rbegin(); it != w1.indices.rend(); ++it) {
    ops.push_back({LadderOp::Kind::Annihilate, *it});
  }
  for (int j : w2.indices) ops.push_back({LadderOp::Kind::Create, j});
  return vacuum_expectation(ops);
}

int word_inner_product(const FockWord& w1, const FockWord& w2) { return w1 == w2 ? 1 : 0; }

FockState::FockState(int n, const FockWord& w, Rational coefficient) : n_(n) { add(w, coefficient); }

void FockState::add(const FockWord& w, const Rational& c) {
  for (int i : w.indices) {
    if (i < 1 || i > n_) throw std::invalid_argument("Fock word index " + std::to_string(i) + " outside 1..n");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FockState& FockState::operator+=(const FockState& other) {
  if (other.n_ != n_) throw std::invalid_argument("adding Fock states of different degree");
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

FockState operator*(const Rational& c, const FockState& s) {
  FockState out(s.n_);
  for (const auto& [w, coeff] : s.terms_) out.add(w, c * coeff);
  return out;
}

std::string FockState::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const Rational magnitude = c < 0 ? Rational(-c) : c;
    if (magnitude != 1) out += to_string(magnitude) + " ";
    out += w.str();
  }
  return out;
}

Rational state_inner_product(const FockState& s1, const FockState& s2) {
  if (s1.degree() != s2.degree()) throw std::invalid_argument("state_inner_product: degrees differ");
  Rational total = 0;
  const auto& smaller = s1.terms().size() <= s2.terms().size() ? s1.terms() : s2.terms();
  const auto& larger = s1.terms().size() <= s2.terms().size() ? s2.terms() : s1.terms();
  for (const auto& [w, c] : smaller) {
    if (auto it = larger.find(w); it != larger.end()) total += c * it->second;
  }
  return total;
}

FockState commutator_product_state(int n, const std::vector<Involution::Pair>& pairs,
                                   const std::vector<int>& ordering) {
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (auto [a, b] : pairs) {
    for (int i : {a, b}) {
      if (i < 1 || i > n) throw std::invalid_argument("commutator index outside 1..n");
      if (used[static_cast<std::size_t>(i)]) throw std::invalid_argument("commutator pairs overlap");
      used[static_cast<std::size_t>(i)] = true;
    }
  }
  std::vector<int> expected(pairs.size());
  std::iota(expected.begin(), expected.end(), 1);
  if (!std::is_permutation(ordering.begin(), ordering.end(), expected.begin(), expected.end())) {
    throw std::invalid_argument("ordering is not a permutation of 1..m");
  }

  // Each factor contributes +a†(a)a†(b) or -a†(b)a†(a); bit k of `choice`
  // selects the swapped term for the k-th factor in product order.
  FockState out(n);
  const std::size_t m = pairs.size();
  for (std::size_t choice = 0; choice < (std::size_t{1} << m); ++choice) {
    FockWord word;
    int sign = 1;
    for (std::size_t k = 0; k < m; ++k) {
      auto [a, b] = pairs[static_cast<std::size_t>(ordering[k] - 1)];
      if ((choice >> k) & 1U) {
        std::swap(a, b);
        sign = -sign;
      }
      word.indices.push_back(a);
      word.indices.push_back(b);
    }
    out.add(word, sign);
  }
  return out;
}

std::string NormalizedFockState::str() const {
  return "[norm^2 " + to_string(norm_squared) + "]^(-1/2) * (" + raw.str() + ")";
}

NormalizedFockState basis_state(const Involution& x) {
  const int m = x.level();
  std::vector<int> ordering(static_cast<std::size_t>(m));
  std::iota(ordering.begin(), ordering.end(), 1);
  FockState sum(x.degree());
  do {
    sum += commutator_product_state(x.degree(), x.pairs(), ordering);
  } while (std::next_permutation(ordering.begin(), ordering.end()));
  Rational norm_squared{factorial(m)};
  for (int k = 0; k < m; ++k) norm_squared *= 2;
  return {std::move(sum), norm_squared};
}

RadicalValue inner_product(const NormalizedFockState& s1, const NormalizedFockState& s2) {
  return {state_inner_product(s1.raw, s2.raw), 1 / (s1.norm_squared * s2.norm_squared)};
}

FockState act_on_state(const Permutation& pi, const FockState& s) {
  if (pi.degree() != s.degree()) throw std::invalid_argument("act_on_state: degrees differ");
  FockState out(s.degree());
  for (const auto& [w, c] : s.terms()) {
    FockWord moved;
    moved.indices.reserve(w.indices.size());
    for (int i : w.indices) moved.indices.push_back(pi(i));
    out.add(moved, c);
  }
  return out;
}

NormalizedFockState act_on_state(const Permutation& pi, const NormalizedFockState& s) {
  return {act_on_state(pi, s.raw), s.norm_squared};
}

std::vector<std::vector<RadicalValue>> fock_gram_matrix(int n) {
  std::vector<NormalizedFockState> basis;
  for (const auto& x : enumerate_all(n)) basis.push_back(basis_state(x));
  std::vector<std::vector<RadicalValue>> gram(basis.size(), std::vector<RadicalValue>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) gram[i][j] = inner_product(basis[i], basis[j]);
  }
  return gram;
}

}  // namespace schwinger
