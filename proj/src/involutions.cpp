#include "schwinger/involutions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace schwinger {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > degree() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("images do not form a permutation of 1.." + std::to_string(degree()));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int a, int b) { return from_cycles(n, {{a, b}}); }

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int from = cycle[k];
      if (from < 1 || from > n) throw std::invalid_argument("cycle entry out of range");
      images[static_cast<std::size_t>(from - 1)] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));  // validates disjointness
}

Permutation Permutation::canonical_representative(const Partition& mu) {
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int len : mu.parts()) {
    std::vector<int> cycle(static_cast<std::size_t>(len));
    std::iota(cycle.begin(), cycle.end(), next);
    next += len;
    cycles.push_back(std::move(cycle));
  }
  return from_cycles(mu.size(), cycles);
}

Permutation Permutation::random(int n, std::mt19937_64& rng) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  for (std::size_t i = images.size(); i > 1; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    std::swap(images[i - 1], images[pick(rng)]);
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= degree(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(inv));
}

Partition Permutation::cycle_type() const {
  std::vector<bool> visited(images_.size(), false);
  std::vector<int> lengths;
  for (int start = 1; start <= degree(); ++start) {
    if (visited[static_cast<std::size_t>(start - 1)]) continue;
    int len = 0;
    for (int i = start; !visited[static_cast<std::size_t>(i - 1)]; i = (*this)(i)) {
      visited[static_cast<std::size_t>(i - 1)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return Partition(std::move(lengths));
}

Permutation operator*(const Permutation& pi, const Permutation& sigma) {
  if (pi.degree() != sigma.degree()) throw std::invalid_argument("composing permutations of different degree");
  std::vector<int> images(static_cast<std::size_t>(pi.degree()));
  for (int i = 1; i <= pi.degree(); ++i) images[static_cast<std::size_t>(i - 1)] = pi(sigma(i));
  return Permutation(std::move(images));
}

std::vector<Permutation> adjacent_transpositions(int n) {
  std::vector<Permutation> gens;
  for (int i = 1; i < n; ++i) gens.push_back(Permutation::transposition(n, i, i + 1));
  return gens;
}

bool is_standard_form(int n, const std::vector<Involution::Pair>& pairs) {
  if (n < 1 || 2 * pairs.size() > static_cast<std::size_t>(n)) return false;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [a, b] = pairs[k];
    if (a < 1 || b > n || a >= b) return false;
    if (k > 0 && pairs[k - 1].first >= a) return false;
    if (used[static_cast<std::size_t>(a)] || used[static_cast<std::size_t>(b)]) return false;
    used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = true;
  }
  return true;
}

Involution::Involution(int n, std::vector<Pair> pairs) : n_(n), pairs_(std::move(pairs)) {
  if (!is_standard_form(n_, pairs_)) {
    throw std::invalid_argument("pairs are not a standard-form involution of degree " + std::to_string(n));
  }
}

Permutation Involution::as_permutation() const {
  std::vector<std::vector<int>> cycles;
  for (auto [a, b] : pairs_) cycles.push_back({a, b});
  return Permutation::from_cycles(n_, cycles);
}

std::string Involution::str() const {
  if (pairs_.empty()) return "e";
  std::string out;
  for (auto [a, b] : pairs_) out += "(" + std::to_string(a) + " " + std::to_string(b) + ")";
  return out;
}

namespace {

void check_level(int n, int m) {
  if (n < 1) throw std::invalid_argument("degree must be at least 1");
  if (m < 0 || 2 * m > n) {
    throw std::invalid_argument("level m = " + std::to_string(m) + " out of range 0.." + std::to_string(n / 2) +
                                " for n = " + std::to_string(n));
  }
}

// Number of standard-form involutions with j pairs drawn from s free points:
// C(s, 2j) * (2j - 1)!!.
std::size_t matchings(int s, int j) {
  if (j < 0 || 2 * j > s) return 0;
  BigInt count = factorial(s) / (factorial(s - 2 * j) * factorial(j));
  for (int k = 0; k < j; ++k) count /= 2;
  return static_cast<std::size_t>(to_int64(count));
}

// Points of `free` that remain available after choosing the pair (a, b):
// only points above a, since a is the smallest point in the support.
std::vector<int> remaining_after(const std::vector<int>& free, int a, int b) {
  std::vector<int> rest;
  for (int p : free) {
    if (p > a && p != b) rest.push_back(p);
  }
  return rest;
}

}  // namespace

BigInt level_size(int n, int m) {
  check_level(n, m);
  BigInt count = factorial(n) / (factorial(m) * factorial(n - 2 * m));
  for (int k = 0; k < m; ++k) count /= 2;
  return count;
}

std::vector<Involution> enumerate_level(int n, int m) {
  check_level(n, m);
  std::vector<Involution> out;
  std::vector<Involution::Pair> current;
  std::function<void(const std::vector<int>&, int)> extend = [&](const std::vector<int>& free, int left) {
    if (left == 0) {
      out.emplace_back(n, current);
      return;
    }
    for (std::size_t i = 0; i < free.size(); ++i) {
      for (std::size_t k = i + 1; k < free.size(); ++k) {
        auto rest = remaining_after(free, free[i], free[k]);
        if (static_cast<int>(rest.size()) < 2 * (left - 1)) continue;
        current.emplace_back(free[i], free[k]);
        extend(rest, left - 1);
        current.pop_back();
      }
    }
  };
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  extend(all, m);
  return out;
}

std::vector<Involution> enumerate_all(int n) {
  if (n < 1) throw std::invalid_argument("degree must be at least 1");
  std::vector<Involution> out;
  for (int m = 0; 2 * m <= n; ++m) {
    auto level = enumerate_level(n, m);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

SignedInvolution act(const Permutation& pi, const Involution& x) {
  if (pi.degree() != x.degree()) throw std::invalid_argument("act: permutation and involution degrees differ");
  std::vector<Involution::Pair> moved;
  moved.reserve(x.pairs().size());
  int sign = 1;
  for (auto [a, b] : x.pairs()) {
    int pa = pi(a);
    int pb = pi(b);
    if (pa > pb) {
      sign = -sign;
      std::swap(pa, pb);
    }
    moved.emplace_back(pa, pb);
  }
  std::sort(moved.begin(), moved.end());
  return {Involution(x.degree(), std::move(moved)), sign};
}

std::size_t involution_index(const Involution& x) {
  const int n = x.degree();
  std::vector<int> free(static_cast<std::size_t>(n));
  std::iota(free.begin(), free.end(), 1);
  int left = x.level();
  std::size_t rank = 0;
  for (auto [a, b] : x.pairs()) {
    // Count completions under every first pair lexicographically before (a, b).
    for (std::size_t i = 0; i < free.size() && free[i] <= a; ++i) {
      for (std::size_t k = i + 1; k < free.size(); ++k) {
        if (free[i] == a && free[k] >= b) break;
        const auto rest = remaining_after(free, free[i], free[k]);
        rank += matchings(static_cast<int>(rest.size()), left - 1);
      }
    }
    free = remaining_after(free, a, b);
    --left;
  }
  return rank;
}

Involution involution_at(int n, int m, std::size_t index) {
  check_level(n, m);
  std::vector<int> free(static_cast<std::size_t>(n));
  std::iota(free.begin(), free.end(), 1);
  std::vector<Involution::Pair> pairs;
  for (int left = m; left > 0; --left) {
    bool placed = false;
    for (std::size_t i = 0; i < free.size() && !placed; ++i) {
      for (std::size_t k = i + 1; k < free.size() && !placed; ++k) {
        auto rest = remaining_after(free, free[i], free[k]);
        const std::size_t block = matchings(static_cast<int>(rest.size()), left - 1);
        if (index < block) {
          pairs.emplace_back(free[i], free[k]);
          free = std::move(rest);
          placed = true;
        } else {
          index -= block;
        }
      }
    }
    if (!placed) throw std::out_of_range("involution_at: index exceeds |X_m|");
  }
  if (index != 0) throw std::out_of_range("involution_at: index exceeds |X_m|");
  return Involution(n, std::move(pairs));
}

}  // namespace schwinger
