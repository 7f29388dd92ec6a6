#include "schwinger/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace schwinger {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be nonincreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::row(int n) { return n == 0 ? Partition{} : Partition(std::vector<int>{n}); }

Partition Partition::column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

std::string Partition::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

bool CanonicalOrder::operator()(const Partition& a, const Partition& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(b.parts().begin(), b.parts().end(), a.parts().begin(),
                                      a.parts().end());
}

std::vector<Partition> enumerate_partitions(int n, int max_degree) {
  if (n < 1) throw std::invalid_argument("enumerate_partitions: n must be at least 1");
  if (n > max_degree) {
    throw std::invalid_argument("enumerate_partitions: n = " + std::to_string(n) +
                                " exceeds the configured limit " + std::to_string(max_degree));
  }
  std::vector<Partition> out;
  std::vector<int> current;
  // Largest-first recursion yields descending lexicographic order directly.
  std::function<void(int, int)> extend = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      extend(remaining - part, part);
      current.pop_back();
    }
  };
  extend(n, n);
  return out;
}

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> parts(static_cast<std::size_t>(lambda[0]), 0);
  for (int row : lambda.parts()) {
    for (int j = 0; j < row; ++j) ++parts[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(parts));
}

BigInt dimension(const Partition& lambda) {
  const Partition transposed = conjugate(lambda);
  BigInt hooks = 1;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      hooks *= (lambda[i] - j - 1) + (transposed[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
    }
  }
  return factorial(lambda.size()) / hooks;
}

BigInt centralizer_order(const Partition& mu) {
  BigInt z = 1;
  const auto& parts = mu.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const int mult = static_cast<int>(j - i);
    BigInt power = 1;
    for (int t = 0; t < mult; ++t) power *= parts[i];
    z *= power * factorial(mult);
    i = j;
  }
  return z;
}

BigInt class_size(const Partition& mu) { return factorial(mu.size()) / centralizer_order(mu); }

int odd_part_count(const Partition& lambda) {
  return static_cast<int>(
      std::count_if(lambda.parts().begin(), lambda.parts().end(), [](int p) { return p % 2 != 0; }));
}

namespace {

// Beta-set (first-column hook lengths) of a partition: distinct, descending.
std::vector<int> beta_set(const std::vector<int>& parts) {
  const int len = static_cast<int>(parts.size());
  std::vector<int> beta(parts.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] + (len - 1 - i);
  return beta;
}

std::vector<int> from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    const int part = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return parts;
}

using MnKey = std::pair<std::vector<int>, std::vector<int>>;

// Removes border strips of length cycles[0], recursing on the remaining cycles.
BigInt mn_recurse(const std::vector<int>& shape, const std::vector<int>& cycles,
                  std::map<MnKey, BigInt>& memo) {
  if (cycles.empty()) return shape.empty() ? 1 : 0;
  MnKey key{shape, cycles};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int strip = cycles.front();
  const std::vector<int> rest(cycles.begin() + 1, cycles.end());
  const std::vector<int> beta = beta_set(shape);

  BigInt total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - strip;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    // Leg length: beads strictly between the new and old position.
    const auto height = std::count_if(beta.begin(), beta.end(),
                                      [&](int b) { return b > target && b < beta[i]; });
    std::vector<int> moved = beta;
    moved[i] = target;
    const BigInt sub = mn_recurse(from_beta_set(std::move(moved)), rest, memo);
    if (height % 2 == 0) {
      total += sub;
    } else {
      total -= sub;
    }
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

BigInt mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw std::invalid_argument("mn_character: " + lambda.str() + " and " + mu.str() +
                                " are partitions of different integers");
  }
  thread_local std::map<MnKey, BigInt> memo;
  if (memo.size() > (1u << 20)) memo.clear();
  return mn_recurse(lambda.parts(), mu.parts(), memo);
}

const BigInt& CharacterVector::at(const Partition& mu) const {
  auto it = values.find(mu);
  if (it == values.end()) throw std::out_of_range("no character value for class " + mu.str());
  return it->second;
}

}  // namespace schwinger
