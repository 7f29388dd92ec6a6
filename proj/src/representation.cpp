#include "schwinger/representation.hpp"

#include <algorithm>
#include <set>

namespace schwinger {

SignedPermutationMatrix SignedPermutationMatrix::identity(std::size_t dim) {
  SignedPermutationMatrix out;
  out.image.resize(dim);
  for (std::size_t j = 0; j < dim; ++j) out.image[j] = j;
  out.sign.assign(dim, 1);
  return out;
}

int SignedPermutationMatrix::entry(std::size_t row, std::size_t col) const {
  return image.at(col) == row ? sign[col] : 0;
}

SignedPermutationMatrix SignedPermutationMatrix::transpose() const {
  SignedPermutationMatrix out;
  out.image.resize(dim());
  out.sign.resize(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    out.image[image[j]] = j;
    out.sign[image[j]] = sign[j];
  }
  return out;
}

int SignedPermutationMatrix::trace() const {
  int t = 0;
  for (std::size_t j = 0; j < dim(); ++j) {
    if (image[j] == j) t += sign[j];
  }
  return t;
}

SignedPermutationMatrix operator*(const SignedPermutationMatrix& a, const SignedPermutationMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("multiplying matrices of different dimension");
  SignedPermutationMatrix out;
  out.image.resize(b.dim());
  out.sign.resize(b.dim());
  for (std::size_t j = 0; j < b.dim(); ++j) {
    out.image[j] = a.image[b.image[j]];
    out.sign[j] = a.sign[b.image[j]] * b.sign[j];
  }
  return out;
}

SignedPermutationMatrix rep_matrix(const Permutation& pi, int n, int m) {
  if (pi.degree() != n) throw std::invalid_argument("rep_matrix: permutation degree differs from n");
  const auto basis = enumerate_level(n, m);
  SignedPermutationMatrix out;
  out.image.reserve(basis.size());
  out.sign.reserve(basis.size());
  for (const auto& x : basis) {
    const auto moved = act(pi, x);
    out.image.push_back(involution_index(moved.element));
    out.sign.push_back(moved.sign);
  }
  return out;
}

BigInt signed_trace(const Permutation& pi, int n, int m) {
  if (pi.degree() != n) throw std::invalid_argument("signed_trace: permutation degree differs from n");
  BigInt trace = 0;
  for (const auto& x : enumerate_level(n, m)) {
    const auto moved = act(pi, x);
    if (moved.element == x) trace += moved.sign;
  }
  return trace;
}

CharacterVector rep_character(int n, int m) {
  CharacterVector chi;
  chi.n = n;
  const auto basis = enumerate_level(n, m);
  for (const auto& mu : enumerate_partitions(n)) {
    const auto pi = Permutation::canonical_representative(mu);
    BigInt trace = 0;
    for (const auto& x : basis) {
      const auto moved = act(pi, x);
      if (moved.element == x) trace += moved.sign;
    }
    chi.values.emplace(mu, trace);
  }
  return chi;
}

std::vector<Partition> DecompositionReport::support() const {
  std::vector<Partition> out;
  for (const auto& [lambda, mult] : multiplicities) {
    if (mult != 0) out.push_back(lambda);
  }
  return out;
}

std::map<Partition, BigInt, CanonicalOrder> multiplicities(const CharacterVector& rep,
                                                           const CharacterTable& table) {
  if (rep.n != table.n) throw std::invalid_argument("character and table have different degree");
  const BigInt order = factorial(table.n);
  std::map<Partition, BigInt, CanonicalOrder> out;
  for (std::size_t i = 0; i < table.irreps.size(); ++i) {
    BigInt sum = 0;
    for (std::size_t j = 0; j < table.classes.size(); ++j) {
      sum += class_size(table.classes[j]) * table.table[i][j] * rep.at(table.classes[j]);
    }
    if (sum % order != 0) {
      throw NonIntegralMultiplicity("multiplicity of " + table.irreps[i].str() + " is " + to_string(sum) + "/" +
                                    to_string(order) + ", not an integer");
    }
    out.emplace(table.irreps[i], sum / order);
  }
  return out;
}

namespace {

std::map<Partition, BigInt, CanonicalOrder> nonzero(std::map<Partition, BigInt, CanonicalOrder> all) {
  std::erase_if(all, [](const auto& kv) { return kv.second == 0; });
  return all;
}

}  // namespace

DecompositionReport decompose(int n, int m, const CharacterTable& table) {
  if (table.n != n) throw std::invalid_argument("decompose: character table is for a different degree");
  DecompositionReport report;
  report.n = n;
  report.m = m;
  report.multiplicities = nonzero(multiplicities(rep_character(n, m), table));
  report.multiplicity_free = std::all_of(report.multiplicities.begin(), report.multiplicities.end(),
                                         [](const auto& kv) { return kv.second == 1; });
  std::set<Partition, CanonicalOrder> lower;
  for (int k = 0; k < m; ++k) {
    for (const auto& [lambda, mult] : multiplicities(rep_character(n, k), table)) {
      if (mult != 0) lower.insert(lambda);
    }
  }
  report.disjoint_from_lower_levels = std::none_of(report.multiplicities.begin(), report.multiplicities.end(),
                                                   [&](const auto& kv) { return lower.contains(kv.first); });
  return report;
}

DecompositionReport decompose(int n, int m) { return decompose(n, m, character_table(n)); }

void to_json(nlohmann::json& j, const DecompositionReport& r) {
  nlohmann::json mults = nlohmann::json::array();
  for (const auto& [lambda, mult] : r.multiplicities) {
    mults.push_back({{"partition", lambda.parts()}, {"mult", to_int64(mult)}});
  }
  j = {{"n", r.n},
       {"m", r.m},
       {"multiplicities", std::move(mults)},
       {"multiplicity_free", r.multiplicity_free},
       {"disjoint", r.disjoint_from_lower_levels}};
}

void from_json(const nlohmann::json& j, DecompositionReport& r) {
  r.n = j.at("n").get<int>();
  r.m = j.at("m").get<int>();
  r.multiplicities.clear();
  for (const auto& entry : j.at("multiplicities")) {
    r.multiplicities.emplace(Partition(entry.at("partition").get<std::vector<int>>()),
                             BigInt(entry.at("mult").get<std::int64_t>()));
  }
  r.multiplicity_free = j.at("multiplicity_free").get<bool>();
  r.disjoint_from_lower_levels = j.at("disjoint").get<bool>();
}

ModelReport verify_model(int n, const CharacterTable& table) {
  ModelReport report;
  report.n = n;
  report.multiplicity_free = true;
  report.levels_disjoint = true;

  std::map<Partition, int, CanonicalOrder> seen_at;
  for (int m = 0; 2 * m <= n; ++m) {
    auto level = decompose(n, m, table);
    report.basis_size += level_size(n, m);
    for (const auto& [lambda, mult] : level.multiplicities) {
      if (mult != 1) {
        report.multiplicity_free = false;
        report.counterexamples.push_back("level " + std::to_string(m) + ": " + lambda.str() +
                                         " has multiplicity " + to_string(mult));
      }
      if (auto [it, inserted] = seen_at.emplace(lambda, m); !inserted) {
        report.levels_disjoint = false;
        report.counterexamples.push_back(lambda.str() + " occurs at levels " + std::to_string(it->second) +
                                         " and " + std::to_string(m));
      }
    }
    report.levels.push_back(std::move(level));
  }

  report.complete = true;
  for (const auto& lambda : table.irreps) {
    report.dimension_sum += dimension(lambda);
    if (!seen_at.contains(lambda)) {
      report.complete = false;
      report.counterexamples.push_back(lambda.str() + " occurs at no level");
    }
  }
  if (report.dimension_sum != report.basis_size) {
    report.counterexamples.push_back("sum of dimensions " + to_string(report.dimension_sum) + " != |X| = " +
                                     to_string(report.basis_size));
  }
  return report;
}

ModelReport verify_model(int n) { return verify_model(n, character_table(n)); }

void to_json(nlohmann::json& j, const ModelReport& r) {
  j = {{"n", r.n},
       {"levels", r.levels},
       {"multiplicity_free", r.multiplicity_free},
       {"levels_disjoint", r.levels_disjoint},
       {"complete", r.complete},
       {"dimension_sum", to_int64(r.dimension_sum)},
       {"basis_size", to_int64(r.basis_size)},
       {"counterexamples", r.counterexamples},
       {"passed", r.passed()}};
}

void from_json(const nlohmann::json& j, ModelReport& r) {
  r.n = j.at("n").get<int>();
  r.levels = j.at("levels").get<std::vector<DecompositionReport>>();
  r.multiplicity_free = j.at("multiplicity_free").get<bool>();
  r.levels_disjoint = j.at("levels_disjoint").get<bool>();
  r.complete = j.at("complete").get<bool>();
  r.dimension_sum = j.at("dimension_sum").get<std::int64_t>();
  r.basis_size = j.at("basis_size").get<std::int64_t>();
  r.counterexamples = j.at("counterexamples").get<std::vector<std::string>>();
}

}  // namespace schwinger
