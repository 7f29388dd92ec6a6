#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "schwinger/character_table.hpp"
#include "schwinger/involutions.hpp"

namespace schwinger {

/// Raised when a character inner product fails to divide by n!.
/// This can only mean a bug upstream; it is never rounded away.
class NonIntegralMultiplicity : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Matrix with exactly one +-1 per column, stored column-sparse:
/// column j maps to `sign[j] * e_{image[j]}`.
struct SignedPermutationMatrix {
  std::vector<std::size_t> image;
  std::vector<int> sign;

  static SignedPermutationMatrix identity(std::size_t dim);

  [[nodiscard]] std::size_t dim() const { return image.size(); }
  /// Dense entry (row, col).
  [[nodiscard]] int entry(std::size_t row, std::size_t col) const;
  [[nodiscard]] SignedPermutationMatrix transpose() const;
  [[nodiscard]] int trace() const;

  bool operator==(const SignedPermutationMatrix&) const = default;
};

/// Matrix product a * b (b applied first).
SignedPermutationMatrix operator*(const SignedPermutationMatrix& a, const SignedPermutationMatrix& b);

/// Matrix of pi on span(X_m) in the enumerate_level(n, m) basis.
SignedPermutationMatrix rep_matrix(const Permutation& pi, int n, int m);

/// Trace of the signed action of pi on X_m, from fixed points only.
BigInt signed_trace(const Permutation& pi, int n, int m);

/// Character of the signed representation on X_m, evaluated on the
/// consecutive-block representative of each class.
CharacterVector rep_character(int n, int m);

struct DecompositionReport {
  int n = 0;
  int m = 0;
  /// Only nonzero multiplicities, canonical order.
  std::map<Partition, BigInt, CanonicalOrder> multiplicities;
  bool multiplicity_free = false;
  /// No irreducible in common with any level below m.
  bool disjoint_from_lower_levels = false;

  [[nodiscard]] std::vector<Partition> support() const;

  bool operator==(const DecompositionReport&) const = default;
};

/// Multiplicities <chi_lambda, chi_rep> over all irreducibles, exactly.
/// Throws NonIntegralMultiplicity if any inner product is not an integer.
std::map<Partition, BigInt, CanonicalOrder> multiplicities(const CharacterVector& rep,
                                                           const CharacterTable& table);

DecompositionReport decompose(int n, int m, const CharacterTable& table);
DecompositionReport decompose(int n, int m);

/// JSON: { "n", "m", "multiplicities": [{"partition", "mult"}...],
///         "multiplicity_free", "disjoint" }.
void to_json(nlohmann::json& j, const DecompositionReport& r);
void from_json(const nlohmann::json& j, DecompositionReport& r);

/// Outcome of checking that X = u_m X_m is a complete, multiplicity-free model.
struct ModelReport {
  int n = 0;
  std::vector<DecompositionReport> levels;
  bool multiplicity_free = false;
  bool levels_disjoint = false;
  bool complete = false;
  /// Sum of dimensions over all irreducibles versus |X|.
  BigInt dimension_sum = 0;
  BigInt basis_size = 0;
  /// Human-readable descriptions of each violated condition.
  std::vector<std::string> counterexamples;

  [[nodiscard]] bool passed() const {
    return multiplicity_free && levels_disjoint && complete && dimension_sum == basis_size;
  }

  bool operator==(const ModelReport&) const = default;
};

ModelReport verify_model(int n, const CharacterTable& table);
ModelReport verify_model(int n);

void to_json(nlohmann::json& j, const ModelReport& r);
void from_json(const nlohmann::json& j, ModelReport& r);

}  // namespace schwinger
