#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "schwinger/character_table.hpp"
#include "schwinger/partitions.hpp"

namespace schwinger {

/// A partition written relative to n: (n - offset, tail...).
/// Only a genuine partition once n - offset >= tail[0].
struct SymbolicPartition {
  int offset = 0;
  std::vector<int> tail;

  /// nullopt if (n - offset, tail) is not a partition.
  [[nodiscard]] std::optional<Partition> instantiate(int n) const;
  /// `(n-3,2,1^2)` style with exponent notation for repeated parts.
  [[nodiscard]] std::string str() const;

  bool operator==(const SymbolicPartition&) const = default;
};

/// Express lambda relative to n, the inverse of instantiate.
SymbolicPartition symbolic(const Partition& lambda);

/// Irreducible content of each level.
///
/// Columns group partitions by first part: column c of level m holds the
/// partitions whose first part is n - m - c, sorted canonically.
struct LevelTable {
  struct Level {
    int m = 0;
    std::vector<std::vector<Partition>> columns;

    /// All entries of the level, canonical order.
    [[nodiscard]] std::vector<Partition> partitions() const;
    bool operator==(const Level&) const = default;
  };

  int n = 0;
  std::vector<Level> levels;

  [[nodiscard]] const Level& level(int m) const;

  bool operator==(const LevelTable&) const = default;
};

/// { lambda |- n : conjugate(lambda) has exactly n - 2m odd parts }, canonical order.
/// Throws std::invalid_argument for m outside 0..n/2.
std::vector<Partition> level_content_closed_form(int n, int m);

/// Levels 0..max_m from the closed form, grouped into columns.
LevelTable closed_form_table(int n, int max_m);

/// Levels 0..max_m built column by column:
///  - column 0 of level m is (n-m, m);
///  - the last column is (n-2m) followed by a partition of 2m in which
///    every part occurs an even number of times;
///  - every other column c comes from column c of level m-1 by lowering
///    the first part by one and adding one to a remaining part (or
///    appending a new part 1), keeping only partitions not already produced
///    at this level or any earlier one.
/// Entries that are not partitions at this n are dropped.
LevelTable level_table_recipe(int n, int max_m);

struct LevelDiff {
  int m = 0;
  /// "decompose" or "recipe".
  std::string source;
  /// In the closed form but not in `source`.
  std::vector<Partition> missing;
  /// In `source` but not in the closed form.
  std::vector<Partition> extra;

  bool operator==(const LevelDiff&) const = default;
};

struct CrossValidationReport {
  int n = 0;
  std::vector<LevelDiff> diffs;

  [[nodiscard]] bool passed() const { return diffs.empty(); }
  bool operator==(const CrossValidationReport&) const = default;
};

/// Compares the closed form against decompose(n, m) for every level and
/// against the recipe. Throws std::invalid_argument for n < 2.
CrossValidationReport cross_validate(int n, const CharacterTable& table);
CrossValidationReport cross_validate(int n);

/// Aligned text, one block per level, entries grouped by column.
/// With `symbolic`, entries print as (n-k, ...).
std::string render_text(const LevelTable& table, bool symbolic = false);

/// { "n", "levels": [{ "m", "partitions": [[...]...] }...] }
void to_json(nlohmann::json& j, const LevelTable& t);
void from_json(const nlohmann::json& j, LevelTable& t);

void to_json(nlohmann::json& j, const CrossValidationReport& r);
void from_json(const nlohmann::json& j, CrossValidationReport& r);

}  // namespace schwinger
