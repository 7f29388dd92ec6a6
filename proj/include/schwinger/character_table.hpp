#pragma once

#include <cstddef>
#include <filesystem>
#include <vector>

#include "json.hpp"
#include "schwinger/partitions.hpp"

namespace schwinger {

/// Full irreducible character table of S_n.
///
/// Rows are irreducibles and columns are classes, both in canonical partition
/// order, so `table[i][j]` is chi_{irreps[i]}(classes[j]).
struct CharacterTable {
  int n = 0;
  std::vector<Partition> classes;
  std::vector<Partition> irreps;
  std::vector<std::vector<BigInt>> table;

  static CharacterTable compute(int n, int max_degree = kDefaultMaxDegree);

  [[nodiscard]] std::size_t class_index(const Partition& mu) const;
  [[nodiscard]] std::size_t irrep_index(const Partition& lambda) const;
  [[nodiscard]] const BigInt& value(const Partition& lambda, const Partition& mu) const;
  [[nodiscard]] CharacterVector character(const Partition& lambda) const;

  bool operator==(const CharacterTable&) const = default;
};

/// Cache file layout: { "n", "classes", "irreps", "table" } with 64-bit integer entries.
void to_json(nlohmann::json& j, const CharacterTable& t);
void from_json(const nlohmann::json& j, CharacterTable& t);

/// `$SCHWINGER_CACHE_DIR` if set, else `$XDG_CACHE_HOME/schwinger`,
/// else `$HOME/.cache/schwinger`, else `.schwinger-cache`.
std::filesystem::path default_cache_dir();

std::filesystem::path cache_file(const std::filesystem::path& dir, int n);

/// Read `chartab_<n>.json` from `dir` if present and consistent, otherwise
/// compute the table and write it. Writes go through a temporary file and a
/// rename, so concurrent writers of the same n leave identical content.
/// A cache that cannot be written is not an error.
CharacterTable load_or_compute(int n, const std::filesystem::path& dir,
                               int max_degree = kDefaultMaxDegree);

/// Process-wide memoized table, computed without touching the disk.
const CharacterTable& character_table(int n);

}  // namespace schwinger
