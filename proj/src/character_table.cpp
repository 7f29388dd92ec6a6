#include "schwinger/character_table.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <mutex>
#include <random>
#include <stdexcept>
#include <system_error>
#include <unordered_map>

namespace schwinger {

CharacterTable CharacterTable::compute(int n, int max_degree) {
  CharacterTable t;
  t.n = n;
  t.classes = enumerate_partitions(n, max_degree);
  t.irreps = t.classes;
  t.table.reserve(t.irreps.size());
  for (const auto& lambda : t.irreps) {
    std::vector<BigInt> row;
    row.reserve(t.classes.size());
    for (const auto& mu : t.classes) row.push_back(mn_character(lambda, mu));
    t.table.push_back(std::move(row));
  }
  return t;
}

namespace {

std::size_t index_in(const std::vector<Partition>& list, const Partition& p) {
  auto it = std::lower_bound(list.begin(), list.end(), p, CanonicalOrder{});
  if (it == list.end() || *it != p) {
    throw std::out_of_range("partition " + p.str() + " not found in character table");
  }
  return static_cast<std::size_t>(it - list.begin());
}

}  // namespace

std::size_t CharacterTable::class_index(const Partition& mu) const { return index_in(classes, mu); }

std::size_t CharacterTable::irrep_index(const Partition& lambda) const { return index_in(irreps, lambda); }

const BigInt& CharacterTable::value(const Partition& lambda, const Partition& mu) const {
  return table[irrep_index(lambda)][class_index(mu)];
}

CharacterVector CharacterTable::character(const Partition& lambda) const {
  CharacterVector out;
  out.n = n;
  const auto& row = table[irrep_index(lambda)];
  for (std::size_t j = 0; j < classes.size(); ++j) out.values.emplace(classes[j], row[j]);
  return out;
}

void to_json(nlohmann::json& j, const CharacterTable& t) {
  j = nlohmann::json::object();
  j["n"] = t.n;
  auto parts_list = [](const std::vector<Partition>& ps) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : ps) arr.push_back(p.parts());
    return arr;
  };
  j["classes"] = parts_list(t.classes);
  j["irreps"] = parts_list(t.irreps);
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.table) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(to_int64(v));
    rows.push_back(std::move(r));
  }
  j["table"] = std::move(rows);
}

void from_json(const nlohmann::json& j, CharacterTable& t) {
  t.n = j.at("n").get<int>();
  t.classes.clear();
  t.irreps.clear();
  t.table.clear();
  for (const auto& p : j.at("classes")) t.classes.emplace_back(p.get<std::vector<int>>());
  for (const auto& p : j.at("irreps")) t.irreps.emplace_back(p.get<std::vector<int>>());
  for (const auto& row : j.at("table")) {
    std::vector<BigInt> r;
    for (const auto& v : row) r.emplace_back(v.get<std::int64_t>());
    t.table.push_back(std::move(r));
  }
}

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("SCHWINGER_CACHE_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0') {
    return std::filesystem::path(xdg) / "schwinger";
  }
  if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
    return std::filesystem::path(home) / ".cache" / "schwinger";
  }
  return ".schwinger-cache";
}

std::filesystem::path cache_file(const std::filesystem::path& dir, int n) {
  return dir / ("chartab_" + std::to_string(n) + ".json");
}

namespace {

// A cache hit must carry exactly the canonical class and irrep lists.
bool consistent(const CharacterTable& t, int n, const std::vector<Partition>& canonical) {
  if (t.n != n || t.classes != canonical || t.irreps != canonical) return false;
  if (t.table.size() != canonical.size()) return false;
  return std::all_of(t.table.begin(), t.table.end(),
                     [&](const auto& row) { return row.size() == canonical.size(); });
}

void write_atomically(const std::filesystem::path& target, const std::string& content) {
  std::error_code ec;
  std::filesystem::create_directories(target.parent_path(), ec);
  if (ec) return;
  std::random_device rd;
  auto tmp = target;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) return;
    out << content;
    if (!out) {
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace

CharacterTable load_or_compute(int n, const std::filesystem::path& dir, int max_degree) {
  const auto canonical = enumerate_partitions(n, max_degree);
  const auto path = cache_file(dir, n);
  if (std::ifstream in(path); in) {
    try {
      auto cached = nlohmann::json::parse(in).get<CharacterTable>();
      if (consistent(cached, n, canonical)) return cached;
    } catch (const std::exception&) {
      // Corrupt or stale cache: fall through and rebuild.
    }
  }
  auto table = CharacterTable::compute(n, max_degree);
  write_atomically(path, nlohmann::json(table).dump() + "\n");
  return table;
}

const CharacterTable& character_table(int n) {
  static std::mutex mutex;
  static std::unordered_map<int, std::unique_ptr<CharacterTable>> tables;
  std::lock_guard lock(mutex);
  auto& slot = tables[n];
  if (!slot) slot = std::make_unique<CharacterTable>(CharacterTable::compute(n));
  return *slot;
}

}  // namespace schwinger
