#include "schwinger/level_table.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

#include "schwinger/representation.hpp"

namespace schwinger {

std::optional<Partition> SymbolicPartition::instantiate(int n) const {
  std::vector<int> parts;
  parts.push_back(n - offset);
  parts.insert(parts.end(), tail.begin(), tail.end());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1 || (i > 0 && parts[i] > parts[i - 1])) return std::nullopt;
  }
  return Partition(std::move(parts));
}

std::string SymbolicPartition::str() const {
  std::string out = offset == 0 ? "(n" : "(n-" + std::to_string(offset);
  for (std::size_t i = 0; i < tail.size();) {
    std::size_t j = i;
    while (j < tail.size() && tail[j] == tail[i]) ++j;
    out += "," + std::to_string(tail[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out + ")";
}

SymbolicPartition symbolic(const Partition& lambda) {
  if (lambda.empty()) return {};
  return {lambda.size() - lambda[0], std::vector<int>(lambda.parts().begin() + 1, lambda.parts().end())};
}

std::vector<Partition> LevelTable::Level::partitions() const {
  std::vector<Partition> out;
  for (const auto& column : columns) out.insert(out.end(), column.begin(), column.end());
  std::sort(out.begin(), out.end(), CanonicalOrder{});
  return out;
}

const LevelTable::Level& LevelTable::level(int m) const {
  for (const auto& l : levels) {
    if (l.m == m) return l;
  }
  throw std::out_of_range("level " + std::to_string(m) + " not in table");
}

namespace {

void check_range(int n, int m, const char* what) {
  if (n < 1 || m < 0 || 2 * m > n) {
    throw std::invalid_argument(std::string(what) + ": m = " + std::to_string(m) + " out of range 0.." +
                                std::to_string(n / 2) + " for n = " + std::to_string(n));
  }
}

// m + 1 columns; column c holds first part n - m - c.
LevelTable::Level group_into_columns(int n, int m, const std::vector<Partition>& entries) {
  LevelTable::Level level;
  level.m = m;
  level.columns.resize(static_cast<std::size_t>(m) + 1);
  for (const auto& p : entries) {
    const int c = n - m - p[0];
    if (c < 0 || c > m) {
      throw std::logic_error(p.str() + " cannot sit in any column of level " + std::to_string(m));
    }
    level.columns[static_cast<std::size_t>(c)].push_back(p);
  }
  for (auto& column : level.columns) std::sort(column.begin(), column.end(), CanonicalOrder{});
  return level;
}

bool all_multiplicities_even(const Partition& p) {
  const auto& parts = p.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if ((j - i) % 2 != 0) return false;
    i = j;
  }
  return true;
}

std::optional<Partition> make_partition(std::vector<int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1 || (i > 0 && parts[i] > parts[i - 1])) return std::nullopt;
  }
  return Partition(std::move(parts));
}

// Lower the first part by one and put the unit on a remaining part, or on a new part.
std::vector<Partition> shift_one_box(const Partition& p) {
  std::vector<Partition> out;
  std::vector<int> base = p.parts();
  base[0] -= 1;
  for (std::size_t i = 1; i < base.size(); ++i) {
    auto candidate = base;
    candidate[i] += 1;
    if (auto q = make_partition(std::move(candidate))) out.push_back(std::move(*q));
  }
  auto appended = base;
  appended.push_back(1);
  if (auto q = make_partition(std::move(appended))) out.push_back(std::move(*q));
  return out;
}

}  // namespace

std::vector<Partition> level_content_closed_form(int n, int m) {
  check_range(n, m, "level_content_closed_form");
  std::vector<Partition> out;
  for (const auto& lambda : enumerate_partitions(n)) {
    if (odd_part_count(conjugate(lambda)) == n - 2 * m) out.push_back(lambda);
  }
  return out;
}

LevelTable closed_form_table(int n, int max_m) {
  check_range(n, max_m, "closed_form_table");
  LevelTable table;
  table.n = n;
  for (int m = 0; m <= max_m; ++m) table.levels.push_back(group_into_columns(n, m, level_content_closed_form(n, m)));
  return table;
}

LevelTable level_table_recipe(int n, int max_m) {
  check_range(n, max_m, "level_table_recipe");
  LevelTable table;
  table.n = n;
  std::set<Partition, CanonicalOrder> produced;

  for (int m = 0; m <= max_m; ++m) {
    LevelTable::Level level;
    level.m = m;
    level.columns.resize(static_cast<std::size_t>(m) + 1);
    for (int c = 0; c <= m; ++c) {
      std::vector<Partition> candidates;
      if (c == 0) {
        if (auto p = make_partition(m == 0 ? std::vector<int>{n} : std::vector<int>{n - m, m})) {
          candidates.push_back(std::move(*p));
        }
      } else if (c == m) {
        for (const auto& q : enumerate_partitions(2 * m)) {
          if (!all_multiplicities_even(q)) continue;
          std::vector<int> parts{n - 2 * m};
          parts.insert(parts.end(), q.parts().begin(), q.parts().end());
          if (auto p = make_partition(std::move(parts))) candidates.push_back(std::move(*p));
        }
      } else {
        const auto& previous = table.levels.back().columns[static_cast<std::size_t>(c)];
        for (const auto& p : previous) {
          auto shifted = shift_one_box(p);
          candidates.insert(candidates.end(), shifted.begin(), shifted.end());
        }
      }
      auto& column = level.columns[static_cast<std::size_t>(c)];
      for (auto& p : candidates) {
        if (produced.contains(p) || std::find(column.begin(), column.end(), p) != column.end()) continue;
        column.push_back(std::move(p));
      }
      std::sort(column.begin(), column.end(), CanonicalOrder{});
    }
    for (const auto& column : level.columns) produced.insert(column.begin(), column.end());
    table.levels.push_back(std::move(level));
  }
  return table;
}

namespace {

std::optional<LevelDiff> compare(int m, std::string source, const std::vector<Partition>& expected,
                                 const std::vector<Partition>& actual) {
  LevelDiff diff{m, std::move(source), {}, {}};
  std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(),
                      std::back_inserter(diff.missing), CanonicalOrder{});
  std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(),
                      std::back_inserter(diff.extra), CanonicalOrder{});
  if (diff.missing.empty() && diff.extra.empty()) return std::nullopt;
  return diff;
}

}  // namespace

CrossValidationReport cross_validate(int n, const CharacterTable& table) {
  if (n < 2) throw std::invalid_argument("cross_validate: n must be at least 2");
  CrossValidationReport report;
  report.n = n;
  const auto recipe = level_table_recipe(n, n / 2);
  for (int m = 0; 2 * m <= n; ++m) {
    const auto expected = level_content_closed_form(n, m);
    if (auto d = compare(m, "decompose", expected, decompose(n, m, table).support())) {
      report.diffs.push_back(std::move(*d));
    }
    if (auto d = compare(m, "recipe", expected, recipe.level(m).partitions())) {
      report.diffs.push_back(std::move(*d));
    }
  }
  return report;
}

CrossValidationReport cross_validate(int n) { return cross_validate(n, character_table(n)); }

std::string render_text(const LevelTable& table, bool symbolic_entries) {
  auto label = [&](const Partition& p) { return symbolic_entries ? symbolic(p).str() : p.str(); };
  std::size_t width = 0;
  for (const auto& level : table.levels) {
    for (const auto& column : level.columns) {
      for (const auto& p : column) width = std::max(width, label(p).size());
    }
  }
  width += 2;

  std::ostringstream os;
  os << "n = " << table.n << "\n";
  for (const auto& level : table.levels) {
    os << "Level " << level.m << "\n";
    std::size_t rows = 0;
    for (const auto& column : level.columns) rows = std::max(rows, column.size());
    // Level m starts m columns in, so equal first parts line up across levels.
    for (std::size_t r = 0; r < rows; ++r) {
      std::string line(static_cast<std::size_t>(level.m) * width + 2, ' ');
      for (const auto& column : level.columns) {
        std::ostringstream cell;
        cell << std::left << std::setw(static_cast<int>(width)) << (r < column.size() ? label(column[r]) : "");
        line += cell.str();
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      os << line << "\n";
    }
  }
  return os.str();
}

void to_json(nlohmann::json& j, const LevelTable& t) {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& level : t.levels) {
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& p : level.partitions()) parts.push_back(p.parts());
    levels.push_back({{"m", level.m}, {"partitions", std::move(parts)}});
  }
  j = {{"n", t.n}, {"levels", std::move(levels)}};
}

void from_json(const nlohmann::json& j, LevelTable& t) {
  t.n = j.at("n").get<int>();
  t.levels.clear();
  for (const auto& level : j.at("levels")) {
    std::vector<Partition> entries;
    for (const auto& p : level.at("partitions")) entries.emplace_back(p.get<std::vector<int>>());
    t.levels.push_back(group_into_columns(t.n, level.at("m").get<int>(), entries));
  }
}

void to_json(nlohmann::json& j, const CrossValidationReport& r) {
  auto list = [](const std::vector<Partition>& ps) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : ps) arr.push_back(p.parts());
    return arr;
  };
  nlohmann::json diffs = nlohmann::json::array();
  for (const auto& d : r.diffs) {
    diffs.push_back({{"m", d.m}, {"source", d.source}, {"missing", list(d.missing)}, {"extra", list(d.extra)}});
  }
  j = {{"n", r.n}, {"diffs", std::move(diffs)}, {"passed", r.passed()}};
}

void from_json(const nlohmann::json& j, CrossValidationReport& r) {
  r.n = j.at("n").get<int>();
  r.diffs.clear();
  auto list = [](const nlohmann::json& arr) {
    std::vector<Partition> out;
    for (const auto& p : arr) out.emplace_back(p.get<std::vector<int>>());
    return out;
  };
  for (const auto& d : j.at("diffs")) {
    r.diffs.push_back({d.at("m").get<int>(), d.at("source").get<std::string>(), list(d.at("missing")),
                       list(d.at("extra"))});
  }
}

}  // namespace schwinger
