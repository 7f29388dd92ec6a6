#include "schwinger/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <iterator>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "schwinger/character_table.hpp"
#include "schwinger/greenberg_fock.hpp"
#include "schwinger/level_table.hpp"
#include "schwinger/monomial_space.hpp"
#include "schwinger/representation.hpp"

namespace schwinger::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
  std::vector<std::string> counterexamples;

  void fail(std::string what) {
    passed = false;
    // Keep payloads readable; the count is reported in detail.
    if (counterexamples.size() < 10) counterexamples.push_back(std::move(what));
  }
};

void to_json(json& j, const Check& c) {
  j = {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"counterexamples", c.counterexamples}};
}

void validate(const RunConfig& cfg) {
  if (cfg.n < 1) throw UsageError("--n must be at least 1");
  if (cfg.n > cfg.max_degree) {
    throw UsageError("--n " + std::to_string(cfg.n) + " exceeds the limit " + std::to_string(cfg.max_degree) +
                     " (raise it with --max-degree)");
  }
  if (cfg.m && (*cfg.m < 0 || 2 * *cfg.m > cfg.n)) {
    throw UsageError("--m must lie in 0.." + std::to_string(cfg.n / 2));
  }
  if (cfg.max_m && (*cfg.max_m < 0 || 2 * *cfg.max_m > cfg.n)) {
    throw UsageError("--max-m must lie in 0.." + std::to_string(cfg.n / 2));
  }
}

std::vector<int> levels_of(const RunConfig& cfg) {
  if (cfg.m) return {*cfg.m};
  std::vector<int> out;
  for (int m = 0; 2 * m <= cfg.n; ++m) out.push_back(m);
  return out;
}

CharacterTable table_for(const RunConfig& cfg) { return load_or_compute(cfg.n, cfg.cache_dir, cfg.max_degree); }

json partitions_json(const std::vector<Partition>& ps) {
  json arr = json::array();
  for (const auto& p : ps) arr.push_back(p.parts());
  return arr;
}

// ---------------------------------------------------------------- checks

Check check_model(int n, const CharacterTable& table) {
  Check c{"model", true, "", {}};
  const auto report = verify_model(n, table);
  for (const auto& ce : report.counterexamples) c.fail(ce);
  c.passed = report.passed();
  c.detail = std::to_string(table.irreps.size()) + " irreducibles over " + std::to_string(report.levels.size()) +
             " levels, |X| = " + to_string(report.basis_size) + ", sum of dimensions = " +
             to_string(report.dimension_sum);
  return c;
}

Check gram_check(std::string name, const std::vector<std::vector<RadicalValue>>& gram) {
  Check c{std::move(name), true, "", {}};
  std::size_t bad = 0;
  for (std::size_t i = 0; i < gram.size(); ++i) {
    for (std::size_t j = 0; j < gram.size(); ++j) {
      if (!gram[i][j].equals(i == j ? 1 : 0)) {
        ++bad;
        c.fail("G[" + std::to_string(i) + "][" + std::to_string(j) + "] = " + gram[i][j].str());
      }
    }
  }
  c.detail = std::to_string(gram.size()) + "x" + std::to_string(gram.size()) + " Gram matrix, " +
             std::to_string(bad) + " entries off identity";
  return c;
}

Check check_equivariance(int n) {
  Check c{"equivariance", true, "", {}};
  std::size_t compared = 0;
  for (const auto& pi : adjacent_transpositions(n)) {
    for (const auto& x : enumerate_all(n)) {
      const auto on_involution = act(pi, x);
      const auto [monomial, monomial_sign] = act_on_monomial(pi, Monomial(x));
      const auto on_state = act_on_state(pi, basis_state(x));
      const auto expected = basis_state(on_involution.element);
      ++compared;
      if (monomial.to_involution() != on_involution.element || monomial_sign != on_involution.sign) {
        c.fail("monomial action on " + Monomial(x).str() + " gives " + std::to_string(monomial_sign) + "*" +
               monomial.str() + ", involution action gives " + std::to_string(on_involution.sign) + "*" +
               on_involution.element.str());
      }
      if (on_state.norm_squared != expected.norm_squared ||
          on_state.raw != Rational(on_involution.sign) * expected.raw) {
        c.fail("Fock action on basis state of " + x.str() + " is not " + std::to_string(on_involution.sign) +
               " * basis state of " + on_involution.element.str());
      }
    }
  }
  c.detail = std::to_string(compared) + " (generator, basis element) pairs across three carrier spaces";
  return c;
}

Check check_cross_validation(int n, const CharacterTable& table) {
  Check c{"level-table", true, "", {}};
  if (n < 2) {
    c.detail = "single level, nothing to compare";
    return c;
  }
  const auto report = cross_validate(n, table);
  for (const auto& d : report.diffs) {
    std::string what = "level " + std::to_string(d.m) + " " + d.source + ":";
    for (const auto& p : d.missing) what += " missing " + p.str();
    for (const auto& p : d.extra) what += " extra " + p.str();
    c.fail(what);
  }
  c.detail = "closed form vs decomposition and recipe, " + std::to_string(report.diffs.size()) + " diffs";
  return c;
}

Check check_homomorphism(int n, std::uint64_t seed, int samples) {
  Check c{"homomorphism", true, "", {}};
  std::mt19937_64 rng(seed);
  int tested = 0;
  for (int m = 0; 2 * m <= n; ++m) {
    for (int s = 0; s < samples; ++s) {
      const auto pi = Permutation::random(n, rng);
      const auto sigma = Permutation::random(n, rng);
      ++tested;
      if (rep_matrix(pi * sigma, n, m) != rep_matrix(pi, n, m) * rep_matrix(sigma, n, m)) {
        std::ostringstream os;
        os << "level " << m << ": rho(pi sigma) != rho(pi) rho(sigma) for pi = [";
        for (int v : pi.images()) os << v << ' ';
        os << "], sigma = [";
        for (int v : sigma.images()) os << v << ' ';
        os << "]";
        c.fail(os.str());
      }
    }
  }
  c.detail = std::to_string(tested) + " random pairs, seed " + std::to_string(seed);
  return c;
}

MonomialCombination random_combination(int n, std::mt19937_64& rng) {
  const auto basis = enumerate_all(n);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> numerator(-5, 5);
  std::uniform_int_distribution<int> denominator(1, 4);
  MonomialCombination f(n);
  for (int t = 0; t < 4; ++t) f.add(Monomial(basis[pick(rng)]), Rational(numerator(rng), denominator(rng)));
  return f;
}

Check check_monomial_unitarity(int n, std::uint64_t seed, int samples) {
  Check c{"monomial-unitarity", true, "", {}};
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const auto f1 = random_combination(n, rng);
    const auto f2 = random_combination(n, rng);
    const auto pi = Permutation::random(n, rng);
    const auto before = inner_product(f1, f2);
    const auto after = inner_product(act_on_combination(pi, f1), act_on_combination(pi, f2));
    if (before != after) c.fail("<f1,f2> = " + to_string(before) + " but <pi f1, pi f2> = " + to_string(after));
  }
  c.detail = std::to_string(samples) + " random combinations, seed " + std::to_string(seed);
  return c;
}

Check check_word_reduction(int n, std::uint64_t seed, int samples) {
  Check c{"word-reduction", true, "", {}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> index(1, n);
  std::uniform_int_distribution<int> length(0, 4);
  auto random_word = [&] {
    FockWord w;
    for (int k = length(rng); k > 0; --k) w.indices.push_back(index(rng));
    return w;
  };
  for (int s = 0; s < samples; ++s) {
    const FockWord w1 = random_word();
    // Every other pair is a copy so both outcomes are exercised.
    const FockWord w2 = s % 2 == 0 ? w1 : random_word();
    if (word_inner_product(w1, w2) != word_inner_product_by_reduction(w1, w2)) {
      c.fail("<" + w1.str() + " | " + w2.str() + ">: sequence equality and reduction disagree");
    }
  }
  c.detail = std::to_string(samples) + " random word pairs, seed " + std::to_string(seed);
  return c;
}

int report_checks(const RunConfig& cfg, const std::string& command, const std::vector<Check>& checks,
                  std::ostream& out) {
  bool all = true;
  for (const auto& c : checks) all = all && c.passed;
  if (cfg.format == Format::Json) {
    out << json{{"command", command}, {"n", cfg.n}, {"seed", cfg.seed}, {"checks", checks}, {"passed", all}}.dump(2)
        << "\n";
  } else {
    out << command << " n=" << cfg.n << " seed=" << cfg.seed << "\n";
    for (const auto& c : checks) {
      out << "  " << (c.passed ? "PASS" : "FAIL") << "  " << std::left << std::setw(20) << c.name << c.detail
          << "\n";
      for (const auto& ce : c.counterexamples) out << "        " << ce << "\n";
    }
    out << (all ? "all checks passed" : "verification FAILED") << "\n";
  }
  return all ? kPass : kVerificationFailure;
}

// -------------------------------------------------------------- commands

int cmd_involutions(const RunConfig& cfg, std::ostream& out) {
  const auto levels = levels_of(cfg);
  BigInt total = 0;
  BigInt dim_sum = 0;
  for (const auto& lambda : enumerate_partitions(cfg.n, cfg.max_degree)) dim_sum += dimension(lambda);

  json levels_json = json::array();
  std::ostringstream text;
  for (int m : levels) {
    const auto elements = enumerate_level(cfg.n, m);
    total += elements.size();
    json names = json::array();
    text << "X_" << m << " (" << elements.size() << "):";
    for (const auto& x : elements) {
      names.push_back(x.str());
      text << ' ' << x.str();
    }
    text << "\n";
    levels_json.push_back({{"m", m}, {"count", elements.size()}, {"elements", std::move(names)}});
  }
  // The identity only concerns the full set X.
  const bool full = !cfg.m.has_value();
  const bool holds = !full || total == dim_sum;

  if (cfg.format == Format::Json) {
    json j{{"n", cfg.n}, {"levels", std::move(levels_json)}, {"total", to_int64(total)}};
    if (full) {
      j["dimension_sum"] = to_int64(dim_sum);
      j["identity_holds"] = holds;
    }
    out << j.dump(2) << "\n";
  } else {
    out << text.str();
    out << "total " << total << "\n";
    if (full) {
      out << "sum of irreducible dimensions " << dim_sum << (holds ? " (equal)" : " (MISMATCH)") << "\n";
    }
  }
  return holds ? kPass : kVerificationFailure;
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out) {
  const auto table = table_for(cfg);
  std::vector<DecompositionReport> reports;
  for (int m : levels_of(cfg)) reports.push_back(decompose(cfg.n, m, table));

  if (cfg.format == Format::Json) {
    out << (cfg.m ? json(reports.front()) : json(reports)).dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      out << "n=" << r.n << " m=" << r.m << ":";
      bool first = true;
      for (const auto& [lambda, mult] : r.multiplicities) {
        out << (first ? " " : " + ");
        if (mult != 1) out << mult << "*";
        out << lambda.str();
        first = false;
      }
      out << "\n  multiplicity_free=" << (r.multiplicity_free ? "yes" : "no")
          << " disjoint=" << (r.disjoint_from_lower_levels ? "yes" : "no") << "\n";
    }
  }
  return kPass;
}

int cmd_character(const RunConfig& cfg, std::ostream& out) {
  const auto table = table_for(cfg);
  if (cfg.m) {
    const auto chi = rep_character(cfg.n, *cfg.m);
    if (cfg.format == Format::Json) {
      json values = json::array();
      for (const auto& mu : table.classes) values.push_back(to_int64(chi.at(mu)));
      out << json{{"n", cfg.n}, {"m", *cfg.m}, {"classes", partitions_json(table.classes)}, {"values", values}}.dump(2)
          << "\n";
    } else {
      out << "character of X_" << *cfg.m << " for n=" << cfg.n << "\n";
      for (const auto& mu : table.classes) {
        out << "  " << std::left << std::setw(2 * cfg.n + 4) << mu.str() << chi.at(mu) << "\n";
      }
    }
    return kPass;
  }
  if (cfg.format == Format::Json) {
    out << json(table).dump(2) << "\n";
    return kPass;
  }
  std::size_t width = 4;
  for (const auto& p : table.classes) width = std::max(width, p.str().size() + 2);
  for (const auto& row : table.table) {
    for (const auto& v : row) width = std::max(width, to_string(v).size() + 2);
  }
  out << std::left << std::setw(static_cast<int>(width)) << "";
  for (const auto& mu : table.classes) out << std::right << std::setw(static_cast<int>(width)) << mu.str();
  out << "\n";
  for (std::size_t i = 0; i < table.irreps.size(); ++i) {
    out << std::left << std::setw(static_cast<int>(width)) << table.irreps[i].str();
    for (const auto& v : table.table[i]) out << std::right << std::setw(static_cast<int>(width)) << to_string(v);
    out << "\n";
  }
  return kPass;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto table = table_for(cfg);
  std::vector<Check> checks;
  checks.push_back(check_model(cfg.n, table));
  checks.push_back(gram_check("monomial-gram", gram_matrix(normalized_basis(cfg.n))));
  checks.push_back(gram_check("fock-gram", fock_gram_matrix(cfg.n)));
  checks.push_back(check_equivariance(cfg.n));
  checks.push_back(check_cross_validation(cfg.n, table));
  checks.push_back(check_homomorphism(cfg.n, cfg.seed, cfg.samples));
  return report_checks(cfg, "verify", checks, out);
}

int cmd_monomial_check(const RunConfig& cfg, std::ostream& out) {
  std::vector<Check> checks;
  checks.push_back(gram_check("monomial-gram", gram_matrix(normalized_basis(cfg.n))));
  checks.push_back(check_equivariance(cfg.n));
  checks.push_back(check_monomial_unitarity(cfg.n, cfg.seed, cfg.samples));
  return report_checks(cfg, "monomial-check", checks, out);
}

int cmd_fock_check(const RunConfig& cfg, std::ostream& out) {
  std::vector<Check> checks;
  checks.push_back(gram_check("fock-gram", fock_gram_matrix(cfg.n)));
  checks.push_back(check_equivariance(cfg.n));
  checks.push_back(check_word_reduction(cfg.n, cfg.seed, 5 * cfg.samples));
  return report_checks(cfg, "fock-check", checks, out);
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  const int max_m = cfg.max_m.value_or(cfg.n / 2);
  const auto recipe = level_table_recipe(cfg.n, max_m);
  const auto closed = closed_form_table(cfg.n, max_m);
  std::vector<LevelDiff> diffs;
  for (int m = 0; m <= max_m; ++m) {
    const auto expected = closed.level(m).partitions();
    const auto actual = recipe.level(m).partitions();
    LevelDiff d{m, "recipe", {}, {}};
    std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(),
                        std::back_inserter(d.missing), CanonicalOrder{});
    std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(),
                        std::back_inserter(d.extra), CanonicalOrder{});
    if (!d.missing.empty() || !d.extra.empty()) diffs.push_back(std::move(d));
  }

  if (cfg.format == Format::Json) {
    CrossValidationReport report{cfg.n, diffs};
    out << json{{"n", cfg.n}, {"max_m", max_m}, {"recipe", recipe}, {"closed_form", closed}, {"diff", report}}.dump(2)
        << "\n";
  } else {
    out << "== recipe ==\n" << render_text(recipe, true) << render_text(recipe, false);
    out << "== closed form (conjugate has n-2m odd parts) ==\n" << render_text(closed, false);
    out << "== diff ==\n";
    if (diffs.empty()) out << "(none)\n";
    for (const auto& d : diffs) {
      out << "level " << d.m << ":";
      for (const auto& p : d.missing) out << " missing " << p.str();
      for (const auto& p : d.extra) out << " extra " << p.str();
      out << "\n";
    }
  }
  return diffs.empty() ? kPass : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string format = "text";
  std::string cache_dir;

  CLI::App app{
      "Complete multiplicity-free (Gelfand) model of S_n on involutions, with monomial and\n"
      "Greenberg Fock space carriers. Permutations compose as (pi sigma)(i) = pi(sigma(i))."};
  app.name("schwinger");
  app.require_subcommand(1);

  struct Spec {
    const char* name;
    const char* help;
    bool uses_m;
    bool uses_max_m;
  };
  const std::vector<Spec> specs = {
      {"involutions", "List X_m in standard form with per-level counts", true, false},
      {"decompose", "Decompose the signed representation on X_m into irreducibles", true, false},
      {"character", "Irreducible character table, or the character of X_m with --m", true, false},
      {"verify", "Run every verification (model, Gram matrices, equivariance, level table)", false, false},
      {"table", "Level table from the recipe and the closed form, with a diff", false, true},
      {"monomial-check", "Orthonormality and action checks for the antisymmetric-monomial space", false, false},
      {"fock-check", "Orthonormality and action checks for the Greenberg Fock space", false, false},
  };
  for (const auto& s : specs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--n", cfg.n, "Degree of the symmetric group")->required();
    if (s.uses_m) sub->add_option("--m", cfg.m, "Level (number of transpositions)");
    if (s.uses_max_m) sub->add_option("--max-m", cfg.max_m, "Highest level (default n/2)");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--cache-dir", cache_dir, "Character table cache (default $SCHWINGER_CACHE_DIR)");
    sub->add_option("--seed", cfg.seed, "Seed for randomized checks");
    sub->add_option("--samples", cfg.samples, "Random samples per randomized check")->check(CLI::PositiveNumber);
    sub->add_option("--max-degree", cfg.max_degree, "Largest accepted n")->check(CLI::PositiveNumber);
  }

  std::vector<const char*> argv{"schwinger"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsageError;
  }

  cfg.format = format == "json" ? Format::Json : Format::Text;
  cfg.cache_dir = cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cache_dir);

  try {
    validate(cfg);
    const std::string command = app.get_subcommands().front()->get_name();
    if (command == "involutions") return cmd_involutions(cfg, out);
    if (command == "decompose") return cmd_decompose(cfg, out);
    if (command == "character") return cmd_character(cfg, out);
    if (command == "verify") return cmd_verify(cfg, out);
    if (command == "table") return cmd_table(cfg, out);
    if (command == "monomial-check") return cmd_monomial_check(cfg, out);
    if (command == "fock-check") return cmd_fock_check(cfg, out);
    err << "unknown command " << command << "\n";
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const NonIntegralMultiplicity& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace schwinger::cli
