#pragma once

#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mwv/axioms.hpp"
#include "mwv/distributions.hpp"
#include "mwv/parallel.hpp"
#include "mwv/rules.hpp"
#include "mwv/search.hpp"

namespace mwv {

// Integer violation tallies; rates are formed once, at the end.
struct AvrCounts {
  long violations = 0;
  long trials = 0;  // |A| * |P|
  double rate() const { return trials == 0 ? 0.0 : static_cast<double>(violations) / static_cast<double>(trials); }
};

inline AvrCounts avr_counts(std::span<const Committee> committees, std::span<const Election> elections,
                            AxiomSet axioms) {
  if (axioms.empty()) throw UsageError("axiom set must be non-empty");
  if (committees.size() != elections.size()) {
    throw UsageError("committee count " + std::to_string(committees.size()) + " does not match profile count " +
                     std::to_string(elections.size()));
  }
  AvrCounts out;
  for (std::size_t i = 0; i < committees.size(); ++i) {
    AxiomContext ctx(elections[i]);
    out.violations += evaluate_all(ctx, committees[i].mask(), axioms).count();
  }
  out.trials = static_cast<long>(axioms.size()) * static_cast<long>(committees.size());
  return out;
}

// Mean of the violation flags over every (profile, axiom) pair.
inline double avr(std::span<const Committee> committees, std::span<const Election> elections, AxiomSet axioms) {
  return avr_counts(committees, elections, axioms).rate();
}

inline double distance_delta(int m, int k) {
  check_committee_size(m, k);
  return static_cast<double>(m) / static_cast<double>(m - std::abs(m - 2 * k));
}

// Shared winners plus shared losers of two k-committees over m alternatives.
inline int shared_positions(AltMask a, AltMask b, int m) { return popcount(a & b) + (m - popcount(a | b)); }

// Exact form of the distance: (m|P| - S) / ((m - |m-2k|) |P|), S the summed
// shared positions. Both numerator and denominator are integers.
struct DistanceTerms {
  long numerator = 0;
  long denominator = 0;
  double value() const { return denominator == 0 ? 0.0 : static_cast<double>(numerator) / static_cast<double>(denominator); }
};

inline DistanceTerms distance_terms(long shared_sum, long profiles, int m, int k) {
  check_committee_size(m, k);
  DistanceTerms t{static_cast<long>(m) * profiles - shared_sum, static_cast<long>(m - std::abs(m - 2 * k)) * profiles};
  if (t.numerator < 0 || t.numerator > t.denominator) {
    throw std::logic_error("rule distance outside [0,1]");
  }
  return t;
}

inline double rule_distance(std::span<const Committee> first, std::span<const Committee> second, int m, int k) {
  if (first.size() != second.size()) throw UsageError("committee sequences differ in length");
  if (first.empty()) throw UsageError("rule distance needs at least one profile");
  long shared = 0;
  for (std::size_t i = 0; i < first.size(); ++i) {
    for (const Committee* c : {&first[i], &second[i]}) {
      if (c->size() != k || (c->mask() & ~full_mask(m)) != 0) {
        throw UsageError("committee " + c->to_string() + " is not a " + std::to_string(k) + "-subset of " +
                         std::to_string(m) + " alternatives");
      }
    }
    shared += shared_positions(first[i].mask(), second[i].mask(), m);
  }
  return distance_terms(shared, static_cast<long>(first.size()), m, k).value();
}

struct DistanceMatrix {
  std::vector<std::string> names;
  std::vector<std::vector<double>> values;

  std::string to_csv() const {
    std::ostringstream out;
    out << std::setprecision(6) << std::fixed;
    out << "rule";
    for (const auto& n : names) out << ',' << n;
    out << '\n';
    for (std::size_t i = 0; i < names.size(); ++i) {
      out << names[i];
      for (double v : values[i]) out << ',' << v;
      out << '\n';
    }
    return out.str();
  }
};

namespace detail {

// Per-profile seeds for randomized rules: each rule draws from its own stream.
inline RuleSpec seeded_for_profile(const RuleSpec& rule, RngSeed profile_seed) {
  if (!rule_needs_seed(rule.id)) return rule;
  RuleSpec out = rule;
  out.seed = derive_seed(rule.seed.value_or(profile_seed), hash_name(rule.name()));
  return out;
}

}  // namespace detail

inline DistanceMatrix distance_matrix(const std::vector<RuleSpec>& rules, std::span<const Election> elections,
                                      RngSeed seed = RngSeed{0}) {
  if (elections.empty()) throw UsageError("distance matrix needs at least one profile");
  const int m = elections.front().m(), k = elections.front().k();
  std::vector<std::vector<Committee>> committees(rules.size());
  for (std::size_t r = 0; r < rules.size(); ++r) {
    for (std::size_t p = 0; p < elections.size(); ++p) {
      if (elections[p].m() != m || elections[p].k() != k) throw UsageError("profiles disagree on m or k");
      committees[r].push_back(elect(detail::seeded_for_profile(rules[r], derive_seed(seed, p)), elections[p]));
    }
  }
  DistanceMatrix out;
  for (const auto& r : rules) out.names.push_back(r.name());
  out.values.assign(rules.size(), std::vector<double>(rules.size(), 0.0));
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = i + 1; j < rules.size(); ++j) {
      out.values[i][j] = out.values[j][i] = rule_distance(committees[i], committees[j], m, k);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation sweeps

// One (distribution, m, k) cell: violation counts per row and axiom, summed
// shared positions per rule pair, and the oracle-dominance exception count.
struct CellResult {
  std::string distribution;
  int m = 0;
  int k = 0;
  int n = 0;
  long profiles = 0;
  std::uint64_t seed = 0;
  std::vector<std::vector<long>> counts;  // [row][axiom id]
  std::vector<std::vector<long>> shared;  // [rule][rule]
  long dominance_exceptions = 0;
};

struct EvaluationReport {
  AxiomSet axioms;
  std::vector<std::string> rows;  // the rules, then "min" and "max"
  std::size_t num_rules = 0;
  std::vector<CellResult> cells;

  std::size_t row_index(std::string_view name) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i] == name) return i;
    }
    throw UsageError("no row named '" + std::string(name) + "' in report");
  }

  long total_profiles() const {
    long out = 0;
    for (const auto& c : cells) out += c.profiles;
    return out;
  }

  AvrCounts counts(std::size_t row, AxiomId a) const {
    AvrCounts out;
    for (const auto& c : cells) {
      out.violations += c.counts[row][static_cast<std::size_t>(a)];
      out.trials += c.profiles;
    }
    return out;
  }

  double rate(std::string_view row, AxiomId a) const { return counts(row_index(row), a).rate(); }

  AvrCounts mean_counts(std::size_t row) const {
    AvrCounts out;
    for (AxiomId a : axioms.members()) {
      auto c = counts(row, a);
      out.violations += c.violations;
      out.trials += c.trials;
    }
    return out;
  }

  double mean_rate(std::string_view row) const { return mean_counts(row_index(row)).rate(); }

  long dominance_exceptions() const {
    long out = 0;
    for (const auto& c : cells) out += c.dominance_exceptions;
    return out;
  }

  // Per-cell distances averaged with equal weight per cell.
  DistanceMatrix distances() const {
    DistanceMatrix out;
    out.names.assign(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(num_rules));
    out.values.assign(num_rules, std::vector<double>(num_rules, 0.0));
    if (cells.empty()) return out;
    for (std::size_t i = 0; i < num_rules; ++i) {
      for (std::size_t j = i + 1; j < num_rules; ++j) {
        double sum = 0;
        for (const auto& c : cells) sum += distance_terms(c.shared[i][j], c.profiles, c.m, c.k).value();
        out.values[i][j] = out.values[j][i] = sum / static_cast<double>(cells.size());
      }
    }
    return out;
  }

  EvaluationReport filtered(const std::function<bool(const CellResult&)>& keep) const {
    EvaluationReport out = *this;
    out.cells.clear();
    for (const auto& c : cells) {
      if (keep(c)) out.cells.push_back(c);
    }
    return out;
  }

  // One row per rule: a rate per axiom plus the mean.
  std::string table_csv() const {
    std::ostringstream out;
    out << std::setprecision(6) << std::fixed << "rule";
    for (AxiomId a : axioms.members()) out << ',' << axiom_name(a);
    out << ",mean\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
      out << rows[r];
      for (AxiomId a : axioms.members()) out << ',' << counts(r, a).rate();
      out << ',' << mean_counts(r).rate() << '\n';
    }
    return out.str();
  }

  nlohmann::json to_json() const {
    using nlohmann::json;
    json j;
    j["axiom_set"] = axiom_set_name(axioms);
    j["axioms"] = json::array();
    for (AxiomId a : axioms.members()) j["axioms"].push_back(axiom_name(a));
    j["rows"] = rows;
    j["profiles"] = total_profiles();
    j["dominance_exceptions"] = dominance_exceptions();
    json rates = json::object();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      json row = json::object();
      for (AxiomId a : axioms.members()) row[std::string(axiom_name(a))] = counts(r, a).rate();
      row["mean"] = mean_counts(r).rate();
      rates[rows[r]] = row;
    }
    j["rates"] = rates;
    auto d = distances();
    j["distances"] = {{"rules", d.names}, {"values", d.values}};
    j["cells"] = json::array();
    for (const auto& c : cells) {
      json cell{{"distribution", c.distribution}, {"m", c.m},       {"k", c.k},
                {"n", c.n},                       {"profiles", c.profiles}, {"seed", c.seed},
                {"dominance_exceptions", c.dominance_exceptions}};
      json counts_by_row = json::object();
      for (std::size_t r = 0; r < rows.size(); ++r) {
        json row = json::object();
        for (AxiomId a : axioms.members()) row[std::string(axiom_name(a))] = c.counts[r][static_cast<std::size_t>(a)];
        counts_by_row[rows[r]] = row;
      }
      cell["violations"] = counts_by_row;
      cell["shared_positions"] = c.shared;
      j["cells"].push_back(cell);
    }
    return j;
  }
};

namespace detail {

struct ProfileOutcome {
  std::vector<std::uint16_t> flags;  // per row
  std::vector<AltMask> committees;   // per rule
  long exceptions = 0;
};

inline ProfileOutcome evaluate_profile(const std::vector<RuleSpec>& rules, const Election& e, AxiomSet axioms,
                                       RngSeed profile_seed) {
  ViolationTable table(e, axioms);
  ProfileOutcome out;
  const auto lo = min_violation_committee(table);
  const auto hi = max_violation_committee(table);
  for (const auto& rule : rules) {
    const AltMask c = elect_mask(seeded_for_profile(rule, profile_seed), e);
    const auto f = table.flags(c);
    const int count = std::popcount(f);
    out.exceptions += count < lo.violations || count > hi.violations;
    out.flags.push_back(f);
    out.committees.push_back(c);
  }
  out.flags.push_back(table.flags(lo.committee.mask()));
  out.flags.push_back(table.flags(hi.committee.mask()));
  return out;
}

}  // namespace detail

inline std::vector<std::string> report_rows(const std::vector<RuleSpec>& rules) {
  std::vector<std::string> rows;
  for (const auto& r : rules) rows.push_back(r.name());
  rows.push_back("min");
  rows.push_back("max");
  return rows;
}

// Evaluates every rule, plus the min/max oracles, on a fixed profile list.
// Profile i's randomized rules use streams derived from derive_seed(seed, i).
inline CellResult evaluate_cell(const std::vector<RuleSpec>& rules, std::span<const PreferenceProfile> profiles, int k,
                                 AxiomSet axioms, RngSeed seed, int threads, std::string label = "profiles") {
  if (axioms.empty()) throw UsageError("axiom set must be non-empty");
  if (rules.empty()) throw UsageError("at least one rule is required");
  if (profiles.empty()) throw UsageError("no profiles to evaluate");
  for (const auto& r : rules) detail::seeded_for_profile(r, seed).validate();
  const int m = profiles.front().num_alternatives();
  if (m > kMaxSearchAlternatives) throw CapacityError("evaluation needs m <= 12 for the min/max oracle");

  std::vector<detail::ProfileOutcome> outcomes(profiles.size());
  parallel_for(profiles.size(), threads, [&](std::size_t i) {
    if (profiles[i].num_alternatives() != m) throw DataError("profiles disagree on m");
    outcomes[i] = detail::evaluate_profile(rules, Election(profiles[i], k), axioms, derive_seed(seed, i));
  });

  CellResult cell;
  cell.distribution = std::move(label);
  cell.m = m;
  cell.k = k;
  cell.n = profiles.front().num_voters();
  cell.profiles = static_cast<long>(profiles.size());
  cell.seed = seed.value;
  const std::size_t rows = rules.size() + 2;
  cell.counts.assign(rows, std::vector<long>(kNumAxioms, 0));
  cell.shared.assign(rules.size(), std::vector<long>(rules.size(), 0));
  for (const auto& o : outcomes) {
    for (std::size_t r = 0; r < rows; ++r) {
      for (AxiomId a : axioms.members()) cell.counts[r][static_cast<std::size_t>(a)] += (o.flags[r] >> static_cast<int>(a)) & 1;
    }
    for (std::size_t i = 0; i < rules.size(); ++i) {
      for (std::size_t j = 0; j < rules.size(); ++j) cell.shared[i][j] += shared_positions(o.committees[i], o.committees[j], m);
    }
    cell.dominance_exceptions += o.exceptions;
  }
  return cell;
}

inline EvaluationReport evaluate_profiles(const std::vector<RuleSpec>& rules,
                                          std::span<const PreferenceProfile> profiles, int k, AxiomSet axioms,
                                          RngSeed seed, int threads) {
  EvaluationReport report;
  report.axioms = axioms;
  report.rows = report_rows(rules);
  report.num_rules = rules.size();
  report.cells.push_back(evaluate_cell(rules, profiles, k, axioms, seed, threads));
  return report;
}

struct SweepConfig {
  std::vector<RuleSpec> rules;
  std::vector<DistributionSpec> distributions;
  std::vector<int> m_list;
  std::vector<int> k_list;  // k >= m is skipped per cell
  int n = 50;
  int profiles_per_cell = 2000;
  RngSeed seed{0};
  AxiomSet axioms = AxiomSet::all();
  // Randomly rename alternatives in each sampled profile, as when test data
  // is produced by the dataset pipeline. Off by default.
  bool rename = false;
  int threads = 1;
  long max_profile_evaluations = 50'000'000;
};

// The 15 rules of the main comparison (every rule but the free positional one).
inline std::vector<RuleSpec> default_sweep_rules() {
  std::vector<RuleSpec> out;
  for (RuleId id : kAllRules) {
    if (id != RuleId::PositionalScoring) out.push_back(RuleSpec::of(id));
  }
  return out;
}

inline RngSeed cell_seed(RngSeed base, const DistributionSpec& dist, int m, int k) {
  return derive_seed(derive_seed(derive_seed(base, hash_name(dist.name())), static_cast<std::uint64_t>(m)),
                     static_cast<std::uint64_t>(k));
}

// Full grid: distributions x m_list x k_list, each cell sampled independently
// from a seed derived from (seed, distribution name, m, k).
inline EvaluationReport avr_sweep(const SweepConfig& config,
                                  const std::function<void(const CellResult&)>& on_cell = nullptr) {
  if (config.distributions.empty() || config.m_list.empty() || config.k_list.empty()) {
    throw UsageError("sweep grid is empty");
  }
  if (config.n < 1 || config.profiles_per_cell < 1) throw UsageError("sweep needs n >= 1 and profiles >= 1");
  const long evaluations = static_cast<long>(config.distributions.size() * config.m_list.size() *
                                             config.k_list.size()) * config.profiles_per_cell;
  if (evaluations > config.max_profile_evaluations) throw CapacityError("sweep grid exceeds the profile budget");

  EvaluationReport report;
  report.axioms = config.axioms;
  report.rows = report_rows(config.rules);
  report.num_rules = config.rules.size();
  for (const auto& dist : config.distributions) {
    dist.validate();
    for (int m : config.m_list) {
      for (int k : config.k_list) {
        if (k < 1 || k >= m) continue;
        const RngSeed seed = cell_seed(config.seed, dist, m, k);
        std::vector<PreferenceProfile> profiles(static_cast<std::size_t>(config.profiles_per_cell));
        parallel_for(profiles.size(), config.threads, [&](std::size_t i) {
          const RngSeed s = derive_seed(seed, i);
          profiles[i] = sample_profile(dist, config.n, m, s);
          if (config.rename) profiles[i] = rename_alternatives(profiles[i], derive_seed(s, hash_name("rename")));
        });
        auto cell = evaluate_cell(config.rules, profiles, k, config.axioms, derive_seed(seed, hash_name("rules")),
                                  config.threads, dist.name());
        cell.seed = seed.value;
        if (on_cell) on_cell(cell);
        report.cells.push_back(std::move(cell));
      }
    }
  }
  return report;
}

}  // namespace mwv
