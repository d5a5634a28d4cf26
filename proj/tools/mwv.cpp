// Command-line driver: sampling, elections, evaluation sweeps, annealing and
// dataset export. Exit status: 0 ok, 1 usage error, 2 data error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mwv/mwv.hpp"

namespace {

using namespace mwv;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<RuleSpec> parse_rules(const std::string& text, const std::optional<std::string>& scores) {
  if (text.empty() || text == "all") return default_sweep_rules();
  std::vector<RuleSpec> out;
  for (const auto& name : split_list(text)) {
    const RuleId id = parse_rule_id(name);
    if (id == RuleId::PositionalScoring) {
      if (!scores) throw UsageError("positionalscoring needs --scores");
      std::vector<double> v;
      for (const auto& s : split_list(*scores)) v.push_back(std::stod(s));
      out.push_back(RuleSpec::positional(ScoreVector(std::move(v))));
    } else {
      out.push_back(RuleSpec::of(id));
    }
  }
  if (out.empty()) throw UsageError("no rules given");
  return out;
}

std::vector<PreferenceProfile> load_profiles(const std::string& path, bool rename, std::uint64_t seed) {
  auto profiles = read_profiles(path);
  if (profiles.empty()) throw DataError("'" + path + "' contains no profiles");
  if (rename) {
    for (std::size_t i = 0; i < profiles.size(); ++i) {
      profiles[i] = rename_alternatives(profiles[i], derive_seed(RngSeed{seed}, hash_name("rename") + i));
    }
  }
  return profiles;
}

// Writes to `path`, or to stdout when it is empty or "-".
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  auto out = open_output(path);
  out << text;
}

struct Common {
  int threads = default_threads();
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-winner voting: rules, axiom violation rates, rule distances and datasets"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--threads", common.threads, "Worker threads (default: MWV_THREADS or hardware)")
      ->check(CLI::PositiveNumber);

  // sample
  auto* sample = app.add_subcommand("sample", "Sample preference profiles from a distribution");
  std::string dist = "ic", out_path;
  int m = 5, n = 50, count = 1, k = 1;
  std::uint64_t seed = 0;
  bool rename = false;
  sample->add_option("--dist", dist, "Distribution name, e.g. ic, mallows:0.4, urn, euclidean-3-ball-uniform, mixed")
      ->required();
  sample->add_option("--m", m, "Number of alternatives")->required();
  sample->add_option("--n", n, "Number of voters")->required();
  sample->add_option("--count", count, "Number of profiles")->required();
  sample->add_option("--seed", seed, "Random seed");
  sample->add_option("--out", out_path, "Output JSONL file (default stdout)");
  sample->add_flag("--rename", rename, "Randomly rename alternatives in each profile");

  // elect
  auto* elect_cmd = app.add_subcommand("elect", "Run one rule on every profile");
  std::string rule_name_arg, profiles_path;
  std::optional<std::string> scores;
  elect_cmd->add_option("--rule", rule_name_arg, "Rule name")->required();
  elect_cmd->add_option("--k", k, "Committee size")->required();
  elect_cmd->add_option("--profiles", profiles_path, "Profiles JSONL")->required();
  elect_cmd->add_option("--out", out_path, "Output JSONL (default stdout)");
  elect_cmd->add_option("--seed", seed, "Seed for randomized rules");
  elect_cmd->add_option("--scores", scores, "Score vector for positionalscoring, comma separated");
  elect_cmd->add_flag("--rename", rename, "Randomly rename alternatives first");

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "Axiom violation rates of rules on a profile file");
  std::string rules_arg = "all", axioms_arg = "all", report_path, csv_path;
  evaluate->add_option("--rules", rules_arg, "Comma separated rules, or 'all'");
  evaluate->add_option("--axioms", axioms_arg, "all, root, or comma separated axiom names");
  evaluate->add_option("--k", k, "Committee size")->required();
  evaluate->add_option("--profiles", profiles_path, "Profiles JSONL")->required();
  evaluate->add_option("--report", report_path, "JSON report (default stdout)");
  evaluate->add_option("--csv", csv_path, "Also write the per-axiom rate table as CSV");
  evaluate->add_option("--seed", seed, "Seed for randomized rules");
  evaluate->add_option("--scores", scores, "Score vector for positionalscoring");
  evaluate->add_flag("--rename", rename, "Randomly rename alternatives first");

  // distance
  auto* distance = app.add_subcommand("distance", "Pairwise rule distances on a profile file");
  distance->add_option("--rules", rules_arg, "Comma separated rules, or 'all'");
  distance->add_option("--k", k, "Committee size")->required();
  distance->add_option("--profiles", profiles_path, "Profiles JSONL")->required();
  distance->add_option("--out-csv", csv_path, "CSV matrix (default stdout)");
  distance->add_option("--seed", seed, "Seed for randomized rules");
  distance->add_option("--scores", scores, "Score vector for positionalscoring");
  distance->add_flag("--rename", rename, "Randomly rename alternatives first");

  // minmax
  auto* minmax = app.add_subcommand("minmax", "Minimum- and maximum-violation committees by exhaustive search");
  minmax->add_option("--axioms", axioms_arg, "all, root, or comma separated axiom names");
  minmax->add_option("--k", k, "Committee size")->required();
  minmax->add_option("--profiles", profiles_path, "Profiles JSONL")->required();
  minmax->add_option("--out", out_path, "Output JSONL (default stdout)");

  // anneal
  auto* anneal = app.add_subcommand("anneal", "Optimize a positional score vector by simulated annealing");
  AnnealConfig acfg;
  int eval_count = 0;
  anneal->add_option("--m", acfg.m, "Number of alternatives")->required();
  anneal->add_option("--k", acfg.k, "Committee size")->required();
  anneal->add_option("--axioms", axioms_arg, "all, root, or comma separated axiom names");
  anneal->add_option("--steps", acfg.steps, "Annealing steps")->capture_default_str();
  anneal->add_option("--train-count", acfg.train_profiles, "Training profiles")->capture_default_str();
  anneal->add_option("--profiles", profiles_path,
                     "Profiles JSONL; the first --train-count train, the rest are held out. "
                     "Without it, profiles are sampled from --dist");
  std::string anneal_dist = "mixed";
  anneal->add_option("--dist", anneal_dist, "Distribution to sample when --profiles is absent")->capture_default_str();
  anneal->add_option("--n", n, "Voters per sampled profile");
  anneal->add_option("--eval-count", eval_count, "Held-out profiles to sample when --profiles is absent");
  anneal->add_option("--proposal-scale", acfg.proposal_scale)->capture_default_str();
  anneal->add_option("--t0", acfg.t0, "Initial temperature")->capture_default_str();
  anneal->add_option("--decay", acfg.decay, "Temperature decay per step")->capture_default_str();
  anneal->add_option("--seed", seed, "Seed");
  anneal->add_option("--out", out_path, "Output JSON (default stdout)");

  // gen-dataset
  auto* gen = app.add_subcommand("gen-dataset", "Generate labelled training examples");
  gen->add_option("--dist", dist, "Distribution name")->required();
  gen->add_option("--m", m, "Number of alternatives")->required();
  gen->add_option("--n", n, "Number of voters")->required();
  gen->add_option("--k", k, "Committee size")->required();
  gen->add_option("--count", count, "Number of examples")->required();
  gen->add_option("--axioms", axioms_arg, "all or root (or a list)");
  gen->add_option("--seed", seed, "Seed");
  gen->add_option("--out", out_path, "Output JSONL (default stdout)");
  bool dedup = false;
  gen->add_flag("--dedup", dedup, "Drop examples whose features repeat an earlier one");

  // eval-committees
  auto* evalc = app.add_subcommand("eval-committees", "Axiom violation rate of externally chosen committees");
  std::string committees_path;
  evalc->add_option("--committees", committees_path, "Predictions JSONL (scores or committees)")->required();
  evalc->add_option("--profiles", profiles_path, "Profiles JSONL")->required();
  evalc->add_option("--k", k, "Committee size")->required();
  evalc->add_option("--axioms", axioms_arg, "all, root, or comma separated axiom names");
  evalc->add_option("--report", report_path, "JSON report (default stdout)");

  // import-soc
  auto* import = app.add_subcommand("import-soc", "Convert PrefLib SOC files to profile JSONL");
  std::vector<std::string> soc_paths;
  import->add_option("--in", soc_paths, "SOC file(s)")->required();
  import->add_option("--out", out_path, "Output JSONL (default stdout)");

  // audit-implications
  auto* audit = app.add_subcommand("audit-implications", "Check axiom implication edges on every committee");
  audit->add_option("--profiles", profiles_path, "Profiles JSONL")->required();
  audit->add_option("--k", k, "Committee size")->required();
  std::size_t keep_per_edge = 100;
  audit->add_option("--out", out_path, "Counterexample JSONL (default stdout)");
  audit->add_option("--report", report_path, "Per-edge summary JSON");
  audit->add_option("--keep", keep_per_edge, "Counterexamples kept per edge")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    const int threads = common.threads;
    if (sample->parsed()) {
      const auto spec = parse_distribution(dist);
      std::ostringstream out;
      const auto sampled = sample_profiles(spec, n, m, count, RngSeed{seed});
      for (std::size_t i = 0; i < sampled.size(); ++i) {
        auto p = sampled[i].profile;
        if (rename) p = rename_alternatives(p, derive_seed(sampled[i].seed, hash_name("rename")));
        out << profile_to_json(p, i, sampled[i].seed.value, spec.name()).dump() << '\n';
      }
      emit(out_path, out.str());
    } else if (elect_cmd->parsed()) {
      auto rules = parse_rules(rule_name_arg, scores);
      if (rules.size() != 1) throw UsageError("elect takes exactly one rule");
      const auto profiles = load_profiles(profiles_path, rename, seed);
      std::vector<Committee> committees(profiles.size());
      parallel_for(profiles.size(), threads, [&](std::size_t i) {
        Election e(profiles[i], k);
        committees[i] = elect(detail::seeded_for_profile(rules[0], derive_seed(RngSeed{seed}, i)), e);
      });
      std::ostringstream out;
      for (std::size_t i = 0; i < committees.size(); ++i) {
        Json j{{"profile_index", i}, {"rule", rules[0].name()}, {"committee", committees[i].members()}};
        out << j.dump() << '\n';
      }
      emit(out_path, out.str());
    } else if (evaluate->parsed()) {
      const auto rules = parse_rules(rules_arg, scores);
      const auto axioms = parse_axiom_set(axioms_arg);
      const auto profiles = load_profiles(profiles_path, rename, seed);
      auto report = evaluate_profiles(rules, profiles, k, axioms, RngSeed{seed}, threads);
      report.cells.front().distribution = profiles_path;
      emit(report_path, report.to_json().dump(2) + "\n");
      if (!csv_path.empty()) emit(csv_path, report.table_csv());
    } else if (distance->parsed()) {
      const auto rules = parse_rules(rules_arg, scores);
      const auto profiles = load_profiles(profiles_path, rename, seed);
      std::vector<Election> elections;
      elections.reserve(profiles.size());
      for (const auto& p : profiles) elections.emplace_back(p, k);
      emit(csv_path, distance_matrix(rules, elections, RngSeed{seed}).to_csv());
    } else if (minmax->parsed()) {
      const auto axioms = parse_axiom_set(axioms_arg);
      const auto profiles = read_profiles(profiles_path);
      std::vector<std::string> lines(profiles.size());
      parallel_for(profiles.size(), threads, [&](std::size_t i) {
        Election e(profiles[i], k);
        if (e.m() > kMaxSearchAlternatives) throw CapacityError("exhaustive committee search needs m <= 12");
        ViolationTable table(e, axioms);
        const auto lo = min_violation_committee(table);
        const auto hi = max_violation_committee(table);
        Json j{{"index", i},
               {"min", {{"committee", lo.committee.members()}, {"violations", lo.violations}}},
               {"max", {{"committee", hi.committee.members()}, {"violations", hi.violations}}}};
        lines[i] = j.dump();
      });
      std::string text;
      for (const auto& l : lines) text += l + "\n";
      emit(out_path, text);
    } else if (anneal->parsed()) {
      acfg.axioms = parse_axiom_set(axioms_arg);
      acfg.seed = RngSeed{seed};
      acfg.threads = threads;
      std::vector<PreferenceProfile> profiles;
      if (!profiles_path.empty()) {
        profiles = read_profiles(profiles_path);
      } else {
        const auto spec = parse_distribution(anneal_dist);
        for (auto& s : sample_profiles(spec, n, acfg.m, acfg.train_profiles + eval_count,
                                       derive_seed(RngSeed{seed}, hash_name("profiles")))) {
          profiles.push_back(std::move(s.profile));
        }
      }
      const auto result = optimize_score_vector(acfg, profiles);
      emit(out_path, result.to_json(acfg).dump(2) + "\n");
    } else if (gen->parsed()) {
      const auto spec = parse_distribution(dist);
      const auto axioms = parse_axiom_set(axioms_arg);
      check_committee_size(m, k);
      const auto sampled = sample_profiles(spec, n, m, count, RngSeed{seed});
      std::vector<DatasetExample> examples(sampled.size());
      parallel_for(sampled.size(), threads, [&](std::size_t i) {
        examples[i] = make_example(sampled[i].profile, k, axioms, derive_seed(sampled[i].seed, hash_name("rename")),
                                   spec.name());
      });
      std::ostringstream out;
      write_dataset(out, dedup ? deduplicate(examples) : examples);
      emit(out_path, out.str());
    } else if (evalc->parsed()) {
      const auto axioms = parse_axiom_set(axioms_arg);
      const auto profiles = read_profiles(profiles_path);
      const int pm = profiles.empty() ? 0 : profiles.front().num_alternatives();
      if (profiles.empty()) throw DataError("'" + profiles_path + "' contains no profiles");
      const auto committees = read_predictions(committees_path, pm, k);
      if (committees.size() != profiles.size()) {
        throw DataError("length mismatch: " + std::to_string(committees.size()) + " committees for " +
                        std::to_string(profiles.size()) + " profiles");
      }
      std::vector<Election> elections;
      for (const auto& p : profiles) elections.emplace_back(p, k);
      std::vector<long> per_axiom(kNumAxioms, 0);
      long min_total = 0, max_total = 0;
      for (std::size_t i = 0; i < elections.size(); ++i) {
        ViolationTable table(elections[i], axioms);
        const auto flags = table.flags(committees[i].mask());
        for (AxiomId a : axioms.members()) per_axiom[static_cast<std::size_t>(a)] += (flags >> static_cast<int>(a)) & 1;
        min_total += min_violation_committee(table).violations;
        max_total += max_violation_committee(table).violations;
      }
      AvrCounts counts;
      for (AxiomId a : axioms.members()) counts.violations += per_axiom[static_cast<std::size_t>(a)];
      counts.trials = static_cast<long>(axioms.size()) * static_cast<long>(profiles.size());
      Json rates = Json::object();
      for (AxiomId a : axioms.members()) {
        rates[std::string(axiom_name(a))] =
            static_cast<double>(per_axiom[static_cast<std::size_t>(a)]) / static_cast<double>(profiles.size());
      }
      const double trials = static_cast<double>(counts.trials);
      Json j{{"axiom_set", axiom_set_name(axioms)},
             {"profiles", profiles.size()},
             {"k", k},
             {"avr", counts.rate()},
             {"violations", counts.violations},
             {"rates", rates},
             {"min_avr", static_cast<double>(min_total) / trials},
             {"max_avr", static_cast<double>(max_total) / trials}};
      emit(report_path, j.dump(2) + "\n");
    } else if (import->parsed()) {
      std::ostringstream out;
      for (std::size_t i = 0; i < soc_paths.size(); ++i) {
        auto in = open_input(soc_paths[i]);
        out << profile_to_json(parse_soc(in), i).dump() << '\n';
      }
      emit(out_path, out.str());
    } else if (audit->parsed()) {
      const auto profiles = read_profiles(profiles_path);
      const auto report = implication_audit(profiles, k, keep_per_edge);
      std::ostringstream lines;
      for (const auto& c : report.counterexamples) {
        lines << Json{{"profile_index", c.profile_index}, {"committee", c.committee.members()}, {"edge", c.edge}}.dump()
              << '\n';
      }
      emit(out_path, lines.str());
      Json edges = Json::array();
      for (const auto& t : report.edges) {
        edges.push_back({{"edge", t.edge.label()},
                         {"min_k", t.edge.min_k},
                         {"checked", t.checked},
                         {"counterexamples", t.counterexamples}});
      }
      Json j{{"k", k},
             {"profiles", profiles.size()},
             {"total_counterexamples", report.total_counterexamples()},
             {"edges", edges}};
      if (!report_path.empty()) emit(report_path, j.dump(2) + "\n");
    }
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {  // ParameterError, bad numbers
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::logic_error& e) {  // UsageError
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
